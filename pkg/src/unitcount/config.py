"""Instance configuration files (TOML).

    [field]
    p = 5
    k = 1                 # optional
    modulus = [1, 1, 1]   # low-to-high, required when k > 1

    [group]
    free_gens = [["t", "1-t"]]
    torsion_gens = [["4", "4"]]   # optional

    [equation]            # optional, a = b = 1
    a = "1"
    b = "1"

    [search]
    B = 6
    budget = 200000       # optional

    [certify]             # optional
    theta = "991/9000"
    N_list = [1]
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .certify import DEFAULT_THETA
from .ff import FieldError, FieldSpec
from .group import DependentGeneratorsError, GroupSpec
from .poly import ParseError, RatFunc, parse_ratfunc
from .solver import DEFAULT_BUDGET, SearchBox


class ConfigError(ValueError):
    pass


@dataclass
class InstanceConfig:
    name: str
    field: FieldSpec
    group: GroupSpec
    a: RatFunc
    b: RatFunc
    box: SearchBox
    theta: Fraction = DEFAULT_THETA
    N_list: tuple[int, ...] = (1,)
    raw: dict = field(default_factory=dict, repr=False)

    @property
    def is_unit_equation(self) -> bool:
        return self.a.is_one() and self.b.is_one()


def _get(d, key, where, kind=None, default=...):
    if key not in d:
        if default is ...:
            raise ConfigError(f"{where}.{key}: missing")
        return default
    v = d[key]
    if kind is not None and not isinstance(v, kind):
        raise ConfigError(f"{where}.{key}: expected {getattr(kind, '__name__', kind)}, got {v!r}")
    return v


def _ratfunc(text, where, F):
    try:
        x = parse_ratfunc(str(text), F)
    except (ParseError, ZeroDivisionError) as e:
        raise ConfigError(f"{where}: {e}") from None
    if x.is_zero():
        raise ConfigError(f"{where}: must be nonzero")
    return x


def _pairs(value, where, F):
    if not isinstance(value, list):
        raise ConfigError(f"{where}: expected a list of pairs")
    out = []
    for i, pair in enumerate(value):
        if not isinstance(pair, list) or len(pair) != 2:
            raise ConfigError(f"{where}[{i}]: expected a pair of strings")
        out.append(tuple(_ratfunc(s, f"{where}[{i}][{j}]", F) for j, s in enumerate(pair)))
    return out


def parse_config(data: dict, name: str = "instance") -> InstanceConfig:
    fsec = _get(data, "field", "config", dict)
    p = _get(fsec, "p", "field", int)
    k = _get(fsec, "k", "field", int, 1)
    modulus = _get(fsec, "modulus", "field", list, None)
    try:
        F = FieldSpec(p, k, modulus)
    except FieldError as e:
        raise ConfigError(f"field: {e}") from None

    gsec = _get(data, "group", "config", dict)
    free = _pairs(_get(gsec, "free_gens", "group", list), "group.free_gens", F)
    tors = _pairs(_get(gsec, "torsion_gens", "group", list, []), "group.torsion_gens", F)
    for i, (x, y) in enumerate(tors):
        if not (x.is_const() and y.is_const()):
            raise ConfigError(f"group.torsion_gens[{i}]: coordinates must be constants")
    try:
        G = GroupSpec(F, free, tors)
    except DependentGeneratorsError as e:
        raise ConfigError(f"group.free_gens: {e}") from None

    esec = _get(data, "equation", "config", dict, {})
    a = _ratfunc(_get(esec, "a", "equation", None, "1"), "equation.a", F)
    b = _ratfunc(_get(esec, "b", "equation", None, "1"), "equation.b", F)

    ssec = _get(data, "search", "config", dict)
    B = _get(ssec, "B", "search", int)
    if B < 1:
        raise ConfigError("search.B: must be >= 1")
    budget = _get(ssec, "budget", "search", int, DEFAULT_BUDGET)

    csec = _get(data, "certify", "config", dict, {})
    theta = DEFAULT_THETA
    if "theta" in csec:
        try:
            theta = Fraction(str(csec["theta"]))
        except (ValueError, ZeroDivisionError):
            raise ConfigError(f"certify.theta: cannot parse {csec['theta']!r}") from None
        if not 0 < theta < Fraction(1, 9):
            raise ConfigError(f"certify.theta: {theta} is not in (0, 1/9)")
    N_list = _get(csec, "N_list", "certify", list, [1])
    if not all(isinstance(n, int) and n >= 1 for n in N_list):
        raise ConfigError("certify.N_list: expected positive integers")

    return InstanceConfig(name, F, G, a, b, SearchBox(B, budget), theta, tuple(N_list), data)


def load_config(path) -> InstanceConfig:
    path = Path(path)
    try:
        data = tomllib.loads(path.read_text())
    except tomllib.TOMLDecodeError as e:
        raise ConfigError(f"{path}: {e}") from None
    return parse_config(data, path.stem)
