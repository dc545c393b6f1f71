"""JSON and CSV report assembly.  Output is byte-stable for a fixed input."""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from .certify import CertReport
from .config import InstanceConfig
from .solver import SolutionRecord, WeightedReport, count_coords_not_in_Kp, unit_bound

SCHEMA = 1
COMPLETENESS = "box-relative: only exponent vectors in [-B, B]^r were searched"


def record_dict(s: SolutionRecord) -> dict:
    x, y = s.value
    return {
        "exponents": list(s.exponents),
        "torsion": s.torsion,
        "x": str(x),
        "y": str(y),
        "height": s.height,
        "phi": [list(s.phi.first), list(s.phi.second)],
        "norm": str(s.norm),
        "is_torsion": s.is_torsion,
        "primitive": s.is_primitive,
        "in_Kp": s.coords_in_Kp,
    }


def instance_header(cfg: InstanceConfig) -> dict:
    F, G = cfg.field, cfg.group
    return {
        "schema": SCHEMA,
        "instance": cfg.name,
        "field": {"p": F.p, "k": F.k, "modulus": list(F.modulus) if F.k > 1 else None},
        "group": {
            "rank": G.rank,
            "free_gens": [[str(x), str(y)] for x, y in G.free_gens],
            "torsion_order": len(G.torsion),
            "support": [str(v) for v in G.support],
        },
        "equation": {"a": str(cfg.a), "b": str(cfg.b)},
        "search": {"B": cfg.box.B, "budget": cfg.box.budget,
                   "candidates": cfg.box.candidates(G), "completeness": COMPLETENESS},
    }


def unit_summary(cfg: InstanceConfig, sols) -> dict:
    G = cfg.group
    prim = sum(1 for s in sols if s.is_primitive)
    free = count_coords_not_in_Kp(sols)
    return {
        "solutions": len(sols),
        "primitive": prim,
        "primitive_bound": unit_bound(G.rank),
        "not_in_Kp": free,
        "not_in_Kp_bound": G.p ** G.rank,
        "passed": prim <= unit_bound(G.rank) and free <= G.p ** G.rank,
    }


def weighted_dict(rep: WeightedReport) -> dict:
    w = rep.witness
    return {
        "a": str(rep.a),
        "b": str(rep.b),
        "power_in_G": None if w is None else {
            "n": w.n, "exponents": list(w.exponents), "torsion": w.torsion, "coprime_to_p": w.coprime_to_p},
        "excluded": rep.excluded,
        "count": rep.count,
        "bound": rep.bound,
        "constant_case": [record_dict(s) for s in rep.constant_case],
        "passed": rep.within_bound and rep.constant_case_consistent,
    }


def cert_dict(rep: CertReport) -> dict:
    return rep.as_dict()


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def solutions_csv(sols) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["exponents", "torsion", "x", "y", "height", "primitive", "in_Kp"])
    for s in sols:
        x, y = s.value
        w.writerow([" ".join(map(str, s.exponents)), s.torsion, str(x), str(y), s.height,
                    int(s.is_primitive), int(s.coords_in_Kp)])
    return buf.getvalue()


def write_outputs(out: Path, report: dict, sols=None):
    out.mkdir(parents=True, exist_ok=True)
    (out / "report.json").write_text(dumps(report))
    if sols is not None:
        (out / "solutions.csv").write_text(solutions_csv(sols))
