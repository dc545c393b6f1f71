import pytest
from hypothesis import settings, strategies as st

from unitcount.ff import FieldSpec
from unitcount.poly import Poly, RatFunc

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

F2 = FieldSpec(2)
F3 = FieldSpec(3)
F5 = FieldSpec(5)
F11 = FieldSpec(11)
F4 = FieldSpec(2, 2, [1, 1, 1])
F9 = FieldSpec(3, 2, [1, 0, 1])


def polys(F, max_deg=6, nonzero=False):
    coeffs = st.lists(st.integers(0, F.q - 1), min_size=0, max_size=max_deg + 1)
    s = coeffs.map(lambda c: Poly(F, c))
    return s.filter(lambda f: not f.is_zero()) if nonzero else s


def ratfuncs(F, max_deg=5, nonzero=True):
    s = st.builds(lambda n, d: RatFunc(n, d), polys(F, max_deg, nonzero=nonzero), polys(F, max_deg, nonzero=True))
    return s


@pytest.fixture(params=[F5, F4], ids=["F5", "F4"])
def field(request):
    return request.param
