from fractions import Fraction

from hypothesis import strategies as st

from cremona.birmap import BirMap
from cremona.exactalg import HomogPoly, RatFunc

X, Y = RatFunc.x(), RatFunc.y()

small = st.integers(min_value=-4, max_value=4)
rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


def monomials(d):
    return [(i, j, d - i - j) for i in range(d + 1) for j in range(d + 1 - i)]


@st.composite
def homog_polys(draw, degree=None, max_degree=3, nonzero=False, max_terms=4):
    d = draw(st.integers(0, max_degree)) if degree is None else degree
    mons = monomials(d)
    chosen = draw(st.lists(st.sampled_from(mons), min_size=1 if nonzero else 0, max_size=max_terms, unique=True))
    coeffs = draw(st.lists(rationals.filter(bool), min_size=len(chosen), max_size=len(chosen)))
    return HomogPoly(dict(zip(chosen, coeffs)), d)


def _pool():
    x, y, z = HomogPoly.gens()
    affine = [
        (X + 1, Y),
        (X, Y + 1),
        (Y, X),
        (2 * X, Y),
        (X, X * Y),
        (X, Y + X**2),
        (X + Y**2, Y),
        (X, Y / (1 + Y)),
        (1 / X, Y),
        (X * Y, Y),
        (X + Y, Y),
        (X, 3 * Y - X),
    ]
    maps = [BirMap.from_affine(a, b) for a, b in affine]
    maps.append(BirMap(y * z, x * z, x * y))
    return maps


POOL = _pool()

birmaps = st.lists(st.sampled_from(POOL), min_size=1, max_size=2).map(
    lambda ms: ms[0] if len(ms) == 1 else ms[0].compose(ms[1], None)
)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
