"""Named presentations used by the CLI and the tests.

Each preset lists generators with explicit inverses.  Where a family depends
on free parameters, one rational instance is chosen and the choice is noted
in ``provenance``; ``expected_length`` is a known soluble length, or None when
no value is claimed.
"""

from .birmap import BirMap
from .exactalg import RatFunc
from .groupexplore import Generator, Presentation
from .toric import IntMatrix2, ToricElement, monomial_birmap

X, Y = RatFunc.x(), RatFunc.y()


def _gen(name, fx, fy, ix, iy):
    return Generator(name, BirMap.from_affine(fx, fy), BirMap.from_affine(ix, iy))


def abelian():
    return Presentation(
        [_gen("t1", X + 1, Y, X - 1, Y), _gen("t2", X, Y + 1, X, Y - 1)],
        provenance="two commuting translations",
        name="abelian",
        expected_length=1,
    )


def cornulier():
    return Presentation(
        [
            _gen("g1", X + 1, Y, X - 1, Y),
            _gen("g2", X, Y + 1, X, Y - 1),
            _gen("g3", X, X * Y, X, Y / X),
        ],
        provenance="<(x+1,y), (x,y+1), (x,xy)>, known to be soluble of length 3 (Cornulier)",
        name="cornulier",
        expected_length=3,
    )


def martelo_ribon():
    return Presentation(
        [
            _gen("a", X + Y**2, Y, X - Y**2, Y),
            _gen("b", X * (1 + Y), Y, X / (1 + Y), Y),
            _gen("c", X, Y / (1 + Y), X, Y / (1 - Y)),
            _gen("d", X, 2 * Y, X, Y / 2),
        ],
        provenance="<(x+y^2,y), (x(1+y),y), (x,y/(1+y)), (x,2y)>, soluble of length 4 (Martelo-Ribon)",
        name="martelo-ribon",
        expected_length=4,
    )


S3_MATRICES = (IntMatrix2.of([[1, 0], [1, -1]]), IntMatrix2.of([[-1, 1], [0, 1]]))


def s3():
    gens = []
    for name, m in zip(("A", "B"), S3_MATRICES):
        f = monomial_birmap(m)
        gens.append(Generator(name, f, monomial_birmap(m.inverse())))
    return Presentation(
        gens,
        provenance="monomial maps of two order-2 matrices generating a copy of S3 in GL(2,Z)",
        name="s3",
        expected_length=2,
    )


TORIC_MATRIX = IntMatrix2.of([[2, 1], [1, 1]])
TORIC_DIAGONAL = (2, 3)


def toric():
    m = TORIC_MATRIX
    a, b = TORIC_DIAGONAL
    diag = ToricElement.diagonal(a, b)
    return Presentation(
        [
            Generator("phi", monomial_birmap(m), monomial_birmap(m.inverse())),
            Generator("D", diag.to_birmap(), diag.inverse().to_birmap()),
        ],
        provenance="hyperbolic monomial map (x^2 y, x y) with the diagonal map (2x, 3y)",
        name="toric",
        # commutators land in the diagonal torus, which is abelian
        expected_length=2,
    )


def elementary():
    return Presentation(
        [
            _gen("u", 2 * X, Y, X / 2, Y),
            _gen("v", X + Y**2, Y, X - Y**2, Y),
            _gen("w", X, 3 * Y + 1, X, (Y - 1) / 3),
        ],
        provenance="maps (a x + P(y), b y + c) with a = 2, P = y^2, b = 3, c = 1 as a rational instance",
        name="elementary",
        expected_length=None,
    )


PRESETS = {
    "abelian": abelian,
    "cornulier": cornulier,
    "martelo-ribon": martelo_ribon,
    "s3": s3,
    "toric": toric,
    "elementary": elementary,
}


def get(name):
    try:
        return PRESETS[name]()
    except KeyError:
        raise KeyError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}") from None
