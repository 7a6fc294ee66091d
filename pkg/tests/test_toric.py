import random
from decimal import Decimal
from fractions import Fraction

import pytest
import sympy

from cremona.birmap import BirMap, compose, degree_sequence, equals
from cremona.dynclass import estimate_lambda
from cremona.errors import NotHyperbolic, NotUnimodular
from cremona.exactalg import HomogPoly, RatFunc
from cremona.groupexplore import Word, commutator
from cremona.presets import toric as toric_preset
from cremona.toric import (
    FoliationForm,
    IntMatrix2,
    ToricElement,
    TorusCoord,
    fast_degree_sequence,
    finite_order,
    foliation_pullback_check,
    is_hyperbolic,
    monomial_birmap,
    monomial_degree,
    spectral_data,
    symbolic_commutator_exponents,
    toric_closure,
    toric_commutator,
    toric_compose,
    unimodular_matrices,
)

x, y, z = HomogPoly.gens()
X, Y = RatFunc.x(), RatFunc.y()
M = IntMatrix2(2, 1, 1, 1)
ALL3 = unimodular_matrices(3)
HYPERBOLIC3 = [m for m in ALL3 if is_hyperbolic(m)]


def test_enumeration_counts():
    # brute force over all 7^4 integer matrices
    count = sum(
        1
        for p in range(-3, 4)
        for q in range(-3, 4)
        for r in range(-3, 4)
        for s in range(-3, 4)
        if abs(p * s - q * r) == 1
    )
    assert len(ALL3) == count


def test_not_unimodular():
    with pytest.raises(NotUnimodular):
        IntMatrix2(2, 0, 0, 1)


def test_monomial_birmap_examples():
    assert monomial_birmap(IntMatrix2(1, 1, 0, 1)).components == (x * y, y * z, z * z)
    f = monomial_birmap(M)
    assert f.components == (x**2 * y, x * y * z, z**3) and f.degree == 3
    assert monomial_birmap(IntMatrix2.identity()).is_identity()


@pytest.mark.parametrize("m", ALL3[::7])
def test_monomial_birmap_matches_affine_ingestion(m):
    fx = X**m.p * Y**m.q
    fy = X**m.r * Y**m.s
    assert monomial_birmap(m) == BirMap.from_affine(fx, fy)


def test_fast_path_equals_generic_path_all_small_matrices():
    for m in ALL3:
        generic = degree_sequence(monomial_birmap(m), 5, degree_cap=None).entries
        assert generic == fast_degree_sequence(m, 5), m
        assert monomial_birmap(m).degree == monomial_degree(m)


def test_lambda_from_fast_path_matches_spectral_radius():
    chosen = HYPERBOLIC3[:: max(1, len(HYPERBOLIC3) // 20)][:20]
    assert len(chosen) == 20
    for m in chosen:
        est = estimate_lambda(fast_degree_sequence(m, 40))
        assert abs(est.value - spectral_data(m).radius.value) < Decimal("1e-3"), m


def test_torus_direct_product():
    a, b, c, d = (TorusCoord.symbol(s) for s in "abcd")
    g = ToricElement.diagonal(a, b)
    h = ToricElement.diagonal(c, d)
    assert toric_compose(g, h) == ToricElement.diagonal(a * c, b * d)


def test_matrix_acts_on_torus():
    a, b = TorusCoord.symbol("alpha"), TorusCoord.symbol("beta")
    g = ToricElement.monomial(M)
    h = ToricElement.diagonal(a, b)
    assert toric_compose(g, h) == ToricElement((a**2 * b, a * b), M)
    rational = toric_compose(g, ToricElement.diagonal(2, 3))
    assert rational.to_birmap() == compose(g.to_birmap(), ToricElement.diagonal(2, 3).to_birmap())


def test_inverse():
    g = ToricElement((Fraction(2, 5), -3), IntMatrix2(1, 2, 1, 1))
    assert toric_compose(g, g.inverse()).is_identity()
    assert toric_compose(g.inverse(), g).is_identity()


def _random_elements(rng, k):
    out = []
    for _ in range(k):
        m = rng.choice(ALL3)
        diag = (Fraction(rng.choice([1, -1]) * rng.randint(1, 5), rng.randint(1, 5)),
                Fraction(rng.choice([1, -1]) * rng.randint(1, 5), rng.randint(1, 5)))
        out.append(ToricElement(diag, m))
    return out


def test_compose_associative_symbolic():
    rng = random.Random(3)
    syms = [TorusCoord.symbol(s) for s in ("a", "b", "c", "d", "e", "f")]
    for _ in range(30):
        g, h, k = (
            ToricElement((syms[2 * i], syms[2 * i + 1]), rng.choice(ALL3)) for i in range(3)
        )
        assert toric_compose(toric_compose(g, h), k) == toric_compose(g, toric_compose(h, k))


def test_homomorphism_to_birational_maps():
    rng = random.Random(11)
    small = [m for m in ALL3 if monomial_degree(m) <= 3]
    for _ in range(25):
        g, h = _random_elements(rng, 2)
        g = ToricElement(g.diag, rng.choice(small))
        h = ToricElement(h.diag, rng.choice(small))
        assert equals(toric_compose(g, h).to_birmap(), compose(g.to_birmap(), h.to_birmap(), None))


def test_symbolic_commutator_formula():
    assert symbolic_commutator_exponents(M) == [[1, 1], [1, 0]]
    assert toric_commutator(IntMatrix2.identity(), (TorusCoord.symbol("alpha"), TorusCoord.symbol("beta"))).is_identity()
    for m in ALL3[:10]:
        assert symbolic_commutator_exponents(m) == [[m.p - 1, m.q], [m.r, m.s - 1]]


def test_rational_commutator_matches_composition():
    c = toric_commutator(M, (2, 3))
    assert c.matrix.is_identity() and c.diag == (TorusCoord(6), TorusCoord(2))
    _w, generic = commutator(toric_preset(), Word.gen(0), Word.gen(1), None)
    assert equals(c.to_birmap(), generic)
    assert generic == BirMap.from_affine(6 * X, 2 * Y)


def test_rational_commutators_random_instances():
    rng = random.Random(5)
    small = [m for m in ALL3 if monomial_degree(m) <= 3]
    for _ in range(10):
        m = rng.choice(small)
        a, b = Fraction(rng.randint(1, 7), rng.randint(1, 3)), Fraction(-rng.randint(1, 7), rng.randint(1, 3))
        phi = ToricElement.monomial(m)
        d = ToricElement.diagonal(a, b)
        f, g = phi.to_birmap(), d.to_birmap()
        finv, ginv = phi.inverse().to_birmap(), d.inverse().to_birmap()
        generic = compose(f, compose(g, compose(finv, ginv, None), None), None)
        assert equals(toric_commutator(m, (a, b)).to_birmap(), generic)


def test_spectral_examples():
    d = spectral_data(M)
    assert abs(d.radius.value - Decimal("2.6180339887")) < Decimal("1e-10")
    assert d.finite_order is None and d.foliations is not None
    assert d.char_poly == (3, 1)
    d = spectral_data(IntMatrix2(-1, 1, 0, 1))
    assert d.finite_order == 2 and d.radius.value == 1 and d.foliations is None
    d = spectral_data(IntMatrix2(0, -1, 1, 0))
    assert d.finite_order == 4 and d.radius.value == 1


def test_radius_against_numpy():
    import numpy as np

    for m in HYPERBOLIC3:
        rad = max(abs(np.linalg.eigvals(np.array(m.rows(), dtype=float))))
        assert abs(float(spectral_data(m).radius.value) - rad) < 1e-9


def test_foliation_examples():
    d = spectral_data(M)
    f1, f2 = d.foliations
    assert foliation_pullback_check(M, f1) and foliation_pullback_check(M, f2)
    assert d.eigenvalues[0] != d.eigenvalues[1]
    assert not foliation_pullback_check(M, FoliationForm(1, 0))
    with pytest.raises(NotHyperbolic):
        foliation_pullback_check(IntMatrix2(1, 1, 0, 1), FoliationForm(1, 0))


def test_foliations_for_twenty_hyperbolic_matrices():
    for m in HYPERBOLIC3[:20]:
        d = spectral_data(m)
        for form in d.foliations:
            assert foliation_pullback_check(m, form)
        for control in (FoliationForm(1, 0), FoliationForm(0, 1), FoliationForm(1, 1)):
            assert not foliation_pullback_check(m, control)


def test_foliation_invariance_by_symbolic_pullback():
    """Pull back a dx/x + b dy/y along the monomial map with sympy and compare."""
    xs, ys = sympy.symbols("x y", positive=True)
    for m in HYPERBOLIC3[:6]:
        d = spectral_data(m)
        for form in d.foliations:
            t, det = form.modulus
            root = (t + sympy.sqrt(t * t - 4 * det)) / 2
            val = lambda u: sympy.Rational(u.a.numerator, u.a.denominator) + sympy.Rational(u.b.numerator, u.b.denominator) * root
            a, b = val(form.pc), val(form.qc)
            X_, Y_ = xs**m.p * ys**m.q, xs**m.r * ys**m.s
            pulled_x = sympy.simplify(a * sympy.diff(X_, xs) / X_ + b * sympy.diff(Y_, xs) / Y_)
            pulled_y = sympy.simplify(a * sympy.diff(X_, ys) / X_ + b * sympy.diff(Y_, ys) / Y_)
            # pulled-back form proportional to the original: cross product vanishes
            cross = sympy.simplify(pulled_x * (b / ys) - pulled_y * (a / xs))
            assert cross == 0


def test_finite_order_iff_periodic_degrees():
    for m in ALL3:
        k = finite_order(m)
        seq = fast_degree_sequence(m, 48)
        periodic = any(all(seq[i] == seq[i + p] for i in range(48 - p)) for p in range(1, 13))
        assert (k is not None) == periodic, m
        if k is not None:
            assert all(seq[i] == seq[i + k] for i in range(48 - k))


def test_s3_closure():
    from cremona.presets import S3_MATRICES

    elems = toric_closure([ToricElement.monomial(m) for m in S3_MATRICES])
    assert len(elems) == 6
    assert sorted(finite_order(e.matrix) for e in elems) == [1, 2, 2, 2, 3, 3]
