import pytest

from cremona import presets
from cremona.birmap import BirMap, compose, compose_all, equals
from cremona.errors import BadInverse, BadMobius, DegreeCapExceeded
from cremona.exactalg import RatFunc
from cremona.groupexplore import (
    Caps,
    Generator,
    Presentation,
    Word,
    bs_embedding,
    bs_presentation,
    commutator,
    commutator_word,
    derived_sample,
    evaluate_tree,
    solvable_length_lower_bound,
    tree_depth,
    tree_leaves,
    tree_word,
    validate,
    word_eval,
)
from cremona.toric import IntMatrix2, TorusCoord, toric_commutator

X, Y = RatFunc.x(), RatFunc.y()
ID = BirMap.identity()
SMALL = Caps(4, 16, 200, 4)


def g(i, s=1):
    return Word.gen(i, s)


@pytest.mark.parametrize("name", sorted(presets.PRESETS))
def test_presets_validate(name):
    assert validate(presets.get(name))


def test_unipotent_pair_validates():
    pres = Presentation([Generator("u", BirMap.from_affine(X + Y**2, Y), BirMap.from_affine(X - Y**2, Y))])
    assert validate(pres)


def test_wrong_inverse_rejected():
    f = BirMap.from_affine(X, 2 * Y)
    with pytest.raises(BadInverse) as exc:
        validate(Presentation([Generator("d", f, f)]))
    assert exc.value.name == "d"


def test_word_free_reduction_and_inverse():
    w = Word([(0, 1), (1, 1), (1, -1), (2, -1)])
    assert w.letters == ((0, 1), (2, -1))
    assert w.inverse().letters == ((2, 1), (0, -1))
    assert len(w * w.inverse()) == 0


def test_word_eval_examples():
    pres = presets.cornulier()
    assert word_eval(pres, Word()).is_identity()
    assert word_eval(pres, Word([(0, 1)]) * Word([(0, -1)])).is_identity()
    f = word_eval(pres, commutator_word(g(2), g(0)))
    assert f.degree == 2
    assert f == BirMap.from_affine(X, X * Y / (X - 1))


def test_word_eval_is_right_to_left():
    pres = presets.cornulier()
    w = Word([(2, 1), (0, 1)])  # g3 o g1: (x, y) -> (x+1, y) -> (x+1, (x+1) y)
    assert word_eval(pres, w) == BirMap.from_affine(X + 1, (X + 1) * Y)


def test_word_eval_reports_prefix_on_cap():
    pres = presets.toric()
    w = Word([(0, 1)] * 6)
    with pytest.raises(DegreeCapExceeded) as exc:
        word_eval(pres, w, degree_cap=100)
    assert exc.value.prefix is not None and len(exc.value.prefix) < 6


def test_commutator_examples():
    pres = presets.cornulier()
    assert commutator(pres, g(1), g(1))[1].is_identity()
    w, f = commutator(pres, g(2), g(1))
    assert f == BirMap.from_affine(X, Y + X - 1)
    assert w == Word([(2, 1), (1, 1), (2, -1), (1, -1)])
    _w, f = commutator(presets.toric(), g(0), g(1))
    assert f == BirMap.from_affine(6 * X, 2 * Y)


def test_abelian_level_one_empty():
    s = derived_sample(presets.abelian(), 1, SMALL)
    assert s.elements == []
    assert solvable_length_lower_bound(presets.abelian(), SMALL).bound == 1


def test_s3_levels():
    pres = presets.s3()
    assert len(derived_sample(pres, 0, Caps()).elements) == 5
    assert derived_sample(pres, 1, Caps()).elements
    assert derived_sample(pres, 2, Caps()).elements == []
    assert solvable_length_lower_bound(pres, Caps()).bound == 2


def test_cornulier_level_two_nontrivial():
    s = derived_sample(presets.cornulier(), 2, Caps(4, 24, 200, 3))
    assert s.elements and all(not f.is_identity() for _w, f in s.elements)


def test_level_zero_order_is_deterministic_shortlex():
    s = derived_sample(presets.cornulier(), 0, SMALL)
    lengths = [len(w) for w, _f in s.elements]
    assert lengths == sorted(lengths)
    assert [w.letters for w, _ in s.elements[:6]] == [((i, e),) for i in range(3) for e in (1, -1)]


def test_breadth_cap_recorded():
    s = derived_sample(presets.cornulier(), 1, Caps(3, 8, 200, 2))
    assert len(s.elements) <= 8
    assert "breadth" in s.exhausted()


def test_word_value_coherence():
    pres = presets.cornulier()
    s = derived_sample(pres, 2, Caps(4, 16, 200, 3))
    for rec in s.records:
        assert word_eval(pres, rec.word, None) == rec.map
        assert compose(rec.map, rec.inverse, None).is_identity()
        assert tree_word(rec.tree) == rec.word


def test_certificate_tree_soundness():
    pres = presets.cornulier()
    cert = solvable_length_lower_bound(pres, Caps(4, 24, 200, 4))
    assert cert.bound >= 3
    tree = cert.witness_tree
    assert tree_depth(tree) == cert.bound - 1
    value, inverse = evaluate_tree(pres, tree)
    assert value == cert.witness_map and not value.is_identity()
    assert word_eval(pres, cert.witness_word, None) == value
    # swapping any single leaf for the identity still gives a well-defined
    # element, and a commutator with an identity factor collapses
    for i, _leaf in enumerate(tree_leaves(tree)):
        collapsed, cinv = evaluate_tree(pres, tree, None, {i: (ID, ID)})
        assert compose(collapsed, cinv, None).is_identity()
    left_leafless = ("comm", ("word", Word()), tree[2])
    assert evaluate_tree(pres, left_leafless)[0].is_identity()


@pytest.mark.parametrize("name", ["abelian", "s3", "toric", "cornulier"])
def test_monotone_in_caps(name):
    pres = presets.get(name)
    small = solvable_length_lower_bound(pres, Caps(2, 6, 50, 4)).bound
    mid = solvable_length_lower_bound(pres, Caps(3, 12, 100, 4)).bound
    big = solvable_length_lower_bound(pres, Caps(4, 24, 200, 4)).bound
    assert small <= mid <= big


def test_toric_preset_matches_closed_form():
    pres = presets.toric()
    level1 = derived_sample(pres, 1, Caps(3, 24, 200, 2))
    assert level1.elements
    for _w, f in level1.elements:
        # commutators of the toric group are diagonal maps
        fx, fy = f.to_affine()
        assert fx.is_polynomial() and fy.is_polynomial()
        assert fx.num.keys() == {(1, 0)} and fy.num.keys() == {(0, 1)}
    alpha, beta = TorusCoord.symbol("alpha"), TorusCoord.symbol("beta")
    c = toric_commutator(IntMatrix2(2, 1, 1, 1), (alpha, beta)).substitute({"alpha": 2, "beta": 3})
    assert any(equals(c.to_birmap(), f) for _w, f in level1.elements)
    assert solvable_length_lower_bound(pres, Caps(3, 24, 200, 4)).bound == 2


def test_certificate_json_shape():
    cert = solvable_length_lower_bound(presets.s3(), Caps())
    data = cert.to_json(presets.s3().names())
    assert set(data) >= {"bound", "witness_word", "level_trace", "caps"}
    assert data["bound"] == 2


# Baumslag-Solitar embeddings


def test_bs_example_n2():
    rep = bs_embedding(2, X, X)
    assert rep.relation_holds
    r = rep.presentation.generators[0].map
    assert r == BirMap.from_affine(X, 2 * Y + 2 * X)
    assert rep.lhs == BirMap.from_affine(X, Y + 2)


def test_bs_example_n3_inverse_mobius():
    assert bs_embedding(3, 1 / X, X**2).relation_holds


def test_bs_tampered_inverse():
    with pytest.raises(BadInverse):
        bs_embedding(2, X, X + 1, a_for_inverse=X)


def test_bs_bad_mobius():
    with pytest.raises(BadMobius):
        bs_presentation(2, X - X + 1, X)
    with pytest.raises(BadMobius):
        bs_presentation(2, X**2, X)


@pytest.mark.parametrize("n", [2, 3, 5, -2])
@pytest.mark.parametrize("a", [X, 1 / X, X**2 / (X + 1)])
@pytest.mark.parametrize("nu", [X, 1 / X, (X + 1) / (X - 1)])
def test_bs_relation_holds(n, a, nu):
    rep = bs_embedding(n, nu, a)
    assert rep.relation_holds
    r, s = rep.presentation.generators
    step = s.map if n > 0 else s.inverse
    assert compose_all([r.map, s.map, r.inverse], None) == compose_all([step] * abs(n), None)
