import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cremona.errors import MapSyntaxError, ZeroDenominator
from cremona.exactalg import RatFunc
from cremona.parser import (
    BinOp,
    MapExpr,
    Neg,
    Num,
    Pow,
    Var,
    evaluate,
    parse_expr,
    parse_map,
    print_expr,
)

X, Y = RatFunc.x(), RatFunc.y()


def test_monomial_pair():
    m = parse_map("(x*y, y)")
    assert m.to_ratfuncs() == (X * Y, Y)


def test_rational_pair():
    fx, fy = parse_map("(x, y/(1+y))").to_ratfuncs()
    assert fx == X and fy == Y / (1 + Y)
    assert fy.den == {(0, 1): 1, (0, 0): 1}


def test_unbalanced_parenthesis():
    with pytest.raises(MapSyntaxError) as exc:
        parse_map("(x, y/(1+y)")
    assert exc.value.position == len("(x, y/(1+y)")


@pytest.mark.parametrize(
    "text,pos",
    [("(x y, y)", 3), ("(x, 2.5)", 5), ("(x^y, 1)", 3), ("(x, y))", 6), ("x, y)", 0), ("(x, z)", 4), ("(x^2^3, y)", 4)],
)
def test_syntax_errors_carry_position(text, pos):
    with pytest.raises(MapSyntaxError) as exc:
        parse_map(text)
    assert exc.value.position == pos


def test_zero_denominator():
    with pytest.raises(ZeroDenominator):
        parse_map("(x, 1/(y-y))").to_ratfuncs()
    with pytest.raises(ZeroDenominator):
        parse_map("(x, (x-x)^-1)").to_ratfuncs()


def test_precedence():
    assert parse_expr("-x^2") == Neg(Pow(Var("x"), 2))
    assert parse_expr("1+2*x") == BinOp("+", Num(1), BinOp("*", Num(2), Var("x")))
    assert parse_expr("x-y-1") == BinOp("-", BinOp("-", Var("x"), Var("y")), Num(1))
    assert parse_expr("x/y/2") == BinOp("/", BinOp("/", Var("x"), Var("y")), Num(2))
    assert evaluate(parse_expr("x^-2")) == 1 / X**2


def test_printer_minimal_parentheses():
    assert print_expr(parse_expr("(x)+((y))")) == "x + y"
    assert print_expr(parse_expr("x-(y-1)")) == "x - (y - 1)"
    assert print_expr(parse_expr("(x+y)^3")) == "(x + y)^3"
    assert print_expr(parse_expr("(-x)^2")) == "(-x)^2"
    assert print_expr(parse_expr("x*(y*2)")) == "x*(y*2)"


leaves = st.one_of(st.integers(0, 20).map(Num), st.sampled_from([Var("x"), Var("y")]))


def _extend(children):
    return st.one_of(
        st.builds(BinOp, st.sampled_from("+-*/"), children, children),
        st.builds(Neg, children),
        st.builds(Pow, children, st.integers(-3, 4)),
    )


trees = st.recursive(leaves, _extend, max_leaves=8)


@settings(max_examples=200, deadline=None)
@given(trees, trees)
def test_round_trip_random_trees(a, b):
    m = MapExpr(a, b)
    assert parse_map(m.to_text()) == m


def _random_tree(rng, depth):
    if depth == 0 or rng.random() < 0.25:
        return rng.choice([Num(rng.randint(0, 9)), Var("x"), Var("y")])
    k = rng.randrange(4)
    if k == 0:
        return Neg(_random_tree(rng, depth - 1))
    if k == 1:
        return Pow(_random_tree(rng, depth - 1), rng.randint(-2, 3))
    return BinOp(rng.choice("+-*/"), _random_tree(rng, depth - 1), _random_tree(rng, depth - 1))


def test_round_trip_100_expression_corpus():
    rng = random.Random(100)
    corpus = [MapExpr(_random_tree(rng, 4), _random_tree(rng, 4)) for _ in range(100)]
    for m in corpus:
        text = m.to_text()
        again = parse_map(text)
        assert again == m
        assert again.to_text() == text


@settings(max_examples=100, deadline=None)
@given(trees)
def test_printed_text_evaluates_to_same_function(t):
    try:
        value = evaluate(t)
    except ZeroDenominator:
        return
    assert evaluate(parse_expr(print_expr(t))) == value
