import pytest
from hypothesis import given
from hypothesis import strategies as st

from kpoincare.algebra import TensorElement, minkowski, poincare
from kpoincare.calculus import OneForm
from kpoincare.parser import (
    BinOp,
    Call,
    Context,
    EvaluationError,
    Gen,
    Neg,
    Num,
    ParseError,
    Pow,
    evaluate,
    latex_to_text,
    parse,
    parse_latex,
    render,
    to_text,
)
from kpoincare.scalars import T

from strategies import elements

P = poincare(4)


def test_commutator_call():
    tree = parse("comm(x[0], x[1])")
    assert tree == Call("comm", (Gen("x", (0,)), Gen("x", (1,))))
    assert evaluate(tree) == P.x(1) * T


def test_d_call():
    tree = parse("d(L[0,1]*x[2])")
    assert tree == Call("d", (BinOp("*", Gen("L", (0, 1)), Gen("x", (2,))),))
    assert isinstance(evaluate(tree), OneForm)


def test_index_out_of_range():
    with pytest.raises(EvaluationError) as e:
        evaluate(parse("x[5]"))
    assert "out of range" in str(e.value)
    assert (e.value.line, e.value.col) == (1, 1)


def test_errors_carry_position_and_expected_tokens():
    with pytest.raises(ParseError) as e:
        parse("comm(x[0],\n  x[1]")
    assert (e.value.line, e.value.col) == (2, 7)
    assert "')'" in e.value.expected
    with pytest.raises(ParseError) as e:
        parse("x[0] +")
    assert "integer" in e.value.expected
    with pytest.raises(ParseError):
        parse("x[0] $ x[1]")
    with pytest.raises(ParseError):
        parse("comm(x[0])")


def test_unknown_generator_for_the_algebra():
    with pytest.raises(EvaluationError):
        evaluate(parse("y[0]"))
    with pytest.raises(EvaluationError):
        evaluate(parse("L[0,0]"), Context("minkowski", 3))
    assert evaluate(parse("y[2]"), Context("minkowski", 3)) == minkowski(3).x(2)


def test_precedence_and_associativity():
    assert parse("x[0] - x[1] - x[2]") == BinOp("-", BinOp("-", Gen("x", (0,)), Gen("x", (1,))), Gen("x", (2,)))
    assert parse("-x[0]^2") == Neg(Pow(Gen("x", (0,)), 2))
    assert parse("2*x[0]+1") == BinOp("+", BinOp("*", Num(2), Gen("x", (0,))), Num(1))


def test_structure_map_calls():
    assert evaluate(parse("eps(L[1,1] + x[0])")) == 1
    assert evaluate(parse("S(L[0,1])")) == -P.L(1, 0)
    assert isinstance(evaluate(parse("Delta(x[0])")), TensorElement)
    assert isinstance(evaluate(parse("ad(x[0])")), TensorElement)
    assert evaluate(parse("star(i*x[1])")) == P.x(1) * evaluate(parse("-i"))


def test_scalar_names():
    assert evaluate(parse("kappa*q")) == 1
    assert evaluate(parse("i^2")) == -1
    with pytest.raises(EvaluationError):
        evaluate(parse("x[0]/x[1]"))


def test_wedge_of_differentials():
    w = evaluate(parse("wedge(d(x[0]), d(x[1]))"))
    assert w.terms
    assert evaluate(parse("d(d(x[0]*x[1]))")).is_zero()


def test_minkowski_calculus_through_the_grammar():
    ctx = Context("minkowski", 2)
    assert evaluate(parse("d(d(y[0]*y[1]))"), ctx).is_zero()


@st.composite
def trees(draw, depth=3):
    if depth == 0 or draw(st.integers(0, 3)) == 0:
        return draw(st.one_of(
            st.builds(Num, st.integers(0, 9)),
            st.builds(Gen, st.just("x"), st.tuples(st.integers(0, 3))),
            st.builds(Gen, st.just("L"), st.tuples(st.integers(0, 3), st.integers(0, 3))),
        ))
    kind = draw(st.sampled_from(["+", "-", "*", "neg", "pow", "call"]))
    if kind == "neg":
        return Neg(draw(trees(depth - 1)))
    if kind == "pow":
        return Pow(draw(trees(depth - 1)), draw(st.integers(0, 3)))
    if kind == "call":
        name = draw(st.sampled_from(["S", "star", "comm"]))
        args = (draw(trees(depth - 1)),) if name != "comm" else (draw(trees(depth - 1)), draw(trees(depth - 1)))
        return Call(name, args)
    return BinOp(kind, draw(trees(depth - 1)), draw(trees(depth - 1)))


@given(trees())
def test_rendered_trees_reparse_to_equal_trees(tree):
    assert parse(to_text(tree)) == tree


@given(elements(P))
def test_element_text_round_trip(a):
    assert evaluate(parse(str(a))) == a


@given(elements(P))
def test_element_latex_reparses_to_an_equal_element(a):
    assert evaluate(parse_latex(a.latex())) == a


@given(elements(minkowski(3)))
def test_minkowski_latex_round_trip(a):
    assert evaluate(parse_latex(a.latex()), Context("minkowski", 3)) == a


def test_latex_rewriting():
    assert latex_to_text("\\frac{3i}{2\\kappa^{2}} \\cdot x^{1}") == "((3*i)/(2*kappa^2))*x[1]"
    assert evaluate(parse_latex("\\Lambda^{0}{}_{1} \\cdot \\left(x^{2}\\right)^{2}")) == P.L(0, 1) * P.x(2) ** 2


def test_tensor_latex_rendering():
    t = evaluate(parse("Delta(x[0])"))
    assert "\\otimes" in render(t, "latex")


def test_normalize_entry_point():
    from kpoincare.parser import Context, ExpressionError, normalize, parse

    e = normalize("x[1]*x[0]")
    assert e == normalize(parse("x[1]*x[0]")) == normalize(e)
    assert str(e) == str(normalize("x[0]*x[1] - i*q*x[1]"))
    with pytest.raises(ExpressionError):
        normalize("x[0]*y[1]", Context("poincare", 4))
