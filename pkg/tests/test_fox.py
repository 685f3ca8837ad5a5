import pytest
from hypothesis import given, strategies as st

from torusbundles.fox import (
    EvalSpec,
    FormalSum,
    GENERATORS,
    bundle_relators,
    evaluate,
    evaluate_word,
    expected_jacobian,
    fox_derivative,
    jacobian,
    power,
    rank3_certificate,
    reduce_word,
    word,
)

letters = st.tuples(st.sampled_from(GENERATORS), st.sampled_from([1, -1]))
words = st.lists(letters, max_size=8).map(tuple)
STANDARD = EvalSpec.standard(3)


def test_axioms():
    assert fox_derivative(word("x"), "x") == FormalSum.one()
    assert fox_derivative(word("X"), "x") == -FormalSum.of(word("X"))
    assert fox_derivative(word("y"), "x") == FormalSum()


def test_displayed_derivatives():
    r2 = reduce_word(word("tyTy") + power("x", 5))
    assert fox_derivative(r2, "y") == FormalSum.of(word("t"), word("tyT"))
    assert fox_derivative(word("txTx"), "t") == FormalSum.one() - FormalSum.of(word("txT"))
    assert str(fox_derivative(word("txTx"), "t")) == "1 - txT"


def test_unknown_generator():
    with pytest.raises(ValueError):
        fox_derivative(word("xy"), "X")
    with pytest.raises(ValueError):
        fox_derivative((("ab", 1),), "x")


@given(words, words, st.sampled_from(GENERATORS))
def test_product_rule(u, v, g):
    lhs = fox_derivative(u + v, g)
    rhs = fox_derivative(u, g) + fox_derivative(v, g).left_mul(reduce_word(u))
    assert lhs == rhs


@given(words, st.sampled_from(GENERATORS), st.sampled_from([2, 3, 5, -4, 7]))
def test_reduction_invariance(w, g, alpha):
    spec = EvalSpec.standard(alpha)
    assert evaluate(fox_derivative(w, g), spec) == evaluate(fox_derivative(reduce_word(w), g), spec)


def test_evaluation_examples():
    assert evaluate(FormalSum.one(), STANDARD) == 1
    assert evaluate(FormalSum.of(word("t"), word("tyT")), STANDARD) == 0
    for alpha in range(2, 11):
        P = FormalSum.of(*(power("x", i) for i in range(alpha)))
        assert evaluate(P, EvalSpec.standard(alpha)) == 0


def test_eval_spec_validation():
    with pytest.raises(ValueError):
        EvalSpec(1, {"x": 1})
    with pytest.raises(ValueError):
        EvalSpec(4, {"x": 2})


def test_relators_map_to_one():
    for alpha in [2, 3, -3, 10]:
        spec = EvalSpec.standard(alpha)
        assert all(evaluate_word(r, spec) == 1 for r in bundle_relators(alpha))


@pytest.mark.parametrize("alpha", [a for a in range(-10, 11) if abs(a) >= 2])
def test_jacobian_matches_hand_formulas(alpha):
    assert jacobian(alpha) == expected_jacobian(alpha)


@pytest.mark.parametrize("alpha", [a for a in range(-10, 11) if abs(a) >= 2])
def test_certificate(alpha):
    assert rank3_certificate(alpha)


@pytest.mark.parametrize("alpha", [-1, 0, 1])
def test_certificate_needs_nontrivial_ring(alpha):
    with pytest.raises(ValueError):
        rank3_certificate(alpha)


def test_evaluation_can_fail_for_other_assignments():
    # with t -> 1 the derivative of the first relator by x is 2, nonzero mod 3
    spec = EvalSpec(3, {"x": 1, "y": 1, "t": 1})
    assert evaluate(jacobian(3)[0][0], spec) == 2
