"""Term AST, parser, printer, and type checker."""

import doctest
import importlib

import pytest
from hypothesis import given, strategies as st

from frobius import (
    Comp,
    Delta,
    Eps,
    Eta,
    FrobiusError,
    Id,
    Mu,
    Tau,
    Tensor,
    TermSyntaxError,
    TypeMismatch,
    count_nodes,
    parse_term,
    print_term,
    typecheck,
)
from frobius.terms import MAX_ARITY, TermType


def test_doctests():
    mod = importlib.import_module("frobius.terms")
    assert doctest.testmod(mod).failed == 0


# -- parsing ---------------------------------------------------------------


def test_parse_examples():
    assert parse_term("mu . tau(1,1)") == Comp(Mu(), Tau(1, 1))
    assert parse_term("id0") == Id(0)
    assert parse_term("(mu x id1) . (id1 x delta)") == Comp(
        Tensor(Mu(), Id(1)), Tensor(Id(1), Delta())
    )


def test_parse_precedence_tensor_binds_tighter():
    assert parse_term("mu x id1 . id1 x delta") == Comp(
        Tensor(Mu(), Id(1)), Tensor(Id(1), Delta())
    )


def test_parse_left_associative():
    assert parse_term("eps . mu . delta") == Comp(Comp(Eps(), Mu()), Delta())
    assert parse_term("id1 x id2 x id3") == Tensor(Tensor(Id(1), Id(2)), Id(3))


def test_parse_whitespace_insensitive():
    assert parse_term(" tau( 2 , 1 ) ") == Tau(2, 1)
    assert parse_term("mu.delta") == Comp(Mu(), Delta())


@pytest.mark.parametrize(
    "bad",
    ["", "mu .", ". mu", "id", "idx", "tau(1)", "tau(1,)", "(mu", "mu)", "mu y mu", "3"],
)
def test_parse_errors_carry_position(bad):
    with pytest.raises(TermSyntaxError) as e:
        parse_term(bad)
    assert e.value.position >= 0


def test_parse_arity_limit():
    with pytest.raises(FrobiusError):
        parse_term(f"id{MAX_ARITY + 1}")


# -- printing --------------------------------------------------------------


def test_print_examples():
    assert print_term(Comp(Mu(), Tau(1, 1))) == "mu . tau(1,1)"
    assert print_term(Tensor(Id(2), Eps())) == "id2 x eps"
    assert print_term(Id(0)) == "id0"


def test_print_full_mode_parenthesizes():
    t = Comp(Tensor(Mu(), Id(1)), Tensor(Id(1), Delta()))
    assert print_term(t, full=True) == "((mu x id1) . (id1 x delta))"
    assert parse_term(print_term(t, full=True)) == t


_ATOMS = [Id(0), Id(1), Id(2), Tau(1, 1), Tau(2, 1), Mu(), Eta(), Delta(), Eps()]


def _term_strategy():
    return st.recursive(
        st.sampled_from(_ATOMS),
        lambda kids: st.tuples(kids, kids).map(lambda p: Tensor(*p))
        | st.tuples(kids, kids).map(lambda p: Comp(*p)),
        max_leaves=12,
    )


@given(_term_strategy())
def test_print_parse_round_trip(t):
    # round trip works for all ASTs, even ill-typed ones
    assert parse_term(print_term(t)) == t
    assert parse_term(print_term(t, full=True)) == t


# -- typing ----------------------------------------------------------------


def test_typecheck_examples():
    assert typecheck(Comp(Mu(), Tensor(Eta(), Id(1)))) == TermType(1, 1)
    assert typecheck(Tau(2, 1)) == TermType(3, 3)
    assert typecheck(Comp(Mu(), Delta())) == TermType(1, 1)
    with pytest.raises(TypeMismatch):
        typecheck(Comp(Delta(), Delta()))


def test_typecheck_mismatch_details():
    with pytest.raises(TypeMismatch) as e:
        typecheck(Tensor(Id(3), Comp(Delta(), Delta())))
    assert e.value.expected == 1
    assert e.value.found == 2
    assert "right" in e.value.path


@given(_term_strategy(), _term_strategy())
def test_tensor_type_soundness(f, g):
    try:
        tf, tg = typecheck(f), typecheck(g)
    except TypeMismatch:
        return
    tt = typecheck(Tensor(f, g))
    assert tt.source == tf.source + tg.source
    assert tt.target == tf.target + tg.target


@given(_term_strategy())
def test_unit_object_is_strict(f):
    try:
        tf = typecheck(f)
    except TypeMismatch:
        return
    assert typecheck(Tensor(Id(0), f)) == tf
    assert typecheck(Tensor(f, Id(0))) == tf


def test_count_nodes():
    assert count_nodes(Mu()) == 1
    assert count_nodes(Comp(Mu(), Delta())) == 3
    assert count_nodes(Tensor(Comp(Mu(), Delta()), Id(1))) == 5


def test_term_type_str():
    assert str(TermType(2, 1)) == "2 -> 1"
