"""Evaluation of terms in user-supplied algebra data."""

import json
import pathlib
import random
import warnings
from fractions import Fraction

import pytest

from frobius import (
    AlgebraData,
    Comp,
    Delta,
    Eps,
    Eta,
    ExactMatrix,
    Id,
    Mu,
    NonCommutativeData,
    NonFrobeniusWarning,
    ShapeMismatch,
    SizeGuardExceeded,
    Tau,
    Tensor,
    algebra_from_json_dict,
    algebra_to_json_dict,
    brauer_b,
    check_frobenius,
    closed_invariant,
    diagonal_algebra,
    equal,
    eval_normal,
    eval_term,
    kron,
    mat_eq,
    mat_mul,
    matrix_algebra,
    mu1,
    normalize,
    parse_term,
    perm_matrix,
    random_composable_terms,
    random_term,
    sym_matrix,
)

DATA = pathlib.Path(__file__).parent.parent / "src" / "frobius" / "data"

DIAG = diagonal_algebra(2)
MAT2 = matrix_algebra(2)


def _frac_rows(rows):
    return ExactMatrix.from_rows([[Fraction(x) for x in row] for row in rows])


# -- the data container -----------------------------------------------------------


def test_algebra_shape_validation():
    good = diagonal_algebra(2)
    with pytest.raises(ShapeMismatch):
        AlgebraData(0, good.mul, good.unit, good.comul, good.counit)
    with pytest.raises(ShapeMismatch):
        AlgebraData(2, good.unit, good.unit, good.comul, good.counit)
    with pytest.raises(ShapeMismatch):
        AlgebraData(3, good.mul, good.unit, good.comul, good.counit)


def test_flags_diagonal():
    assert check_frobenius(DIAG) == {
        "assoc": True,
        "unit": True,
        "coass": True,
        "counit": True,
        "frob": True,
        "com": True,
        "cocom": True,
        "symmetric": True,
    }


@pytest.mark.parametrize("p", [2, 3])
def test_flags_matrix(p):
    flags = check_frobenius(matrix_algebra(p))
    assert flags["assoc"] and flags["unit"]
    assert flags["coass"] and flags["counit"]
    assert flags["frob"] and flags["symmetric"]
    assert not flags["com"]
    assert not flags["cocom"]


def test_flags_detect_broken_counit():
    base = diagonal_algebra(2)
    zero_counit = ExactMatrix(1, 2, (Fraction(0), Fraction(0)))
    broken = AlgebraData(2, base.mul, base.unit, base.comul, zero_counit)
    flags = check_frobenius(broken)
    assert flags["assoc"] and flags["unit"] and flags["coass"]
    assert not flags["counit"]


# -- structural evaluation ----------------------------------------------------------


def test_eval_generators_diagonal():
    assert mat_eq(eval_term(Mu(), DIAG), DIAG.mul)
    assert mat_eq(eval_term(Eta(), DIAG), DIAG.unit)
    assert mat_eq(eval_term(Delta(), DIAG), DIAG.comul)
    assert mat_eq(eval_term(Eps(), DIAG), DIAG.counit)
    assert mat_eq(eval_term(Id(2), DIAG), ExactMatrix.identity(4))
    assert mat_eq(eval_term(Tau(1, 1), DIAG), sym_matrix(2, 2))
    assert mat_eq(eval_term(Id(0), DIAG), ExactMatrix.identity(1))


def test_eval_matches_diagram_representation():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        got = eval_term(Mu(), MAT2)
    want = brauer_b(mu1, 2)
    assert got.to_rows() == [[Fraction(x) for x in row] for row in want.to_rows()]


def test_eval_composite():
    t = parse_term("mu . delta")
    got = eval_term(t, DIAG)
    assert mat_eq(got, _frac_rows([[1, 0], [0, 1]]))
    torus = parse_term("eps . mu . delta . eta")
    assert eval_term(torus, DIAG).to_rows() == [[Fraction(2)]]


@pytest.mark.parametrize("seed", [401, 402])
def test_eval_functorial(seed):
    rng = random.Random(seed)
    for _ in range(30):
        f, g = random_composable_terms(rng, max_nodes=8, max_width=3)
        assert mat_eq(
            eval_term(Comp(g, f), DIAG),
            mat_mul(eval_term(g, DIAG), eval_term(f, DIAG)),
        )
    for _ in range(30):
        f = random_term(rng, max_nodes=6, max_width=2)
        g = random_term(rng, max_nodes=6, max_width=2)
        assert mat_eq(
            eval_term(Tensor(f, g), DIAG),
            kron(eval_term(f, DIAG), eval_term(g, DIAG)),
        )


@pytest.mark.parametrize("seed", [411])
def test_eval_respects_equality(seed):
    # equal terms evaluate equally, including on the noncommutative data
    # wherever the rewrite only uses the core axioms
    pairs = [
        (parse_term("mu . mu x id1"), parse_term("mu . id1 x mu")),
        (parse_term("mu . eta x id1"), Id(1)),
        (parse_term("eps x id1 . delta"), Id(1)),
        (parse_term("mu x id1 . id1 x delta"), parse_term("delta . mu")),
    ]
    for lhs, rhs in pairs:
        assert equal(lhs, rhs)
        assert mat_eq(eval_term(lhs, DIAG), eval_term(rhs, DIAG))
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            assert mat_eq(eval_term(lhs, MAT2), eval_term(rhs, MAT2))
    rng = random.Random(seed)
    for _ in range(30):
        t = random_term(rng, max_nodes=8, max_width=3)
        u = random_term(rng, max_nodes=8, max_width=3)
        if equal(t, u):
            assert mat_eq(eval_term(t, DIAG), eval_term(u, DIAG))


def test_commutativity_visible_in_matrix_data():
    twisted = parse_term("mu . tau(1,1)")
    assert equal(twisted, Mu())
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        assert not mat_eq(eval_term(twisted, MAT2), eval_term(Mu(), MAT2))
        rounded_l = eval_term(Comp(Eps(), twisted), MAT2)
        rounded_r = eval_term(Comp(Eps(), Mu()), MAT2)
    assert mat_eq(rounded_l, rounded_r)


def test_non_frobenius_warning():
    base = diagonal_algebra(2)
    zero_counit = ExactMatrix(1, 2, (Fraction(0), Fraction(0)))
    broken = AlgebraData(2, base.mul, base.unit, base.comul, zero_counit)
    with pytest.warns(NonFrobeniusWarning, match="counit"):
        eval_term(Id(1), broken)
    # intact data evaluates silently
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        eval_term(Id(1), DIAG)


# -- permutation matrices -------------------------------------------------------------


def test_perm_matrix_examples():
    assert mat_eq(perm_matrix((0, 1), 2), ExactMatrix.identity(4))
    assert mat_eq(perm_matrix((1, 0), 2), sym_matrix(2, 2))
    assert mat_eq(perm_matrix((), 2), ExactMatrix.identity(1))
    # wire i of the input becomes wire sigma(i): column 1 = |0 0 1> sends its
    # last digit to wire 0, landing on row 4 = |1 0 0>
    m = perm_matrix((1, 2, 0), 2)
    assert m.entry(4, 1) == 1
    assert sum(m.entries) == 8


def test_perm_matrix_guard():
    with pytest.raises(SizeGuardExceeded):
        perm_matrix(tuple(range(8)), 3, size_guard=100)


# -- blockwise evaluation --------------------------------------------------------------


@pytest.mark.parametrize("seed", [421, 422])
def test_eval_normal_agrees(seed):
    rng = random.Random(seed)
    for _ in range(60):
        t = random_term(rng, max_nodes=10, max_width=3)
        assert mat_eq(eval_normal(normalize(t), DIAG), eval_term(t, DIAG))


def test_eval_normal_examples():
    assert eval_normal(normalize(parse_term("eps . eta")), DIAG).to_rows() == [
        [Fraction(2)]
    ]
    nf = normalize(parse_term("mu . tau(1,1)"))
    assert mat_eq(eval_normal(nf, DIAG), DIAG.mul)


def test_eval_normal_refuses_noncommutative():
    with pytest.raises(NonCommutativeData):
        eval_normal(normalize(Mu()), MAT2)


# -- closed invariants -------------------------------------------------------------------


def test_closed_invariant_diagonal():
    for g in range(4):
        assert closed_invariant(g, DIAG) == Fraction(2)


@pytest.mark.parametrize("p", [2, 3])
def test_closed_invariant_matrix(p):
    a = matrix_algebra(p)
    for g in range(4):
        assert closed_invariant(g, a) == Fraction(p ** (g + 1))


def test_closed_invariant_matches_term_contraction():
    for g in range(4):
        t = parse_term("eps . " + "mu . delta . " * g + "eta")
        assert normalize(t).closed == (g,)
        assert eval_term(t, DIAG).to_rows() == [[closed_invariant(g, DIAG)]]
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            got = eval_term(t, MAT2)
        assert got.to_rows() == [[closed_invariant(g, MAT2)]]


def test_fractional_data():
    # a scaled counit keeps everything exact in Fractions
    base = diagonal_algebra(2)
    counit = ExactMatrix(1, 2, (Fraction(1, 3), Fraction(1, 3)))
    scaled = AlgebraData(2, base.mul, base.unit, base.comul, counit)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        got = eval_term(parse_term("eps . eta"), scaled)
    assert got.to_rows() == [[Fraction(2, 3)]]


# -- JSON -------------------------------------------------------------------------------


def test_json_round_trip():
    for a in (DIAG, MAT2, matrix_algebra(3)):
        d = algebra_to_json_dict(a)
        assert set(d) == {"dim", "mul", "unit", "comul", "counit"}
        assert all(isinstance(s, str) and "/" in s for s in d["mul"])
        assert algebra_from_json_dict(d) == a


def test_shipped_fixture_files():
    with (DATA / "diagonal-d2.json").open() as fh:
        assert algebra_from_json_dict(json.load(fh)) == DIAG
    with (DATA / "matrix-p2.json").open() as fh:
        assert algebra_from_json_dict(json.load(fh)) == MAT2
