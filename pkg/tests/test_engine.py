"""Graded algebra engine: nilpotent quotients, brackets, centers, quotients."""

import pytest

from bzloop.algebra import (
    AmbiguousPreimageError,
    GradedAlgebra,
    GradedSubspaceFamily,
    InapplicableError,
    NoPreimageError,
    adx_preimage,
    graded_center,
    jacobi_check,
    quotient,
    second_center,
    two_step_centralizers,
    z_substitution_holds,
)
from bzloop.bl import construct_bl, presentation_R
from bzloop.gf2 import EchelonBasis
from bzloop.nq import Presentation, nq_compute
from bzloop.oracle import witt_dimension
from bzloop.words import X, Y, Z, make_word, parse_word


@pytest.fixture(scope="module")
def B8():
    return construct_bl(2, 1, 8)


@pytest.fixture(scope="module")
def M8():
    return nq_compute(presentation_R(2, 1), 8)


# -- free quotients ----------------------------------------------------------


def test_free_dims_match_witt():
    free = nq_compute(Presentation(()), 10)
    assert free.dims[1:] == tuple(witt_dimension(d) for d in range(1, 11))


def test_free_dims_full_jacobi():
    free = nq_compute(Presentation(()), 8, full_jacobi=True)
    assert free.dims[1:] == (2, 1, 2, 3, 6, 9, 18, 30)


def test_presentation_dims_frozen():
    M = nq_compute(presentation_R(2, 1), 20)
    assert M.dims[1:] == (2, 1, 1, 1, 2, 1, 2, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 2, 2)


def test_jacobi_modes_agree():
    pres = presentation_R(2, 1)
    assert nq_compute(pres, 12) == nq_compute(pres, 12, full_jacobi=True)


def test_relator_validation():
    with pytest.raises(TypeError):
        Presentation(("y x y",))
    with pytest.raises(ValueError):
        Presentation((make_word(Y),))


# -- bracket consistency -----------------------------------------------------


def test_jacobi_check_passes(B8):
    report = jacobi_check(B8)
    assert report.ok
    assert report.checked == 40
    assert str(report) == "jacobi check: pass, 40 instances"


def _rebuilt(A, mutate):
    rows = [[list(r) for r in layer] for layer in A.action[1:]]
    mutate(rows)
    return GradedAlgebra(
        A.class_bound, A.basis[1:], [tuple(tuple(r) for r in layer) for layer in rows]
    )


def test_jacobi_check_detects_bad_square(B8):
    def mutate(rows):
        rows[0][0][0] ^= 1  # force [x, x] nonzero

    report = jacobi_check(_rebuilt(B8, mutate))
    assert not report.ok
    assert any(kind == "square" for kind, *_ in report.failures)


def test_jacobi_check_detects_bad_action_row(B8):
    def mutate(rows):
        rows[1][0][1] = rows[1][0][0]  # give [e2, y] the image of [e2, x]

    report = jacobi_check(_rebuilt(B8, mutate))
    assert not report.ok


def test_element_arithmetic(B8):
    x = B8.generator("x")
    y = B8.generator(Y)
    e2 = B8.bracket(y, x)
    assert e2.degree == 2 and e2.bits == 1
    assert e2.labels() == ["y x"]
    assert e2 + e2 == B8.zero(2)
    assert (e2 + B8.zero(2)) == e2
    assert B8.zero(3) == B8.zero(9)  # zeros compare equal across degrees
    with pytest.raises(ValueError):
        x + e2
    z = B8.generator(Z)
    assert z.bits == 0b11
    assert B8.bracket(x, y) == e2  # antisymmetry in characteristic 2


def test_element_validation(B8):
    with pytest.raises(ValueError):
        B8.element(0, 1)
    with pytest.raises(ValueError):
        B8.element(2, 0b10)  # degree 2 is one-dimensional
    with pytest.raises(ValueError):
        B8.element(9, 1)  # nonzero beyond the class bound
    assert B8.element(9, 0).is_zero


def test_eval_word(B8):
    assert B8.eval_word(parse_word("y x")) == B8.element(2, 1)
    assert B8.eval_word(parse_word("y x^2 y")) == B8.zero(5)
    overweight = B8.eval_word(parse_word("y x^9"))
    assert overweight.is_zero and overweight.degree == 10


def test_constructor_validation(B8):
    with pytest.raises(ValueError):
        GradedAlgebra(0, [], [])
    with pytest.raises(ValueError):
        GradedAlgebra(2, B8.basis[1:3], B8.action[1:2])
    bad_rows = [B8.action[1], ((4, 0),)]  # mask outside degree 3
    with pytest.raises(ValueError):
        GradedAlgebra(2, B8.basis[1:3], bad_rows)


# -- centers and quotients ---------------------------------------------------


def test_construction_has_no_center(B8):
    assert graded_center(B8).weights() == []


def test_center_weights_small():
    M = nq_compute(presentation_R(2, 1), 12)
    assert graded_center(M).weights() == [5, 7]


def test_center_and_second_center_weights():
    M = nq_compute(presentation_R(2, 1), 24)
    assert graded_center(M).weights() == [5, 7, 15, 20, 21]
    assert second_center(M).weights() == [5, 7, 15, 19, 20, 21]


def test_quotient_matches_direct_construction():
    M = nq_compute(presentation_R(2, 1), 24)
    Q = quotient(M, second_center(M))
    assert Q.class_bound == 22
    assert Q == construct_bl(2, 1, 22)


def test_quotient_rejects_non_ideal(B8):
    per = {d: EchelonBasis(B8.dim(d)) for d in range(1, 5)}
    per[2].add(1)  # a line not closed under the generator action
    family = GradedSubspaceFamily(B8, per, 4)
    with pytest.raises(ValueError, match="not an ideal"):
        quotient(B8, family)


def test_quotient_rejects_degree_one(B8):
    per = {d: EchelonBasis(B8.dim(d)) for d in range(1, 5)}
    per[1].add(0b01)
    family = GradedSubspaceFamily(B8, per, 4)
    with pytest.raises(ValueError, match="degree 1"):
        quotient(B8, family)


def test_quotient_rejects_foreign_family(B8, M8):
    per = {d: EchelonBasis(M8.dim(d)) for d in range(1, 5)}
    family = GradedSubspaceFamily(M8, per, 4)
    with pytest.raises(ValueError, match="different algebra"):
        quotient(B8, family)


# -- derived structure -------------------------------------------------------


def test_two_step_centralizers(B8, M8):
    assert two_step_centralizers(B8) == ["y", "y", "x", "y", "y", "x"]
    assert two_step_centralizers(M8) == ["y", "y", None, "y", None, "x"]


def test_adx_preimage_unique(B8, M8):
    e3 = B8.element(3, 1)
    target = B8.bracket_gen(e3, X)
    assert target.bits
    assert adx_preimage(B8, target, 1) == e3
    # a two-step pullback across a two-dimensional component
    assert adx_preimage(M8, M8.element(5, 0b01), 2) == M8.element(3, 1)


def test_adx_preimage_errors(B8, M8):
    with pytest.raises(AmbiguousPreimageError):
        adx_preimage(B8, B8.zero(4), 1)
    with pytest.raises(AmbiguousPreimageError):
        adx_preimage(B8, B8.element(2, 1), 1)  # degree 1 has an x-kernel
    with pytest.raises(NoPreimageError):
        adx_preimage(M8, M8.element(5, 0b10), 1)
    with pytest.raises(ValueError):
        adx_preimage(B8, B8.element(3, 1), 0)
    with pytest.raises(ValueError):
        adx_preimage(B8, B8.element(3, 1), 3)


def test_z_substitution(B8, M8):
    assert z_substitution_holds(B8, B8.element(2, 1), (X, X))
    assert z_substitution_holds(B8, B8.element(2, 1), ())
    with pytest.raises(InapplicableError):
        z_substitution_holds(B8, B8.element(7, 1), (X, X))  # runs past the bound
    with pytest.raises(InapplicableError):
        z_substitution_holds(M8, M8.element(4, 1), (X,))  # trivial centralizer window
    with pytest.raises(ValueError):
        z_substitution_holds(B8, B8.element(2, 1), (X, Z))
