import random
from fractions import Fraction

import pytest

from weakhopf.bialgebra import (Algebra, Coalgebra, TensorElement, WeakBialgebra,
                                WeakHopfAlgebra, base_subalgebras, check_antipode,
                                check_weak_bialgebra, convolution, counital_maps,
                                make_algebra, tensor_product, weak_counit_identities)
from weakhopf.errors import (AxiomFailure, CounitFails, FieldMismatch, NotAssociative,
                             UnitFails)
from weakhopf.fields import QQ
from weakhopf.grouplike import is_weak_grouplike
from weakhopf.linalg import Matrix, Vector
from weakhopf.panov import groupoid_character
from weakhopf.report import AxiomReport


def _vec(field, values):
    return Vector.from_list(field, [field.from_int(v) for v in values])


# -- construction-time validation --------------------------------------------


def test_make_algebra_unit_fails():
    # e*e = f, f*f = e, ef = fe = 0, with e declared as unit
    f = QQ
    mult = {(0, 0): _vec(f, [0, 1]), (1, 1): _vec(f, [1, 0]),
            (0, 1): Vector.zero(f, 2), (1, 0): Vector.zero(f, 2)}
    with pytest.raises(UnitFails):
        make_algebra(f, 2, mult, Vector.unit(f, 2, 0))


def test_make_algebra_not_associative():
    f = QQ
    one = Vector.unit(f, 3, 0)
    mult = {(0, 0): one, (0, 1): Vector.unit(f, 3, 1), (0, 2): Vector.unit(f, 3, 2),
            (1, 0): Vector.unit(f, 3, 1), (2, 0): Vector.unit(f, 3, 2),
            (1, 1): Vector.unit(f, 3, 2), (1, 2): one,
            (2, 1): Vector.zero(f, 3), (2, 2): Vector.zero(f, 3)}
    with pytest.raises(NotAssociative) as exc:
        make_algebra(f, 3, mult, one)
    assert exc.value.witness == (1, 1, 1)


def test_coalgebra_counit_fails():
    f = QQ
    comult = {0: TensorElement(f, 2, 2, {(0, 0): f.one()}),
              1: TensorElement(f, 2, 2, {(1, 1): f.one()})}
    with pytest.raises(CounitFails):
        Coalgebra(f, 2, comult, Vector.from_list(f, [f.one(), f.zero()]))


def test_weak_bialgebra_rejects_invalid(M2):
    bad_counit = Vector.from_list(QQ, [Fraction(1), Fraction(0), Fraction(0), Fraction(1)])
    coalg = Coalgebra(QQ, 4, dict(M2.coalgebra.comult), bad_counit, validate=False)
    with pytest.raises(AxiomFailure):
        WeakBialgebra(M2.algebra, coalg, validate=True)


def test_zero_dimensional_rejected():
    with pytest.raises(Exception):
        Algebra(QQ, 0, {}, Vector.zero(QQ, 0))


# -- axiom sweeps -------------------------------------------------------------


def test_fixtures_pass_weak_bialgebra_checks(M2, QZ2, M2Z2):
    for wb in (M2, QZ2, M2Z2):
        assert check_weak_bialgebra(wb).passed
        assert check_antipode(wb).passed


def test_corrupted_counit_fails_weak_multiplicativity(M2):
    bad_counit = Vector.from_list(QQ, [Fraction(1), Fraction(0), Fraction(0), Fraction(1)])
    coalg = Coalgebra(QQ, 4, dict(M2.coalgebra.comult), bad_counit, validate=False)
    wb = WeakBialgebra(M2.algebra, coalg, validate=False)
    report = check_weak_bialgebra(wb)
    assert not report.passed
    assert report.axiom_passed("coproduct_multiplicative")
    assert report.axiom_passed("coproduct_unit_compatibility")
    fails = report.failures("counit_weak_multiplicative")
    assert fails
    # first failing triple in basis order: (E11, E12, E21)
    assert fails[0].witness == (0, 1, 2)


def test_counital_maps_matrix_units(M2):
    e12 = M2.element(0, 0, 1)
    et, es, etp, esp = counital_maps(M2, e12)
    assert et == M2.element(0, 0, 0)
    assert es == M2.element(0, 1, 1)
    assert etp == M2.element(0, 1, 1)
    assert esp == M2.element(0, 0, 0)


def test_counital_maps_group_algebra(QZ2):
    t = QZ2.basis_vector(1)
    et, es, _, _ = counital_maps(QZ2, t)
    assert et == QZ2.unit
    assert es == QZ2.unit


def test_counital_maps_permutation(M2):
    g = M2.element(0, 0, 1) + M2.element(0, 1, 0)
    assert M2.eps_t(g) == M2.unit
    assert M2.eps_s(g) == M2.unit


def test_counital_projections_idempotent(M2, QZ3, M2Z2):
    for wb in (M2, QZ3, M2Z2):
        for m in wb.counital_matrices():
            assert m * m == m


def test_base_subalgebras_matrix(M2):
    basis_t, basis_s = base_subalgebras(M2)
    diag = {tuple(M2.element(0, i, i).items()) for i in range(2)}
    assert {tuple(v.items()) for v in basis_t} == diag
    assert {tuple(v.items()) for v in basis_s} == diag


def test_base_subalgebras_hopf_case(QZ3):
    basis_t, basis_s = base_subalgebras(QZ3)
    assert [v for v in basis_t] == [QZ3.unit]
    assert [v for v in basis_s] == [QZ3.unit]


def test_base_subalgebras_groupoid(M2Z2):
    basis_t, basis_s = base_subalgebras(M2Z2)
    diag = {tuple(M2Z2.element(0, i, i).items()) for i in range(2)}
    assert {tuple(v.items()) for v in basis_t} == diag
    assert {tuple(v.items()) for v in basis_s} == diag


# -- counit identities ---------------------------------------------------------


def test_weak_counit_identities_matrix(M2):
    a, b = M2.element(0, 0, 1), M2.element(0, 1, 0)
    report = weak_counit_identities(M2, a, b)
    assert report.passed
    assert M2.counit_value(M2.multiply(a, b)) == Fraction(1)


def test_weak_counit_identities_exhaustive(M2, QZ2, QZ4, M2Z2):
    for wb in (M2, QZ2, QZ4, M2Z2):
        for i in range(wb.dim):
            for j in range(wb.dim):
                assert weak_counit_identities(wb, wb.basis_vector(i), wb.basis_vector(j)).passed


def test_weak_counit_identity_with_unit(M2):
    for i in range(M2.dim):
        a = M2.basis_vector(i)
        report = weak_counit_identities(M2, a, M2.unit)
        assert report.passed


# -- convolution ---------------------------------------------------------------


def _random_functional(rng, wb):
    return Vector(wb.field, wb.dim,
                  {i: Fraction(rng.randint(-3, 3)) for i in range(wb.dim)})


def test_convolution_identity_is_counit(M2, M2Z2):
    rng = random.Random(3)
    for wb in (M2, M2Z2):
        eps = Vector(wb.field, wb.dim, dict(wb.counit.data))
        for _ in range(5):
            f = _random_functional(rng, wb)
            assert convolution(eps, f, wb) == f
            assert convolution(f, eps, wb) == f


def test_convolution_associative(M2Z2):
    rng = random.Random(5)
    for _ in range(5):
        f, g, h = (_random_functional(rng, M2Z2) for _ in range(3))
        lhs = convolution(convolution(f, g, M2Z2), h, M2Z2)
        rhs = convolution(f, convolution(g, h, M2Z2), M2Z2)
        assert lhs == rhs


def test_character_convolution_is_pointwise_on_matrix_algebra(M2):
    one = Fraction(1)
    chi_q = groupoid_character(M2, [one], [Fraction(1), Fraction(2)])
    chi_r = groupoid_character(M2, [one], [Fraction(1), Fraction(3)])
    expected = groupoid_character(M2, [one], [Fraction(1), Fraction(6)])
    assert convolution(chi_q, chi_r, M2) == expected


# -- tensor products -------------------------------------------------------------


def test_tensor_product_field_mismatch(M2, F2Z2):
    with pytest.raises(FieldMismatch):
        tensor_product(M2, F2Z2)


def test_tensor_with_trivial_factor_is_isomorphic(M2):
    field = QQ
    trivial_alg = Algebra(field, 1, {(0, 0): Vector.unit(field, 1, 0)},
                          Vector.unit(field, 1, 0), ["1"])
    trivial_coalg = Coalgebra(field, 1, {0: TensorElement(field, 1, 1, {(0, 0): field.one()})},
                              Vector.unit(field, 1, 0))
    trivial = WeakHopfAlgebra(trivial_alg, trivial_coalg, Matrix.identity(field, 1))
    prod = tensor_product(M2, trivial)
    assert prod.dim == M2.dim
    for (i, j), vec in M2.algebra.mult.items():
        assert prod.algebra.product_of_basis(i, j) == Vector(field, 4, dict(vec.data))
    for k in range(M2.dim):
        assert prod.coalgebra.coproduct_of_basis(k).data == \
            M2.coalgebra.coproduct_of_basis(k).data
    assert isinstance(prod, WeakHopfAlgebra)


def test_tensor_product_passes_checks_and_has_antipode(M2, QZ2):
    prod = tensor_product(M2, QZ2)
    assert prod.dim == 8
    assert check_weak_bialgebra(prod).passed
    assert check_antipode(prod).passed


def test_tensor_of_weak_grouplikes_is_weak_grouplike(M2, QZ2):
    prod = tensor_product(M2, QZ2)
    g = M2.element(0, 0, 1)            # E12
    gp = QZ2.basis_vector(1)           # t
    tensor_elt = Vector(QQ, 8, {})
    for i, ci in g.data.items():
        for j, cj in gp.data.items():
            tensor_elt = tensor_elt + Vector(QQ, 8, {i * 2 + j: ci * cj})
    assert is_weak_grouplike(prod, tensor_elt)


# -- report container -------------------------------------------------------------


def test_report_lines_format_and_witness_order():
    report = AxiomReport()
    report.record("alpha", True)
    report.record("beta", False, witness=(2, 1))
    report.record("beta", False, witness=(0, 3))
    assert report.lines() == ["AXIOM alpha PASS", "AXIOM beta FAIL witness=(0,3)"]
    assert not report.passed
    assert [f.witness for f in report.failures("beta")] == [(0, 3), (2, 1)]


def test_report_merge_is_order_independent():
    a = AxiomReport()
    a.record("x", False, witness=(5,))
    b = AxiomReport()
    b.record("x", False, witness=(1,))
    merged1 = AxiomReport().merge(a).merge(b)
    merged2 = AxiomReport().merge(b).merge(a)
    assert merged1.lines() == merged2.lines()
