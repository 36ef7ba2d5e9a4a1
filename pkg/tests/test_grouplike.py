import itertools
import math
import random
from fractions import Fraction

import pytest

from weakhopf.bialgebra import convolution
from weakhopf.errors import NotAlgebraMap, TooLarge
from weakhopf.fields import Field, QQ
from weakhopf.groupoid import matrix_algebra
from weakhopf.grouplike import (brute_force_weak_grouplikes, char_antipode_report,
                                character_from_endo, classify_character,
                                convolution_inverse, enumerate_weak_grouplikes_matrix,
                                grouplike_identity_report, grouplike_monoid_closed,
                                invertible_matrix, is_grouplike, is_weak_character,
                                is_weak_grouplike, winding)
from weakhopf.linalg import Matrix, Vector
from weakhopf.panov import ad_map, groupoid_character


def _partial_injection_count(n):
    return sum(math.comb(n, k) * math.perm(n, k) for k in range(1, n + 1))


# -- weak group-like detection -------------------------------------------------


def test_matrix_units_are_weak_grouplike(M2):
    assert is_weak_grouplike(M2, M2.element(0, 0, 1))
    assert is_weak_grouplike(M2, M2.unit)


def test_column_sum_is_not_weak_grouplike(M2):
    g = M2.element(0, 0, 0) + M2.element(0, 1, 0)  # E11 + E21
    assert not is_weak_grouplike(M2, g)


def test_is_grouplike_permutation(M2):
    swap = M2.element(0, 0, 1) + M2.element(0, 1, 0)
    inv = is_grouplike(M2, swap)
    assert inv == swap
    assert is_grouplike(M2, M2.element(0, 0, 1)) is None


def test_is_grouplike_group_algebra(QZ2):
    t = QZ2.basis_vector(1)
    assert is_grouplike(QZ2, t) == t


# -- enumeration and brute force --------------------------------------------------


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 6), (3, 33)])
def test_enumeration_counts(n, expected):
    enum = enumerate_weak_grouplikes_matrix(n)
    assert len(enum.grouplikes) == expected
    assert expected == _partial_injection_count(n)
    assert enum.zero.element.is_zero()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_enumeration_elements_satisfy_definition(n):
    enum = enumerate_weak_grouplikes_matrix(n)
    alg = enum.algebra
    for g in enum.grouplikes:
        assert is_weak_grouplike(alg, g.element)
        if g.is_invertible:
            assert alg.multiply(g.element, g.inverse) == alg.unit
            assert alg.multiply(g.inverse, g.element) == alg.unit


@pytest.mark.parametrize("n", [1, 2, 3])
def test_invertibles_are_the_permutation_matrices(n):
    enum = enumerate_weak_grouplikes_matrix(n)
    alg = enum.algebra
    perm_matrices = set()
    for perm in itertools.permutations(range(n)):
        g = Vector.zero(alg.field, alg.dim)
        for i, s in enumerate(perm):
            g = g + alg.element(0, i, s)
        perm_matrices.add(tuple(g.items()))
    assert {tuple(g.element.items()) for g in enum.invertible} == perm_matrices
    assert len(enum.invertible) == math.factorial(n)


def test_brute_force_agrees_with_enumeration_over_f2():
    for n in (1, 2):
        field = Field.prime(2)
        enum = enumerate_weak_grouplikes_matrix(n, field)
        scanned = brute_force_weak_grouplikes(enum.algebra)
        enumerated = {tuple(g.element.items()) for g in enum.grouplikes}
        enumerated.add(tuple(enum.zero.element.items()))
        assert {tuple(v.items()) for v in scanned} == enumerated


def test_brute_force_group_algebra(F2Z2):
    found = brute_force_weak_grouplikes(F2Z2)
    expected = {tuple(Vector.zero(F2Z2.field, 2).items()),
                tuple(F2Z2.unit.items()),
                tuple(F2Z2.basis_vector(1).items())}
    assert {tuple(v.items()) for v in found} == expected


def test_brute_force_one_dimensional_f3():
    m1 = matrix_algebra(1, Field.prime(3))
    found = brute_force_weak_grouplikes(m1)
    values = sorted(v.get(0).v for v in found)
    assert values == [0, 1]


def test_brute_force_too_large(M2Z2):
    with pytest.raises(TooLarge):
        brute_force_weak_grouplikes(M2Z2)  # rationals: not even a finite field
    big = matrix_algebra(2, Field.prime(41))
    with pytest.raises(TooLarge):
        brute_force_weak_grouplikes(big)


def test_weak_grouplikes_closed_under_multiplication():
    for n in (2, 3):
        enum = enumerate_weak_grouplikes_matrix(n)
        elements = [g.element for g in enum.grouplikes] + [enum.zero.element]
        assert grouplike_monoid_closed(enum.algebra, elements)


def test_grouplikes_form_group_with_left_to_right_composition():
    # g_sigma * g_pi = g_{sigma then pi}: composition applies sigma first
    n = 3
    enum = enumerate_weak_grouplikes_matrix(n)
    alg = enum.algebra

    def g_of(perm):
        out = Vector.zero(alg.field, alg.dim)
        for i, s in enumerate(perm):
            out = out + alg.element(0, i, s)
        return out

    for sigma in itertools.permutations(range(n)):
        for pi in itertools.permutations(range(n)):
            composed = tuple(pi[sigma[i]] for i in range(n))
            assert alg.multiply(g_of(sigma), g_of(pi)) == g_of(composed)


# -- windings and weak characters ---------------------------------------------------


def test_winding_of_counit_is_identity(M2, M2Z2):
    for wb in (M2, M2Z2):
        eps = Vector(wb.field, wb.dim, dict(wb.counit.data))
        assert winding(wb, eps, "right") == Matrix.identity(wb.field, wb.dim)
        assert winding(wb, eps, "left") == Matrix.identity(wb.field, wb.dim)


def test_winding_scales_matrix_units(M2):
    chi = groupoid_character(M2, [Fraction(1)], [Fraction(1), Fraction(2)])
    tau = winding(M2, chi, "left")
    e12 = M2.element(0, 0, 1)
    assert tau.apply(e12) == e12.scale(Fraction(2))


def test_left_winding_fixes_source_base(M2, M2Z2):
    from weakhopf.bialgebra import base_subalgebras
    for wb, chi in ((M2, groupoid_character(M2, [Fraction(1)], [Fraction(1), Fraction(3)])),
                    (M2Z2, groupoid_character(M2Z2, [Fraction(1), Fraction(-1)],
                                              [Fraction(1), Fraction(2)]))):
        tau = winding(wb, chi, "left")
        _, basis_s = base_subalgebras(wb)
        for a in basis_s:
            assert tau.apply(a) == a


def test_is_weak_character(M2):
    chi = groupoid_character(M2, [Fraction(1)], [Fraction(1), Fraction(3)])
    assert is_weak_character(M2, chi, "left")
    assert is_weak_character(M2, chi, "right")
    delta_diag = Vector(QQ, 4, {0: Fraction(1), 3: Fraction(1)})  # chi(E_ij) = [i == j]
    assert not is_weak_character(M2, delta_diag, "left")
    eps = Vector(QQ, 4, dict(M2.counit.data))
    assert is_weak_character(M2, eps, "left") and is_weak_character(M2, eps, "right")


def test_character_nonmultiplicativity_witness(M2):
    chi = groupoid_character(M2, [Fraction(1)], [Fraction(1), Fraction(2)])
    e11, e22 = M2.element(0, 0, 0), M2.element(0, 1, 1)
    prod = M2.multiply(e11, e22)
    assert prod.is_zero()
    chi_of = lambda v: sum((chi.get(i) * c for i, c in v.items()), QQ.zero())
    assert chi_of(prod) == 0
    assert chi_of(e11) * chi_of(e22) == 1


def test_character_from_endo_identity(M2):
    chi = character_from_endo(M2, Matrix.identity(QQ, 4))
    assert chi == Vector(QQ, 4, dict(M2.counit.data))


def test_character_from_endo_roundtrip(M2):
    chi = groupoid_character(M2, [Fraction(1)], [Fraction(1), Fraction(2)])
    sigma = winding(M2, chi, "right")
    assert character_from_endo(M2, sigma) == chi


def test_character_from_endo_rejects_conjugation(M2):
    swap = M2.element(0, 0, 1) + M2.element(0, 1, 0)
    sigma = ad_map(M2, swap)
    assert character_from_endo(M2, sigma) is None


def test_character_from_endo_requires_algebra_map(M2):
    bad = Matrix.zero(QQ, 4, 4)
    with pytest.raises(NotAlgebraMap):
        character_from_endo(M2, bad)


def test_convolution_inverse_two_sided(M2):
    chi = groupoid_character(M2, [Fraction(1)], [Fraction(1), Fraction(2)])
    inv = convolution_inverse(M2, chi)
    assert inv.two_sided is not None
    chi_s = M2.antipode.apply_functional(chi)
    assert inv.two_sided == chi_s
    eps = Vector(QQ, 4, dict(M2.counit.data))
    assert convolution(inv.two_sided, chi, M2) == eps
    assert convolution(chi, inv.two_sided, M2) == eps


def test_invertible_character_has_invertible_windings(M2, QZ4):
    chi = groupoid_character(M2, [Fraction(1)], [Fraction(1), Fraction(5)])
    assert invertible_matrix(winding(M2, chi, "left"))
    assert invertible_matrix(winding(M2, chi, "right"))
    chi4 = Vector.from_list(QQ, [Fraction(1), Fraction(-1), Fraction(1), Fraction(-1)])
    assert is_weak_character(QZ4, chi4, "left")
    assert invertible_matrix(winding(QZ4, chi4, "left"))


def test_windings_compose_under_convolution(M2, M2Z2):
    rng = random.Random(9)
    for wb in (M2, M2Z2):
        q1 = [Fraction(1)] + [Fraction(rng.randint(1, 5)) for _ in range(wb.n - 1)]
        q2 = [Fraction(1)] + [Fraction(rng.randint(1, 5)) for _ in range(wb.n - 1)]
        rho = [Fraction(1)] * wb.group.order
        if wb.group.order == 2:
            rho = [Fraction(1), Fraction(-1)]
        chi1 = groupoid_character(wb, rho, q1)
        chi2 = groupoid_character(wb, [Fraction(1)] * wb.group.order, q2)
        conv = convolution(chi1, chi2, wb)
        assert winding(wb, conv, "right") == \
            winding(wb, chi1, "right") * winding(wb, chi2, "right")


def test_classify_character(M2):
    chi = groupoid_character(M2, [Fraction(1)], [Fraction(1), Fraction(2)])
    c = classify_character(M2, chi)
    assert c.side == "both"
    assert c.inverse is not None
    assert classify_character(M2, Vector(QQ, 4, {0: Fraction(1), 3: Fraction(1)})) is None


# -- identity reports ----------------------------------------------------------------


def test_grouplike_identity_report_matrix_unit(M2):
    e12 = M2.element(0, 0, 1)
    report = grouplike_identity_report(M2, e12)
    assert report.passed
    # hypothesis flags: eps_t(E12) = E11 != 1, and the power test indeed fails
    assert M2.eps_t(e12) == M2.element(0, 0, 0)
    assert M2.eps_t(e12) != M2.unit
    e21 = M2.element(0, 1, 0)
    sq = M2.multiply(e12, e12)
    assert M2.counit_value(M2.multiply(e21, sq)) == 0
    assert M2.counit_value(e21) == 1


def test_grouplike_identity_report_permutation(M2):
    swap = M2.element(0, 0, 1) + M2.element(0, 1, 0)
    report = grouplike_identity_report(M2, swap)
    assert report.passed
    assert M2.eps_t(swap) == M2.unit


def test_grouplike_identity_report_unit(QZ3):
    assert grouplike_identity_report(QZ3, QZ3.unit).passed


def test_grouplike_identity_report_all_enumerated(M2):
    enum = enumerate_weak_grouplikes_matrix(2)
    for g in enum.grouplikes:
        assert grouplike_identity_report(M2, g.element).passed


def test_char_antipode_report_matrix(M2):
    chi = groupoid_character(M2, [Fraction(1)], [Fraction(1), Fraction(2)])
    report = char_antipode_report(M2, chi)
    assert report.passed
    assert report.axiom_passed("chi_S_is_convolution_inverse")
    assert report.axiom_passed("antipode_winding_conjugation")


def test_char_antipode_report_counit(M2):
    eps = Vector(QQ, 4, dict(M2.counit.data))
    assert char_antipode_report(M2, eps).passed


def test_char_antipode_report_sign_character(QZ2):
    chi = Vector.from_list(QQ, [Fraction(1), Fraction(-1)])
    assert char_antipode_report(QZ2, chi).passed


def test_noncocommutative_windings_differ_but_recover():
    # functions on S_3: evaluation at a transposition is a two-sided weak
    # character whose left and right windings are different translations
    from weakhopf.fixtures import function_algebra
    from weakhopf.groupoid import GroupPresentation
    fa = function_algebra(GroupPresentation.symmetric(3))
    chi = Vector.unit(fa.field, fa.dim, 1)
    tl = winding(fa, chi, "left")
    tr = winding(fa, chi, "right")
    assert tl != tr
    assert is_weak_character(fa, chi, "left")
    assert is_weak_character(fa, chi, "right")
    assert character_from_endo(fa, tr) == chi
    assert convolution_inverse(fa, chi).two_sided is not None


def test_convolution_inverse_absent_for_zero_functional(M2):
    inv = convolution_inverse(M2, Vector.zero(QQ, 4))
    assert inv.left is None and inv.right is None and inv.two_sided is None
