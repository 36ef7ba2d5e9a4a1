"""Weak group-like elements, weak characters and winding endomorphisms.

A weak group-like g satisfies Delta(g) = Delta(1)(g (x) g) = (g (x) g)Delta(1);
the invertible ones are the group-likes.  A weak character is a functional
whose winding map is a unital algebra endomorphism.  For matrix algebras
the weak group-likes are enumerated in closed form (partial injections) and
cross-checkable by exhaustive scan over a small prime field.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .bialgebra import WeakBialgebra, WeakHopfAlgebra, convolution, map_convolution
from .errors import NotAlgebraMap, TooLarge
from .groupoid import GroupoidAlgebra, matrix_algebra
from .linalg import Matrix, Vector, rank, solve
from .report import AxiomReport


@dataclass(frozen=True)
class WeakGrouplike:
    element: Vector
    is_invertible: bool
    inverse: Vector | None = None


@dataclass(frozen=True)
class Character:
    functional: Vector
    side: str                      # "left", "right" or "both"
    inverse: Vector | None = None  # two-sided convolution inverse, when known


def is_weak_grouplike(wb: WeakBialgebra, g: Vector) -> bool:
    dg = wb.coproduct(g)
    gg = wb.tensor_pure(g, g)
    d1 = wb.delta_one()
    return dg == wb.tensor_mul(d1, gg) and dg == wb.tensor_mul(gg, d1)


def is_grouplike(wb: WeakBialgebra, g: Vector) -> Vector | None:
    """The two-sided inverse of g if g is an invertible weak group-like, else None."""
    if not is_weak_grouplike(wb, g):
        return None
    left = wb.algebra.left_mult_matrix(g)
    y = solve(left, wb.unit)
    if y is None:
        return None
    if wb.multiply(y, g) != wb.unit:
        return None
    return y


@dataclass
class GrouplikeEnumeration:
    """All weak group-likes of M_n(k): the zero element is kept apart."""

    algebra: GroupoidAlgebra  # the M_n(k) instance the elements live in
    grouplikes: list          # nonzero weak group-likes (partial injections)
    zero: WeakGrouplike

    @property
    def invertible(self):
        return [g for g in self.grouplikes if g.is_invertible]


def enumerate_weak_grouplikes_matrix(n: int, field=None) -> GrouplikeEnumeration:
    """Enumerate the weak group-likes sum_{i in I} E_{i sigma(i)} of M_n(k).

    Ranges over subsets I of {1..n} and injections sigma: I -> {1..n}; the
    empty subset gives the zero element, which is reported separately and
    not counted among the group-like monoid elements.  Exactly the full
    bijections are flagged invertible (the permutation matrices).
    """
    alg = matrix_algebra(n, field)
    one = alg.field.one()
    out = []
    for size in range(1, n + 1):
        for subset in itertools.combinations(range(n), size):
            for targets in itertools.permutations(range(n), size):
                vec = Vector(alg.field, alg.dim,
                             {alg.basis_index(0, i, s): one for i, s in zip(subset, targets)})
                invertible = size == n
                inv = None
                if invertible:
                    inv = Vector(alg.field, alg.dim,
                                 {alg.basis_index(0, s, i): one for i, s in zip(subset, targets)})
                out.append(WeakGrouplike(vec, invertible, inv))
    zero = WeakGrouplike(Vector.zero(alg.field, alg.dim), False, None)
    return GrouplikeEnumeration(alg, out, zero)


def brute_force_weak_grouplikes(wb: WeakBialgebra, limit=10 ** 6):
    """Exhaustive scan for weak group-likes over a prime field (includes 0)."""
    if wb.field.order is None:
        raise TooLarge("brute force requires a finite prime field")
    if wb.field.order ** wb.dim > limit:
        raise TooLarge(f"{wb.field.order}^{wb.dim} coefficient vectors exceed the scan limit")
    scalars = [wb.field(v) for v in range(wb.field.order)]
    found = []
    for coeffs in itertools.product(scalars, repeat=wb.dim):
        g = Vector(wb.field, wb.dim, dict(enumerate(coeffs)))
        if is_weak_grouplike(wb, g):
            found.append(g)
    return found


def winding(wb: WeakBialgebra, chi: Vector, side: str) -> Matrix:
    """Matrix of the winding map tau_chi on the basis.

    side="left":  a -> chi(a_1) a_2;  side="right": a -> a_1 chi(a_2).
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    cols = []
    for k in range(wb.dim):
        acc = Vector.zero(wb.field, wb.dim)
        for (i, j), c in wb.coalgebra.coproduct_of_basis(k).data.items():
            if side == "left":
                x = chi.data.get(i)
                if x:
                    acc = acc + Vector(wb.field, wb.dim, {j: c * x})
            else:
                x = chi.data.get(j)
                if x:
                    acc = acc + Vector(wb.field, wb.dim, {i: c * x})
        cols.append(acc)
    return Matrix.from_columns(wb.field, wb.dim, cols)


def is_unital_algebra_endo(wb: WeakBialgebra, m: Matrix):
    """Return a failing witness tuple or None if m is a unital algebra endomorphism."""
    if m.apply(wb.unit) != wb.unit:
        return ("unit",)
    for i in range(wb.dim):
        mi = m.apply(wb.basis_vector(i))
        for j in range(wb.dim):
            lhs = m.apply(wb.algebra.product_of_basis(i, j))
            rhs = wb.multiply(mi, m.apply(wb.basis_vector(j)))
            if lhs != rhs:
                return (i, j)
    return None


def is_weak_character(wb: WeakBialgebra, chi: Vector, side: str) -> bool:
    return is_unital_algebra_endo(wb, winding(wb, chi, side)) is None


def character_from_endo(wb: WeakBialgebra, sigma: Matrix) -> Vector | None:
    """Recover chi = eps o sigma when sigma is a winding map.

    If Delta sigma = (id (x) sigma)Delta then sigma = tau_chi^r; if
    Delta sigma = (sigma (x) id)Delta then sigma = tau_chi^l.  Returns chi
    (verified against the winding) or None when neither identity holds.
    Raises NotAlgebraMap if sigma is not a unital algebra endomorphism.
    """
    witness = is_unital_algebra_endo(wb, sigma)
    if witness is not None:
        raise NotAlgebraMap(f"sigma is not a unital algebra endomorphism (witness {witness})")
    right = all(wb.coproduct(sigma.apply(wb.basis_vector(k)))
                == wb.coalgebra.coproduct_of_basis(k).map_legs(None, sigma)
                for k in range(wb.dim))
    left = all(wb.coproduct(sigma.apply(wb.basis_vector(k)))
               == wb.coalgebra.coproduct_of_basis(k).map_legs(sigma, None)
               for k in range(wb.dim))
    if not (left or right):
        return None
    chi = sigma.apply_functional(wb.counit)
    if right and winding(wb, chi, "right") != sigma:
        return None
    if left and not right and winding(wb, chi, "left") != sigma:
        return None
    return chi


@dataclass
class ConvolutionInverse:
    left: Vector | None
    right: Vector | None

    @property
    def two_sided(self):
        # in a monoid a left and a right inverse coincide
        if self.left is not None and self.right is not None:
            return self.right
        return None


def convolution_inverse(wb: WeakBialgebra, chi: Vector) -> ConvolutionInverse:
    """Solve chi' * chi = eps (left) and chi * chi' = eps (right) as linear systems."""
    zero = wb.field.zero()
    left_rows = {}
    right_rows = {}
    for k in range(wb.dim):
        for (i, j), c in wb.coalgebra.coproduct_of_basis(k).data.items():
            x = chi.data.get(j)
            if x:
                left_rows[(k, i)] = left_rows.get((k, i), zero) + c * x
            x = chi.data.get(i)
            if x:
                right_rows[(k, j)] = right_rows.get((k, j), zero) + c * x
    left_m = Matrix(wb.field, wb.dim, wb.dim, left_rows)
    right_m = Matrix(wb.field, wb.dim, wb.dim, right_rows)
    eps = Vector(wb.field, wb.dim, dict(wb.counit.data))
    left_sol = solve(left_m, eps)
    right_sol = solve(right_m, eps)
    if left_sol is not None and convolution(left_sol, chi, wb) != eps:
        left_sol = None
    if right_sol is not None and convolution(chi, right_sol, wb) != eps:
        right_sol = None
    return ConvolutionInverse(left_sol, right_sol)


def classify_character(wb: WeakBialgebra, chi: Vector) -> Character | None:
    """Package a functional as a Character with its strongest verified side."""
    left = is_weak_character(wb, chi, "left")
    right = is_weak_character(wb, chi, "right")
    if not (left or right):
        return None
    side = "both" if (left and right) else ("left" if left else "right")
    inv = convolution_inverse(wb, chi).two_sided
    return Character(chi, side, inv)


def grouplike_identity_report(wb: WeakBialgebra, g: Vector, power_bound=4) -> AxiomReport:
    """Identities a weak group-like must satisfy, with counit power tests.

    Checks g = eps_t(g) g = g eps_s(g); when an antipode exists, that
    eps_t(g) = g S(g) and eps_s(g) = S(g) g are idempotent; and the
    equivalences  eps_t(g) = 1  iff  eps(a g^m) = eps(a) for all basis a and
    m <= power_bound (likewise eps_s'(g)), and the mirrored statement for
    eps_s(g) / eps_t'(g) with powers on the left.  Each direction of every
    equivalence is recorded, so a one-sided discrepancy shows up as a
    failure rather than being reconciled silently.
    """
    report = AxiomReport()
    fmt = wb.format_element
    report.record("is_weak_grouplike", is_weak_grouplike(wb, g), witness=(fmt(g),))
    et, es = wb.eps_t(g), wb.eps_s(g)
    report.check("grouplike_eps_t_absorption", wb.multiply(et, g), g, witness=(fmt(g),), fmt=fmt)
    report.check("grouplike_eps_s_absorption", wb.multiply(g, es), g, witness=(fmt(g),), fmt=fmt)

    if isinstance(wb, WeakHopfAlgebra):
        sg = wb.antipode_apply(g)
        gsg = wb.multiply(g, sg)
        sgg = wb.multiply(sg, g)
        report.check("eps_t_equals_g_Sg", et, gsg, witness=(fmt(g),), fmt=fmt)
        report.check("eps_s_equals_Sg_g", es, sgg, witness=(fmt(g),), fmt=fmt)
        report.check("g_Sg_idempotent", wb.multiply(gsg, gsg), gsg, witness=(fmt(g),), fmt=fmt)
        report.check("Sg_g_idempotent", wb.multiply(sgg, sgg), sgg, witness=(fmt(g),), fmt=fmt)

    powers = [wb.unit]
    for _ in range(power_bound):
        powers.append(wb.multiply(powers[-1], g))
    right_power_test = all(
        wb.counit_value(wb.multiply(wb.basis_vector(a), powers[m])) == wb.counit_value(wb.basis_vector(a))
        for a in range(wb.dim) for m in range(1, power_bound + 1))
    left_power_test = all(
        wb.counit_value(wb.multiply(powers[m], wb.basis_vector(a))) == wb.counit_value(wb.basis_vector(a))
        for a in range(wb.dim) for m in range(1, power_bound + 1))
    report.check("power_counit_iff_eps_t", et == wb.unit, right_power_test, witness=(fmt(g),))
    report.check("power_counit_iff_eps_s_prime", wb.eps_s_prime(g) == wb.unit, right_power_test,
                 witness=(fmt(g),))
    report.check("power_counit_iff_eps_s", es == wb.unit, left_power_test, witness=(fmt(g),))
    report.check("power_counit_iff_eps_t_prime", wb.eps_t_prime(g) == wb.unit, left_power_test,
                 witness=(fmt(g),))
    return report


def char_antipode_report(wha: WeakHopfAlgebra, chi: Vector) -> AxiomReport:
    """Antipode identities for a weak character chi (both-sided).

    (i)  S * tau_chi^r = eps_s o tau_chi^r  and  tau_chi^l * S = eps_t o tau_chi^l
    (ii) when chi o S is verified to be the convolution inverse of chi:
         S = tau_chi^l S tau_chi^r = tau_chi^r S tau_chi^l.
    The hypothesis of (ii) is recorded as its own entry.
    """
    report = AxiomReport()
    report.record("chi_weak_character_left", is_weak_character(wha, chi, "left"))
    report.record("chi_weak_character_right", is_weak_character(wha, chi, "right"))
    tau_r = winding(wha, chi, "right")
    tau_l = winding(wha, chi, "left")
    S = wha.antipode
    m_t, m_s = wha.counital_matrices()[:2]
    report.check("antipode_conv_right_winding", map_convolution(S, tau_r, wha), m_s * tau_r)
    report.check("antipode_conv_left_winding", map_convolution(tau_l, S, wha), m_t * tau_l)

    chi_s = S.apply_functional(chi)
    eps = Vector(wha.field, wha.dim, dict(wha.counit.data))
    inverse_hyp = (convolution(chi_s, chi, wha) == eps and convolution(chi, chi_s, wha) == eps)
    report.record("chi_S_is_convolution_inverse", inverse_hyp)
    if inverse_hyp:
        report.check("antipode_winding_conjugation", tau_l * S * tau_r, S)
        report.check("antipode_winding_conjugation", tau_r * S * tau_l, S)
    return report


def grouplike_monoid_closed(wb: WeakBialgebra, elements) -> bool:
    """True iff the given weak group-likes are closed under multiplication."""
    keys = {tuple(g.items()) for g in elements}
    for a in elements:
        for b in elements:
            if tuple(wb.multiply(a, b).items()) not in keys:
                return False
    return True


def invertible_matrix(m: Matrix) -> bool:
    return m.rows == m.cols and rank(m) == m.rows


__all__ = [
    "WeakGrouplike", "Character", "GrouplikeEnumeration", "ConvolutionInverse",
    "is_weak_grouplike", "is_grouplike", "enumerate_weak_grouplikes_matrix",
    "brute_force_weak_grouplikes", "winding", "is_weak_character",
    "is_unital_algebra_endo", "character_from_endo", "convolution_inverse",
    "classify_character", "grouplike_identity_report", "char_antipode_report",
    "grouplike_monoid_closed", "invertible_matrix",
]
