"""Skew derivations, (g,h)-coderivations and skew-primitive elements.

A (g,h)-coderivation is a linear map delta with
Delta delta = (lambda_g (x) delta + delta (x) lambda_h) Delta, where
lambda_a is left multiplication.  The space of all such delta for fixed
(g, h) is the kernel of an explicit linear operator on dim^2 unknowns and
is computed exactly.  Skew-primitivity is checked both inside weak
bialgebras and inside extended Ore algebras through a shared context
interface (coproduct / tensor_pure / tensor_mul / eps_t / eps_s / multiply).
"""

from __future__ import annotations

from dataclasses import dataclass

from .bialgebra import WeakBialgebra
from .errors import NotAutomorphism, NotDerivation, ValidationError
from .grouplike import is_unital_algebra_endo, winding
from .linalg import Matrix, Vector, kernel_basis
from .report import AxiomReport


@dataclass(frozen=True)
class SkewDerivation:
    """Validated Ore data: a unital algebra automorphism and a sigma-derivation."""

    sigma: Matrix
    delta: Matrix


@dataclass(frozen=True)
class CoderivationWitness:
    """A map delta together with the weak group-likes (g, h) it is a coderivation for."""

    delta: Matrix
    g: Vector
    h: Vector


def coderivation_witness(wb: WeakBialgebra, delta: Matrix, g: Vector, h: Vector) -> CoderivationWitness:
    """Validate and package a (g,h)-coderivation; raises on failure."""
    from .grouplike import is_weak_grouplike
    if not (is_weak_grouplike(wb, g) and is_weak_grouplike(wb, h)):
        raise ValidationError("g and h must be weak group-like")
    if not is_coderivation(wb, delta, g, h):
        raise ValidationError("delta fails the (g,h)-coderivation identity")
    return CoderivationWitness(delta, g, h)


def validate_automorphism(wb: WeakBialgebra, sigma: Matrix):
    """Raise NotAutomorphism unless sigma is a bijective unital algebra map."""
    witness = is_unital_algebra_endo(wb, sigma)
    if witness is not None:
        raise NotAutomorphism(f"sigma is not a unital algebra map (witness {witness})")
    from .linalg import rank
    if rank(sigma) != wb.dim:
        raise NotAutomorphism("sigma is not bijective")


def is_sigma_derivation(wb: WeakBialgebra, sigma: Matrix, delta: Matrix) -> bool:
    """Leibniz rule delta(ab) = delta(a) b + sigma(a) delta(b) on all basis pairs.

    Also checks delta(1) = 0, which the rule forces.
    """
    if delta.apply(wb.unit):
        return False
    for i in range(wb.dim):
        bi = wb.basis_vector(i)
        dbi = delta.apply(bi)
        sbi = sigma.apply(bi)
        for j in range(wb.dim):
            bj = wb.basis_vector(j)
            lhs = delta.apply(wb.algebra.product_of_basis(i, j))
            rhs = wb.multiply(dbi, bj) + wb.multiply(sbi, delta.apply(bj))
            if lhs != rhs:
                return False
    return True


def skew_derivation(wb: WeakBialgebra, sigma: Matrix, delta: Matrix) -> SkewDerivation:
    """Validate and package Ore data; raises NotAutomorphism / NotDerivation."""
    validate_automorphism(wb, sigma)
    for i in range(wb.dim):
        bi = wb.basis_vector(i)
        for j in range(wb.dim):
            bj = wb.basis_vector(j)
            lhs = delta.apply(wb.algebra.product_of_basis(i, j))
            rhs = wb.multiply(delta.apply(bi), bj) + wb.multiply(sigma.apply(bi), delta.apply(bj))
            if lhs != rhs:
                raise NotDerivation(i, j, wb.format_element(lhs), wb.format_element(rhs))
    return SkewDerivation(sigma, delta)


def _coderivation_rhs(wb: WeakBialgebra, delta: Matrix, lam_g: Matrix, lam_h: Matrix, k):
    """(lambda_g (x) delta + delta (x) lambda_h) Delta(b_k)."""
    out = None
    for (i, j), c in wb.coalgebra.coproduct_of_basis(k).data.items():
        bi, bj = wb.basis_vector(i), wb.basis_vector(j)
        term = wb.tensor_pure(lam_g.apply(bi), delta.apply(bj)) \
            + wb.tensor_pure(delta.apply(bi), lam_h.apply(bj))
        term = term.scale(c)
        out = term if out is None else out + term
    from .bialgebra import TensorElement
    return out if out is not None else TensorElement.zero(wb.field, wb.dim, wb.dim)


def is_coderivation(wb: WeakBialgebra, delta: Matrix, g: Vector, h: Vector) -> bool:
    lam_g = wb.algebra.left_mult_matrix(g)
    lam_h = wb.algebra.left_mult_matrix(h)
    return all(wb.coproduct(delta.apply(wb.basis_vector(k)))
               == _coderivation_rhs(wb, delta, lam_g, lam_h, k)
               for k in range(wb.dim))


def coderivation_constraint_matrix(wb: WeakBialgebra, g: Vector, h: Vector) -> Matrix:
    """The linear system whose kernel is the space of (g,h)-coderivations.

    With unknowns X[r][k] (coefficient of b_r in delta(b_k), flattened as
    column r*dim + k) the defining identity reads, per basis element k and
    tensor slot (u, v),

        sum_r d[u][v][r] X[r][k]
          - sum_{(i,j)} d[i][j][k] (L_g[u][i] X[v][j] + L_h[v][j] X[u][i]) = 0.

    The dim^3 rows are deduplicated.
    """
    dim = wb.dim
    field = wb.field
    lam_g = wb.algebra.left_mult_matrix(g)
    lam_h = wb.algebra.left_mult_matrix(h)
    lg_cols = lam_g.columns()
    lh_cols = lam_h.columns()
    zero = field.zero()

    def unknown(r, k):
        return r * dim + k

    rows = set()
    for k in range(dim):
        lhs_rows = {}
        for r in range(dim):
            for (u, v), c in wb.coalgebra.coproduct_of_basis(r).data.items():
                key = (u, v)
                lhs_rows.setdefault(key, {})
                col = unknown(r, k)
                lhs_rows[key][col] = lhs_rows[key].get(col, zero) + c
        for (i, j), c in wb.coalgebra.coproduct_of_basis(k).data.items():
            for u, lg in lg_cols[i].data.items():
                for v in range(dim):
                    col = unknown(v, j)
                    key = (u, v)
                    lhs_rows.setdefault(key, {})
                    lhs_rows[key][col] = lhs_rows[key].get(col, zero) - c * lg
            for v, lh in lh_cols[j].data.items():
                for u in range(dim):
                    col = unknown(u, i)
                    key = (u, v)
                    lhs_rows.setdefault(key, {})
                    lhs_rows[key][col] = lhs_rows[key].get(col, zero) - c * lh
        for row in lhs_rows.values():
            cleaned = tuple((col, row[col]) for col in sorted(row) if row[col])
            if cleaned:
                rows.add(cleaned)

    entries = {}
    ordered = sorted(rows, key=lambda t: tuple((col, str(v)) for col, v in t))
    for ridx, cleaned in enumerate(ordered):
        for col, val in cleaned:
            entries[(ridx, col)] = val
    return Matrix(field, len(rows), dim * dim, entries)


def coderivation_space(wb: WeakBialgebra, g: Vector, h: Vector):
    """Basis of all (g,h)-coderivations, as matrices.

    Exact kernel of :func:`coderivation_constraint_matrix`; every returned
    matrix is re-verified against the defining identity.
    """
    dim = wb.dim
    field = wb.field
    constraint = coderivation_constraint_matrix(wb, g, h)
    basis = []
    for vec in kernel_basis(constraint):
        m = Matrix(field, dim, dim,
                   {(r, k): c for (r, k), c in
                    (((i // dim, i % dim), c) for i, c in vec.data.items())})
        if not is_coderivation(wb, m, g, h):
            raise ValidationError("kernel vector fails the coderivation identity")
        basis.append(m)
    return basis


def inner_coderivation(wb: WeakBialgebra, chi: Vector) -> Matrix:
    """The (1,1)-coderivation a -> a_1 chi(a_2) - chi(a_1) a_2."""
    delta = winding(wb, chi, "right") - winding(wb, chi, "left")
    if not is_coderivation(wb, delta, wb.unit, wb.unit):
        raise ValidationError("inner coderivation fails the defining identity")
    return delta


def is_skew_primitive(ctx, x, g, h) -> bool:
    """Delta(x) = Delta(1)(g (x) x + x (x) h) = (g (x) x + x (x) h)Delta(1), exactly.

    ctx is a weak bialgebra or an extended Ore algebra; elements and the
    two weak group-likes must live where the context expects them.
    """
    dx = ctx.coproduct(x)
    mixed = ctx.tensor_pure(g, x) + ctx.tensor_pure(x, h)
    d1 = ctx.coproduct(ctx.one)
    return dx == ctx.tensor_mul(d1, mixed) and dx == ctx.tensor_mul(mixed, d1)


def skew_primitive_identity_report(ctx, x, g, h) -> AxiomReport:
    """Check x = eps_t(g) x + eps_t(x) h  and  x = g eps_s(x) + x eps_s(h)."""
    report = AxiomReport()
    report.record("is_skew_primitive", is_skew_primitive(ctx, x, g, h))
    lhs_t = ctx.multiply(ctx.eps_t(g), x) + ctx.multiply(ctx.eps_t(x), h)
    report.check("skew_primitive_eps_t_identity", lhs_t, x)
    lhs_s = ctx.multiply(g, ctx.eps_s(x)) + ctx.multiply(x, ctx.eps_s(h))
    report.check("skew_primitive_eps_s_identity", lhs_s, x)
    return report


def eps_delta_report(wb: WeakBialgebra, delta: Matrix, g: Vector, h: Vector,
                     sigma: Matrix | None = None) -> AxiomReport:
    """Counit annihilation results for a (g,h)-coderivation, with hypothesis flags.

    Records eps_s(g) = 1 and eps_s(h) = 1 as hypotheses and checks
    eps o delta = 0 whenever both hold.  When sigma is supplied, records
    delta(R_s) = 0 and sigma = tau_chi^l (chi = eps o sigma) as hypotheses
    and, if they hold, checks eps(a delta(b)) = 0 on all basis pairs.
    Hypotheses that fail are reported as flags; the conclusions are then
    not asserted.
    """
    report = AxiomReport()
    report.record("delta_is_coderivation", is_coderivation(wb, delta, g, h))
    hyp_g = wb.eps_s(g) == wb.unit
    hyp_h = wb.eps_s(h) == wb.unit
    report.record("hypothesis_eps_s_g_is_unit", hyp_g, witness=(wb.format_element(g),))
    report.record("hypothesis_eps_s_h_is_unit", hyp_h, witness=(wb.format_element(h),))
    if hyp_g and hyp_h:
        for k in range(wb.dim):
            val = wb.counit_value(delta.apply(wb.basis_vector(k)))
            report.check("counit_kills_delta", val, wb.field.zero(), witness=(k,))

    if sigma is not None:
        from .bialgebra import base_subalgebras
        _, basis_s = base_subalgebras(wb)
        hyp_rs = all(delta.apply(a).is_zero() for a in basis_s)
        report.record("hypothesis_delta_kills_R_s", hyp_rs)
        chi = sigma.apply_functional(wb.counit)
        hyp_sigma = winding(wb, chi, "left") == sigma
        report.record("hypothesis_sigma_is_left_winding", hyp_sigma)
        if hyp_rs and hyp_sigma:
            for i in range(wb.dim):
                bi = wb.basis_vector(i)
                for j in range(wb.dim):
                    val = wb.counit_value(wb.multiply(bi, delta.apply(wb.basis_vector(j))))
                    report.check("counit_kills_a_delta_b", val, wb.field.zero(), witness=(i, j))
    return report
