"""Ore extensions H = R[x; sigma, delta] as computational objects.

Normal form: left coefficients, p = sum a_i x^i, with the rewrite
x a -> sigma(a) x + delta(a) applied recursively.  Elements of H (x) H are
stored as finitely supported maps (i, j) -> element of R (x) R, read as
sum (r (x) r') (x^i (x) x^j) with all x-powers on the right; products act
leg by leg through the same rewriting, so all tensor arithmetic is exact.

Once the extension conditions hold, the coproduct is
Delta(a x^n) = Delta(a) * (g (x) x + x (x) 1)^n, the counit reads the
degree-0 coefficient, and the antipode is the anti-homomorphism with
S(x) = -S(g) x.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bialgebra import TensorElement, Tensor3Element, WeakBialgebra, WeakHopfAlgebra, base_subalgebras
from .coderivations import skew_derivation
from .errors import ConditionsFailed, DimensionMismatch, ValidationError
from .linalg import Matrix, Vector, column_space_basis, in_span
from .panov import hopf_conditions, panov_sufficient
from .report import AxiomReport


class OrePoly:
    """Skew polynomial in normal form (left coefficients, trimmed)."""

    __slots__ = ("ore", "coeffs")

    def __init__(self, ore, coeffs):
        self.ore = ore
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coefficient(self, n) -> Vector:
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        return Vector.zero(self.ore.field, self.ore.R.dim)

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        other = self.ore.coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return OrePoly(self.ore, [self.coefficient(i) + other.coefficient(i) for i in range(n)])

    def __sub__(self, other):
        other = self.ore.coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return OrePoly(self.ore, [self.coefficient(i) - other.coefficient(i) for i in range(n)])

    def __neg__(self):
        return OrePoly(self.ore, [-c for c in self.coeffs])

    def scale(self, c):
        return OrePoly(self.ore, [v.scale(c) for v in self.coeffs])

    def __mul__(self, other):
        return self.ore.multiply(self, self.ore.coerce(other))

    def __eq__(self, other):
        return (isinstance(other, OrePoly) and self.ore is other.ore
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return self.ore.format_poly(self)


class OreTensor:
    """Element of H (x) H: map (i, j) -> coefficient in R (x) R."""

    __slots__ = ("ore", "data")

    def __init__(self, ore, data=None):
        self.ore = ore
        self.data = {ij: t for ij, t in (data or {}).items() if t}

    def items(self):
        return sorted(self.data.items())

    def slot(self, i, j) -> TensorElement:
        t = self.data.get((i, j))
        return t if t is not None else TensorElement.zero(self.ore.field, self.ore.R.dim, self.ore.R.dim)

    def __add__(self, other):
        data = dict(self.data)
        for ij, t in other.data.items():
            data[ij] = data[ij] + t if ij in data else t
        return OreTensor(self.ore, data)

    def __sub__(self, other):
        data = dict(self.data)
        for ij, t in other.data.items():
            data[ij] = data[ij] - t if ij in data else -t
        return OreTensor(self.ore, data)

    def __neg__(self):
        return OreTensor(self.ore, {ij: -t for ij, t in self.data.items()})

    def scale(self, c):
        return OreTensor(self.ore, {ij: t.scale(c) for ij, t in self.data.items()})

    def __mul__(self, other):
        return self.ore.tensor_mul(self, other)

    def __eq__(self, other):
        return isinstance(other, OreTensor) and self.ore is other.ore and self.data == other.data

    def is_zero(self):
        return not self.data

    def __repr__(self):
        fmt = self.ore.R.format_tensor
        parts = [f"({fmt(t)})*x^{i}(x)x^{j}" for (i, j), t in self.items()]
        return " + ".join(parts) if parts else "0"


class OreTensor3:
    """Element of H (x) H (x) H: map (i, j, k) -> coefficient in R^(x)3."""

    __slots__ = ("ore", "data")

    def __init__(self, ore, data=None):
        self.ore = ore
        self.data = {ijk: t for ijk, t in (data or {}).items() if t}

    def __add__(self, other):
        data = dict(self.data)
        for ijk, t in other.data.items():
            data[ijk] = data[ijk] + t if ijk in data else t
        return OreTensor3(self.ore, data)

    def __eq__(self, other):
        return isinstance(other, OreTensor3) and self.data == other.data

    def items(self):
        return sorted(self.data.items())


@dataclass(frozen=True)
class ExpansionCoefficients:
    """Table of (g (x) x + x (x) 1)^n = sum C[i][j] (x^i (x) x^j) over R (x) R."""

    n: int
    table: dict

    def coefficient(self, i, j) -> TensorElement:
        return self.table.get((i, j))


class OreAlgebra:
    """R[x; sigma, delta], optionally carrying the extended coproduct/antipode.

    Instances are immutable; extension steps return new objects.  Use
    :func:`make_ore` to validate the defining data.
    """

    def __init__(self, R: WeakBialgebra, sigma: Matrix, delta: Matrix, g: Vector | None = None,
                 _coalgebra_extended=False, _antipode_extended=False, _antipode_of_x=None):
        self.R = R
        self.sigma = sigma
        self.delta = delta
        self.g = g
        self._coalgebra_extended = _coalgebra_extended
        self._antipode_extended = _antipode_extended
        self._x_shift_cache = {}
        self._mono_cache = {}
        self._expansion_cache = {}
        self._delta_mono_cache = {}
        self._s_x = _antipode_of_x
        self._s_x_powers = None

    # -- basic structure ------------------------------------------------

    @property
    def field(self):
        return self.R.field

    @property
    def coalgebra_extended(self):
        return self._coalgebra_extended

    @property
    def antipode_extended(self):
        return self._antipode_extended

    def zero(self) -> OrePoly:
        return OrePoly(self, [])

    @property
    def one(self) -> OrePoly:
        return OrePoly(self, [self.R.unit])

    def embed(self, r: Vector) -> OrePoly:
        return OrePoly(self, [r])

    def coerce(self, value) -> OrePoly:
        if isinstance(value, OrePoly):
            if value.ore is not self:
                raise DimensionMismatch("polynomial from a different Ore algebra")
            return value
        if isinstance(value, Vector):
            return self.embed(value)
        raise TypeError(f"cannot coerce {value!r} into the Ore algebra")

    def x(self, n=1) -> OrePoly:
        return self.monomial(self.R.unit, n)

    def monomial(self, a: Vector, n: int) -> OrePoly:
        return OrePoly(self, [Vector.zero(self.field, self.R.dim)] * n + [a])

    def x_times_basis(self, b: int):
        """x * b_i = sigma(b_i) x + delta(b_i), as (degree-0, degree-1) coefficients."""
        hit = self._x_shift_cache.get(b)
        if hit is None:
            bi = self.R.basis_vector(b)
            hit = (self.delta.apply(bi), self.sigma.apply(bi))
            self._x_shift_cache[b] = hit
        return hit

    def x_times(self, p: OrePoly) -> OrePoly:
        """Left multiplication by x in normal form."""
        out = [Vector.zero(self.field, self.R.dim) for _ in range(len(p.coeffs) + 1)]
        for n, a in enumerate(p.coeffs):
            for b, c in a.data.items():
                d0, d1 = self.x_times_basis(b)
                out[n] = out[n] + d0.scale(c)
                out[n + 1] = out[n + 1] + d1.scale(c)
        return OrePoly(self, out)

    def left_coeff_times(self, a: Vector, p: OrePoly) -> OrePoly:
        return OrePoly(self, [self.R.multiply(a, c) for c in p.coeffs])

    def multiply(self, p: OrePoly, q: OrePoly) -> OrePoly:
        q = self.coerce(q)
        p = self.coerce(p)
        acc = self.zero()
        cur = q
        for n in range(len(p.coeffs)):
            if p.coeffs[n]:
                acc = acc + self.left_coeff_times(p.coeffs[n], cur)
            cur = self.x_times(cur)
        return acc

    def mono_mul(self, r: int, i: int, u: int, j: int) -> OrePoly:
        """(b_r x^i)(b_u x^j), cached."""
        key = (r, i, u, j)
        hit = self._mono_cache.get(key)
        if hit is None:
            cur = self.embed(self.R.basis_vector(u))
            for _ in range(i):
                cur = self.x_times(cur)
            prod = self.left_coeff_times(self.R.basis_vector(r), cur)
            pad = [Vector.zero(self.field, self.R.dim)] * j
            hit = OrePoly(self, pad + list(prod.coeffs))
            self._mono_cache[key] = hit
        return hit

    def format_poly(self, p: OrePoly) -> str:
        if p.is_zero():
            return "0"
        parts = []
        for n, a in enumerate(p.coeffs):
            if a.is_zero():
                continue
            coeff = self.R.format_element(a)
            if n == 0:
                parts.append(coeff)
            else:
                xs = "x" if n == 1 else f"x^{n}"
                parts.append(xs if coeff == "1" else f"({coeff})*{xs}")
        return " + ".join(parts)

    # -- tensor arithmetic ----------------------------------------------

    def tensor_pure(self, a, b) -> OreTensor:
        """a (x) b for polynomials (or coefficient vectors) a, b."""
        a = self.coerce(a)
        b = self.coerce(b)
        data = {}
        for i, ai in enumerate(a.coeffs):
            if not ai:
                continue
            for j, bj in enumerate(b.coeffs):
                if not bj:
                    continue
                data[(i, j)] = TensorElement.pure(ai, bj)
        return OreTensor(self, data)

    def tensor_mul(self, s: OreTensor, t: OreTensor) -> OreTensor:
        out = {}
        for (i1, j1), t1 in s.data.items():
            for (i2, j2), t2 in t.data.items():
                for (r, w), c in t1.data.items():
                    for (u, z), e in t2.data.items():
                        left = self.mono_mul(r, i1, u, i2)
                        right = self.mono_mul(w, j1, z, j2)
                        ce = c * e
                        for m, lv in enumerate(left.coeffs):
                            if not lv:
                                continue
                            for n, rv in enumerate(right.coeffs):
                                if not rv:
                                    continue
                                key = (m, n)
                                term = TensorElement.pure(lv, rv).scale(ce)
                                out[key] = out[key] + term if key in out else term
        return OreTensor(self, out)

    def tensor3_mul(self, s: OreTensor3, t: OreTensor3) -> OreTensor3:
        out = {}
        for (i1, j1, k1), t1 in s.data.items():
            for (i2, j2, k2), t2 in t.data.items():
                for (a, b, c_), c in t1.data.items():
                    for (u, v, w), e in t2.data.items():
                        first = self.mono_mul(a, i1, u, i2)
                        second = self.mono_mul(b, j1, v, j2)
                        third = self.mono_mul(c_, k1, w, k2)
                        ce = c * e
                        for m1, v1 in enumerate(first.coeffs):
                            if not v1:
                                continue
                            for m2, v2 in enumerate(second.coeffs):
                                if not v2:
                                    continue
                                for m3, v3 in enumerate(third.coeffs):
                                    if not v3:
                                        continue
                                    key = (m1, m2, m3)
                                    data = {}
                                    for p1, x1 in v1.data.items():
                                        for p2, x2 in v2.data.items():
                                            for p3, x3 in v3.data.items():
                                                data[(p1, p2, p3)] = ce * x1 * x2 * x3
                                    term = Tensor3Element(self.field, self.R.dim, data)
                                    out[key] = out[key] + term if key in out else term
        return OreTensor3(self, out)

    # -- extended coalgebra ----------------------------------------------

    def _require_coproduct(self):
        if not self._coalgebra_extended:
            raise ValidationError("coalgebra structure not extended; call extend_coalgebra first")

    def skew_power_tensor(self, n: int) -> OreTensor:
        """(g (x) x + x (x) 1)^n."""
        if self.g is None:
            raise ValidationError("no weak group-like g attached to this Ore algebra")
        hit = self._expansion_cache.get(n)
        if hit is None:
            if n == 0:
                hit = OreTensor(self, {(0, 0): TensorElement.pure(self.R.unit, self.R.unit)})
            else:
                base = OreTensor(self, {
                    (0, 1): TensorElement.pure(self.g, self.R.unit),
                    (1, 0): TensorElement.pure(self.R.unit, self.R.unit)})
                hit = self.tensor_mul(self.skew_power_tensor(n - 1), base)
            self._expansion_cache[n] = hit
        return hit

    def coproduct_monomial(self, b: int, n: int) -> OreTensor:
        self._require_coproduct()
        key = (b, n)
        hit = self._delta_mono_cache.get(key)
        if hit is None:
            d = self.R.coalgebra.coproduct_of_basis(b)
            hit = self.tensor_mul(OreTensor(self, {(0, 0): d}), self.skew_power_tensor(n))
            self._delta_mono_cache[key] = hit
        return hit

    def coproduct(self, p) -> OreTensor:
        p = self.coerce(p)
        out = OreTensor(self)
        for n, a in enumerate(p.coeffs):
            for b, c in a.data.items():
                out = out + self.coproduct_monomial(b, n).scale(c)
        return out

    def coproduct3_left(self, p) -> OreTensor3:
        """(Delta (x) id) Delta(p)."""
        return self._coproduct3(p, left=True)

    def coproduct3_right(self, p) -> OreTensor3:
        """(id (x) Delta) Delta(p)."""
        return self._coproduct3(p, left=False)

    def _coproduct3(self, p, left: bool) -> OreTensor3:
        out = {}
        for (i, j), t in self.coproduct(p).data.items():
            for (r, s), c in t.data.items():
                inner = self.coproduct_monomial(r if left else s, i if left else j)
                for (u, v), t2 in inner.data.items():
                    key = (u, v, j) if left else (i, u, v)
                    for (w, z), e in t2.data.items():
                        tkey = (w, z, s) if left else (r, w, z)
                        data = {tkey: c * e}
                        term = Tensor3Element(self.field, self.R.dim, data)
                        out[key] = out[key] + term if key in out else term
        return OreTensor3(self, out)

    def eps(self, p) -> object:
        """Counit of H: reads the degree-0 coefficient."""
        self._require_coproduct()
        p = self.coerce(p)
        return self.R.counit_value(p.coefficient(0))

    def eps_t(self, p) -> OrePoly:
        self._require_coproduct()
        p = self.coerce(p)
        out = Vector.zero(self.field, self.R.dim)
        for (i, j), c in self.R.delta_one().data.items():
            e = self.eps(self.multiply(self.embed(self.R.basis_vector(i)), p))
            if e:
                out = out + Vector(self.field, self.R.dim, {j: c * e})
        return self.embed(out)

    def eps_s(self, p) -> OrePoly:
        self._require_coproduct()
        p = self.coerce(p)
        out = Vector.zero(self.field, self.R.dim)
        for (i, j), c in self.R.delta_one().data.items():
            e = self.eps(self.multiply(p, self.embed(self.R.basis_vector(j))))
            if e:
                out = out + Vector(self.field, self.R.dim, {i: c * e})
        return self.embed(out)

    # -- extended antipode ----------------------------------------------

    def _require_antipode(self):
        if not self._antipode_extended:
            raise ValidationError("antipode not extended; call extend_antipode first")

    def antipode_of_x(self) -> OrePoly:
        self._require_antipode()
        return self._s_x

    def _s_x_power(self, n: int) -> OrePoly:
        self._require_antipode()
        if self._s_x_powers is None:
            self._s_x_powers = {0: self.one}
        while n not in self._s_x_powers:
            m = max(self._s_x_powers)
            self._s_x_powers[m + 1] = self.multiply(self._s_x_powers[m], self._s_x)
        return self._s_x_powers[n]

    def antipode(self, p) -> OrePoly:
        """S(sum a_n x^n) = sum S(x)^n S(a_n); the unital anti-homomorphism."""
        self._require_antipode()
        p = self.coerce(p)
        acc = self.zero()
        for n, a in enumerate(p.coeffs):
            if a:
                acc = acc + self.multiply(self._s_x_power(n), self.embed(self.R.antipode.apply(a)))
        return acc

    def __repr__(self):
        tags = []
        if self._coalgebra_extended:
            tags.append("coalgebra")
        if self._antipode_extended:
            tags.append("antipode")
        suffix = f" [{', '.join(tags)} extended]" if tags else ""
        return f"OreAlgebra(R dim={self.R.dim}{suffix})"


def make_ore(R: WeakBialgebra, sigma: Matrix, delta: Matrix, g: Vector | None = None) -> OreAlgebra:
    """Validate (sigma, delta) as Ore data over R and wrap them.

    Raises NotAutomorphism / NotDerivation with witnesses.
    """
    skew_derivation(R, sigma, delta)
    return OreAlgebra(R, sigma, delta, g)


def ore_multiply(H: OreAlgebra, p: OrePoly, q: OrePoly) -> OrePoly:
    return H.multiply(p, q)


def expand_skew_power(H: OreAlgebra, n: int) -> ExpansionCoefficients:
    """Exact coefficients of (g (x) x + x (x) 1)^n, with invariants asserted.

    Asserts C[n][0] = 1 (x) 1, C[i][0] = 0 for i < n, C[0][n] = g^n on the
    left leg, and that for j < n the left legs of C[0][j] lie in
    span{a delta(b)}.
    """
    if n < 0:
        raise ValidationError("power must be nonnegative")
    tensor = H.skew_power_tensor(n)
    R = H.R
    one_one = TensorElement.pure(R.unit, R.unit)
    table = {ij: t for ij, t in tensor.data.items()}
    coeffs = ExpansionCoefficients(n, table)

    top = coeffs.coefficient(n, 0)
    if (top if top is not None else TensorElement.zero(R.field, R.dim, R.dim)) != one_one:
        raise ValidationError(f"C[{n},0] is not 1 (x) 1")
    for i in range(n):
        if coeffs.coefficient(i, 0) is not None:
            raise ValidationError(f"C[{i},0] is nonzero")
    gn = R.unit
    for _ in range(n):
        gn = R.multiply(gn, H.g)
    expected = TensorElement.pure(gn, R.unit)
    got = coeffs.coefficient(0, n)
    if (got if got is not None else TensorElement.zero(R.field, R.dim, R.dim)) != expected:
        raise ValidationError(f"C[0,{n}] is not g^{n} on the left leg")

    span_cols = []
    for a in range(R.dim):
        for b in range(R.dim):
            v = R.multiply(R.basis_vector(a), H.delta.apply(R.basis_vector(b)))
            if v:
                span_cols.append(v)
    if span_cols:
        m = Matrix.from_columns(R.field, R.dim, span_cols)
        span = column_space_basis(m)
    else:
        span = []
    for j in range(1, n):
        c0j = coeffs.coefficient(0, j)
        if c0j is None:
            continue
        for _, left_vec in sorted(c0j.right_slices().items()):
            if not in_span(span, left_vec):
                raise ValidationError(
                    f"left leg of C[0,{j}] is not in span{{a delta(b)}}: {R.format_element(left_vec)}")
    return coeffs


def extend_coalgebra(H: OreAlgebra) -> OreAlgebra:
    """Extend R's coproduct and counit to H; refuses unless the conditions hold."""
    if H.g is None:
        raise ValidationError("extend_coalgebra needs the weak group-like g")
    verdict = panov_sufficient(H.R, H.sigma, H.delta, H.g)
    if not verdict.passed:
        raise ConditionsFailed(verdict)
    out = OreAlgebra(H.R, H.sigma, H.delta, H.g, _coalgebra_extended=True)
    for k in range(H.R.dim):
        if out.coproduct_monomial(k, 0) != OreTensor(out, {(0, 0): H.R.coalgebra.coproduct_of_basis(k)}):
            raise ValidationError("extended coproduct does not restrict to R in degree 0")
    return out


def extend_antipode(H: OreAlgebra) -> OreAlgebra:
    """Extend the antipode with S(x) = -S(g) x; refuses unless the conditions hold."""
    if not isinstance(H.R, WeakHopfAlgebra):
        raise ValidationError("antipode extension needs an antipode on R")
    if H.g is None:
        raise ValidationError("extend_antipode needs the group-like g")
    verdict = panov_sufficient(H.R, H.sigma, H.delta, H.g)
    if not verdict.passed:
        raise ConditionsFailed(verdict)
    verdict = hopf_conditions(H.R, H.sigma, H.delta, H.g)
    if not verdict.passed:
        raise ConditionsFailed(verdict)
    out = OreAlgebra(H.R, H.sigma, H.delta, H.g,
                     _coalgebra_extended=True, _antipode_extended=True)
    s_g = H.R.antipode.apply(H.g)
    out._s_x = out.multiply(out.embed(-s_g), out.x())
    return out


def _monomials(H: OreAlgebra, max_degree: int):
    return [(b, n) for n in range(max_degree + 1) for b in range(H.R.dim)]


def verify_extension(H: OreAlgebra, degree_bound: int = 3) -> AxiomReport:
    """Exhaustive axiom sweep on H over monomials of degree <= degree_bound.

    Covers coproduct multiplicativity, coassociativity, both counit axioms,
    weak multiplicativity of the counit, the unit-coproduct compatibility,
    commutation of Delta(x) with Delta(1) and with Delta(a), vanishing of
    the counit on x-sandwiches, centrality of R_s against x, skew
    primitivity of the generator and (when extended) the antipode axioms.
    Serialize with ``report.lines()``: one `AXIOM name PASS|FAIL` line each.
    """
    H._require_coproduct()
    report = AxiomReport()
    R = H.R
    monos = _monomials(H, degree_bound)

    def mono(b, n):
        return H.monomial(R.basis_vector(b), n)

    # counit table: eps(mono_a * mono_b), filled on demand
    eps_cache = {}

    def eps_pair(b1, n1, b2, n2):
        key = (b1, n1, b2, n2)
        hit = eps_cache.get(key)
        if hit is None:
            hit = R.counit_value(H.mono_mul(b1, n1, b2, n2).coefficient(0))
            eps_cache[key] = hit
        return hit

    prod_pair = {}
    for (b1, n1) in monos:
        for (b2, n2) in monos:
            prod_pair[(b1, n1, b2, n2)] = H.mono_mul(b1, n1, b2, n2)

    # flattened coproduct supports: Delta(b x^n) as monomial (x) monomial terms
    dsup = {}
    for (b, n) in monos:
        terms = []
        for (i, j), t in H.coproduct_monomial(b, n).data.items():
            for (r, s), c in t.data.items():
                terms.append((r, i, s, j, c))
        dsup[(b, n)] = terms

    fmt = H.format_poly
    zero = H.field.zero()

    for (b1, n1) in monos:
        dp = H.coproduct_monomial(b1, n1)
        for (b2, n2) in monos:
            lhs = H.coproduct(prod_pair[(b1, n1, b2, n2)])
            rhs = H.tensor_mul(dp, H.coproduct_monomial(b2, n2))
            report.check("coproduct_multiplicative", lhs, rhs,
                         witness=(b1, n1, b2, n2), fmt=repr)

    for (b, n) in monos:
        p = mono(b, n)
        report.check("coproduct_coassociative", H.coproduct3_left(p), H.coproduct3_right(p),
                     witness=(b, n), fmt=repr)
        right_n = H.zero()
        left_n = H.zero()
        for (r, i, s, j, c) in dsup[(b, n)]:
            if j == 0:
                e = R.counit_value(R.basis_vector(s))
                if e:
                    right_n = right_n + mono(r, i).scale(c * e)
            if i == 0:
                e = R.counit_value(R.basis_vector(r))
                if e:
                    left_n = left_n + mono(s, j).scale(c * e)
        report.check("counit_right_neutral", right_n, p, witness=(b, n), fmt=fmt)
        report.check("counit_left_neutral", left_n, p, witness=(b, n), fmt=fmt)

    for (b1, n1) in monos:
        for (bm, nm) in monos:
            mid = dsup[(bm, nm)]
            for (b2, n2) in monos:
                lhs = zero
                fg = prod_pair[(b1, n1, bm, nm)]
                for deg, vec in enumerate(fg.coeffs):
                    for b, c in vec.data.items():
                        e = eps_pair(b, deg, b2, n2)
                        if e:
                            lhs = lhs + c * e
                rhs1 = zero
                rhs2 = zero
                for (r, i, s, j, c) in mid:
                    e1 = eps_pair(b1, n1, r, i)
                    e2 = eps_pair(s, j, b2, n2)
                    if e1 and e2:
                        rhs1 = rhs1 + c * e1 * e2
                    e1 = eps_pair(b1, n1, s, j)
                    e2 = eps_pair(r, i, b2, n2)
                    if e1 and e2:
                        rhs2 = rhs2 + c * e1 * e2
                report.check("counit_weak_multiplicative", lhs, rhs1, witness=(b1, n1, bm, nm, b2, n2))
                report.check("counit_weak_multiplicative", lhs, rhs2, witness=(b1, n1, bm, nm, b2, n2))

    one_h = H.one
    d1 = H.coproduct(one_h)
    lhs3 = H.coproduct3_left(one_h)

    def embed3(t: OreTensor, legs):
        out = {}
        for (i, j), te in t.data.items():
            for (r, s), c in te.data.items():
                for u, cu in R.unit.data.items():
                    if legs == (0, 1):
                        key, tkey = (i, j, 0), (r, s, u)
                    else:
                        key, tkey = (0, i, j), (u, r, s)
                    term = Tensor3Element(H.field, R.dim, {tkey: c * cu})
                    out[key] = out[key] + term if key in out else term
        return OreTensor3(H, out)

    d1_left = embed3(d1, (0, 1))
    d1_right = embed3(d1, (1, 2))
    report.check("coproduct_unit_compatibility", lhs3, H.tensor3_mul(d1_left, d1_right),
                 witness=("left",))
    report.check("coproduct_unit_compatibility", lhs3, H.tensor3_mul(d1_right, d1_left),
                 witness=("right",))

    skew = OreTensor(H, {(0, 1): TensorElement.pure(H.g, R.unit),
                         (1, 0): TensorElement.pure(R.unit, R.unit)})
    report.check("generator_coproduct_delta_one_commute",
                 H.tensor_mul(skew, d1), H.tensor_mul(d1, skew), fmt=repr)

    dx = H.coproduct(H.x())
    gx_x1 = H.tensor_pure(H.embed(H.g), H.x()) + H.tensor_pure(H.x(), one_h)
    report.check("generator_skew_primitive", dx, H.tensor_mul(d1, gx_x1), witness=("left",), fmt=repr)
    report.check("generator_skew_primitive", dx, H.tensor_mul(gx_x1, d1), witness=("right",), fmt=repr)

    for k in range(R.dim):
        a = R.basis_vector(k)
        lhs = H.tensor_mul(dx, H.coproduct_monomial(k, 0))
        rhs = H.tensor_mul(H.coproduct(H.embed(H.sigma.apply(a))), dx) \
            + H.coproduct(H.embed(H.delta.apply(a)))
        report.check("coproduct_commutation_rule", lhs, rhs, witness=(R.labels[k],), fmt=repr)

    for (b1, n1) in monos:
        p = mono(b1, n1)
        px = H.multiply(p, H.x())
        for (b2, n2) in monos:
            val = zero
            for deg, vec in enumerate(px.coeffs):
                for b, c in vec.data.items():
                    e = eps_pair(b, deg, b2, n2)
                    if e:
                        val = val + c * e
            report.check("counit_kills_x_sandwich", val, zero, witness=(b1, n1, b2, n2))

    _, basis_s = base_subalgebras(R)
    for idx, a in enumerate(basis_s):
        report.check("source_base_commutes_with_x",
                     H.multiply(H.x(), H.embed(a)), H.multiply(H.embed(a), H.x()),
                     witness=(idx,), fmt=fmt)

    if H.antipode_extended:
        for (b, n) in monos:
            p = mono(b, n)
            left = H.zero()
            right = H.zero()
            for (r, i, s, j, c) in dsup[(b, n)]:
                left = left + H.multiply(mono(r, i), H.antipode(mono(s, j))).scale(c)
                right = right + H.multiply(H.antipode(mono(r, i)), mono(s, j)).scale(c)
            report.check("antipode_vs_target_counital", left, H.eps_t(p), witness=(b, n), fmt=fmt)
            report.check("antipode_vs_source_counital", right, H.eps_s(p), witness=(b, n), fmt=fmt)
            sandwich = H.zero()
            for (u, v, j3), t in H.coproduct3_left(p).data.items():
                for (w, z, s3), c in t.data.items():
                    term = H.multiply(H.antipode(mono(w, u)), mono(z, v))
                    term = H.multiply(term, H.antipode(mono(s3, j3)))
                    sandwich = sandwich + term.scale(c)
            report.check("antipode_composition", sandwich, H.antipode(p), witness=(b, n), fmt=fmt)
    return report
