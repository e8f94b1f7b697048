"""Number fields Q(theta) presented by a monic integer polynomial.

Elements are residue polynomials of degree < n; all arithmetic reduces
modulo the defining polynomial and stays in exact rationals.  Trace and
norm come from the companion matrix, discriminants from the trace form,
field polynomials from multiplication matrices.  Numerical embeddings
(mpmath, 60 significant digits by default) exist only for cross-checks
and for ordering conjugates; they are never the source of an exact value.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath

from .polynomial import Poly, poly_divmod, poly_gcd, poly_xgcd, squarefree_part, eisenstein_witness

EMBEDDING_DPS = 60


# ---------------------------------------------------------------------------
# exact matrix helpers (lists of lists of Fractions / ints)
# ---------------------------------------------------------------------------

def mat_det(m) -> Fraction:
    """Exact determinant.  Rows are scaled to integers, then fraction-free
    Bareiss elimination keeps every intermediate an integer."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    a = []
    for row in m:
        row = [Fraction(x) for x in row]
        den = 1
        for x in row:
            den = den * x.denominator // _igcd(den, x.denominator)
        scale *= den
        a.append([int(x * den) for x in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1], 1) / scale


def _igcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    return [
        [sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m)]
        for i in range(n)
    ]


def char_poly(m) -> Poly:
    """Monic characteristic polynomial det(xI - M), exactly.

    Faddeev-LeVerrier: M_1 = M, c_k = -tr(M M_{k-1})/k, M_k = M(M_{k-1} + c I).
    Divisions are by rational integers, so Fractions stay exact.
    """
    n = len(m)
    m = [[Fraction(x) for x in row] for row in m]
    coeffs = [Fraction(1)]  # leading coefficient of x^n
    mk = [row[:] for row in m]
    for k in range(1, n + 1):
        ck = -sum(mk[i][i] for i in range(n)) / k
        coeffs.append(ck)
        if k < n:
            for i in range(n):
                mk[i][i] += ck
            mk = mat_mul(m, mk)
    return Poly(list(reversed(coeffs)))


def companion_matrix(p: Poly):
    """Companion matrix of a monic polynomial, integer entries if p is."""
    if not p.is_monic():
        raise ValueError("companion matrix needs a monic polynomial")
    n = p.degree
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n):
        m[i][i - 1] = Fraction(1)
    for i in range(n):
        m[i][n - 1] = -p.coeffs[i]
    return m


def kronecker_sum(a, b):
    na, nb = len(a), len(b)
    n = na * nb
    out = [[Fraction(0)] * n for _ in range(n)]
    for i in range(na):
        for j in range(na):
            if a[i][j]:
                for t in range(nb):
                    out[i * nb + t][j * nb + t] += a[i][j]
    for i in range(nb):
        for j in range(nb):
            if b[i][j]:
                for t in range(na):
                    out[t * nb + i][t * nb + j] += b[i][j]
    return out


def kronecker_product(a, b):
    na, nb = len(a), len(b)
    n = na * nb
    out = [[Fraction(0)] * n for _ in range(n)]
    for i in range(na):
        for j in range(na):
            if a[i][j]:
                for s in range(nb):
                    for t in range(nb):
                        out[i * nb + s][j * nb + t] = a[i][j] * b[s][t]
    return out


# ---------------------------------------------------------------------------
# the field and its elements
# ---------------------------------------------------------------------------

class NumberField:
    """Q(theta) for theta a root of a monic irreducible integer polynomial.

    Irreducibility is an assumed precondition, checked heuristically only:
    no integer roots, plus an Eisenstein certificate when one exists.
    """

    def __init__(self, minpoly: Poly):
        if not (minpoly.is_monic() and minpoly.is_integral() and minpoly.degree >= 1):
            raise ValueError("defining polynomial must be monic, integral, nonconstant")
        self._reject_integer_roots(minpoly)
        self.minpoly = minpoly
        self.degree = minpoly.degree
        self._embeddings = None

    @staticmethod
    def _reject_integer_roots(p: Poly):
        if p.degree == 1:
            return
        a0 = int(p.coeffs[0])
        if a0 == 0:
            raise ValueError("defining polynomial is divisible by x")
        divisors = set()
        d = 1
        while d * d <= abs(a0):
            if a0 % d == 0:
                divisors.update((d, -d, a0 // d, -(a0 // d)))
            d += 1
        for r in divisors:
            if p(Fraction(r)) == 0:
                raise ValueError(f"defining polynomial has rational root {r}")

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.minpoly == other.minpoly

    def __hash__(self):
        return hash(self.minpoly)

    def __repr__(self):
        return f"NumberField({self.minpoly.to_text()})"

    # -- embeddings ---------------------------------------------------------

    def embeddings(self, dps: int = EMBEDDING_DPS):
        """Conjugates of theta at `dps` digits, ordered: real roots ascending,
        then complex roots by (Re, positive Im before negative)."""
        if self._embeddings is None or self._embeddings[0] < dps:
            with mpmath.workdps(dps + 10):
                coeffs = [mpmath.mpf(int(c)) for c in reversed(self.minpoly.coeffs)]
                roots = [mpmath.mpc(r) for r in mpmath.polyroots(coeffs, maxsteps=200, extraprec=120)]
                eps = mpmath.mpf(10) ** (-dps // 2)
                reals = sorted(
                    (r.real for r in roots if abs(r.imag) < eps),
                    key=lambda r: r,
                )
                cplx = sorted(
                    (r for r in roots if abs(r.imag) >= eps),
                    key=lambda r: (r.real, 0 if r.imag > 0 else 1, abs(r.imag)),
                )
                ordered = [mpmath.mpc(r) for r in reals] + list(cplx)
            self._embeddings = (dps, tuple(ordered))
        return self._embeddings[1]

    def signature(self) -> tuple[int, int]:
        """(number of real embeddings, pairs of complex embeddings)."""
        emb = self.embeddings()
        eps = mpmath.mpf(10) ** (-EMBEDDING_DPS // 2)
        r1 = sum(1 for e in emb if abs(e.imag) < eps)
        return r1, (self.degree - r1) // 2

    # -- element constructors ------------------------------------------------

    def element(self, coeffs) -> "FieldElement":
        if isinstance(coeffs, Poly):
            p = coeffs
        else:
            p = Poly(coeffs)
        _, r = poly_divmod(p, self.minpoly)
        return FieldElement(self, r)

    def zero(self) -> "FieldElement":
        return FieldElement(self, Poly())

    def one(self) -> "FieldElement":
        return FieldElement(self, Poly([1]))

    def theta(self) -> "FieldElement":
        return self.element(Poly([0, 1]))

    def rational(self, c) -> "FieldElement":
        return self.element(Poly([c]))


class FieldElement:
    """An element q(theta), stored as the unique representative of degree < n."""

    __slots__ = ("field", "repr")

    def __init__(self, field: NumberField, rep: Poly):
        if rep.degree >= field.degree:
            raise ValueError("representative not reduced")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "repr", rep)

    def __setattr__(self, *a):
        raise AttributeError("FieldElement is immutable")

    def _check(self, other: "FieldElement"):
        if self.field != other.field:
            raise ValueError("elements live in different fields")

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and self.field == other.field
            and self.repr == other.repr
        )

    def __hash__(self):
        return hash((self.field, self.repr))

    def is_zero(self) -> bool:
        return self.repr.is_zero()

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.field, self.repr + other.repr)

    def __sub__(self, other):
        self._check(other)
        return FieldElement(self.field, self.repr - other.repr)

    def __neg__(self):
        return FieldElement(self.field, -self.repr)

    def __mul__(self, other):
        self._check(other)
        _, r = poly_divmod(self.repr * other.repr, self.field.minpoly)
        return FieldElement(self.field, r)

    def inverse(self) -> "FieldElement":
        """1/a via the extended gcd of the representative with the minimal
        polynomial: s*repr + t*minpoly = 1 gives s(theta) = 1/a."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        g, s, _ = poly_xgcd(self.repr, self.field.minpoly)
        if g.degree != 0:
            raise ValueError("defining polynomial is reducible: gcd is nonconstant")
        _, r = poly_divmod(s, self.field.minpoly)
        return FieldElement(self.field, r)

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __repr__(self):
        return f"<{self.repr.to_text()} in {self.field!r}>"

    # -- invariants ----------------------------------------------------------

    def multiplication_matrix(self):
        """Matrix of multiplication by self on the power basis, over Q."""
        n = self.field.degree
        cols = []
        power = Poly([1])
        for _ in range(n):
            prod = self.repr * power
            _, prod = poly_divmod(prod, self.field.minpoly)
            cols.append([prod[i] for i in range(n)])
            power = power * Poly([0, 1])
            _, power = poly_divmod(power, self.field.minpoly)
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    def trace_and_norm(self) -> tuple[Fraction, Fraction]:
        """(trace, norm) as trace and determinant of q(M), M the companion
        matrix of the defining polynomial."""
        n = self.field.degree
        m = companion_matrix(self.field.minpoly)
        qm = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            qm[i][i] = Fraction(1)
        acc = [[Fraction(0)] * n for _ in range(n)]
        for c in reversed(self.repr.coeffs if self.repr.coeffs else (Fraction(0),)):
            acc = mat_mul(acc, m)
            for i in range(n):
                acc[i][i] += c
        tr = sum(acc[i][i] for i in range(n))
        return Fraction(tr), mat_det(acc)

    def trace(self) -> Fraction:
        return self.trace_and_norm()[0]

    def norm(self) -> Fraction:
        return self.trace_and_norm()[1]

    def field_polynomial(self) -> Poly:
        """prod_i (x - q(theta_i)): the characteristic polynomial of the
        multiplication-by-self matrix.  A power of the minimal polynomial."""
        return char_poly(self.multiplication_matrix())

    def minimal_polynomial(self) -> Poly:
        """Monic minimal polynomial over Q: squarefree part of the field
        polynomial, with the power relation f = p**s confirmed exactly."""
        f = self.field_polynomial()
        p = squarefree_part(f)
        s, r = divmod(f.degree, p.degree)
        assert r == 0 and p**s == f, "field polynomial is not a power of the minimal one"
        return p

    def is_algebraic_integer(self) -> bool:
        return self.minimal_polynomial().is_integral()

    def conjugate_values(self, dps: int = EMBEDDING_DPS):
        """Numerical conjugates q(theta_i), for cross-checks only."""
        vals = []
        with mpmath.workdps(dps + 10):
            for th in self.field.embeddings(dps):
                acc = mpmath.mpc(0)
                for c in reversed(self.repr.coeffs):
                    acc = acc * th + mpmath.mpf(c.numerator) / c.denominator
                vals.append(acc)
        return vals


def tuple_discriminant(elements) -> Fraction:
    """Discriminant det[T(a_i a_j)] of an n-tuple, n the field degree.

    Nonzero exactly when the tuple is a Q-basis of the field.
    """
    elements = list(elements)
    if not elements:
        raise ValueError("empty tuple")
    field = elements[0].field
    n = field.degree
    if len(elements) != n:
        raise ValueError(f"need exactly {n} elements, got {len(elements)}")
    for e in elements:
        if e.field != field:
            raise ValueError("elements live in different fields")
    tm = [[(elements[i] * elements[j]).trace() for j in range(n)] for i in range(n)]
    return mat_det(tm)


def denominator_clearing(a: FieldElement) -> tuple[int, FieldElement]:
    """The smallest divisor n of the lcm of the minimal polynomial's
    coefficient denominators with n*a an algebraic integer.  Deterministic,
    and n = 1 exactly when a is already integral."""
    if a.is_zero():
        raise ValueError("denominator clearing of zero")
    p = a.minimal_polynomial()
    lcm = 1
    for c in p.coeffs:
        lcm = lcm * c.denominator // _igcd(lcm, c.denominator)
    divisors = sorted(d for d in range(1, lcm + 1) if lcm % d == 0)
    for n in divisors:
        b = a.field.rational(n) * a
        if b.is_algebraic_integer():
            return n, b
    raise AssertionError("lcm of minimal-polynomial denominators must clear")


def composed_min_poly(op: str, p: Poly, q: Poly) -> Poly:
    """Monic integer polynomial whose roots are all alpha_i + beta_j (op
    'sum') or alpha_i * beta_j (op 'product'), via the characteristic
    polynomial of the Kronecker sum/product of the companion matrices.
    Degree deg(p)*deg(q); not necessarily irreducible."""
    for f in (p, q):
        if not (f.is_monic() and f.is_integral() and f.degree >= 1):
            raise ValueError("composedMinPoly needs monic nonconstant integer polynomials")
    cp, cq = companion_matrix(p), companion_matrix(q)
    if op == "sum":
        m = kronecker_sum(cp, cq)
    elif op == "product":
        m = kronecker_product(cp, cq)
    else:
        raise ValueError(f"unknown composition {op!r}")
    out = char_poly(m)
    assert out.is_integral(), "symmetric-function argument guarantees integer coefficients"
    return out


def primitive_element_shift(p: Poly, q: Poly) -> int:
    """Smallest c >= 0 such that theta = alpha + c*beta is primitive for the
    pair of fields defined by p and q (alpha, beta their first roots under
    the conjugate ordering).

    The required inequalities alpha_i + c beta_j != alpha + c beta (j != 1)
    are certified either exactly, through squarefreeness of the composed
    sum polynomial, or numerically at escalating precision.
    """
    for f in (p, q):
        if not (f.is_monic() and f.is_integral() and f.degree >= 1):
            raise ValueError("need monic integer polynomials")
    if q.degree == 1:
        return 0
    fp, fq = NumberField(p), NumberField(q)
    c = 0
    while True:
        if _composed_sum_squarefree(p, q, c):
            return c
        if _separation_certified(fp, fq, c):
            return c
        c += 1
        if c > 1000:
            raise RuntimeError("no admissible shift found below 1000; inputs degenerate?")


def _composed_sum_squarefree(p: Poly, q: Poly, c: int) -> bool:
    # roots of qq are c * (roots of q): c^n q(x/c), still monic and integral
    n = q.degree
    qq = Poly([q.coeffs[i] * Fraction(c) ** (n - i) for i in range(n + 1)])
    s = composed_min_poly("sum", p, qq)
    return poly_gcd(s, s.derivative()).degree == 0


def _separation_certified(fp: NumberField, fq: NumberField, c: int) -> bool:
    dps = EMBEDDING_DPS
    while dps <= 4 * EMBEDDING_DPS:
        alphas = fp.embeddings(dps)
        betas = fq.embeddings(dps)
        target = alphas[0] + c * betas[0]
        accept = mpmath.mpf(10) ** (-dps // 2)
        reject = mpmath.mpf(10) ** (-(dps - 10))
        worst = None
        for a in alphas:
            for b in betas[1:]:
                sep = abs(a + c * b - target)
                if worst is None or sep < worst:
                    worst = sep
        if worst is None or worst > accept:
            return True
        if worst < reject:
            return False
        dps *= 2
    raise RuntimeError("could not certify root separation; raise precision")
