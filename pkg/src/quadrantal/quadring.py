"""The ring of integers of Q(sqrt(m)) and its ideal calculus.

Elements are a + b*w for the integral basis {1, w}, w = sqrt(m) or
(1+sqrt(m))/2 according to m mod 4.  A nonzero ideal is kept in the unique
standard form

    I = c * ( Z*a + Z*(b + w) ),   a, c > 0,  0 <= b < a,  a | N(b + w),

whose two generators {c*a, c*(b+w)} realize the two-generator theorem
constructively; equality of ideals is equality of triples.  All operations
renormalize through a 2x2 integer Hermite reduction.

Prime splitting follows the classical case law:

    odd q not dividing d : split iff m is a square mod q, else inert
    odd q dividing d     : (q) = (q, sqrt(m))^2
    q = 2, d odd         : split iff m = 1 mod 8, inert iff m = 5 mod 8
    q = 2, d even        : (2, sqrt(m))^2 or (2, 1+sqrt(m))^2 by m mod 4

Every splitting result is re-multiplied and checked against (q) before it
is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import math

import mpmath

from .arith import (
    PI_HI,
    PI_LO,
    check_square_free,
    factorize,
    floor_of_root_quotient,
    legendre_is_residue,
    primes_up_to,
    sqrt_bounds,
    sqrt_mod,
    xgcd,
)


class QuadraticField:
    """Q(sqrt(m)) together with its ring of integers, m square-free."""

    __slots__ = ("m", "d", "half", "signature")

    def __init__(self, m: int):
        if m in (0, 1):
            raise ValueError("m must be a square-free integer other than 0 and 1")
        check_square_free(m)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "half", m % 4 == 1)
        object.__setattr__(self, "d", m if m % 4 == 1 else 4 * m)
        object.__setattr__(self, "signature", (2, 0) if m > 0 else (0, 1))

    def __setattr__(self, *a):
        raise AttributeError("QuadraticField is immutable")

    def __eq__(self, other):
        return isinstance(other, QuadraticField) and self.m == other.m

    def __hash__(self):
        return hash(("QuadraticField", self.m))

    def __repr__(self):
        w = "(1+sqrt(m))/2" if self.half else "sqrt(m)"
        return f"QuadraticField(m={self.m}, w={w}, d={self.d})"

    # -- element constructors -------------------------------------------------

    def integer(self, a: int, b: int = 0) -> "QuadInt":
        return QuadInt(self, a, b)

    def omega(self) -> "QuadInt":
        return QuadInt(self, 0, 1)

    def sqrt_m(self) -> "QuadInt":
        """sqrt(m) itself as a ring element (= 2w - 1 in the half-basis)."""
        return QuadInt(self, -1, 2) if self.half else QuadInt(self, 0, 1)

    def omega_norm_poly(self, b: int) -> int:
        """N(b + w) as a rational integer."""
        if self.half:
            return b * b + b + (1 - self.m) // 4
        return b * b - self.m


def ring_of_integers(m: int) -> QuadraticField:
    """The ring of integers of Q(sqrt(m)); errors on non-square-free m."""
    return QuadraticField(m)


class QuadInt:
    """a + b*w in the ring of integers of a quadratic field."""

    __slots__ = ("field", "a", "b")

    def __init__(self, field: QuadraticField, a: int, b: int):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "a", int(a))
        object.__setattr__(self, "b", int(b))

    def __setattr__(self, *a):
        raise AttributeError("QuadInt is immutable")

    def _check(self, other):
        if self.field != other.field:
            raise ValueError("elements of different quadratic fields")

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __eq__(self, other):
        return (
            isinstance(other, QuadInt)
            and self.field == other.field
            and (self.a, self.b) == (other.a, other.b)
        )

    def __hash__(self):
        return hash((self.field.m, self.a, self.b))

    def __add__(self, other):
        self._check(other)
        return QuadInt(self.field, self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        self._check(other)
        return QuadInt(self.field, self.a - other.a, self.b - other.b)

    def __neg__(self):
        return QuadInt(self.field, -self.a, -self.b)

    def __mul__(self, other):
        if isinstance(other, int):
            return QuadInt(self.field, self.a * other, self.b * other)
        self._check(other)
        a, b, c, d = self.a, self.b, other.a, other.b
        if self.field.half:
            # w^2 = (m-1)/4 + w
            return QuadInt(
                self.field,
                a * c + b * d * ((self.field.m - 1) // 4),
                a * d + b * c + b * d,
            )
        return QuadInt(self.field, a * c + b * d * self.field.m, a * d + b * c)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers only for units; use unit_inverse")
        out = QuadInt(self.field, 1, 0)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self) -> "QuadInt":
        """The nontrivial automorphism, sqrt(m) -> -sqrt(m)."""
        if self.field.half:
            return QuadInt(self.field, self.a + self.b, -self.b)
        return QuadInt(self.field, self.a, -self.b)

    def norm(self) -> int:
        """x * conj(x), always a rational integer."""
        u, v = self.double_coords()
        return (u * u - self.field.m * v * v) // 4

    def trace(self) -> int:
        return self.double_coords()[0]

    def is_unit(self) -> bool:
        return self.norm() in (1, -1)

    def double_coords(self) -> tuple[int, int]:
        """(u, v) with value = (u + v*sqrt(m)) / 2."""
        if self.field.half:
            return 2 * self.a + self.b, self.b
        return 2 * self.a, 2 * self.b

    def sign_real(self) -> int:
        """Exact sign under the embedding sending sqrt(m) to +sqrt(m) (m > 0)."""
        if self.field.m < 0:
            raise ValueError("sign under a real embedding needs m > 0")
        u, v = self.double_coords()
        if u == 0 and v == 0:
            return 0
        if u >= 0 and v >= 0:
            return 1
        if u <= 0 and v <= 0:
            return -1
        lhs = u * u - self.field.m * v * v  # sign(u + v sqrt(m)) when signs differ
        return (1 if lhs > 0 else -1) * (1 if u > 0 else -1)

    def mp_value(self, dps: int = 50):
        """Numerical value (real embedding with sqrt(m) > 0, or the upper
        complex embedding for m < 0); cross-check use only."""
        u, v = self.double_coords()
        with mpmath.workdps(dps):
            s = mpmath.sqrt(abs(self.field.m))
            if self.field.m > 0:
                return (u + v * s) / 2
            return (u + v * s * mpmath.mpc(0, 1)) / 2

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        bw = "w" if self.b == 1 else ("-w" if self.b == -1 else f"{self.b}*w")
        if self.a == 0:
            return bw
        return f"{self.a}+{bw}" if not bw.startswith("-") else f"{self.a}{bw}"

    def __repr__(self):
        return f"QuadInt({self.field.m}, {self})"

    def to_json_dict(self):
        return {"a": self.a, "b": self.b}


def unit_inverse(u: QuadInt) -> QuadInt:
    """Inverse of a unit: conj(u) * N(u), exactly."""
    n = u.norm()
    if n not in (1, -1):
        raise ValueError("not a unit")
    return u.conj() * n


# ---------------------------------------------------------------------------
# ideals
# ---------------------------------------------------------------------------

class QuadIdeal:
    """Nonzero ideal in standard form c*(Z*a + Z*(b+w)); the zero ideal is
    the distinguished triple (0, 0, 0)."""

    __slots__ = ("field", "a", "b", "c")

    def __init__(self, field: QuadraticField, a: int, b: int, c: int):
        if (a, b, c) == (0, 0, 0):
            pass  # zero ideal
        else:
            if a <= 0 or c <= 0 or not 0 <= b < a:
                raise ValueError(f"not a standard-form triple: {(a, b, c)}")
            if field.omega_norm_poly(b) % a != 0:
                raise ValueError(f"inadmissible triple {(a, b, c)}: a does not divide N(b+w)")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    def __setattr__(self, *a):
        raise AttributeError("QuadIdeal is immutable")

    def is_zero(self) -> bool:
        return self.c == 0

    def is_unit_ideal(self) -> bool:
        return (self.a, self.b, self.c) == (1, 0, 1)

    def __eq__(self, other):
        return (
            isinstance(other, QuadIdeal)
            and self.field == other.field
            and (self.a, self.b, self.c) == (other.a, other.b, other.c)
        )

    def __hash__(self):
        return hash((self.field.m, self.a, self.b, self.c))

    def sort_key(self):
        return (self.norm(), self.a, self.b, self.c)

    def norm(self) -> int:
        """|R/I| = a * c**2."""
        if self.is_zero():
            raise ValueError("norm of the zero ideal")
        return self.a * self.c * self.c

    def basis(self) -> tuple[QuadInt, QuadInt]:
        """The two-generator basis {c*a, c*(b+w)}."""
        f = self.field
        return f.integer(self.c * self.a, 0), f.integer(self.c * self.b, self.c)

    def contains(self, x: QuadInt) -> bool:
        if self.is_zero():
            return x.is_zero()
        if x.b % self.c != 0:
            return False
        return (x.a - (x.b // self.c) * self.c * self.b) % (self.c * self.a) == 0

    def contains_ideal(self, other: "QuadIdeal") -> bool:
        if other.is_zero():
            return True
        return all(self.contains(g) for g in other.basis())

    def conj(self) -> "QuadIdeal":
        if self.is_zero():
            return self
        g1, g2 = self.basis()
        return ideal_from_generators(self.field, [g1.conj(), g2.conj()])

    def __repr__(self):
        if self.is_zero():
            return f"QuadIdeal({self.field.m}, zero)"
        return f"QuadIdeal({self.field.m}, a={self.a}, b={self.b}, c={self.c})"

    def to_json_dict(self):
        return {"m": self.field.m, "a": str(self.a), "b": str(self.b), "c": str(self.c)}

    @classmethod
    def from_json_dict(cls, data) -> "QuadIdeal":
        field = QuadraticField(int(data["m"]))
        return cls(field, int(data["a"]), int(data["b"]), int(data["c"]))


def zero_ideal(field: QuadraticField) -> QuadIdeal:
    return QuadIdeal(field, 0, 0, 0)


def unit_ideal(field: QuadraticField) -> QuadIdeal:
    return QuadIdeal(field, 1, 0, 1)


def ideal_from_generators(field: QuadraticField, gens) -> QuadIdeal:
    """Standard form of the ideal generated by the given elements.

    The Z-module spanned by {g, g*w : g in gens} is Hermite-reduced in the
    coordinates of the basis {1, w}.
    """
    vecs = []
    w = field.omega()
    for g in gens:
        if isinstance(g, int):
            g = field.integer(g, 0)
        if g.is_zero():
            continue
        gw = g * w
        vecs.append((g.a, g.b))
        vecs.append((gw.a, gw.b))
    if not vecs:
        return zero_ideal(field)
    # the vector (x0, C) with C = gcd of all w-coordinates
    x0, yc = 0, 0
    for vx, vy in vecs:
        if vy:
            g, s, t = xgcd(yc, vy)
            x0, yc = s * x0 + t * vx, g
    assert yc > 0, "a nonzero ideal spans rank 2"
    xs = [vx - (vy // yc) * x0 for vx, vy in vecs]
    big_a = 0
    for x in xs:
        big_a = math.gcd(big_a, x)
    assert big_a > 0, "a nonzero ideal spans rank 2"
    big_b = x0 % big_a
    assert big_a % yc == 0 and big_b % yc == 0, "omega-closure forces divisibility"
    return QuadIdeal(field, big_a // yc, big_b // yc, yc)


def principal_ideal(field: QuadraticField, x: QuadInt) -> QuadIdeal:
    return ideal_from_generators(field, [x])


def ideal_product(i: QuadIdeal, j: QuadIdeal) -> QuadIdeal:
    """Standard form of I*J; zero absorbs."""
    if i.field != j.field:
        raise ValueError("ideals of different fields")
    if i.is_zero() or j.is_zero():
        return zero_ideal(i.field)
    gi, gj = i.basis(), j.basis()
    return ideal_from_generators(i.field, [x * y for x in gi for y in gj])


def ideal_gcd(i: QuadIdeal, j: QuadIdeal) -> QuadIdeal:
    """gcd(I, J): the ideal generated by both bases together."""
    if i.field != j.field:
        raise ValueError("ideals of different fields")
    if i.is_zero():
        return j
    if j.is_zero():
        return i
    return ideal_from_generators(i.field, list(i.basis()) + list(j.basis()))


def ideal_divides_and_quotient(i: QuadIdeal, j: QuadIdeal):
    """K with J = I*K when I divides J (i.e. J is contained in I), else None.

    Uses I * conj(I) = (N(I)): the quotient is J * conj(I) with the
    rational factor N(I) removed; the result is verified by re-multiplying.
    """
    if i.is_zero():
        raise ValueError("division by the zero ideal")
    if j.is_zero():
        return zero_ideal(i.field)
    if not i.contains_ideal(j):
        return None
    ni = i.norm()
    p = ideal_product(j, i.conj())
    assert p.c % ni == 0, "quotient must clear the rational norm factor"
    k = QuadIdeal(i.field, p.a, p.b, p.c // ni)
    assert ideal_product(i, k) == j
    return k


def ideal_pow(i: QuadIdeal, k: int) -> QuadIdeal:
    if k < 0:
        raise ValueError("negative ideal power")
    out = unit_ideal(i.field)
    for _ in range(k):
        out = ideal_product(out, i)
    return out


# ---------------------------------------------------------------------------
# prime splitting
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SplittingReport:
    field: QuadraticField
    q: int
    kind: str  # "split" | "inert" | "ramified"
    e: int
    f: int
    g: int
    factors: tuple  # ((QuadIdeal, multiplicity), ...)

    def to_json_dict(self):
        return {
            "schema_version": 1,
            "m": self.field.m,
            "q": str(self.q),
            "type": self.kind,
            "e": self.e,
            "f": self.f,
            "g": self.g,
            "factors": [
                {"ideal": p.to_json_dict(), "multiplicity": mult} for p, mult in self.factors
            ],
        }


def splitting_kind(field: QuadraticField, q: int) -> str:
    """Split/inert/ramified without building the ideals (sieve-friendly)."""
    m, d = field.m, field.d
    if q == 2:
        if d % 2 != 0:
            return "split" if m % 8 == 1 else "inert"
        return "ramified"
    if d % q == 0:
        return "ramified"
    return "split" if legendre_is_residue(m, q) else "inert"


def split_prime(field: QuadraticField, q: int) -> SplittingReport:
    """Factor (q) per the quadratic splitting laws; the product of the
    reported factors is re-multiplied and checked against (q)."""
    from .arith import is_prime

    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    m = field.m
    kind = splitting_kind(field, q)
    if kind == "inert":
        factors = ((principal_ideal(field, field.integer(q, 0)), 1),)
        e, f, g = 1, 2, 1
    elif kind == "ramified":
        if q == 2 and m % 4 == 3:
            gen = field.integer(1, 0) + field.sqrt_m()  # 1 + sqrt(m)
        else:
            gen = field.sqrt_m()
        p = ideal_from_generators(field, [field.integer(q, 0), gen])
        factors = ((p, 2),)
        e, f, g = 2, 1, 1
    else:  # split
        if q == 2:
            # m = 1 mod 8: (2, (1 +- sqrt(m))/2) = (2, w), (2, 1 - w)
            gens = [field.omega(), field.integer(1, 0) - field.omega()]
        else:
            a = sqrt_mod(m, q)
            s = field.sqrt_m()
            gens = [field.integer(a, 0) + s, field.integer(a, 0) - s]
        q_el = field.integer(q, 0)
        ps = sorted(
            (ideal_from_generators(field, [q_el, g]) for g in gens),
            key=lambda p: (p.a, p.b, p.c),
        )
        assert ps[0] != ps[1], "split factors must be distinct"
        factors = ((ps[0], 1), (ps[1], 1))
        e, f, g = 1, 1, 2
    prod = unit_ideal(field)
    for p, mult in factors:
        for _ in range(mult):
            prod = ideal_product(prod, p)
    assert prod == principal_ideal(field, field.integer(q, 0)), "factor product must be (q)"
    return SplittingReport(field, q, kind, e, f, g, factors)


def factor_ideal(i: QuadIdeal):
    """Prime-ideal factorization as a list of (prime ideal, multiplicity),
    primes ordered by (q, b); the re-multiplied product equals the input."""
    if i.is_zero() or i.is_unit_ideal():
        raise ValueError("factor a nonzero, proper ideal")
    field = i.field
    rem = i
    out = []
    for q, _ in factorize(i.norm()):
        for p, _ in split_prime(field, q).factors:
            v = 0
            while True:
                k = ideal_divides_and_quotient(p, rem)
                if k is None:
                    break
                rem = k
                v += 1
            if v:
                out.append((p, v))
    assert rem.is_unit_ideal(), "norm primes must exhaust the factorization"
    prod = unit_ideal(field)
    for p, v in out:
        prod = ideal_product(prod, ideal_pow(p, v))
    assert prod == i
    return out


# ---------------------------------------------------------------------------
# principality and reduction
# ---------------------------------------------------------------------------

def _norm_form_solutions(field: QuadraticField, target: int):
    """All (x, y) coords of elements u = x + y*w with N(u) = target > 0,
    y >= 0, for an imaginary field (positive definite form)."""
    m = abs(field.m)
    out = []
    if field.half:
        # (2x+y)^2 + m y^2 = 4*target
        vmax = math.isqrt(4 * target // m)
        for y in range(vmax + 1):
            rest = 4 * target - m * y * y
            u = math.isqrt(rest)
            if u * u != rest:
                continue
            for uu in ({u, -u} if u else {0}):
                if (uu - y) % 2 == 0:
                    out.append(((uu - y) // 2, y))
    else:
        # x^2 + m y^2 = target
        vmax = math.isqrt(target // m)
        for y in range(vmax + 1):
            rest = target - m * y * y
            u = math.isqrt(rest)
            if u * u != rest:
                continue
            for uu in ({u, -u} if u else {0}):
                out.append((uu, y))
    return out


def _real_norm_candidates(field: QuadraticField, target: int, lam_sq_hi: float):
    """(x, y) coords of u = x + y*w, u > 0, with |N(u)| = target and the
    normalized embedding size sqrt(target) <= u < lam^2 * sqrt(target).

    Every principal ideal of norm `target` has such a generator, by sliding
    along powers of the fundamental unit.
    """
    m = field.m
    bound = (lam_sq_hi + 1.000001) * math.sqrt(target)
    out = []
    if field.half:
        vmax = int(bound / math.sqrt(m)) + 2
        for y in range(vmax + 1):
            for sign in (1, -1):
                rest = m * y * y + sign * 4 * target
                if rest < 0:
                    continue
                u = math.isqrt(rest)
                if u * u != rest:
                    continue
                cands = {u, -u} if u else {0}
                for uu in cands:
                    if (uu - y) % 2 != 0:
                        continue
                    x = (uu - y) // 2
                    el = field.integer(x, y)
                    if el.sign_real() > 0:
                        out.append((x, y))
    else:
        vmax = int(bound / (2 * math.sqrt(m))) + 2
        for y in range(vmax + 1):
            for sign in (1, -1):
                rest = m * y * y + sign * target
                if rest < 0:
                    continue
                u = math.isqrt(rest)
                if u * u != rest:
                    continue
                for uu in ({u, -u} if u else {0}):
                    el = field.integer(uu, y)
                    if el.sign_real() > 0:
                        out.append((uu, y))
    return out


def _lam_sq_upper(field: QuadraticField) -> float:
    from .units import fundamental_unit

    lam = fundamental_unit(field)
    return float(lam.mp_value(30)) ** 2


def is_principal(i: QuadIdeal):
    """A generator of I when I is principal, else None.

    Works on the primitive part (the scalar c splits off): a generator of
    norm +-a is searched inside the positive definite norm form (imaginary)
    or inside the fundamental-unit-reduced box (real); membership in I plus
    the exact norm equality certifies (alpha) = I.
    """
    if i.is_zero():
        raise ValueError("the zero ideal has no generator")
    field = i.field
    a, b, c = i.a, i.b, i.c
    if a == 1:
        return field.integer(c, 0)
    if field.m < 0:
        cands = _norm_form_solutions(field, a)
    else:
        cands = _real_norm_candidates(field, a, _lam_sq_upper(field))
    for x, y in cands:
        if (x - y * b) % a != 0:
            continue
        gen = field.integer(c * x, c * y)
        assert abs(gen.norm()) == i.norm()
        assert principal_ideal(field, gen) == i
        return gen
    return None


def _shortest_element(i: QuadIdeal) -> QuadInt:
    """Lagrange-Gauss shortest vector of an ideal lattice, imaginary case."""
    u, v = i.basis()

    def n(x):
        return x.norm()

    def bdot(x, y):
        return Fraction((x * y.conj() + y * x.conj()).trace(), 4)

    if n(u) > n(v):
        u, v = v, u
    while True:
        q = (bdot(u, v) / n(u) + Fraction(1, 2)).__floor__()
        v = v - q * u
        if n(v) >= n(u):
            return u
        u, v = v, u


def reduced_equivalent(i: QuadIdeal) -> QuadIdeal:
    """An ideal in the class of I with norm at or below the Minkowski floor.

    Imaginary: conj((alpha)/I) for alpha a shortest element of I.
    Real: search the unit-reduced box for alpha in I with |N(alpha)| = t*N(I),
    t running up to the Minkowski floor (Minkowski guarantees a hit).
    """
    if i.is_zero() or i.is_unit_ideal():
        return i
    field = i.field
    if field.m < 0:
        alpha = _shortest_element(i)
        k = ideal_divides_and_quotient(i, principal_ideal(field, alpha))
        return k.conj()
    bound = minkowski_floor(field)
    ni = i.norm()
    lam_sq = _lam_sq_upper(field)
    a, b, c = i.a, i.b, i.c
    for t in range(1, bound + 1):
        for x, y in _real_norm_candidates(field, t * ni, lam_sq):
            # membership of x + y*w in I
            if y % c != 0 or (x - (y // c) * c * b) % (c * a) != 0:
                continue
            alpha = field.integer(x, y)
            k = ideal_divides_and_quotient(i, principal_ideal(field, alpha))
            assert k is not None and k.norm() == t
            return k.conj()
    raise AssertionError("Minkowski bound guarantees a reduced representative")


# ---------------------------------------------------------------------------
# Minkowski bound and the class group
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MinkowskiBound:
    floor: int          # largest integer norm the bound admits
    upper: Fraction     # certified rational upper bound for the constant
    decimal: str

    def to_json_dict(self):
        return {
            "floor": str(self.floor),
            "upper_bound": f"{self.upper.numerator}/{self.upper.denominator}",
            "decimal": self.decimal,
        }


def minkowski_floor(field: QuadraticField) -> int:
    ad = abs(field.d)
    if field.m > 0:
        return math.isqrt(ad) // 2
    return floor_of_root_quotient(2, ad, PI_LO, PI_HI)


def minkowski_bound(field: QuadraticField, precision: int = 30) -> MinkowskiBound:
    """(n!/n^n)(4/pi)^s sqrt|d| for n = 2: sqrt|d|/2 (real), 2 sqrt|d|/pi
    (imaginary).  The integer floor is certified with exact pi bounds."""
    ad = abs(field.d)
    _, hi = sqrt_bounds(ad, 40)
    if field.m > 0:
        upper = hi / 2
    else:
        upper = 2 * hi / PI_LO
    with mpmath.workdps(precision + 10):
        val = mpmath.sqrt(ad) / 2 if field.m > 0 else 2 * mpmath.sqrt(ad) / mpmath.pi
        dec = mpmath.nstr(val, precision)
    return MinkowskiBound(minkowski_floor(field), upper, dec)


@dataclass(frozen=True)
class ClassGroupReport:
    field: QuadraticField
    h: int
    representatives: tuple  # QuadIdeal, principal class first
    table: tuple            # h x h composition table of class indices
    structure: tuple        # invariant factors d1 | d2 | ... (empty for h = 1)

    def class_index(self, i: QuadIdeal) -> int:
        """Index of the class containing the given nonzero ideal."""
        j = reduced_equivalent(i)
        for idx, rep in enumerate(self.representatives):
            if is_principal(ideal_product(j, rep.conj())) is not None:
                return idx
        raise AssertionError("every ideal class has a representative")

    def to_json_dict(self):
        return {
            "schema_version": 1,
            "m": self.field.m,
            "h": self.h,
            "structure": list(self.structure),
            "representatives": [r.to_json_dict() for r in self.representatives],
            "table": [list(row) for row in self.table],
        }


def _order_counts(table) -> dict[int, int]:
    h = len(table)
    counts: dict[int, int] = {}
    for x in range(h):
        y, k = x, 1
        while y != 0:
            y = table[y][x]
            k += 1
        counts[k] = counts.get(k, 0) + 1
    return counts


def _divisor_chains(h: int, multiple_of: int = 1):
    """All chains d1 | d2 | ... | dr with product h, each di >= 2."""
    if h == 1:
        yield ()
        return
    for d in range(2, h + 1):
        if h % d == 0 and d % multiple_of == 0:
            for rest in _divisor_chains(h // d, d):
                yield (d,) + rest


def _invariant_factors(table) -> tuple:
    h = len(table)
    if h == 1:
        return ()
    actual = _order_counts(table)
    for chain in _divisor_chains(h):
        trial: dict[int, int] = {}
        # element orders of Z_{d1} x ... x Z_{dr} via lcm over coordinates
        from itertools import product as iproduct

        for tup in iproduct(*[range(d) for d in chain]):
            o = 1
            for d, x in zip(chain, tup):
                od = d // math.gcd(d, x) if x else 1
                o = o * od // math.gcd(o, od)
            trial[o] = trial.get(o, 0) + 1
        if trial == actual:
            return chain
    raise AssertionError("every finite abelian group matches an invariant-factor chain")


def class_group(field: QuadraticField) -> ClassGroupReport:
    """Class group from the primes below the Minkowski bound.

    Prime classes generate the group (every class holds an ideal of norm at
    or below the bound, and such an ideal factors into primes of small
    norm); products are reduced back under the bound before classifying, so
    all principality searches stay on small ideals.
    """
    bound = minkowski_floor(field)
    prime_ideals = []
    for q in primes_up_to(bound):
        rep = split_prime(field, q)
        if rep.kind == "inert":
            continue  # principal class, generates nothing
        prime_ideals.extend(p for p, _ in rep.factors)
    reps = [unit_ideal(field)]

    def locate(i: QuadIdeal):
        j = reduced_equivalent(i)
        for idx, rep in enumerate(reps):
            if is_principal(ideal_product(j, rep.conj())) is not None:
                return idx
        return None

    frontier = [unit_ideal(field)]
    while frontier:
        fresh = []
        for i in frontier:
            for p in prime_ideals:
                j = reduced_equivalent(ideal_product(i, p))
                if locate(j) is None:
                    reps.append(j)
                    fresh.append(j)
        frontier = fresh
    h = len(reps)
    table = tuple(
        tuple(locate(ideal_product(reps[i], reps[j])) for j in range(h)) for i in range(h)
    )
    return ClassGroupReport(field, h, tuple(reps), table, _invariant_factors(table))
