"""Rational-integer helpers shared by the rest of the package.

Everything here is exact: Python ints throughout, Fractions where a value
is genuinely rational.  Factorization is honest trial division up to a
fixed bound; inputs that cannot be certified within the bound raise
instead of guessing.
"""

from __future__ import annotations

import math
from fractions import Fraction

# Trial-division bound shared by every factorization in the package.
FACTOR_BOUND = 10**6

# Certified rational bounds 3.14159265358 < pi < 3.14159265359 are enough
# to pin integer floors of desk-scale Minkowski constants; refine() widens
# the precision when a floor lands too close to an integer.
PI_LO = Fraction(314159265358, 10**11)
PI_HI = Fraction(314159265359, 10**11)


class FactorBoundExceeded(ValueError):
    """An integer could not be factored by trial division within FACTOR_BOUND."""


class NotSquareFree(ValueError):
    """The given integer has a square factor."""


class SquareFreeUnverified(ValueError):
    """Square-freeness could not be certified within the trial-division bound."""


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all 64-bit (and far larger) inputs."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(n: int) -> list[int]:
    """Primes <= n by a plain sieve."""
    if n < 2:
        return []
    flags = bytearray([1]) * (n + 1)
    flags[0] = flags[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i in range(2, n + 1) if flags[i]]


def factorize(n: int, bound: int = FACTOR_BOUND) -> list[tuple[int, int]]:
    """Factor |n| > 0 into sorted (prime, exponent) pairs by trial division.

    A residual cofactor above the bound is accepted only when it is itself
    certified prime; otherwise FactorBoundExceeded is raised.
    """
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out = []
    d = 2
    while d * d <= n and d <= bound:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        if n <= bound * bound or is_prime(n):
            out.append((n, 1))
        else:
            raise FactorBoundExceeded(f"residual cofactor {n} exceeds trial-division bound")
    return out


def check_square_free(m: int, bound: int = FACTOR_BOUND) -> None:
    """Certify that m is square-free, or raise.

    Trial division up to `bound`; a residual cofactor r with all prime
    factors > bound is square-free iff it is not a perfect square, provided
    r <= bound**3 (at most two prime factors).  Beyond that we refuse to
    guess and raise SquareFreeUnverified.
    """
    n = abs(m)
    if n == 0:
        raise NotSquareFree("0 is not square-free")
    if n == 1:
        return
    d = 2
    while d * d <= n and d <= bound:
        if n % d == 0:
            n //= d
            if n % d == 0:
                raise NotSquareFree(f"{m} is divisible by {d}**2")
        d += 1 if d == 2 else 2
    if n > 1 and n > bound:
        r = math.isqrt(n)
        if r * r == n:
            raise NotSquareFree(f"{m} has square factor {r}**2")
        if n > bound**3:
            raise SquareFreeUnverified(
                f"cannot certify square-freeness of {m} within bound {bound}"
            )


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b), g >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def legendre_is_residue(a: int, q: int) -> bool:
    """Euler's criterion: is a (coprime to odd prime q) a square mod q?"""
    return pow(a % q, (q - 1) // 2, q) == 1


def sqrt_mod(a: int, q: int) -> int:
    """A square root of a modulo an odd prime q; a must be a residue.

    Brute force below 10**5, Tonelli-Shanks above; the result is the
    smaller of the two roots, making callers deterministic.
    """
    a %= q
    if a == 0:
        return 0
    if q < 10**5:
        for x in range(1, q):
            if x * x % q == a:
                return min(x, q - x)
        raise ValueError(f"{a} is not a quadratic residue mod {q}")
    if not legendre_is_residue(a, q):
        raise ValueError(f"{a} is not a quadratic residue mod {q}")
    if q % 4 == 3:
        x = pow(a, (q + 1) // 4, q)
        return min(x, q - x)
    # Tonelli-Shanks
    s, d = 0, q - 1
    while d % 2 == 0:
        d //= 2
        s += 1
    z = 2
    while legendre_is_residue(z, q):
        z += 1
    c = pow(z, d, q)
    x = pow(a, (d + 1) // 2, q)
    t = pow(a, d, q)
    m = s
    while t != 1:
        i, tt = 0, t
        while tt != 1:
            tt = tt * tt % q
            i += 1
        b = pow(c, 1 << (m - i - 1), q)
        x = x * b % q
        t = t * b * b % q
        c = b * b % q
        m = i
    return min(x, q - x)


def sqrt_bounds(n: int, digits: int) -> tuple[Fraction, Fraction]:
    """Rational lo <= sqrt(n) <= hi with hi - lo = 10**-digits."""
    scale = 10**digits
    r = math.isqrt(n * scale * scale)
    return Fraction(r, scale), Fraction(r + 1, scale)


def floor_of_root_quotient(mult: int, n: int, den_lo: Fraction, den_hi: Fraction) -> int:
    """Exact floor(mult*sqrt(n)/x) for an irrational quotient, given
    certified rational bounds den_lo < x < den_hi.

    Widens the sqrt precision until the floor is pinned; the quotient is
    transcendental for x = pi and n nonsquare, so this terminates.
    """
    digits = 15
    while True:
        lo, hi = sqrt_bounds(n, digits)
        f_lo = (mult * lo / den_hi).__floor__()
        f_hi = (mult * hi / den_lo).__floor__()
        if f_lo == f_hi:
            return f_lo
        digits *= 2
        if digits > 1000:
            raise RuntimeError("floor could not be pinned; quotient suspiciously integral")
