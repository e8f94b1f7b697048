import random
from fractions import Fraction

import mpmath
import pytest

from quadrantal.numberfield import (
    NumberField,
    char_poly,
    composed_min_poly,
    denominator_clearing,
    mat_det,
    primitive_element_shift,
    tuple_discriminant,
)
from quadrantal.polynomial import Poly


def P(*coeffs):
    return Poly(coeffs)


SQRT2 = NumberField(P(-2, 0, 1))
SQRTM5 = NumberField(P(5, 0, 1))
OMEGA3 = NumberField(P(1, 1, 1))
CBRT3 = NumberField(P(-3, 0, 0, 1))
OMEGA5 = NumberField(P(1, 1, 1, 1, 1))


class TestElementArithmetic:
    def test_product_of_conjugate_pair(self):
        th = SQRT2.theta()
        one = SQRT2.one()
        assert (one + th) * (one - th) == SQRT2.rational(-1)

    def test_additive_identity(self):
        a = SQRT2.element([3, Fraction(1, 2)])
        assert a + SQRT2.zero() == a

    def test_omega3_square(self):
        th = OMEGA3.theta()
        assert th * th == OMEGA3.element([-1, -1])

    def test_mismatched_fields_rejected(self):
        with pytest.raises(ValueError):
            SQRT2.theta() + OMEGA3.theta()

    def test_inverse_of_theta(self):
        th = SQRT2.theta()
        assert th.inverse() == SQRT2.element([0, Fraction(1, 2)])
        assert th * th.inverse() == SQRT2.one()

    def test_inverse_of_one(self):
        assert SQRT2.one().inverse() == SQRT2.one()

    def test_inverse_of_unit(self):
        # (1 + sqrt2)(sqrt2 - 1) = 1
        a = SQRT2.element([1, 1])
        assert a.inverse() == SQRT2.element([-1, 1])

    def test_zero_inverse_rejected(self):
        with pytest.raises(ZeroDivisionError):
            SQRT2.zero().inverse()


class TestTraceNorm:
    def test_rational_element(self):
        c = Fraction(7, 3)
        for field in (SQRT2, CBRT3):
            t, n = field.rational(c).trace_and_norm()
            assert t == field.degree * c
            assert n == c**field.degree

    def test_theta_sqrt2(self):
        assert SQRT2.theta().trace_and_norm() == (0, -2)

    def test_norm_21(self):
        assert SQRTM5.element([1, 2]).trace_and_norm() == (2, 21)

    def test_multiplicative_and_additive(self):
        rng = random.Random(3)
        for field in (SQRT2, SQRTM5, OMEGA5):
            for _ in range(30):
                a = field.element([rng.randint(-9, 9) for _ in range(field.degree)])
                b = field.element([rng.randint(-9, 9) for _ in range(field.degree)])
                assert (a * b).norm() == a.norm() * b.norm()
                assert (a + b).trace() == a.trace() + b.trace()

    def test_against_embeddings(self):
        # companion-matrix values match numeric conjugates at 60 digits
        rng = random.Random(4)
        for field in (SQRT2, SQRTM5, OMEGA5):
            for _ in range(34):
                a = field.element(
                    [Fraction(rng.randint(-20, 20), rng.randint(1, 5)) for _ in range(field.degree)]
                )
                t, n = a.trace_and_norm()
                vals = a.conjugate_values()
                with mpmath.workdps(60):
                    ts = sum(vals)
                    ns = mpmath.mpf(1)
                    for v in vals:
                        ns *= v
                    for exact, approx in ((t, ts), (n, ns)):
                        target = mpmath.mpf(exact.numerator) / exact.denominator
                        scale = max(1, abs(target))
                        assert abs(approx - target) / scale < mpmath.mpf(10) ** -30


class TestDiscriminant:
    def test_quadratic_power_basis(self):
        for field, m in ((SQRT2, 2), (SQRTM5, -5)):
            assert tuple_discriminant([field.one(), field.theta()]) == 4 * m

    def test_repeated_entry_vanishes(self):
        th = SQRT2.theta()
        assert tuple_discriminant([th, th]) == 0

    def test_cyclotomic_p5(self):
        basis = [OMEGA5.element([0] * i + [1]) for i in range(4)]
        assert tuple_discriminant(basis) == 125

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError):
            tuple_discriminant([SQRT2.one()])

    def test_nonzero_iff_basis(self):
        rng = random.Random(9)
        for _ in range(40):
            rows = [[rng.randint(-4, 4) for _ in range(2)] for _ in range(2)]
            tup = [SQRT2.element(row) for row in rows]
            disc = tuple_discriminant(tup)
            det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
            assert (disc != 0) == (det != 0)

    def test_change_of_basis_law(self):
        rng = random.Random(10)
        base = [OMEGA5.element([0] * i + [1]) for i in range(4)]
        d0 = tuple_discriminant(base)
        for _ in range(10):
            c = [[rng.randint(-3, 3) for _ in range(4)] for _ in range(4)]
            # alpha_j = sum_i c_ij beta_i with beta the power basis
            tup = [OMEGA5.element([c[i][j] for i in range(4)]) for j in range(4)]
            assert tuple_discriminant(tup) == Fraction(mat_det(c)) ** 2 * d0


class TestFieldAndMinimalPolynomials:
    def test_rational_in_quadratic(self):
        c = Fraction(5, 2)
        fp = SQRT2.rational(c).field_polynomial()
        assert fp == P(c, -1).scale(-1) * P(c, -1).scale(-1) or fp == P(c * c, -2 * c, 1)

    def test_theta_gives_minpoly(self):
        assert SQRT2.theta().field_polynomial() == P(-2, 0, 1)
        assert CBRT3.theta().minimal_polynomial() == P(-3, 0, 0, 1)

    def test_one_plus_theta(self):
        assert (SQRT2.one() + SQRT2.theta()).field_polynomial() == P(-1, -2, 1)

    def test_theta_squared_in_cbrt3(self):
        el = CBRT3.element([0, 0, 1])
        assert el.minimal_polynomial() == P(-9, 0, 0, 1)

    def test_power_law(self):
        rng = random.Random(6)
        for field in (SQRT2, CBRT3, OMEGA5):
            for _ in range(17):
                a = field.element([rng.randint(-5, 5) for _ in range(field.degree)])
                f = a.field_polynomial()
                p = a.minimal_polynomial()
                s = field.degree // p.degree
                assert p**s == f


class TestAlgebraicIntegers:
    def test_golden_ratio_is_integral(self):
        f = NumberField(P(-5, 0, 1))
        assert f.element([Fraction(1, 2), Fraction(1, 2)]).is_algebraic_integer()

    def test_half_sqrt3_is_not(self):
        f = NumberField(P(-3, 0, 1))
        assert not f.element([Fraction(1, 2), Fraction(1, 2)]).is_algebraic_integer()

    def test_rational_non_integer(self):
        assert not SQRT2.rational(Fraction(3, 2)).is_algebraic_integer()
        assert SQRT2.rational(-4).is_algebraic_integer()

    def test_denominator_clearing_examples(self):
        n, b = denominator_clearing(SQRT2.rational(Fraction(1, 2)))
        assert n == 2 and b == SQRT2.one()
        n, b = denominator_clearing(SQRT2.element([0, Fraction(1, 3)]))
        assert n == 3 and b == SQRT2.theta()
        n, b = denominator_clearing(SQRT2.element([4, 7]))
        assert n == 1

    def test_denominator_clearing_zero_rejected(self):
        with pytest.raises(ValueError):
            denominator_clearing(SQRT2.zero())


class TestComposedMinPoly:
    def test_sum_sqrt2_sqrt3(self):
        out = composed_min_poly("sum", P(-2, 0, 1), P(-3, 0, 1))
        assert out == P(1, 0, -10, 0, 1)

    def test_product_with_linear_one(self):
        p = P(-7, 2, 0, 1)
        assert composed_min_poly("product", p, P(-1, 1)) == p

    def test_sum_with_x(self):
        p = P(-7, 2, 0, 1)
        assert composed_min_poly("sum", p, P(0, 1)) == p

    def test_nonmonic_rejected(self):
        with pytest.raises(ValueError):
            composed_min_poly("sum", P(-2, 0, 2), P(-3, 0, 1))

    def test_roots_vanish_numerically(self):
        cases = [(P(-2, 0, 1), P(-3, 0, 1)), (P(1, 1, 1), P(-2, 0, 0, 1)), (P(5, 0, 1), P(-1, 1, 1))]
        for p, q in cases:
            s = composed_min_poly("sum", p, q)
            fp, fq = NumberField(p), NumberField(q)
            with mpmath.workdps(60):
                scoeffs = [mpmath.mpf(int(c)) for c in s.coeffs]
                for a in fp.embeddings():
                    for b in fq.embeddings():
                        x = a + b
                        val = mpmath.mpf(0)
                        for c in reversed(scoeffs):
                            val = val * x + c
                        assert abs(val) < mpmath.mpf(10) ** -20


class TestPrimitiveElement:
    def test_sqrt2_cbrt3(self):
        assert primitive_element_shift(P(-2, 0, 1), P(-3, 0, 0, 1)) == 1

    def test_linear_second_field(self):
        assert primitive_element_shift(P(-2, 0, 1), P(-4, 1)) == 0

    def test_same_polynomial(self):
        assert primitive_element_shift(P(-2, 0, 1), P(-2, 0, 1)) == 1

    def test_composed_degree_certificate(self):
        # for the certified shift, theta = alpha + c*beta has degree m*n here
        c = primitive_element_shift(P(-2, 0, 1), P(-3, 0, 0, 1))
        qq = Poly([co * Fraction(c) ** (3 - i) for i, co in enumerate(P(-3, 0, 0, 1).coeffs)])
        s = composed_min_poly("sum", P(-2, 0, 1), qq)
        from quadrantal.polynomial import poly_gcd

        assert poly_gcd(s, s.derivative()).degree == 0


class TestFieldConstruction:
    def test_rational_root_rejected(self):
        with pytest.raises(ValueError):
            NumberField(P(-4, 0, 1))  # x^2 - 4 = (x-2)(x+2)

    def test_nonmonic_rejected(self):
        with pytest.raises(ValueError):
            NumberField(P(1, 0, 2))

    def test_conjugate_ordering(self):
        emb = CBRT3.embeddings()
        assert abs(emb[0].imag) < mpmath.mpf(10) ** -30  # the real root first
        assert emb[1].imag > 0  # then +Im before -Im
        assert emb[2].imag < 0
        assert SQRT2.signature() == (2, 0)
        assert SQRTM5.signature() == (0, 1)
        assert CBRT3.signature() == (1, 1)


def test_char_poly_matches_determinant_definition():
    rng = random.Random(12)
    for n in (2, 3, 4):
        m = [[Fraction(rng.randint(-5, 5)) for _ in range(n)] for _ in range(n)]
        cp = char_poly(m)
        # det(xI - M) evaluated at a few rational points
        for x in (Fraction(0), Fraction(1), Fraction(-2), Fraction(3, 2)):
            xb = [[x * (1 if i == j else 0) - m[i][j] for j in range(n)] for i in range(n)]
            assert cp(x) == mat_det(xb)
