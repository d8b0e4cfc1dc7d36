import random
from concurrent.futures import ThreadPoolExecutor
from decimal import Decimal, localcontext
from fractions import Fraction

import pytest

from abelex import bignum
from abelex.bignum import BigFloat, BigComplex, ulps_apart, digits_to_bits
from abelex.errors import DomainError

from oracles import newton_sqrt_digits, machin_pi_digits, dec_pi, dec_cos, dec_sin, dec_reduce_mod


def bf(x, prec=96):
    if isinstance(x, str):
        return BigFloat.from_decimal(x, prec)
    if isinstance(x, Fraction):
        return BigFloat.from_fraction(x, prec)
    return BigFloat.from_int(x, prec)


# --- arithmetic -------------------------------------------------------------


def test_add_integers_exact():
    assert (bf(1) + bf(1)).to_fraction() == 2


def test_sub_cancellation_to_zero():
    x = bf(Fraction(355, 113))
    assert (x - x).is_zero()


def test_mul_exact_small():
    assert (bf(7) * bf(-6)).to_fraction() == -42


def test_div_inverse_roundtrip():
    third = bf(1, 64) / bf(3, 64)
    back = third * bf(3, 64)
    assert ulps_apart(back, bf(1, 64)) <= 4


def test_div_by_zero():
    with pytest.raises(DomainError):
        bf(1) / bf(0)


def test_sqrt_negative_rejected():
    with pytest.raises(DomainError):
        bf(-2).sqrt()


def test_sqrt_squares_back_random():
    rng = random.Random(5)
    for _ in range(60):
        a = Fraction(rng.randint(1, 10 ** 8), rng.randint(1, 10 ** 4))
        x = bf(a, 128)
        s = x.sqrt()
        assert ulps_apart(s * s, x) <= 4


def test_sqrt2_against_newton_oracle():
    digits = 50
    prec = digits_to_bits(digits + 4)
    got = bf(2, prec).sqrt().to_decimal(digits)
    want = newton_sqrt_digits(2, digits + 2)
    # compare the first 48 digits
    got_digits = got.replace(".", "").split("e")[0][:48]
    assert got_digits == want[:48]


def test_arith_matches_fractions_randomised():
    # each operation is within 2 ulp of the exact value of its (rounded) inputs
    rng = random.Random(0)
    for _ in range(200):
        a = Fraction(rng.randint(-999, 999), rng.randint(1, 99))
        b = Fraction(rng.randint(-999, 999), rng.randint(1, 99))
        x, y = bf(a, 128), bf(b, 128)
        xa, yb = x.to_fraction(), y.to_fraction()
        assert ulps_apart(x + y, bf(xa + yb, 128)) <= 2
        assert ulps_apart(x * y, bf(xa * yb, 128)) <= 2
        if yb:
            assert ulps_apart(x / y, bf(xa / yb, 128)) <= 2


def test_comparisons_exact():
    assert bf(Fraction(1, 3)) < bf(Fraction(1, 2))
    assert bf(-5) < bf(0) < bf(Fraction(1, 10 ** 30))


# --- decimal serialisation ----------------------------------------------------


def test_decimal_roundtrip():
    rng = random.Random(1)
    for _ in range(50):
        a = Fraction(rng.randint(-10 ** 12, 10 ** 12), rng.randint(1, 10 ** 6))
        if a == 0:
            continue
        s = bf(a, 128).to_decimal(25)
        back = BigFloat.from_decimal(s, 128)
        assert abs(back.to_fraction() - a) <= abs(a) * Fraction(1, 10 ** 23)


def test_decimal_grammar():
    assert bf(Fraction(-3, 2)).to_decimal(3) == "-1.50e+0"
    assert bf(0).to_decimal(4) == "0.000e+0"
    parsed = BigFloat.from_decimal("+2.5e-2", 64)
    assert ulps_apart(parsed, bf(Fraction(1, 40), 64)) <= 1


# --- elementary functions ------------------------------------------------------


def test_exp_zero_is_one():
    assert bignum.exp(bf(0)).to_fraction() == 1


def test_cos_zero_is_one():
    assert bignum.cos(bf(0)).to_fraction() == 1


def test_log_domain():
    with pytest.raises(DomainError):
        bignum.log(bf(0))
    with pytest.raises(DomainError):
        bignum.log(bf(-1))


def test_pi_against_independent_machin():
    digits = 50
    prec = digits_to_bits(digits + 4)
    got = bignum.pi(prec).to_decimal(digits)
    want = machin_pi_digits(digits)
    assert got.replace(".", "").split("e")[0][:48] == want[:48]


def test_exp_log_roundtrip_random():
    rng = random.Random(2)
    for _ in range(40):
        x = bf(Fraction(rng.randint(-1000, 1000), 100), 128)
        ex = bignum.exp(x, 128)
        back = bignum.exp(bignum.log(ex, 128), 128)
        assert ulps_apart(back, ex) <= 8


def test_sin_cos_pythagoras():
    rng = random.Random(3)
    one = bf(1, 128)
    for _ in range(100):
        x = bf(Fraction(rng.randint(-80000, 80000), 1000), 128)
        s = bignum.sin(x, 128)
        c = bignum.cos(x, 128)
        assert ulps_apart(s * s + c * c, one) <= 8


def test_cos_against_decimal_oracle():
    digits = 30
    prec = digits_to_bits(digits + 6)
    with localcontext() as c:
        c.prec = digits + 15
        want = dec_cos(Decimal("1.25"), digits)
    got = Decimal(bignum.cos(bf("1.25", prec), prec).to_decimal(digits))
    assert abs(got - want) < Decimal(10) ** (-(digits - 3))


def test_atan_one_is_quarter_pi():
    prec = 160
    q = bignum.atan(bf(1, prec), prec)
    want = bignum.pi(prec).scale2(-2)
    assert ulps_apart(q, want) <= 8


def test_monotone_refinement():
    # doubling precision never disturbs the first prec/4 decimal digits
    rng = random.Random(4)
    for _ in range(20):
        a = Fraction(rng.randint(1, 10 ** 6), rng.randint(1, 10 ** 3))
        for func in (bignum.exp, bignum.log, bignum.cos):
            lo = func(bf(a, 128), 128)
            hi = func(bf(a, 256), 256)
            d = 128 // 4 // 4  # prec/4 bits ~ prec/13 decimal digits; be generous
            assert lo.to_decimal(d) == hi.to_decimal(d)


# --- complex --------------------------------------------------------------------


def test_exp_2pi_i_zero_angle():
    z = bignum.exp_2pi_i(bf(0), bf(1), 96)
    assert z.re.to_fraction() == 1
    assert ulps_apart(z.im, bf(0, 96)) == 0 or z.im.to_fraction() == 0


def test_exp_2pi_i_quarter_turn():
    z = bignum.exp_2pi_i(bf(Fraction(1, 4)), bf(2), 96)
    assert ulps_apart(z.im, bf(2, 96)) <= 4
    assert abs(z.re.to_fraction()) < Fraction(1, 2 ** 90)


def test_exp_2pi_i_surd_angle_cross_checked():
    # alpha = sqrt(5), scale = log((1+sqrt(5))/2), from the worked example
    digits = 30
    prec = digits_to_bits(digits + 10)
    alpha = bf(5, prec + 64).sqrt()
    phi = (bf(1, prec + 64) + bf(5, prec + 64).sqrt()) / bf(2, prec + 64)
    scale = bignum.log(phi, prec)
    z30 = bignum.exp_2pi_i(alpha, scale, prec)
    # decimal-module oracle for the same quantity
    with localcontext() as c:
        c.prec = digits + 25
        pi_d = dec_pi(digits + 20)
        alpha_d = Decimal(5).sqrt()
        theta = dec_reduce_mod(2 * pi_d * alpha_d, 2 * pi_d)
        scale_d = ((1 + Decimal(5).sqrt()) / 2).ln()
        want_re = scale_d * dec_cos(theta - pi_d, digits) * -1
        want_im = scale_d * dec_sin(theta - pi_d, digits) * -1
    got_re = Decimal(z30.re.to_decimal(digits))
    got_im = Decimal(z30.im.to_decimal(digits))
    assert abs(got_re - want_re) < Decimal(10) ** (-(digits - 4))
    assert abs(got_im - want_im) < Decimal(10) ** (-(digits - 4))
    # the worked example: ~0.0421 + 0.4794i
    assert abs(got_re - Decimal("0.0421")) < Decimal("0.0001")
    assert abs(got_im - Decimal("0.4794")) < Decimal("0.0001")
    # cross-check at doubled precision: first 28 digits agree
    prec2 = digits_to_bits(2 * digits)
    alpha2 = bf(5, prec2 + 64).sqrt()
    phi2 = (bf(1, prec2 + 64) + bf(5, prec2 + 64).sqrt()) / bf(2, prec2 + 64)
    z60 = bignum.exp_2pi_i(alpha2, bignum.log(phi2, prec2), prec2)
    assert z60.re.to_decimal(digits - 2) == z30.re.to_decimal(digits - 2)
    assert z60.im.to_decimal(digits - 2) == z30.im.to_decimal(digits - 2)


def test_complex_mul_div():
    a = BigComplex.from_ints(3, 4, 96)
    b = BigComplex.from_ints(1, -2, 96)
    p = a * b
    assert p.re.to_fraction() == 11 and p.im.to_fraction() == -2
    q = p / b
    assert ulps_apart(q.re, bf(3, 96)) <= 4 and ulps_apart(q.im, bf(4, 96)) <= 4


def test_complex_abs():
    a = BigComplex.from_ints(3, 4, 96)
    assert ulps_apart(a.abs(), bf(5, 96)) <= 2


def test_threaded_evaluation_bit_identical():
    xs = [bf(Fraction(k, 7), 128) for k in range(1, 33)]
    seq = [bignum.exp(x).to_decimal(30) for x in xs]
    with ThreadPoolExecutor(max_workers=8) as pool:
        par = list(pool.map(lambda x: bignum.exp(x).to_decimal(30), xs))
    assert seq == par
