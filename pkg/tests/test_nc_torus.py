import random
from decimal import Decimal, localcontext
from fractions import Fraction

import pytest

from abelex.errors import ContractError, DomainError
from abelex.nc_torus import (BratteliData, ContinuedFraction, QuadraticSurd,
                             cf_convergents, cf_expand, cf_quotients, cf_to_string,
                             connes_invariant, dominant_eigenvalue, effros_shen,
                             is_positive, morita_equivalent, surd_from_cf, _mobius)

from oracles import machin_pi_digits


def S(text):
    return QuadraticSurd.from_string(text)


def R(x):
    return QuadraticSurd.from_fraction(Fraction(x))


SQRT2 = QuadraticSurd.sqrt_of(2)
GOLDEN = S("(1+sqrt(5))/2")


# --- surd arithmetic --------------------------------------------------------------


def test_canonical_form():
    assert QuadraticSurd(2, 2, 4, 8).to_string() == "(1+2*sqrt(2))/2"
    assert QuadraticSurd(0, 1, 1, 9).to_string() == "3"  # perfect square folds
    assert QuadraticSurd(1, 0, -2, 0).to_string() == "-1/2"


def test_parse_print_roundtrip():
    rng = random.Random(0)
    for _ in range(200):
        s = QuadraticSurd(rng.randint(-20, 20), rng.randint(-10, 10),
                          rng.choice([1, 1, 2, 3, 5, -2]), rng.choice([0, 2, 3, 5, 7, 12]))
        assert S(s.to_string()) == s


def test_field_arithmetic():
    phi = GOLDEN
    assert phi * phi == phi + R(1)          # x^2 = x + 1
    assert (SQRT2 * SQRT2) == R(2)
    assert (phi - phi).sign() == 0
    assert (R(1) / SQRT2) * SQRT2 == R(1)


def test_mixed_fields_rejected():
    with pytest.raises(DomainError):
        SQRT2 + QuadraticSurd.sqrt_of(3)


def test_sign_and_compare():
    assert SQRT2.sign() == 1
    assert (SQRT2 - R(1)).sign() == 1
    assert (SQRT2 - R(2)).sign() == -1
    assert (R(1) - GOLDEN).sign() == -1
    assert S("(1-sqrt(5))/2").sign() == -1


def test_floor():
    assert SQRT2.floor() == 1
    assert GOLDEN.floor() == 1
    assert S("(1-sqrt(5))/2").floor() == -1
    assert R(Fraction(-7, 2)).floor() == -4


def test_conjugate_product_is_norm():
    x = S("(3+2*sqrt(7))/5")
    n = x * x.conjugate()
    assert n.is_rational()
    assert n.to_fraction() == Fraction(9 - 4 * 7, 25)


def test_to_bigfloat():
    v = SQRT2.to_bigfloat(128)
    assert (v * v).to_decimal(20).startswith("2.000000000000000000")


# --- continued fractions ------------------------------------------------------------


def test_cf_sqrt2():
    cf = cf_expand(SQRT2)
    assert cf == ContinuedFraction((1,), (2,))


def test_cf_rational():
    cf = cf_expand(R(Fraction(7, 3)))
    assert cf == ContinuedFraction((2, 3), ())


def test_cf_golden():
    cf = cf_expand(GOLDEN)
    assert cf == ContinuedFraction((1,), (1,))


def test_cf_display():
    assert cf_to_string(cf_expand(SQRT2)) == "[1; (period: 2)]"
    assert cf_to_string(cf_expand(R(Fraction(7, 3)))) == "[2; 3]"


def test_cf_quotients_positive():
    rng = random.Random(1)
    for _ in range(30):
        d = rng.choice([2, 3, 5, 6, 7, 10, 13])
        x = QuadraticSurd(rng.randint(-5, 5), 1, rng.randint(1, 5), d)
        cf = cf_expand(x)
        qs = cf_quotients(cf, 12)
        assert all(a >= 1 for a in qs[1:])


def test_cf_roundtrip_50_surds():
    rng = random.Random(2)
    count = 0
    while count < 50:
        d = rng.randint(2, 500)
        r = QuadraticSurd(rng.randint(-10, 10), rng.randint(1, 6),
                          rng.randint(1, 8), d)
        if r.is_rational():
            continue
        count += 1
        cf = cf_expand(r)
        assert cf.period  # irrational quadratics are eventually periodic
        assert surd_from_cf(cf) == r


def test_cf_rational_roundtrip():
    rng = random.Random(3)
    for _ in range(40):
        fr = Fraction(rng.randint(-99, 99), rng.randint(1, 40))
        cf = cf_expand(R(fr))
        assert not cf.period
        assert surd_from_cf(cf) == R(fr)


# --- Effros-Shen data ------------------------------------------------------------------


def test_effros_shen_golden():
    data = effros_shen(cf_expand(GOLDEN), 4)
    assert len(data) == 4
    assert data.matrices[0] == ((1, 1), (1, 0))
    assert data.is_stationary()


def test_effros_shen_sqrt2():
    data = effros_shen(cf_expand(SQRT2), 3)
    assert data.matrices == (((2, 1), (1, 0)),) * 3
    assert data.is_stationary()


def test_effros_shen_rational_too_short():
    with pytest.raises(DomainError):
        effros_shen(cf_expand(R(Fraction(7, 3))), 3)


def test_effros_shen_products_are_convergents():
    # theta in (0,1): products of the tail matrices give convergent pairs of theta
    for theta in (GOLDEN - R(1), SQRT2 - R(1)):
        cf = cf_expand(theta)
        assert cf.preperiod[0] == 0
        data = effros_shen(cf, 9)
        ratios = []
        prod = ((1, 0), (0, 1))
        for mat in data.matrices:
            prod = ((prod[0][0] * mat[0][0] + prod[0][1] * mat[1][0],
                     prod[0][0] * mat[0][1] + prod[0][1] * mat[1][1]),
                    (prod[1][0] * mat[0][0] + prod[1][1] * mat[1][0],
                     prod[1][0] * mat[0][1] + prod[1][1] * mat[1][1]))
            p, q = prod[0][0], prod[1][0]
            ratios.append(Fraction(q, p))
        # alternating monotone convergence to theta, checked exactly
        signs = [(theta - R(r)).sign() for r in ratios]
        assert all(s != 0 for s in signs)
        for i in range(len(signs) - 1):
            assert signs[i] == -signs[i + 1]
        gaps = [abs((theta - R(r)).to_bigfloat(64).to_fraction()) for r in ratios]
        assert all(gaps[i] > gaps[i + 1] for i in range(len(gaps) - 1))


# --- positivity -----------------------------------------------------------------------


def test_is_positive_examples():
    assert is_positive(1, 0, SQRT2)
    assert is_positive(-1, 1, SQRT2)
    assert not is_positive(1, -1, SQRT2)


# --- Morita ---------------------------------------------------------------------------


def test_morita_shift():
    res = morita_equivalent(SQRT2, SQRT2 - R(1))
    assert res.equivalent
    a, b = res.witness[0]
    c, d = res.witness[1]
    # verified internally; double-check here too
    assert _mobius(res.witness, SQRT2) == SQRT2 - R(1)


def test_morita_incompatible_tails():
    res = morita_equivalent(SQRT2, GOLDEN)
    assert not res.equivalent


def test_morita_rationals():
    res = morita_equivalent(R(Fraction(1, 2)), R(Fraction(1, 3)))
    assert res.equivalent
    assert res.sl2_witness is not None


def test_morita_mixed():
    assert not morita_equivalent(SQRT2, R(Fraction(1, 2))).equivalent


def test_morita_equivalence_relation():
    rng = random.Random(4)
    pool = [SQRT2, SQRT2 - R(1), R(1) / SQRT2, GOLDEN, GOLDEN + R(3),
            QuadraticSurd.sqrt_of(3), QuadraticSurd.sqrt_of(7),
            S("(1+sqrt(5))/3"), R(Fraction(2, 5)), R(Fraction(3, 4)),
            S("(2+sqrt(3))/5"), S("(1-sqrt(7))/2") + R(2), S("sqrt(13)"),
            S("(3+sqrt(13))/2"), S("(5+sqrt(2))/3"), S("sqrt(6)"),
            S("(1+sqrt(6))/5"), R(Fraction(7, 11)), S("(9+2*sqrt(3))/7"),
            S("(4+sqrt(7))/3")]
    assert len(pool) == 20
    for x in pool:
        r = morita_equivalent(x, x)
        assert r.equivalent  # reflexive
    for _ in range(40):
        x, y = rng.sample(pool, 2)
        rxy = morita_equivalent(x, y)
        ryx = morita_equivalent(y, x)
        assert rxy.equivalent == ryx.equivalent  # symmetric
        if rxy.equivalent:
            assert _mobius(rxy.witness, x) == y
    # transitivity on a known chain
    chain = [SQRT2, SQRT2 - R(1), R(1) / SQRT2]
    assert morita_equivalent(chain[0], chain[2]).equivalent


def test_morita_sl2_flag_reported():
    res = morita_equivalent(SQRT2, SQRT2 - R(1))
    assert res.witness_det in (1, -1)
    if res.sl2_witness is not None:
        assert _mobius(res.sl2_witness, SQRT2) == SQRT2 - R(1)
        det = (res.sl2_witness[0][0] * res.sl2_witness[1][1]
               - res.sl2_witness[0][1] * res.sl2_witness[1][0])
        assert det == 1


# --- Connes invariant -------------------------------------------------------------------


def test_dominant_eigenvalue_exact():
    lam = dominant_eigenvalue(((2, 1), (1, 1)))
    assert lam == S("(3+sqrt(5))/2")
    assert (lam - R(1)).sign() == 1  # > 1


def test_connes_non_hyperbolic_rejected():
    with pytest.raises(DomainError):
        dominant_eigenvalue(((1, 1), (1, 0)))
    with pytest.raises(DomainError):
        dominant_eigenvalue(((0, 1), (1, 0)))


def test_connes_value_against_decimal():
    digits = 30
    prec = (digits + 6) * 3322 // 1000 + 16
    got = connes_invariant(((2, 1), (1, 1)), prec)
    with localcontext() as c:
        c.prec = digits + 20
        want = ((3 + Decimal(5).sqrt()) / 2).ln()
    assert abs(Decimal(got.to_decimal(digits)) - want) < Decimal(10) ** (-25)


def test_connes_conjugation_invariance():
    rng = random.Random(5)
    M = ((2, 1), (1, 1))

    def matmul(a, b):
        return ((a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
                (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]))

    base = dominant_eigenvalue(M)
    found = 0
    while found < 20:
        a, b = rng.randint(-4, 4), rng.randint(-4, 4)
        c, d = rng.randint(-4, 4), rng.randint(-4, 4)
        if a * d - b * c not in (1, -1):
            continue
        U = ((a, b), (c, d))
        Uinv_det = a * d - b * c
        Uinv = ((Uinv_det * d, -Uinv_det * b), (-Uinv_det * c, Uinv_det * a))
        conj = matmul(matmul(U, M), Uinv)
        assert dominant_eigenvalue(conj) == base
        found += 1
