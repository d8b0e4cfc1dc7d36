"""Independent oracles used to freeze expected values.

Everything here is deliberately implemented apart from the package under
test: base-10 fixed point instead of base-2, the stdlib decimal module,
Newton iteration, exhaustive search.  Tests compare package output against
these, never the other way round.
"""

from decimal import Decimal, localcontext
from fractions import Fraction
from math import isqrt


def newton_sqrt_digits(n, digits):
    """Decimal digit string of sqrt(n) via Newton iteration on x^2 - n."""
    scale = 10 ** (2 * digits + 10)
    target = n * scale * scale
    x = isqrt(target)  # seed; the loop below is the actual iteration
    while True:
        nx = (x + target // x) // 2
        if abs(nx - x) <= 1:
            break
        x = nx
    return str(x)[: digits + 1]


def machin_pi_digits(digits):
    """pi digits from 48*atan(1/18) + 32*atan(1/57) - 20*atan(1/239).

    A different Machin-type identity from anything the package uses.
    """
    scale = 10 ** (digits + 15)

    def atan_inv(m):
        total = 0
        power = scale // m
        mm = m * m
        k = 0
        while power:
            term = power // (2 * k + 1)
            total += -term if (k & 1) else term
            power //= mm
            k += 1
        return total

    value = 48 * atan_inv(18) + 32 * atan_inv(57) - 20 * atan_inv(239)
    return str(value)[: digits + 1]


def dec_context(digits):
    ctx = localcontext()
    c = ctx.__enter__()
    c.prec = digits
    return ctx, c


def dec_pi(digits):
    with localcontext() as c:
        c.prec = digits + 10
        return +Decimal("3." + machin_pi_digits(digits + 8)[1:])


def dec_cos(x, digits):
    """Taylor cosine of a Decimal, argument already reduced to [-4, 4]."""
    with localcontext() as c:
        c.prec = digits + 10
        total = Decimal(1)
        term = Decimal(1)
        k = 0
        while term:
            k += 2
            term *= -x * x / (k * (k - 1))
            if abs(term) < Decimal(10) ** (-(digits + 8)):
                total += term
                break
            total += term
        return +total


def dec_sin(x, digits):
    with localcontext() as c:
        c.prec = digits + 10
        total = Decimal(x)
        term = Decimal(x)
        k = 1
        while term:
            k += 2
            term *= -x * x / (k * (k - 1))
            if abs(term) < Decimal(10) ** (-(digits + 8)):
                total += term
                break
            total += term
        return +total


def dec_reduce_mod(x, modulus):
    n = (x / modulus).to_integral_value(rounding="ROUND_FLOOR")
    return x - n * modulus


def largest_real_root(coeffs, tol):
    """Largest real root of a monic integer polynomial by exact bisection.

    `coeffs` are c_0..c_m with c_m = 1.  Assumes a real root exists beyond
    any other real root, which holds for the companion matrices under test.
    Returns a Fraction within `tol` of the root.
    """
    m = len(coeffs) - 1

    def val(x):
        acc = Fraction(0)
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    hi = Fraction(1 + max(abs(c) for c in coeffs[:-1]))
    lo = Fraction(0)
    assert val(hi) > 0
    # walk down to bracket the top root
    step = hi / 64
    x = hi
    while x > lo and val(x) > 0:
        x -= step
    lo = x
    hi = x + step
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if val(mid) > 0:
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2


def shortest_vector_norm(basis, radius):
    """Exhaustive shortest nonzero vector search in the integer span.

    Only for rank-2 bases; scans coefficient box [-radius, radius]^2.
    """
    best = None
    (a1, a2), (b1, b2) = basis
    for s in range(-radius, radius + 1):
        for t in range(-radius, radius + 1):
            if s == 0 and t == 0:
                continue
            v1 = s * a1 + t * b1
            v2 = s * a2 + t * b2
            n = v1 * v1 + v2 * v2
            if best is None or n < best:
                best = n
    return best
