"""Arbitrary-precision binary floating point and complex arithmetic.

A BigFloat is ``sign * mantissa * 2**exponent`` with the mantissa normalised
to exactly ``prec`` bits (top bit set) and rounded to nearest, ties to even.
The four ring operations and sqrt are correctly rounded; the elementary
functions reduce their argument and run fixed-point series with 32 guard
bits, rounding once at the end, which keeps them well inside the documented
4-ulp envelope.  pi is computed by two independent methods (a Machin arctan
formula and the arithmetic-geometric mean) that are cross-checked on every
fresh precision.

Values are immutable and all functions are pure, so concurrent use is safe
and bit-identical to sequential use.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import isqrt
import re

from .errors import DomainError

MIN_PREC = 8
GUARD = 32

# ---------------------------------------------------------------------------
# BigFloat


class BigFloat:
    """One arbitrary-precision binary float.  Use the classmethods to build."""

    __slots__ = ("sign", "man", "exp", "prec")

    def __init__(self, sign, man, exp, prec):
        # raw constructor: inputs must already be normalised
        self.sign = sign
        self.man = man
        self.exp = exp
        self.prec = prec

    # -- construction -------------------------------------------------------

    @staticmethod
    def _make(sign, man, exp, prec):
        """Normalise (round to nearest-even at prec bits) and build."""
        if prec < MIN_PREC:
            raise DomainError(f"precision {prec} below minimum {MIN_PREC}")
        if man == 0 or sign == 0:
            return BigFloat(0, 0, 0, prec)
        bl = man.bit_length()
        shift = bl - prec
        if shift <= 0:
            return BigFloat(sign, man << (-shift), exp + shift, prec)
        low = man & ((1 << shift) - 1)
        man >>= shift
        exp += shift
        half = 1 << (shift - 1)
        if low > half or (low == half and (man & 1)):
            man += 1
            if man.bit_length() > prec:
                man >>= 1
                exp += 1
        return BigFloat(sign, man, exp, prec)

    @classmethod
    def from_int(cls, n, prec):
        if n == 0:
            return cls._make(0, 0, 0, prec)
        return cls._make(1 if n > 0 else -1, abs(n), 0, prec)

    @classmethod
    def from_fraction(cls, fr, prec):
        """Correctly rounded conversion of a Fraction (or int pair)."""
        num, den = fr.numerator, fr.denominator
        if num == 0:
            return cls._make(0, 0, 0, prec)
        sign = 1 if num > 0 else -1
        num = abs(num)
        k = den.bit_length() - num.bit_length() + prec + 16
        if k < 0:
            k = 0
        q, r = divmod(num << k, den)
        if r:
            q |= 1
        return cls._make(sign, q, -k, prec)

    @classmethod
    def zero(cls, prec):
        return cls._make(0, 0, 0, prec)

    @classmethod
    def one(cls, prec):
        return cls.from_int(1, prec)

    # -- predicates / views --------------------------------------------------

    def is_zero(self):
        return self.sign == 0

    def to_fraction(self):
        """Exact value as a Fraction."""
        if self.sign == 0:
            return Fraction(0)
        if self.exp >= 0:
            return Fraction(self.sign * (self.man << self.exp))
        return Fraction(self.sign * self.man, 1 << (-self.exp))

    def ulp_exponent(self):
        """Exponent k such that one unit in the last place is 2**k."""
        return self.exp

    def __repr__(self):
        return f"BigFloat({self.to_decimal(max(6, self.prec // 8))!r}, prec={self.prec})"

    # -- comparison (exact) --------------------------------------------------

    def _cmp(self, other):
        if self.sign != other.sign:
            return -1 if self.sign < other.sign else 1
        if self.sign == 0:
            return 0
        # same nonzero sign: compare magnitudes via top-bit positions first
        a_top = self.exp + self.man.bit_length()
        b_top = other.exp + other.man.bit_length()
        if a_top != b_top:
            mag = -1 if a_top < b_top else 1
        else:
            e = min(self.exp, other.exp)
            a = self.man << (self.exp - e)
            b = other.man << (other.exp - e)
            mag = (a > b) - (a < b)
        return mag * self.sign

    def __eq__(self, other):
        return isinstance(other, BigFloat) and self._cmp(other) == 0

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __hash__(self):
        return hash(self.to_fraction())

    # -- arithmetic -----------------------------------------------------------

    def _res_prec(self, other, prec):
        return prec if prec is not None else min(self.prec, other.prec)

    def add(self, other, prec=None):
        prec = self._res_prec(other, prec)
        if self.sign == 0:
            return BigFloat._make(other.sign, other.man, other.exp, prec)
        if other.sign == 0:
            return BigFloat._make(self.sign, self.man, self.exp, prec)
        x, y = self, other
        if x.exp < y.exp:
            x, y = y, x
        # clamp the alignment gap; the dropped tail enters as a sticky unit
        gap = x.exp - y.exp
        limit = max(x.prec, y.prec) + prec + 8
        if gap > limit:
            a = (x.sign * x.man) << limit
            b = y.sign  # |y| shrunk below one unit: keep its sign as sticky
            return BigFloat._make(1 if a + b > 0 else -1, abs(a + b), x.exp - limit, prec)
        a = (x.sign * x.man) << gap
        b = y.sign * y.man
        s = a + b
        if s == 0:
            return BigFloat._make(0, 0, 0, prec)
        return BigFloat._make(1 if s > 0 else -1, abs(s), y.exp, prec)

    def neg(self):
        return BigFloat(-self.sign, self.man, self.exp, self.prec)

    def sub(self, other, prec=None):
        return self.add(other.neg(), prec)

    def mul(self, other, prec=None):
        prec = self._res_prec(other, prec)
        if self.sign == 0 or other.sign == 0:
            return BigFloat._make(0, 0, 0, prec)
        return BigFloat._make(self.sign * other.sign, self.man * other.man,
                              self.exp + other.exp, prec)

    def div(self, other, prec=None):
        prec = self._res_prec(other, prec)
        if other.sign == 0:
            raise DomainError("division by zero")
        if self.sign == 0:
            return BigFloat._make(0, 0, 0, prec)
        k = other.man.bit_length() - self.man.bit_length() + prec + 16
        if k < 0:
            k = 0
        q, r = divmod(self.man << k, other.man)
        if r:
            q |= 1
        return BigFloat._make(self.sign * other.sign, q, self.exp - other.exp - k, prec)

    def sqrt(self, prec=None):
        prec = prec if prec is not None else self.prec
        if self.sign < 0:
            raise DomainError("sqrt of negative value")
        if self.sign == 0:
            return BigFloat._make(0, 0, 0, prec)
        k = 2 * (prec + 16) - self.man.bit_length()
        if k < 0:
            k = 0
        if (self.exp - k) & 1:
            k += 1
        m = self.man << k
        s = isqrt(m)
        if s * s != m:
            s |= 1
        return BigFloat._make(1, s, (self.exp - k) >> 1, prec)

    def scale2(self, k):
        """Exact multiplication by 2**k."""
        if self.sign == 0:
            return self
        return BigFloat(self.sign, self.man, self.exp + k, self.prec)

    def abs(self):
        return BigFloat(abs(self.sign), self.man, self.exp, self.prec)

    def round_to(self, prec):
        return BigFloat._make(self.sign, self.man, self.exp, prec)

    __add__ = add
    __sub__ = sub
    __mul__ = mul
    __truediv__ = div
    __neg__ = neg
    __abs__ = abs

    # -- integer parts ---------------------------------------------------------

    def floor(self):
        """Exact floor as a Python int."""
        if self.sign == 0:
            return 0
        if self.exp >= 0:
            return self.sign * (self.man << self.exp)
        q = self.man >> (-self.exp)
        if self.sign > 0:
            return q
        rem = self.man & ((1 << (-self.exp)) - 1)
        return -q - (1 if rem else 0)

    def frac(self, prec=None):
        """self - floor(self), in [0, 1); exact up to one rounding."""
        prec = prec if prec is not None else self.prec + 64
        f = self.floor()
        return self.sub(BigFloat.from_int(f, prec + 8), prec)

    # -- decimal serialisation ---------------------------------------------------

    def to_decimal(self, digits):
        """Decimal string ``[-]d.ddd...e(+|-)k`` with `digits` significant digits."""
        if digits < 1:
            raise DomainError("need at least one digit")
        if self.sign == 0:
            frac_part = "0" * (digits - 1)
            body = "0" if not frac_part else "0." + frac_part
            return body + "e+0"
        # estimate the decimal exponent, then correct it exactly
        top = self.exp + self.man.bit_length()
        k = (top * 30103) // 100000  # log10(2) ~ 0.30103, floor estimate
        for _ in range(4):
            n = self._scaled_decimal(digits - 1 - k)
            if n >= 10 ** digits:
                k += 1
            elif n < 10 ** (digits - 1):
                k -= 1
            else:
                break
        s = str(n)
        sign = "-" if self.sign < 0 else ""
        body = s[0] if digits == 1 else s[0] + "." + s[1:]
        return f"{sign}{body}e{k:+d}"

    def _scaled_decimal(self, s):
        """round(|self| * 10**s) as an int (half away from zero)."""
        num = self.man
        den = 1
        if self.exp >= 0:
            num <<= self.exp
        else:
            den <<= -self.exp
        if s >= 0:
            num *= 10 ** s
        else:
            den *= 10 ** (-s)
        q, r = divmod(num, den)
        if 2 * r >= den:
            q += 1
        return q

    _DEC_RE = re.compile(r"^([+-]?)(\d+)(?:\.(\d+))?(?:[eE]([+-]?\d+))?$")

    @classmethod
    def from_decimal(cls, text, prec):
        """Parse the grammar emitted by :meth:`to_decimal`."""
        m = cls._DEC_RE.match(text.strip())
        if not m:
            raise DomainError(f"bad decimal literal: {text!r}")
        sign_s, ipart, fpart, exp_s = m.groups()
        fpart = fpart or ""
        digits = int(ipart + fpart) if (ipart + fpart) else 0
        if digits == 0:
            return cls.zero(prec)
        exp10 = int(exp_s or 0) - len(fpart)
        fr = Fraction(digits) * Fraction(10) ** exp10
        if sign_s == "-":
            fr = -fr
        return cls.from_fraction(fr, prec)


def ulps_apart(x, y):
    """|x - y| measured in units of the last place of x (exact, may be huge)."""
    d = x.to_fraction() - y.to_fraction()
    if d == 0:
        return Fraction(0)
    ulp = Fraction(2) ** x.ulp_exponent() if x.sign != 0 else Fraction(2) ** y.ulp_exponent()
    return abs(d) / ulp


# ---------------------------------------------------------------------------
# fixed-point kernels (integers scaled by 2**wf)


def _fix(x, wf):
    """Truncate a BigFloat to an integer scaled by 2**wf."""
    if x.sign == 0:
        return 0
    e = x.exp + wf
    m = x.man << e if e >= 0 else x.man >> (-e)
    return m if x.sign > 0 else -m


def _unfix(n, wf, prec):
    if n == 0:
        return BigFloat.zero(prec)
    return BigFloat._make(1 if n > 0 else -1, abs(n), -wf, prec)


def _idivround(a, b):
    """round(a / b) for ints, b > 0, half away from zero."""
    q, r = divmod(a, b)
    if 2 * r >= b:
        q += 1
    return q


def _tdiv(a, b):
    """a / b truncated toward zero, b > 0; keeps series magnitudes decreasing."""
    q = abs(a) // b
    return q if a >= 0 else -q


def _atan_inv_fixed(m, F):
    """atan(1/m) * F for an integer m >= 2 (alternating Gregory series)."""
    total = 0
    k = 0
    mm = m * m
    power = m
    while True:
        term = F // ((2 * k + 1) * power)
        if term == 0:
            break
        total += -term if (k & 1) else term
        power *= mm
        k += 1
    return total


@lru_cache(maxsize=64)
def _pi_fixed(wf):
    """pi * 2**wf, Machin cross-checked against the Gauss AGM."""
    w = wf + 24
    F = 1 << w
    machin = 16 * _atan_inv_fixed(5, F) - 4 * _atan_inv_fixed(239, F)
    # Gauss-Legendre AGM, wholly independent of the arctan route
    a, b = F, isqrt(F * F // 2)
    t, p = F // 4, 1
    while a - b > 2:
        an = (a + b) >> 1
        b = isqrt(a * b)
        t -= p * ((a - an) ** 2) // F
        a = an
        p <<= 1
    agm = ((a + b) ** 2) // (4 * t)
    if abs(machin - agm) > (1 << 20):
        raise ArithmeticError("internal pi cross-check failed")  # pragma: no cover
    return _idivround(machin, 1 << 24) if wf != w else machin


@lru_cache(maxsize=64)
def _ln2_fixed(wf):
    """ln 2 * 2**wf via 2*atanh(1/3)."""
    F = 1 << wf
    total = 0
    k = 0
    power = 3
    while True:
        term = (2 * F) // ((2 * k + 1) * power)
        if term == 0:
            break
        total += term
        power *= 9
        k += 1
    return total


def _exp_series_fixed(R, F):
    """exp(R/F) * F for |R| <= 0.4 F."""
    total = F
    term = F
    k = 1
    while term:
        term = _tdiv(_tdiv(term * R, F), k)
        total += term
        k += 1
    return total


def _sincos_fixed(R, F):
    """(sin, cos) of R/F scaled by F, for |R| <= pi*F (plus slack)."""
    R2 = R * R // F
    s = R
    t = R
    k = 1
    while t:
        t = -_tdiv(_tdiv(t * R2, F), (2 * k) * (2 * k + 1))
        s += t
        k += 1
    c = F
    t = F
    k = 1
    while t:
        t = -_tdiv(_tdiv(t * R2, F), (2 * k - 1) * (2 * k))
        c += t
        k += 1
    return s, c


def _atanh_like_fixed(Z, F, alternating):
    """sum z^(2k+1)/(2k+1) with optional alternating signs, scaled by F."""
    Z2 = Z * Z // F
    total = Z
    term = Z
    k = 1
    while True:
        term = _tdiv(term * Z2, F)
        if term == 0:
            break
        piece = _tdiv(term, 2 * k + 1)
        total += -piece if (alternating and (k & 1)) else piece
        k += 1
    return total


# ---------------------------------------------------------------------------
# elementary functions


def pi(prec):
    """pi at `prec` bits."""
    wf = prec + GUARD
    return _unfix(_pi_fixed(wf), wf, prec)


def exp(x, prec=None):
    prec = prec if prec is not None else x.prec
    if x.sign == 0:
        return BigFloat.one(prec)
    wf = prec + GUARD
    X = _fix(x, wf)
    L = _ln2_fixed(wf)
    n = _idivround(X, L) if X >= 0 else -_idivround(-X, L)
    R = X - n * L
    E = _exp_series_fixed(R, 1 << wf)
    return BigFloat._make(1, E, n - wf, prec)


def log(x, prec=None):
    prec = prec if prec is not None else x.prec
    if x.sign <= 0:
        raise DomainError("log requires a positive argument")
    wf = prec + GUARD
    F = 1 << wf
    # write x = m * 2**t with m in [3/4, 3/2)
    bl = x.man.bit_length()
    t = x.exp + bl
    M = (x.man << wf) >> bl
    if M < 3 * F // 4:
        M <<= 1
        t -= 1
    Z = (M - F) * F // (M + F)
    body = 2 * _atanh_like_fixed(Z, F, alternating=False)
    total = body + t * _ln2_fixed(wf)
    return _unfix(total, wf, prec)


def _trig_fixed(x, prec):
    """Reduce x mod 2*pi and return (sinR, cosR, wf)."""
    extra = max(0, x.exp + (x.man.bit_length() if x.sign else 0)) + 8
    wf = prec + GUARD + extra
    X = _fix(x, wf)
    TP = 2 * _pi_fixed(wf)
    n = _idivround(X, TP) if X >= 0 else -_idivround(-X, TP)
    R = X - n * TP
    s, c = _sincos_fixed(R, 1 << wf)
    return s, c, wf


def cos(x, prec=None):
    prec = prec if prec is not None else x.prec
    if x.sign == 0:
        return BigFloat.one(prec)
    _, c, wf = _trig_fixed(x, prec)
    return _unfix(c, wf, prec)


def sin(x, prec=None):
    prec = prec if prec is not None else x.prec
    if x.sign == 0:
        return BigFloat.zero(prec)
    s, _, wf = _trig_fixed(x, prec)
    return _unfix(s, wf, prec)


def atan(x, prec=None):
    prec = prec if prec is not None else x.prec
    if x.sign == 0:
        return BigFloat.zero(prec)
    wf = prec + GUARD
    F = 1 << wf
    X = _fix(x, wf)
    sign = 1 if X > 0 else -1
    X = abs(X)
    inverted = X > F
    if inverted:
        X = F * F // X
    # halve the argument until the Gregory series converges briskly
    halvings = 0
    while X > F // 8:
        X = X * F // (F + isqrt((F + X * X // F) * F))
        halvings += 1
    body = _atanh_like_fixed(X, F, alternating=True) << halvings
    if inverted:
        body = _pi_fixed(wf) // 2 - body
    return _unfix(sign * body, wf, prec)


# ---------------------------------------------------------------------------
# BigComplex


class BigComplex:
    """A pair of BigFloats sharing one precision."""

    __slots__ = ("re", "im")

    def __init__(self, re, im):
        prec = min(re.prec, im.prec)
        self.re = re.round_to(prec)
        self.im = im.round_to(prec)

    @classmethod
    def from_ints(cls, a, b, prec):
        return cls(BigFloat.from_int(a, prec), BigFloat.from_int(b, prec))

    @property
    def prec(self):
        return self.re.prec

    def __repr__(self):
        d = max(6, self.prec // 8)
        return f"BigComplex({self.re.to_decimal(d)}, {self.im.to_decimal(d)})"

    def __eq__(self, other):
        return isinstance(other, BigComplex) and self.re == other.re and self.im == other.im

    def add(self, other):
        return BigComplex(self.re + other.re, self.im + other.im)

    def sub(self, other):
        return BigComplex(self.re - other.re, self.im - other.im)

    def mul(self, other):
        a, b, c, d = self.re, self.im, other.re, other.im
        return BigComplex(a * c - b * d, a * d + b * c)

    def div(self, other):
        a, b, c, d = self.re, self.im, other.re, other.im
        den = c * c + d * d
        if den.is_zero():
            raise DomainError("complex division by zero")
        return BigComplex((a * c + b * d) / den, (b * c - a * d) / den)

    def neg(self):
        return BigComplex(-self.re, -self.im)

    def conj(self):
        return BigComplex(self.re, -self.im)

    def abs(self):
        return (self.re * self.re + self.im * self.im).sqrt()

    def pow_int(self, n):
        if n < 0:
            raise DomainError("negative complex power not supported here")
        result = BigComplex.from_ints(1, 0, self.prec)
        base = self
        while n:
            if n & 1:
                result = result.mul(base)
            base = base.mul(base)
            n >>= 1
        return result

    __add__ = add
    __sub__ = sub
    __mul__ = mul
    __truediv__ = div
    __neg__ = neg

    def to_decimal(self, digits):
        return self.re.to_decimal(digits), self.im.to_decimal(digits)


def cexp(z):
    """exp of a BigComplex."""
    r = exp(z.re)
    return BigComplex(r * cos(z.im, z.prec), r * sin(z.im, z.prec))


def exp_2pi_i(alpha, scale, prec):
    """scale * (cos 2*pi*alpha + i sin 2*pi*alpha).

    alpha is reduced modulo 1 first (the value only depends on its fractional
    part); the angle is then formed with 64 guard bits.
    """
    if scale.sign <= 0:
        raise DomainError("scale must be positive")
    wf = prec + 64
    af = alpha.frac(prec + 64)
    A = _fix(af, wf)
    PI = _pi_fixed(wf)
    TH = (2 * PI * A) >> wf
    if TH > PI:  # keep the series argument inside [-pi, pi]
        TH -= 2 * PI
    s, c = _sincos_fixed(TH, 1 << wf)
    S = _fix(scale, wf)
    return BigComplex(_unfix(S * c >> wf, wf, prec), _unfix(S * s >> wf, wf, prec))


def digits_to_bits(digits):
    """Working precision in bits for a decimal digit request."""
    return (digits * 3322) // 1000 + 16
