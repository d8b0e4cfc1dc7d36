"""Exact quadratic-surd arithmetic and the invariants built from it.

A QuadraticSurd is (a + b*sqrt(d))/c with integer a, b, c > 0 and d
squarefree (b = d = 0 for rationals).  Everything downstream is exact:
continued fractions with closed-form periods, dimension-group positivity,
tail-equivalence of expansions with verified integer witness matrices, and
dominant eigenvalues of hyperbolic matrices as surds (their logs are the
only place floating point enters, through bignum).
"""

from __future__ import annotations

import re
from collections import namedtuple
from fractions import Fraction
from math import isqrt

from . import bignum
from .bignum import BigFloat
from .errors import ContractError, DomainError, ResourceError


def _squarefree_split(d):
    """d = s^2 * d0 with d0 squarefree; returns (s, d0).

    Small square factors are peeled by trial division.  A large leftover can
    still be t^2 * c with t built from big primes (continued-fraction period
    matrices produce such radicands); its small squarefree core c is then the
    least divisor whose cofactor is a perfect square, found directly.
    """
    s = 1
    k = 2
    while k * k <= d and k <= 3163:
        while d % (k * k) == 0:
            d //= k * k
            s *= k
        k += 1
    if d > 10 ** 7:
        for c in range(1, 100001):
            if d % c == 0:
                m = d // c
                r = isqrt(m)
                if r * r == m:
                    return s * r, c
        raise ResourceError("cannot certify the squarefree core of the radicand")
    return s, d


class QuadraticSurd:
    """(a + b*sqrt(d))/c in canonical form; immutable."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        if c == 0:
            raise DomainError("zero denominator")
        if d < 0:
            raise DomainError("negative radicand")
        if b == 0 or d == 0:
            b, d = 0, 0
        else:
            s, d0 = _squarefree_split(d)
            b, d = b * s, d0
            if d == 1:
                a, b, d = a + b, 0, 0
        if c < 0:
            a, b, c = -a, -b, -c
        g = 0
        for v in (a, b, c):
            g = _gcd(g, abs(v))
        if g > 1:
            a, b, c = a // g, b // g, c // g
        self.a, self.b, self.c, self.d = a, b, c, d

    # -- constructors -----------------------------------------------------------

    @classmethod
    def from_fraction(cls, fr):
        fr = Fraction(fr)
        return cls(fr.numerator, 0, fr.denominator, 0)

    @classmethod
    def sqrt_of(cls, D):
        if D < 0:
            raise DomainError("negative radicand")
        return cls(0, 1, 1, D)

    # -- views --------------------------------------------------------------------

    def is_rational(self):
        return self.b == 0

    def to_fraction(self):
        if not self.is_rational():
            raise DomainError("not rational")
        return Fraction(self.a, self.c)

    def conjugate(self):
        return QuadraticSurd(self.a, -self.b, self.c, self.d)

    def to_bigfloat(self, prec):
        w = prec + 16
        num = BigFloat.from_int(self.a, w)
        if self.b:
            num = num + BigFloat.from_int(self.b, w) * BigFloat.from_int(self.d, w).sqrt()
        return (num / BigFloat.from_int(self.c, w)).round_to(prec)

    def __repr__(self):
        return self.to_string()

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def __eq__(self, other):
        return (isinstance(other, QuadraticSurd) and (self.a, self.b, self.c, self.d)
                == (other.a, other.b, other.c, other.d))

    # -- exact arithmetic ------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, QuadraticSurd):
            if self.d and other.d and self.d != other.d:
                raise DomainError("surds from different quadratic fields")
            return other
        return QuadraticSurd.from_fraction(other)

    def __add__(self, other):
        o = self._coerce(other)
        d = self.d or o.d
        return QuadraticSurd(self.a * o.c + o.a * self.c,
                             self.b * o.c + o.b * self.c,
                             self.c * o.c, d)

    def __neg__(self):
        return QuadraticSurd(-self.a, -self.b, self.c, self.d)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        o = self._coerce(other)
        d = self.d or o.d
        return QuadraticSurd(self.a * o.a + self.b * o.b * d,
                             self.a * o.b + self.b * o.a,
                             self.c * o.c, d)

    def inverse(self):
        if self.a == 0 and self.b == 0:
            raise DomainError("inverse of zero")
        n = self.a * self.a - self.b * self.b * self.d
        # (a + b sqrt d)^-1 = (a - b sqrt d)/n
        return QuadraticSurd(self.a * self.c, -self.b * self.c, n, self.d)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def sign(self):
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        mag = (a * a > b * b * self.d) - (a * a < b * b * self.d)
        return mag if a > 0 else -mag

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def floor(self):
        if self.b == 0:
            return self.a // self.c
        s = isqrt(self.b * self.b * self.d)
        u = s if self.b > 0 else -s - 1
        return (self.a + u) // self.c

    # -- text form -----------------------------------------------------------------------

    def to_string(self):
        if self.b == 0:
            return str(self.a) if self.c == 1 else f"{self.a}/{self.c}"
        if self.b == 1:
            root = f"sqrt({self.d})"
        elif self.b == -1:
            root = f"-sqrt({self.d})"
        else:
            root = f"{self.b}*sqrt({self.d})"
        if self.a == 0:
            body = root
        else:
            joiner = "+" if not root.startswith("-") else ""
            body = f"{self.a}{joiner}{root}"
        if self.c == 1:
            return body
        return f"({body})/{self.c}"

    _BODY_RE = re.compile(
        r"^(?:(?P<a>[+-]?\d+)(?=[+-]))?(?P<sign>[+-])?"
        r"(?:(?P<b>[1-9]\d*)\*)?sqrt\((?P<d>\d+)\)$")

    @classmethod
    def from_string(cls, text):
        t = text.strip().replace(" ", "")
        m = re.match(r"^\((?P<body>.+)\)/(?P<c>-?\d+)$", t)
        if m:
            body, c = m.group("body"), int(m.group("c"))
        else:
            m = re.match(r"^(?P<body>[^/]+)/(?P<c>-?\d+)$", t)
            if m:
                body, c = m.group("body"), int(m.group("c"))
            else:
                body, c = t, 1
        if "sqrt" not in body:
            try:
                return cls(int(body), 0, c, 0)
            except ValueError:
                raise DomainError(f"cannot parse surd literal {text!r}") from None
        mb = cls._BODY_RE.match(body)
        if not mb:
            raise DomainError(f"cannot parse surd literal {text!r}")
        a = int(mb.group("a") or 0)
        b = int(mb.group("b") or 1)
        if mb.group("sign") == "-":
            b = -b
        return cls(a, b, c, int(mb.group("d")))


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


# ---------------------------------------------------------------------------
# continued fractions


ContinuedFraction = namedtuple("ContinuedFraction", ["preperiod", "period"])


def cf_to_string(cf):
    body = f"[{cf.preperiod[0]}"
    rest = ", ".join(map(str, cf.preperiod[1:]))
    if rest:
        body += "; " + rest
    elif cf.period:
        body += ";"
    if cf.period:
        sep = ", " if rest else " "
        body += f"{sep}(period: {', '.join(map(str, cf.period))})"
    return body + "]"


def cf_expand(theta, max_terms=256):
    """Exact partial quotients; periodic tails detected by state repetition."""
    if max_terms < 1:
        raise DomainError("max_terms must be at least 1")
    if theta.is_rational():
        fr = theta.to_fraction()
        out = []
        num, den = fr.numerator, fr.denominator
        while True:
            q, r = divmod(num, den)
            out.append(q)
            if r == 0:
                break
            num, den = den, r
            if len(out) > max_terms:
                raise ResourceError("expansion longer than max_terms")
        return ContinuedFraction(tuple(out), ())
    # normalise to (P + sqrt(N))/Q with Q | N - P^2
    if theta.b > 0:
        P, Q, N = theta.a, theta.c, theta.b * theta.b * theta.d
    else:
        P, Q, N = -theta.a, -theta.c, theta.b * theta.b * theta.d
    if (N - P * P) % Q:
        P, N, Q = P * abs(Q), N * Q * Q, Q * abs(Q)
    quotients = []
    seen = {}
    while True:
        if (P, Q) in seen:
            i = seen[(P, Q)]
            if i == 0:
                # purely periodic: keep a_0 visible in the preperiod
                return ContinuedFraction((quotients[0],),
                                         tuple(quotients[1:] + quotients[:1]))
            return ContinuedFraction(tuple(quotients[:i]), tuple(quotients[i:]))
        seen[(P, Q)] = len(quotients)
        ak = QuadraticSurd(P, 1, Q, N).floor()
        quotients.append(ak)
        P1 = ak * Q - P
        Q1 = (N - P1 * P1) // Q
        P, Q = P1, Q1
        if len(quotients) > max_terms:
            raise ResourceError("period not found within max_terms")


def cf_quotients(cf, n):
    """First n partial quotients, unrolling the period; error if exhausted."""
    out = list(cf.preperiod[:n])
    if len(out) < n:
        if not cf.period:
            raise DomainError("finite expansion shorter than requested")
        i = 0
        while len(out) < n:
            out.append(cf.period[i % len(cf.period)])
            i += 1
    return out


def cf_convergents(cf, n):
    """First n convergents as (p, q) integer pairs."""
    ps, qs = [], []
    p0, p1 = 1, 0  # p_{-1}, p_{-2} style seeds
    q0, q1 = 0, 1
    for a in cf_quotients(cf, n):
        p0, p1 = a * p0 + p1, p0
        q0, q1 = a * q0 + q1, q0
        ps.append(p0)
        qs.append(q0)
    return list(zip(ps, qs))


def surd_from_cf(cf):
    """Reconstruct the exact value of a continued fraction."""
    if not cf.period:
        x = QuadraticSurd.from_fraction(Fraction(cf.preperiod[-1]))
        for a in reversed(cf.preperiod[:-1]):
            x = QuadraticSurd.from_fraction(Fraction(a)) + x.inverse()
        return x
    p0, p1 = 1, 0
    q0, q1 = 0, 1
    for a in cf.period:
        p0, p1 = a * p0 + p1, p0
        q0, q1 = a * q0 + q1, q0
    # y = (p0 y + p1) / (q0 y + q1), take the positive root
    disc = (q1 - p0) * (q1 - p0) + 4 * q0 * p1
    y = QuadraticSurd(p0 - q1, 1, 2 * q0, disc)
    x = y
    for a in reversed(cf.preperiod):
        x = QuadraticSurd.from_fraction(Fraction(a)) + x.inverse()
    return x


# ---------------------------------------------------------------------------
# Bratteli data


class BratteliData:
    """Sequence of 2x2 partial multiplicity matrices [[a_k, 1], [1, 0]]."""

    __slots__ = ("matrices",)

    def __init__(self, matrices):
        self.matrices = tuple(tuple(tuple(r) for r in m) for m in matrices)

    def is_stationary(self):
        return len(set(self.matrices)) <= 1

    def __len__(self):
        return len(self.matrices)

    def __repr__(self):
        return f"BratteliData({list(self.matrices)!r})"


def effros_shen(cf, depth):
    """Partial multiplicity matrices from quotients a_1..a_depth."""
    if depth < 1:
        raise DomainError("depth must be positive")
    try:
        qs = cf_quotients(cf, depth + 1)[1:]
    except DomainError:
        raise DomainError("finite expansion too short for the requested depth")
    return BratteliData([((a, 1), (1, 0)) for a in qs])


# ---------------------------------------------------------------------------
# dimension-group positivity and tail equivalence


def is_positive(m, n, theta):
    """Exact sign test: is m + n*theta > 0."""
    value = QuadraticSurd.from_fraction(m) + theta * QuadraticSurd.from_fraction(n)
    return value.sign() > 0


def _mobius(mat, x):
    (a, b), (c, d) = mat
    num = x * QuadraticSurd.from_fraction(a) + QuadraticSurd.from_fraction(b)
    den = x * QuadraticSurd.from_fraction(c) + QuadraticSurd.from_fraction(d)
    return num / den


def _det2(mat):
    (a, b), (c, d) = mat
    return a * d - b * c


def _matmul2(m1, m2):
    (a, b), (c, d) = m1
    (e, f), (g, h) = m2
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def _inv2_unimodular(mat):
    (a, b), (c, d) = mat
    det = a * d - b * c
    if det not in (1, -1):
        raise DomainError("matrix is not unimodular")
    return ((det * d, -det * b), (-det * c, det * a))


MoritaResult = namedtuple("MoritaResult", ["equivalent", "witness", "witness_det", "sl2_witness"])


def _states_with_matrices(theta):
    """(complete quotient, matrix M with theta = M . quotient) pairs.

    Walks until the state cycle closes, then once more around the cycle so
    that matched indices of both parities are available (the parity decides
    the witness determinant).
    """
    out = []
    pm1, pm2 = 1, 0  # convergent seeds: the initial matrix is the identity
    qm1, qm2 = 0, 1
    x = theta
    seen = {}

    def step(x):
        nonlocal pm1, pm2, qm1, qm2
        out.append((x, ((pm1, pm2), (qm1, qm2))))
        a = x.floor()
        pm1, pm2 = a * pm1 + pm2, pm1
        qm1, qm2 = a * qm1 + qm2, qm1
        return (x - QuadraticSurd.from_fraction(a)).inverse()

    while True:
        key = (x.a, x.b, x.c, x.d)
        if key in seen:
            extra = len(out) - seen[key]
            for _ in range(extra):
                x = step(x)
            return out
        seen[key] = len(out)
        x = step(x)
        if len(out) > 4096:
            raise ResourceError("state walk did not close")


def morita_equivalent(theta1, theta2):
    """Tail equivalence of expansions, with verified GL2(Z) witness.

    Returns MoritaResult(equivalent, witness, witness_det, sl2_witness); the
    SL2 witness is populated when one exists in the scanned window, which
    settles the determinant-restricted variant as well.
    """
    r1, r2 = theta1.is_rational(), theta2.is_rational()
    if r1 != r2:
        return MoritaResult(False, None, None, None)
    if r1:
        w = _rational_witness(theta1, theta2)
        sl2 = w if _det2(w) == 1 else _rational_witness(theta1, theta2, force_det=1)
        return MoritaResult(True, w, _det2(w), sl2)
    if theta1.d != theta2.d:
        return MoritaResult(False, None, None, None)
    states1 = _states_with_matrices(theta1)
    states2 = _states_with_matrices(theta2)
    index2 = {}
    for j, (s, M) in enumerate(states2):
        index2.setdefault((s.a, s.b, s.c, s.d), []).append((j, M))
    witness = None
    witness_det = None
    sl2_witness = None
    for i, (s, Mi) in enumerate(states1):
        key = (s.a, s.b, s.c, s.d)
        if key not in index2:
            continue
        for j, Mj in index2[key]:
            W = _matmul2(Mj, _inv2_unimodular(Mi))
            if _mobius(W, theta1) != theta2:
                raise ContractError("witness failed exact verification")
            if witness is None:
                witness = W
                witness_det = _det2(W)
            if _det2(W) == 1 and sl2_witness is None:
                sl2_witness = W
        if witness is not None and sl2_witness is not None:
            break
    if witness is None:
        return MoritaResult(False, None, None, None)
    return MoritaResult(True, witness, witness_det, sl2_witness)


def _rational_witness(theta1, theta2, force_det=None):
    """GL2(Z) matrix sending theta1 to theta2, built from Euclid."""
    def to_infty(fr):
        # matrix with first column (p, q) sends infinity to p/q
        p, q = fr.numerator, fr.denominator
        g, u, v = _xgcd(p, q)
        assert g == 1
        # p*(-?) choose (b, d) with p d - q b = 1
        return ((p, -v), (q, u))

    M1 = to_infty(theta1.to_fraction())
    M2 = to_infty(theta2.to_fraction())
    W = _matmul2(M2, _inv2_unimodular(M1))
    if force_det is not None and _det2(W) != force_det:
        flip = ((1, 0), (0, -1))  # det -1, fixes infinity; conjugate through M2
        M2b = _matmul2(M2, flip)
        W = _matmul2(M2b, _inv2_unimodular(M1))
    fr = _mobius_fraction(W, theta1.to_fraction())
    if fr != theta2.to_fraction():
        raise ContractError("rational witness failed verification")
    return W


def _mobius_fraction(mat, fr):
    (a, b), (c, d) = mat
    num = a * fr + b
    den = c * fr + d
    if den == 0:
        raise DomainError("Moebius pole")
    return num / den


def _xgcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


# ---------------------------------------------------------------------------
# Connes invariant


def dominant_eigenvalue(mat):
    """The eigenvalue (|tr| + sqrt(tr^2 - 4 det))/2 of a hyperbolic matrix, exactly."""
    (a, b), (c, d) = mat
    det = a * d - b * c
    if det not in (1, -1):
        raise DomainError("matrix must have determinant +-1")
    t = a + d
    if abs(t) <= 2:
        raise DomainError("matrix is not hyperbolic (|trace| <= 2)")
    return QuadraticSurd(abs(t), 1, 2, t * t - 4 * det)


def connes_invariant(mat, prec):
    """log of the dominant eigenvalue at `prec` bits."""
    lam = dominant_eigenvalue(mat)
    return bignum.log(lam.to_bigfloat(prec + 16), prec)
