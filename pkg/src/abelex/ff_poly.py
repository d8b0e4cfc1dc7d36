"""Finite fields GF(p^e) and the polynomial ring over them.

Field elements travel as integer codes 0..q-1 (the coefficient vector over
Z/p read as a base-p integer), so they hash, sort and serialise trivially.
Small fields (q <= 1024) precompute full operation tables; larger fields
compute on coefficient tuples.  Extension fields always use the canonical
modulus: the monic irreducible of the right degree whose coefficient vector
encodes to the least integer, so every downstream result is reproducible.

Polynomials are sparse maps degree -> coefficient code.  The zero polynomial
has degree -infinity (a distinguished value, never -1).
"""

from __future__ import annotations

import random
import re
from functools import lru_cache

from .errors import DomainError

NEG_INF = float("-inf")

_TABLE_LIMIT = 1024


# ---------------------------------------------------------------------------
# dense helpers over Z/p (used to bootstrap moduli before FieldSpec exists)


def _zp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _zp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = (out[i + j] + ai * bj) % p
    return _zp_trim(out)


def _zp_divmod(a, b, p):
    a = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        c = (a[-1] * inv_lead) % p
        k = len(a) - len(b)
        q[k] = c
        for i, bi in enumerate(b):
            a[i + k] = (a[i + k] - c * bi) % p
        _zp_trim(a)
        if not a:
            break
    return _zp_trim(q), a


def _zp_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _zp_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [(c * inv) % p for c in a]
    return a


def _zp_pow_mod(base, exp, mod, p):
    result = [1]
    base = _zp_divmod(base, mod, p)[1]
    while exp:
        if exp & 1:
            result = _zp_divmod(_zp_mul(result, base, p), mod, p)[1]
        base = _zp_divmod(_zp_mul(base, base, p), mod, p)[1]
        exp >>= 1
    return result


def _zp_sub(a, b, p):
    n = max(len(a), len(b))
    return _zp_trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                     for i in range(n)])


def _zp_irreducible(f, p):
    n = len(f) - 1
    if n < 1:
        return False
    x = [0, 1]
    if _zp_sub(_zp_pow_mod(x, p ** n, f, p), _zp_divmod(x, f, p)[1], p):
        return False
    for ell in _prime_divisors(n):
        h = _zp_pow_mod(x, p ** (n // ell), f, p)
        diff = _zp_sub(h, _zp_divmod(x, f, p)[1], p)
        if len(_zp_gcd(diff, f, p)) != 1:
            return False
    return True


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@lru_cache(maxsize=None)
def _canonical_modulus(p, e):
    """Least monic irreducible of degree e over Z/p, by base-p encoding."""
    if e == 1:
        return (0, 1)
    for code in range(p ** e):
        coeffs = []
        c = code
        for _ in range(e):
            coeffs.append(c % p)
            c //= p
        f = coeffs + [1]
        if _zp_irreducible(f, p):
            return tuple(f)
    raise AssertionError("unreachable: irreducibles exist in every degree")


# ---------------------------------------------------------------------------
# FieldSpec


class FieldSpec:
    """GF(p^e) with a fixed modulus; construct via :meth:`get`."""

    __slots__ = ("p", "e", "q", "modulus", "_add", "_mul", "_inv", "_red_rows")

    def __init__(self, p, e, modulus=None):
        if not _is_prime(p):
            raise DomainError(f"{p} is not prime")
        if e < 1:
            raise DomainError("extension degree must be positive")
        self.p = p
        self.e = e
        self.q = p ** e
        if modulus is None:
            modulus = _canonical_modulus(p, e)
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != e + 1 or modulus[-1] != 1:
                raise DomainError("modulus must be monic of degree e")
            if e > 1 and not _zp_irreducible(list(modulus), p):
                raise DomainError("modulus is reducible")
        self.modulus = modulus
        # rows: x^(e+j) reduced mod modulus, as coefficient tuples
        rows = []
        if e > 1:
            base = [(-c) % p for c in modulus[:-1]]
            cur = base[:]
            rows.append(tuple(cur))
            for _ in range(e - 2):
                cur = [0] + cur
                top = cur.pop()
                cur = [(cur[i] + top * base[i]) % p for i in range(e)]
                rows.append(tuple(cur))
        self._red_rows = rows
        if self.q <= _TABLE_LIMIT:
            self._build_tables()
        else:
            self._add = self._mul = self._inv = None

    @staticmethod
    @lru_cache(maxsize=None)
    def get(p, e=1):
        return FieldSpec(p, e)

    def _build_tables(self):
        q = self.q
        dec = [self.decode(c) for c in range(q)]
        self._add = [[self.encode(tuple((a[i] + b[i]) % self.p for i in range(self.e)))
                      for b in dec] for a in dec]
        self._mul = [[self._mul_tuples(a, b) for b in dec] for a in dec]
        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self._mul[a][b] == 1:
                    inv[a] = b
                    break
        self._inv = inv

    # -- encoding -------------------------------------------------------------

    def decode(self, code):
        out = []
        for _ in range(self.e):
            out.append(code % self.p)
            code //= self.p
        return tuple(out)

    def encode(self, coeffs):
        code = 0
        for c in reversed(coeffs):
            code = code * self.p + (c % self.p)
        return code

    def _mul_tuples(self, a, b):
        e, p = self.e, self.p
        out = [0] * (2 * e - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = (out[i + j] + ai * bj) % p
        for j in range(len(out) - 1, e - 1, -1):
            top = out[j]
            if top:
                row = self._red_rows[j - e]
                for i in range(e):
                    out[i] = (out[i] + top * row[i]) % p
            out.pop()
        return self.encode(tuple(out))

    # -- arithmetic on codes -----------------------------------------------------

    def add(self, a, b):
        if self._add is not None:
            return self._add[a][b]
        ta, tb = self.decode(a), self.decode(b)
        return self.encode(tuple((x + y) % self.p for x, y in zip(ta, tb)))

    def neg(self, a):
        ta = self.decode(a)
        return self.encode(tuple((-x) % self.p for x in ta))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self._mul is not None:
            return self._mul[a][b]
        return self._mul_tuples(self.decode(a), self.decode(b))

    def inv(self, a):
        if a == 0:
            raise DomainError("inverse of zero")
        if self._inv is not None:
            return self._inv[a]
        return self.pow_(a, self.q - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow_(self, a, k):
        if k < 0:
            return self.pow_(self.inv(a), -k)
        result = 1
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def frob(self, a, k=1):
        """a ** (p**k), the k-fold Frobenius."""
        if a == 0 or self.q == 2:
            return a
        return self.pow_(a, pow(self.p, k, self.q - 1))

    def elements(self):
        return range(self.q)

    def name(self):
        return f"GF({self.p})" if self.e == 1 else f"GF({self.p}^{self.e})"

    def __eq__(self, other):
        return (isinstance(other, FieldSpec) and self.p == other.p
                and self.e == other.e and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        return self.name()


class FqElement:
    """Convenience wrapper pairing a code with its field."""

    __slots__ = ("field", "code")

    def __init__(self, field, code):
        self.field = field
        self.code = code % field.q

    @property
    def coeffs(self):
        return self.field.decode(self.code)

    def _check(self, other):
        if self.field != other.field:
            raise DomainError("field mismatch")

    def __add__(self, other):
        self._check(other)
        return FqElement(self.field, self.field.add(self.code, other.code))

    def __sub__(self, other):
        self._check(other)
        return FqElement(self.field, self.field.sub(self.code, other.code))

    def __mul__(self, other):
        self._check(other)
        return FqElement(self.field, self.field.mul(self.code, other.code))

    def __truediv__(self, other):
        self._check(other)
        return FqElement(self.field, self.field.div(self.code, other.code))

    def __pow__(self, k):
        return FqElement(self.field, self.field.pow_(self.code, k))

    def __neg__(self):
        return FqElement(self.field, self.field.neg(self.code))

    def __eq__(self, other):
        return (isinstance(other, FqElement) and self.field == other.field
                and self.code == other.code)

    def __hash__(self):
        return hash((self.field, self.code))

    def __repr__(self):
        return f"{self.coeffs if self.field.e > 1 else self.code}@{self.field.name()}"


# ---------------------------------------------------------------------------
# polynomials


class FqPolynomial:
    """Sparse polynomial over a FieldSpec; immutable once built."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms):
        self.field = field
        self.terms = {d: c for d, c in terms.items() if c}

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_codes(cls, field, codes):
        return cls(field, {i: c % field.q for i, c in enumerate(codes)})

    @classmethod
    def zero(cls, field):
        return cls(field, {})

    @classmethod
    def constant(cls, field, code):
        return cls(field, {0: code % field.q})

    @classmethod
    def T(cls, field):
        return cls(field, {1: 1})

    # -- views ----------------------------------------------------------------

    @property
    def degree(self):
        return max(self.terms) if self.terms else NEG_INF

    def is_zero(self):
        return not self.terms

    def lc(self):
        if not self.terms:
            return 0
        return self.terms[max(self.terms)]

    def coeff(self, d):
        return self.terms.get(d, 0)

    def codes(self):
        """Dense coefficient list c_0..c_deg (empty for zero)."""
        if not self.terms:
            return []
        n = max(self.terms)
        return [self.terms.get(i, 0) for i in range(n + 1)]

    def is_monic(self):
        return self.lc() == 1

    def is_constant(self):
        return self.degree <= 0

    def sort_key(self):
        """Total order: by degree, then coefficient vector (low degree first)."""
        if not self.terms:
            return (-1, ())
        n = max(self.terms)
        return (n, tuple(self.terms.get(i, 0) for i in range(n + 1)))

    def __eq__(self, other):
        return (isinstance(other, FqPolynomial) and self.field == other.field
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.field, tuple(sorted(self.terms.items()))))

    def __repr__(self):
        return self.to_string()

    # -- ring operations --------------------------------------------------------

    def _check(self, other):
        if self.field != other.field:
            raise DomainError("field mismatch")

    def __add__(self, other):
        self._check(other)
        f = self.field
        out = dict(self.terms)
        for d, c in other.terms.items():
            s = f.add(out.get(d, 0), c)
            if s:
                out[d] = s
            else:
                out.pop(d, None)
        return FqPolynomial(f, out)

    def __neg__(self):
        f = self.field
        return FqPolynomial(f, {d: f.neg(c) for d, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        f = self.field
        out = {}
        for i, a in self.terms.items():
            for j, b in other.terms.items():
                d = i + j
                s = f.add(out.get(d, 0), f.mul(a, b))
                if s:
                    out[d] = s
                else:
                    out.pop(d, None)
        return FqPolynomial(f, out)

    def scale(self, code):
        f = self.field
        if code == 0:
            return FqPolynomial.zero(f)
        return FqPolynomial(f, {d: f.mul(c, code) for d, c in self.terms.items()})

    def shift(self, k):
        """Multiply by T**k."""
        return FqPolynomial(self.field, {d + k: c for d, c in self.terms.items()})

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero():
            raise DomainError("division by the zero polynomial")
        f = self.field
        inv_lead = f.inv(other.lc())
        db = other.degree
        rem = dict(self.terms)
        quo = {}
        while rem:
            da = max(rem)
            if da < db:
                break
            c = f.mul(rem[da], inv_lead)
            k = da - db
            quo[k] = c
            for j, b in other.terms.items():
                d = j + k
                s = f.sub(rem.get(d, 0), f.mul(c, b))
                if s:
                    rem[d] = s
                else:
                    rem.pop(d, None)
        return FqPolynomial(f, quo), FqPolynomial(f, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, k):
        result = FqPolynomial.constant(self.field, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def pow_mod(self, k, modulus):
        result = FqPolynomial.constant(self.field, 1) % modulus
        base = self % modulus
        while k:
            if k & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            k >>= 1
        return result

    def monic(self):
        if self.is_zero() or self.lc() == 1:
            return self
        return self.scale(self.field.inv(self.lc()))

    def gcd(self, other):
        """Monic greatest common divisor."""
        self._check(other)
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def derivative(self):
        f = self.field
        out = {}
        for d, c in self.terms.items():
            if d == 0:
                continue
            s = 0
            for _ in range(d % f.p):
                s = f.add(s, c)
            if s:
                out[d - 1] = s
        return FqPolynomial(f, out)

    def evaluate(self, code):
        """Horner evaluation at a field element code (same field)."""
        f = self.field
        acc = 0
        for d in range(int(self.degree), -1, -1) if self.terms else []:
            acc = f.add(f.mul(acc, code), self.terms.get(d, 0))
        return acc

    def frobenius_scale(self, k):
        """The p^k-th power of the polynomial: coefficients and exponents scale.

        (sum c_d T^d)^(p^k) = sum c_d^(p^k) T^(d p^k) in characteristic p.
        """
        f = self.field
        t = f.p ** k
        return FqPolynomial(f, {d * t: f.frob(c, k) for d, c in self.terms.items()})

    def map_field(self, newfield, code_map):
        """Transport coefficients through code_map into another field."""
        return FqPolynomial(newfield, {d: code_map(c) for d, c in self.terms.items()})

    # -- text form ----------------------------------------------------------------

    def _coeff_str(self, c):
        f = self.field
        if f.e == 1:
            return str(c)
        return "[" + ",".join(str(x) for x in f.decode(c)) + "]"

    def to_string(self, with_field=True):
        if self.is_zero():
            body = "0"
        else:
            parts = []
            for d in sorted(self.terms, reverse=True):
                c = self.terms[d]
                if d == 0:
                    parts.append(self._coeff_str(c))
                else:
                    var = "T" if d == 1 else f"T^{d}"
                    parts.append(var if c == 1 else f"{self._coeff_str(c)}*{var}")
            body = " + ".join(parts)
        if with_field:
            suffix = f"GF({self.field.p})" if self.field.e == 1 else f"GF({self.field.p}^{self.field.e})"
            return f"{body} over {suffix}"
        return body

    _TERM_RE = re.compile(
        r"^\s*(?:(\[[\d,\s]*\]|\d+)\s*\*?\s*)?(T(?:\^(\d+))?)?\s*$")

    @classmethod
    def from_string(cls, field, text):
        """Parse the grammar produced by :meth:`to_string`."""
        text = text.strip()
        m = re.search(r"over\s+GF\((\d+)(?:\^(\d+))?\)\s*$", text)
        if m:
            p = int(m.group(1))
            e = int(m.group(2) or 1)
            if p ** e != field.q:
                # allow "GF(4)" style as well
                if int(m.group(1)) != field.q or m.group(2):
                    raise DomainError("field annotation does not match")
            text = text[: m.start()].strip()
        if text == "0":
            return cls.zero(field)
        terms = {}
        for raw in text.replace("-", "+-").split("+"):
            raw = raw.strip()
            if not raw:
                continue
            neg = raw.startswith("-")
            if neg:
                raw = raw[1:].strip()
            m = cls._TERM_RE.match(raw)
            if not m or (m.group(1) is None and m.group(2) is None):
                raise DomainError(f"cannot parse term {raw!r}")
            coeff_s, var_s, exp_s = m.groups()
            if coeff_s is None:
                code = 1
            elif coeff_s.startswith("["):
                vec = [int(x) for x in coeff_s[1:-1].split(",") if x.strip()]
                if len(vec) > field.e:
                    raise DomainError("coefficient vector too long")
                vec += [0] * (field.e - len(vec))
                code = field.encode(tuple(vec))
            else:
                code = int(coeff_s) % field.q if field.e == 1 else field.encode(
                    (int(coeff_s),) + (0,) * (field.e - 1))
            if neg:
                code = field.neg(code)
            d = 0 if var_s is None else (1 if exp_s is None else int(exp_s))
            terms[d] = field.add(terms.get(d, 0), code)
        return cls(field, terms)


# ---------------------------------------------------------------------------
# irreducibility, factorisation, arithmetic consequences


def is_irreducible(f):
    """Power-map irreducibility criterion; DomainError on constants."""
    if f.degree < 1:
        raise DomainError("irreducibility is asked of nonconstant polynomials")
    n = int(f.degree)
    if n == 1:
        return True
    field = f.field
    q = field.q
    x = FqPolynomial.T(field)
    if x.pow_mod(q ** n, f) != x % f:
        return False
    for ell in _prime_divisors(n):
        h = x.pow_mod(q ** (n // ell), f) - (x % f)
        if f.gcd(h).degree != 0:
            return False
    return True


def _pth_root(f):
    """For f with zero derivative, return g with g(T)^p = f(T)."""
    field = f.field
    p = field.p
    out = {}
    for d, c in f.terms.items():
        assert d % p == 0
        out[d // p] = field.frob(c, field.e - 1) if field.e > 1 else c
    return FqPolynomial(field, out)


def _ddf(f):
    """Distinct-degree split of a squarefree monic f: list of (degree, product)."""
    field = f.field
    q = field.q
    out = []
    x = FqPolynomial.T(field)
    h = x % f
    v = f
    d = 0
    while v.degree >= 1 and int(v.degree) >= 2 * (d + 1):
        d += 1
        h = h.pow_mod(q, v)
        g = v.gcd(h - (x % v))
        if g.degree >= 1:
            out.append((d, g))
            v = v // g
            h = h % v
    if v.degree >= 1:
        out.append((int(v.degree), v))
    return out


def _edf(f, d, rng):
    """Cantor-Zassenhaus equal-degree split of monic squarefree f (factors of degree d)."""
    field = f.field
    if f.degree == d:
        return [f]
    q = field.q
    n = int(f.degree)
    while True:
        r = FqPolynomial(field, {i: rng.randrange(q) for i in range(n)})
        if r.degree < 1:
            continue
        g = f.gcd(r)
        if 1 <= g.degree < f.degree:
            break
        if field.p == 2:
            # trace map over GF(2): r + r^2 + r^4 + ... (e*d terms)
            t = r % f
            acc = t
            for _ in range(field.e * d - 1):
                t = (t * t) % f
                acc = acc + t
            g = f.gcd(acc)
        else:
            s = r.pow_mod((q ** d - 1) // 2, f)
            g = f.gcd(s - FqPolynomial.constant(field, 1))
        if 1 <= g.degree < f.degree:
            break
    return _edf(g, d, rng) + _edf(f // g, d, rng)


def factor(f, seed=0):
    """Full factorisation: (sorted list of (monic irreducible, multiplicity), unit code).

    Distinct-degree splitting then seeded equal-degree splitting, so the
    result is deterministic for a given seed.
    """
    if f.is_zero():
        raise DomainError("cannot factor the zero polynomial")
    field = f.field
    unit = f.lc()
    f = f.monic()
    rng = random.Random((seed, field.p, field.e, tuple(sorted(f.terms.items()))).__repr__())
    counts = {}

    def accumulate(g, mult):
        if g.degree < 1:
            return
        fp = g.derivative()
        if fp.is_zero():
            accumulate(_pth_root(g), mult * field.p)
            return
        c = g.gcd(fp)
        w = g // c
        # w is the squarefree part of g
        seen = FqPolynomial.constant(field, 1)
        for d, block in _ddf(w):
            for piece in _edf(block, d, rng):
                piece = piece.monic()
                m = 0
                h = g
                while True:
                    quo, rem = divmod(h, piece)
                    if not rem.is_zero():
                        break
                    h = quo
                    m += 1
                counts[piece] = counts.get(piece, 0) + m * mult
                seen = seen * (piece ** m)
        rest = g // seen
        if rest.degree >= 1:
            accumulate(rest, mult)

    accumulate(f, 1)
    ordered = sorted(counts.items(), key=lambda kv: kv[0].sort_key())
    return ordered, unit


def fermat_check(a, P):
    """a^(q^deg P - 1) = 1 mod P for P irreducible, P not dividing a."""
    if P.field != a.field:
        raise DomainError("field mismatch")
    if not is_irreducible(P):
        raise DomainError("modulus is not irreducible")
    if (a % P).is_zero():
        raise DomainError("a is divisible by the modulus")
    q = a.field.q
    exponent = q ** int(P.degree) - 1
    return a.pow_mod(exponent, P) == FqPolynomial.constant(a.field, 1) % P


def unit_group_order(a):
    """Order of the unit group of the quotient ring by a (a nonconstant)."""
    if a.degree < 1:
        raise DomainError("need a nonconstant polynomial")
    q = a.field.q
    total = 1
    for piece, mult in factor(a)[0]:
        d = int(piece.degree)
        total *= q ** (mult * d) - q ** ((mult - 1) * d)
    return total


def random_poly(field, max_deg, rng, monic=False, nonzero=False):
    while True:
        codes = [rng.randrange(field.q) for _ in range(max_deg + 1)]
        if monic:
            codes[-1] = 1
        f = FqPolynomial.from_codes(field, codes)
        if nonzero and f.is_zero():
            continue
        return f


def random_irreducible(field, deg, rng):
    while True:
        f = random_poly(field, deg, rng, monic=True)
        if f.degree == deg and is_irreducible(f):
            return f


def monic_divisors(f):
    """All monic divisors of f, sorted; desk scale only."""
    pieces, _ = factor(f)
    divs = [FqPolynomial.constant(f.field, 1)]
    for piece, mult in pieces:
        grown = []
        power = FqPolynomial.constant(f.field, 1)
        for k in range(mult + 1):
            grown.extend(d * power for d in divs)
            power = power * piece
        divs = grown
    return sorted(divs, key=lambda g: g.sort_key())


# ---------------------------------------------------------------------------
# embeddings between fields of the same characteristic


@lru_cache(maxsize=None)
def embedding(sub, big):
    """Canonical embedding GF(p^e) -> GF(p^N), e | N, as a code map.

    Sends the generator of `sub` to the least root of sub's modulus in
    `big`, which pins the embedding uniquely and reproducibly.
    """
    if sub.p != big.p or big.e % sub.e:
        raise DomainError("no embedding between these fields")
    if sub.e == 1:
        return lambda code: code
    lifted = FqPolynomial(big, {d: c for d, c in enumerate(sub.modulus) if c})
    root = min(roots_in_field(lifted))
    powers = [1]
    for _ in range(sub.e - 1):
        powers.append(big.mul(powers[-1], root))

    def code_map(code, _powers=tuple(powers), _sub=sub, _big=big):
        acc = 0
        for i, digit in enumerate(_sub.decode(code)):
            if digit:
                # prime-subfield scalars keep their code in the big field
                acc = _big.add(acc, _big.mul(digit, _powers[i]))
        return acc

    return code_map


def roots_in_field(f):
    """All roots (codes) of f inside its own coefficient field, sorted."""
    out = []
    for piece, _ in factor(f)[0]:
        if piece.degree == 1:
            # piece = T + c, root is -c
            out.append(piece.field.neg(piece.coeff(0)))
    return sorted(out)
