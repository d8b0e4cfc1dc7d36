"""Twisted polynomial rings: noncommutative polynomials in t with t*c = c^T * t.

The twist exponent T is a power of the characteristic.  Coefficients sit on
the left of powers of t and live either in a polynomial ring GF(q)[T] or in
a finite field GF(q); pushing t rightward past a coefficient raises it to
the twist exponent.  A twisted polynomial realises the additive map
x -> sum a_i x^(T^i), and multiplication corresponds to composition of those
maps, which the tests exercise directly.
"""

from __future__ import annotations

import re
from functools import lru_cache

from .errors import DomainError
from .ff_poly import FieldSpec, FqPolynomial, embedding, is_irreducible, roots_in_field, NEG_INF


class TwistSpec:
    """Coefficient ring plus twist exponent.

    kind 'poly': coefficients are FqPolynomial over `field` (the ring GF(q)[T]).
    kind 'field': coefficients are element codes of `field`.
    """

    __slots__ = ("kind", "field", "t", "_j")

    def __init__(self, kind, field, t):
        if kind not in ("poly", "field"):
            raise DomainError("kind must be 'poly' or 'field'")
        j = 0
        n = t
        while n > 1 and n % field.p == 0:
            n //= field.p
            j += 1
        if n != 1 or j < 1:
            raise DomainError(f"twist exponent {t} is not a positive power of {field.p}")
        self.kind = kind
        self.field = field
        self.t = t
        self._j = j

    # -- coefficient ring dispatch ------------------------------------------

    def czero(self):
        return FqPolynomial.zero(self.field) if self.kind == "poly" else 0

    def cone(self):
        return FqPolynomial.constant(self.field, 1) if self.kind == "poly" else 1

    def cis_zero(self, c):
        return c.is_zero() if self.kind == "poly" else c == 0

    def cadd(self, a, b):
        return a + b if self.kind == "poly" else self.field.add(a, b)

    def cneg(self, a):
        return -a if self.kind == "poly" else self.field.neg(a)

    def cmul(self, a, b):
        return a * b if self.kind == "poly" else self.field.mul(a, b)

    def ctwist(self, c, i):
        """c raised to the i-th power of the twist exponent."""
        if i == 0:
            return c
        if self.kind == "poly":
            return c.frobenius_scale(self._j * i)
        return self.field.frob(c, self._j * i)

    def cstr(self, c):
        if self.kind == "poly":
            body = c.to_string(with_field=False)
            return f"({body})" if (" " in body or len(c.terms) > 1) else body
        if self.field.e == 1:
            return str(c)
        return "[" + ",".join(str(x) for x in self.field.decode(c)) + "]"

    def base_name(self):
        f = self.field
        gf = f"GF({f.p})" if f.e == 1 else f"GF({f.p}^{f.e})"
        return gf + "[T]" if self.kind == "poly" else gf

    def twist_name(self):
        return f"{self.field.p}^{self._j}"

    def __eq__(self, other):
        return (isinstance(other, TwistSpec) and self.kind == other.kind
                and self.field == other.field and self.t == other.t)

    def __hash__(self):
        return hash((self.kind, self.field, self.t))

    def __repr__(self):
        return f"TwistSpec({self.base_name()}, t={self.t})"


class TwistedPolynomial:
    """sum a_i t^i with coefficients on the left; immutable."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec, coeffs):
        self.spec = spec
        self.coeffs = {i: c for i, c in coeffs.items() if not spec.cis_zero(c)}

    @classmethod
    def from_list(cls, spec, coeff_list):
        return cls(spec, dict(enumerate(coeff_list)))

    @classmethod
    def zero(cls, spec):
        return cls(spec, {})

    @classmethod
    def one(cls, spec):
        return cls(spec, {0: spec.cone()})

    @classmethod
    def tau(cls, spec):
        return cls(spec, {1: spec.cone()})

    @property
    def degree(self):
        """tau-degree; -infinity for the zero element."""
        return max(self.coeffs) if self.coeffs else NEG_INF

    def coeff(self, i):
        return self.coeffs.get(i, self.spec.czero())

    def constant_term(self):
        return self.coeff(0)

    def is_zero(self):
        return not self.coeffs

    def _check(self, other):
        if self.spec != other.spec:
            raise DomainError("twist spec mismatch")

    def __eq__(self, other):
        return (isinstance(other, TwistedPolynomial) and self.spec == other.spec
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.spec, tuple(sorted((i, hash(c)) for i, c in self.coeffs.items()))))

    def __add__(self, other):
        self._check(other)
        s = self.spec
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            v = s.cadd(out.get(i, s.czero()), c)
            if s.cis_zero(v):
                out.pop(i, None)
            else:
                out[i] = v
        return TwistedPolynomial(s, out)

    def __neg__(self):
        s = self.spec
        return TwistedPolynomial(s, {i: s.cneg(c) for i, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Product with the commutation rule t*c = c^T * t."""
        self._check(other)
        s = self.spec
        out = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                piece = s.cmul(a, s.ctwist(b, i))
                k = i + j
                v = s.cadd(out.get(k, s.czero()), piece)
                if s.cis_zero(v):
                    out.pop(k, None)
                else:
                    out[k] = v
        return TwistedPolynomial(s, out)

    def __pow__(self, n):
        result = TwistedPolynomial.one(self.spec)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale_left(self, c):
        """Multiply by a constant coefficient on the left."""
        s = self.spec
        return TwistedPolynomial(s, {i: s.cmul(c, a) for i, a in self.coeffs.items()})

    # -- text form -------------------------------------------------------------

    def to_string(self):
        s = self.spec
        if not self.coeffs:
            body = "0"
        else:
            parts = []
            for i in sorted(self.coeffs, reverse=True):
                c = self.coeffs[i]
                var = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
                if i == 0:
                    parts.append(s.cstr(c))
                elif c == s.cone():
                    parts.append(var)
                else:
                    parts.append(f"{s.cstr(c)}*{var}")
            body = " + ".join(parts)
        return f"{body} [twist={s.twist_name()}] over {s.base_name()}"

    def __repr__(self):
        return self.to_string()

    @classmethod
    def from_string(cls, text, spec=None):
        """Parse the grammar emitted by :meth:`to_string`."""
        m = re.search(r"\[twist=(\d+)\^(\d+)\]\s*over\s+(GF\(\d+(?:\^\d+)?\))(\[T\])?\s*$", text)
        if not m:
            raise DomainError("missing twist/base annotation")
        p = int(m.group(1))
        t = p ** int(m.group(2))
        gf = m.group(3)
        kind = "poly" if m.group(4) else "field"
        gm = re.match(r"GF\((\d+)(?:\^(\d+))?\)", gf)
        fp, fe = int(gm.group(1)), int(gm.group(2) or 1)
        parsed_spec = TwistSpec(kind, FieldSpec.get(fp, fe), t)
        if spec is not None and spec != parsed_spec:
            raise DomainError("annotation does not match the supplied spec")
        spec = parsed_spec
        body = text[: m.start()].strip()
        coeffs = {}
        if body != "0":
            for term in _split_top_plus(body):
                deg, coeff = _parse_term(term, spec)
                coeffs[deg] = spec.cadd(coeffs.get(deg, spec.czero()), coeff)
        return cls(spec, coeffs)


def _split_top_plus(text):
    parts = []
    depth = 0
    cur = []
    for ch in text:
        if ch == "(" or ch == "[":
            depth += 1
        elif ch == ")" or ch == "]":
            depth -= 1
        if ch == "+" and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [s.strip() for s in parts if s.strip()]


def _parse_term(term, spec):
    m = re.match(r"^(.*?)(?:\*)?\s*t(?:\^(\d+))?$", term)
    if m and (m.group(1).strip() or True) and re.search(r"t(\^\d+)?$", term):
        coeff_s = m.group(1).strip().rstrip("*").strip()
        deg = int(m.group(2)) if m.group(2) else 1
    else:
        coeff_s = term.strip()
        deg = 0
    if not coeff_s:
        return deg, spec.cone()
    if coeff_s.startswith("(") and coeff_s.endswith(")"):
        coeff_s = coeff_s[1:-1]
    if spec.kind == "poly":
        return deg, FqPolynomial.from_string(spec.field, coeff_s)
    f = spec.field
    if coeff_s.startswith("["):
        vec = [int(x) for x in coeff_s[1:-1].split(",") if x.strip()]
        vec += [0] * (f.e - len(vec))
        return deg, f.encode(tuple(vec))
    return deg, int(coeff_s) % f.q


# ---------------------------------------------------------------------------
# evaluation and reduction


def tw_eval(f, x, eval_field=None):
    """Evaluate the additive realisation sum c_i x^(T^i) at a field element.

    The coefficient ring must be a finite field; `x` is a code in
    `eval_field` (default: the coefficient field itself), and coefficients
    are carried through the canonical embedding when the fields differ.
    """
    s = f.spec
    if s.kind != "field":
        raise DomainError("evaluation needs coefficients in a finite field; reduce first")
    if eval_field is None:
        eval_field = s.field
    emb = embedding(s.field, eval_field)
    acc = 0
    for i, c in f.coeffs.items():
        xi = eval_field.frob(x, s._j * i)
        acc = eval_field.add(acc, eval_field.mul(emb(c), xi))
    return acc


@lru_cache(maxsize=None)
def residue_field(field, P_key):
    """(R, embed, theta): the field GF(q)[T]/(P) in canonical presentation.

    P_key is the hashable term tuple of P; theta is the least root of P in
    R, which fixes the reduction map reproducibly.
    """
    P = FqPolynomial(field, dict(P_key))
    R = FieldSpec.get(field.p, field.e * int(P.degree))
    emb = embedding(field, R)
    lifted = P.map_field(R, emb)
    theta = min(roots_in_field(lifted))
    return R, emb, theta


def reduce_coeff(c, field, P, R=None, emb=None, theta=None):
    """Image of c(T) in the residue field of P (Horner at theta)."""
    if R is None:
        R, emb, theta = residue_field(field, tuple(sorted(P.terms.items())))
    acc = 0
    for d in range(int(c.degree), -1, -1) if not c.is_zero() else []:
        acc = R.add(R.mul(acc, theta), emb(c.coeff(d)))
    return acc


def tw_reduce_mod(f, P, p_twist=False):
    """Reduce a twisted polynomial over GF(q)[T] modulo an irreducible P.

    Coefficients map into the residue field GF(q^deg P); the twist exponent
    is preserved, or rebased to q^deg P when `p_twist` is set (the variant
    whose commutation rule collapses to the identity on the residue field).
    """
    s = f.spec
    if s.kind != "poly":
        raise DomainError("reduction applies to coefficients in GF(q)[T]")
    if not is_irreducible(P):
        raise DomainError("modulus must be irreducible")
    R, emb, theta = residue_field(s.field, tuple(sorted(P.terms.items())))
    t = s.field.q ** int(P.degree) if p_twist else s.t
    new_spec = TwistSpec("field", R, t)
    out = {}
    for i, c in f.coeffs.items():
        v = reduce_coeff(c, s.field, P, R, emb, theta)
        if v:
            out[i] = v
    return TwistedPolynomial(new_spec, out)
