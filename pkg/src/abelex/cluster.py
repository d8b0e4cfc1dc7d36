"""Seeds, matrix mutation and exact Laurent expansion.

Cluster variables are kept as genuine Laurent polynomials in the initial
variables: every exchange step divides the binomial exactly by the leaving
variable, so a failure of exact division would certify a non-Laurent
variable and raises ContractError (it never fires on seeds reachable from
the built-in one).  All coefficients are exact integers; a growth guard
aborts words whose coefficients pass 2**512.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ContractError, DomainError, ResourceError

COEFF_BOUND = 1 << 512


class LaurentPolynomial:
    """Integer Laurent polynomial in n variables as {exponent tuple: coeff}."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms):
        self.n = n
        self.terms = {e: c for e, c in terms.items() if c}

    @classmethod
    def zero(cls, n):
        return cls(n, {})

    @classmethod
    def constant(cls, n, c):
        return cls(n, {(0,) * n: c})

    @classmethod
    def variable(cls, n, i):
        e = [0] * n
        e[i] = 1
        return cls(n, {tuple(e): 1})

    @classmethod
    def monomial(cls, n, exponents, c=1):
        return cls(n, {tuple(exponents): c})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, LaurentPolynomial) and self.n == other.n
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.terms.items()))))

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPolynomial(self.n, out)

    def __neg__(self):
        return LaurentPolynomial(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentPolynomial(self.n, out)

    def __pow__(self, k):
        if k < 0:
            raise DomainError("negative powers only via monomials")
        result = LaurentPolynomial.constant(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def max_abs_coeff(self):
        return max((abs(c) for c in self.terms.values()), default=0)

    def min_exponents(self):
        if not self.terms:
            return (0,) * self.n
        return tuple(min(e[i] for e in self.terms) for i in range(self.n))

    def shift(self, delta):
        return LaurentPolynomial(
            self.n, {tuple(a + b for a, b in zip(e, delta)): c for e, c in self.terms.items()})

    def specialize(self, values):
        """Exact rational value at nonzero rational points."""
        if len(values) != self.n:
            raise DomainError("wrong number of values")
        vals = [Fraction(v) for v in values]
        if any(v == 0 for v in vals):
            raise DomainError("specialisation points must be nonzero")
        total = Fraction(0)
        for e, c in self.terms.items():
            term = Fraction(c)
            for v, k in zip(vals, e):
                term *= v ** k
            total += term
        return total

    # -- text form (graded lexicographic, biggest first) -------------------------

    def _ordered(self):
        return sorted(self.terms.items(), key=lambda ec: (sum(ec[0]), ec[0]), reverse=True)

    def to_string(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self._ordered():
            mono = "*".join(
                f"x{i + 1}" if k == 1 else f"x{i + 1}^{k}"
                for i, k in enumerate(e) if k)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append((c < 0, body))
        out = ("-" if parts[0][0] else "") + parts[0][1]
        for negative, body in parts[1:]:
            out += (" - " if negative else " + ") + body
        return out

    def __repr__(self):
        return self.to_string()


def divexact(f, g):
    """Quotient f/g when it is a Laurent polynomial; ContractError otherwise."""
    if g.is_zero():
        raise DomainError("division by zero")
    if f.is_zero():
        return f
    vf, vg = f.min_exponents(), g.min_exponents()
    F = f.shift(tuple(-v for v in vf))
    G = g.shift(tuple(-v for v in vg))
    glead = max(G.terms, key=lambda e: (sum(e), e))
    gc = G.terms[glead]
    quo = {}
    rem = dict(F.terms)
    while rem:
        e = max(rem, key=lambda t: (sum(t), t))
        c = rem[e]
        qe = tuple(a - b for a, b in zip(e, glead))
        if any(k < 0 for k in qe) or c % gc:
            raise ContractError("quotient is not a Laurent polynomial")
        qc = c // gc
        quo[qe] = qc
        for ge, gcc in G.terms.items():
            t = tuple(a + b for a, b in zip(qe, ge))
            s = rem.get(t, 0) - qc * gcc
            if s:
                rem[t] = s
            else:
                rem.pop(t, None)
    shift = tuple(a - b for a, b in zip(vf, vg))
    return LaurentPolynomial(f.n, quo).shift(shift)


def is_level_p(f, p):
    """True when every coefficient is divisible by p."""
    return all(c % p == 0 for c in f.terms.values())


class Seed:
    """Immutable (cluster, B) pair; cluster variables in the initial variables."""

    __slots__ = ("cluster", "B")

    def __init__(self, cluster, B):
        n = len(B)
        if any(len(row) != n for row in B):
            raise DomainError("B must be square")
        if any(B[i][j] != -B[j][i] for i in range(n) for j in range(n)):
            raise DomainError("B must be skew-symmetric")
        self.cluster = tuple(cluster)
        self.B = tuple(tuple(row) for row in B)

    @property
    def n(self):
        return len(self.B)

    @property
    def fractions(self):
        """Cluster variables as (numerator, monomial denominator) pairs."""
        out = []
        for x in self.cluster:
            v = x.min_exponents()
            neg = tuple(min(k, 0) for k in v)
            num = x.shift(tuple(-k for k in neg))
            den = LaurentPolynomial.monomial(x.n, tuple(-k for k in neg))
            out.append((num, den))
        return out

    def __eq__(self, other):
        return isinstance(other, Seed) and self.cluster == other.cluster and self.B == other.B

    def to_json_dict(self):
        return {"B": [list(r) for r in self.B],
                "cluster": [x.to_string() for x in self.cluster]}

    def __repr__(self):
        return f"Seed(B={self.B}, cluster={[x.to_string() for x in self.cluster]})"


def markov_seed():
    """The rank-3 seed of the once-punctured torus triangulation."""
    n = 3
    cluster = [LaurentPolynomial.variable(n, i) for i in range(n)]
    B = [[0, 2, -2], [-2, 0, 2], [2, -2, 0]]
    return Seed(cluster, B)


def mutate(seed, k):
    """Mutation in direction k (1-based); involutive."""
    n = seed.n
    if not 1 <= k <= n:
        raise DomainError(f"direction {k} out of range 1..{n}")
    kk = k - 1
    pos = LaurentPolynomial.constant(n, 1)
    neg = LaurentPolynomial.constant(n, 1)
    for i in range(n):
        b = seed.B[i][kk]
        if b > 0:
            pos = pos * seed.cluster[i] ** b
        elif b < 0:
            neg = neg * seed.cluster[i] ** (-b)
    new_var = divexact(pos + neg, seed.cluster[kk])
    if new_var.max_abs_coeff() > COEFF_BOUND:
        raise ResourceError("coefficient growth bound exceeded")
    cluster = list(seed.cluster)
    cluster[kk] = new_var
    B = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == kk or j == kk:
                B[i][j] = -seed.B[i][j]
            else:
                B[i][j] = seed.B[i][j] + (abs(seed.B[i][kk]) * seed.B[kk][j]
                                          + seed.B[i][kk] * abs(seed.B[kk][j])) // 2
    return Seed(cluster, B)


def laurent_expand(seed, word, bound=8):
    """Cluster after applying the word of directions; all variables Laurent."""
    if len(word) > bound:
        raise DomainError(f"word longer than the configured bound {bound}")
    cur = seed
    for k in word:
        cur = mutate(cur, k)
    return list(cur.cluster)


def specialize(f, values):
    return f.specialize(values)
