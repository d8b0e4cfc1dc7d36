"""Rank-1 modules over GF(q)[T] acting through twisted polynomials.

The canonical example sends T to T + t (Carlitz); reduction at an
irreducible P moves the coefficients into the residue field, and the
`a`-division points are computed as the kernel of the additive map
x -> rho_a(x) on an extension, by plain linear algebra over the prime
field.  The Frobenius of the reduction then acts on those points and is
matched against multiplication by a residue class, which is the computable
content of the abelian-extension statement the tests exercise.
"""

from __future__ import annotations

from math import log2

from .errors import ContractError, DomainError, ResourceError
from .ff_poly import (FieldSpec, FqPolynomial, embedding, monic_divisors, NEG_INF)
from .twisted import TwistSpec, TwistedPolynomial, tw_eval, tw_reduce_mod, residue_field

MAX_AMBIENT_DIM = 24  # kernel matrices are capped at 24*log2(p) rows over Z/p


class DrinfeldModule:
    """Determined by the image of T; `base_field` is GF(q), `lift` maps its
    codes into the coefficient ring."""

    __slots__ = ("spec", "rho_T", "base_field", "lift", "reduced_at")

    def __init__(self, spec, rho_T, base_field=None, lift=None, reduced_at=None):
        self.spec = spec
        self.rho_T = rho_T
        self.base_field = base_field if base_field is not None else spec.field
        if lift is None:
            if spec.kind == "poly":
                lift = lambda c: FqPolynomial.constant(spec.field, c)
            else:
                lift = lambda c: c
        self.lift = lift
        self.reduced_at = reduced_at
        # the image of T must have constant term equal to (the image of) T
        if spec.kind == "poly":
            want = FqPolynomial.T(spec.field)
            if rho_T.constant_term() != want:
                raise DomainError("the constant term of the image of T must be T")

    @property
    def rank(self):
        d = self.rho_T.degree
        return 0 if d == NEG_INF else int(d)

    def __repr__(self):
        tag = f" reduced at {self.reduced_at.to_string(with_field=False)}" if self.reduced_at else ""
        return f"DrinfeldModule(rho_T = {self.rho_T!r}{tag})"


def carlitz(p, e=1):
    """The module with rho_T = T + t over GF(p^e)[T]."""
    field = FieldSpec.get(p, e)
    spec = TwistSpec("poly", field, field.q)
    rho_T = TwistedPolynomial(spec, {0: FqPolynomial.T(field),
                                     1: FqPolynomial.constant(field, 1)})
    return DrinfeldModule(spec, rho_T)


def is_trivial(D):
    return D.rank == 0


def rho(D, a):
    """Image of a polynomial a(T): the unique ring-map extension of rho_T."""
    if a.field != D.base_field:
        raise DomainError("field mismatch")
    spec = D.spec
    acc = TwistedPolynomial.zero(spec)
    power = TwistedPolynomial.one(spec)
    for d in range(int(a.degree) + 1 if not a.is_zero() else 0):
        c = a.coeff(d)
        if c:
            acc = acc + power.scale_left(D.lift(c))
        power = D.rho_T * power
    return acc


def reduce(D, P):
    """Coefficientwise reduction at an irreducible P (good reduction only)."""
    if D.spec.kind != "poly":
        raise DomainError("module is already reduced")
    if P.field != D.base_field:
        raise DomainError("field mismatch")
    reduced = tw_reduce_mod(D.rho_T, P)
    if D.rank >= 1 and reduced.degree != D.rho_T.degree:
        raise DomainError("bad reduction: leading coefficient vanishes mod P")
    return DrinfeldModule(reduced.spec, reduced, base_field=D.base_field,
                          lift=_composite_base_lift(D.base_field, P), reduced_at=P)


def _composite_base_lift(field, P):
    """Constants of GF(q) land in the residue field via the canonical root."""
    R, emb, _theta = residue_field(field, tuple(sorted(P.terms.items())))
    return emb


class TorsionModule:
    """Division points of rho_a inside one ambient field."""

    __slots__ = ("ambient", "points", "a", "module", "base_field", "_structure")

    def __init__(self, ambient, points, a, module, base_field):
        self.ambient = ambient
        self.points = tuple(sorted(points))
        self.a = a
        self.module = module  # DrinfeldModule with coefficients in `ambient`
        self.base_field = base_field
        self._structure = None

    def __len__(self):
        return len(self.points)

    def act(self, g):
        """The permutation-like map of rho_g on the point set."""
        rg = rho(self.module, g)
        return {x: tw_eval(rg, x) for x in self.points}

    def __repr__(self):
        return f"TorsionModule(|points|={len(self.points)}, a={self.a.to_string(with_field=False)})"


def _nullspace_mod_p(matrix, p):
    """Nullspace basis of an n x n matrix over Z/p (row-reduced, deterministic)."""
    n = len(matrix)
    rows = [list(r) for r in matrix]
    pivots = {}
    r = 0
    for col in range(n):
        pivot = None
        for i in range(r, n):
            if rows[i][col] % p:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][col], p - 2, p)
        rows[r] = [(v * inv) % p for v in rows[r]]
        for i in range(n):
            if i != r and rows[i][col] % p:
                f = rows[i][col]
                rows[i] = [(rows[i][j] - f * rows[r][j]) % p for j in range(n)]
        pivots[col] = r
        r += 1
    basis = []
    free = [c for c in range(n) if c not in pivots]
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for col, prow in pivots.items():
            v[col] = (-rows[prow][fc]) % p
        basis.append(tuple(v))
    return basis


def torsion(Dred, a, m=None):
    """All roots of the additive realisation of rho_a over GF(Q^m).

    With m omitted, the extension degree grows 1, 2, 3, ... until the point
    count reaches q^(rank * deg a); ambient fields are capped at
    2**MAX_AMBIENT_BITS elements.
    """
    if Dred.spec.kind != "field":
        raise DomainError("torsion is computed after reduction")
    if a.field != Dred.base_field:
        raise DomainError("field mismatch")
    if a.is_zero():
        raise DomainError("a must be nonzero")
    P = Dred.reduced_at
    if P is not None and a.gcd(P).degree != 0:
        raise DomainError("a must be coprime to the reduction prime")
    R = Dred.spec.field
    p = R.p
    q = Dred.base_field.q
    target = q ** (Dred.rank * int(a.degree)) if a.degree >= 1 else 1
    ra = rho(Dred, a)
    j = Dred.spec._j  # twist exponent is p^j

    dim_cap = int(MAX_AMBIENT_DIM * log2(p))
    tries = [m] if m is not None else range(1, 1 + dim_cap)
    for mm in tries:
        if R.e * mm > dim_cap:
            raise ResourceError("ambient dimension cap exceeded while growing the extension")
        E = FieldSpec.get(p, R.e * mm)
        emb = embedding(R, E)
        coeffs_E = {i: emb(c) for i, c in ra.coeffs.items()}
        n = E.e
        cols = []
        for k in range(n):
            basis_vec = E.encode(tuple(1 if i == k else 0 for i in range(n)))
            acc = 0
            for i, c in coeffs_E.items():
                acc = E.add(acc, E.mul(c, E.frob(basis_vec, j * i)))
            cols.append(E.decode(acc))
        matrix = [[cols[k][row] for k in range(n)] for row in range(n)]
        kernel = _nullspace_mod_p(matrix, p)
        points = {0}
        for v in kernel:
            code = E.encode(v)
            new = set()
            for pt in points:
                acc = pt
                for _ in range(p - 1):
                    acc = E.add(acc, code)
                    new.add(acc)
            points |= new
        if len(points) == target or m is not None:
            spec_E = TwistSpec("field", E, Dred.spec.t)
            emb_R = emb
            base_lift = Dred.lift
            lift = lambda c, _e=emb_R, _b=base_lift: _e(_b(c))
            rho_T_E = TwistedPolynomial(spec_E, {i: emb_R(c) for i, c in Dred.rho_T.coeffs.items()})
            amb = DrinfeldModule(spec_E, rho_T_E, base_field=Dred.base_field,
                                 lift=lift, reduced_at=P)
            return TorsionModule(E, points, a, amb, Dred.base_field)
    raise ResourceError("no extension below the cap contains the full point set")


# ---------------------------------------------------------------------------
# module structure over GF(q)[T]


def module_structure(tors):
    """Invariant factors: monic f_1, f_2 | f_1, ... with the module = sum A/(f_i).

    Largest factor first; a cyclic module yields exactly one factor (the
    monic generator of its annihilator) and the trivial module yields [].
    Uses the cyclic-decomposition theorem: an element of maximal order spans
    a direct summand, so quotient and recurse.
    """
    if tors._structure is not None:
        return tors._structure
    field = tors.base_field
    a_monic = tors.a.monic()
    if a_monic.degree < 1 or len(tors.points) == 1:
        tors._structure = []
        return []
    divisors = monic_divisors(a_monic)  # by degree, then coefficient order
    E = tors.ambient
    q = field.q
    rho_cache = {}

    def r(g):
        if g not in rho_cache:
            rho_cache[g] = rho(tors.module, g)
        return rho_cache[g]

    def residues(deg):
        for k in range(q ** deg):
            digits = []
            c = k
            for _ in range(deg):
                digits.append(c % q)
                c //= q
            yield FqPolynomial.from_codes(field, digits)

    def invariants(sub):
        coset = {pt: min(E.add(pt, s) for s in sub) for pt in tors.points}
        reps = set(coset.values())
        if len(reps) <= 1:
            return []
        zero_rep = coset[0]

        def order_of(pt):
            for d in divisors:
                if coset[tw_eval(r(d), pt)] == zero_rep:
                    return d
            raise ContractError("a torsion point whose annihilator does not divide a")

        orders = {pt: order_of(pt) for pt in sorted(reps)}
        top = max(orders.values(), key=lambda d: d.sort_key())
        gen = min(pt for pt, o in orders.items() if o == top)
        if q ** int(top.degree) == len(reps):
            return [top]
        grown = set()
        for g in residues(int(top.degree)):
            img = tw_eval(r(g), gen)
            for s in sub:
                grown.add(E.add(img, s))
        return [top] + invariants(frozenset(grown))

    result = invariants(frozenset({0}))
    tors._structure = result
    return result


def frobenius_unit(tors):
    """The residue u mod a acting as the reduction Frobenius on all points."""
    field = tors.base_field
    a_monic = tors.a.monic()
    if a_monic.degree < 1:
        return FqPolynomial.constant(field, 1)
    structure = module_structure(tors)
    if len(structure) > 1:
        raise DomainError("Frobenius matching requires a cyclic module")
    E = tors.ambient
    P = tors.module.reduced_at
    frob_steps = tors.base_field.e * int(P.degree)
    frob = {pt: E.frob(pt, frob_steps) for pt in tors.points}
    if set(frob.values()) != set(tors.points):
        raise ContractError("Frobenius does not permute the point set")
    deg = int(a_monic.degree)
    q = field.q
    # precompute rho_{T^i} images on every point
    images = {pt: [pt] for pt in tors.points}
    rT = rho(tors.module, FqPolynomial.T(field))
    for _ in range(deg - 1):
        for pt in tors.points:
            images[pt].append(tw_eval(rT, images[pt][-1]))
    lift = tors.module.lift
    one = FqPolynomial.constant(field, 1)
    match = None
    for k in range(q ** deg):
        digits = []
        c = k
        for _ in range(deg):
            digits.append(c % q)
            c //= q
        ok = True
        for pt in tors.points:
            acc = 0
            for i, d in enumerate(digits):
                if d:
                    acc = E.add(acc, E.mul(lift(d), images[pt][i]))
            if acc != frob[pt]:
                ok = False
                break
        if ok:
            u = FqPolynomial.from_codes(field, digits)
            if u.gcd(a_monic) != one:
                raise ContractError("Frobenius matched a non-unit residue")
            if match is not None:
                raise ContractError("Frobenius residue is not unique; module not cyclic?")
            match = u
    if match is None:
        raise ContractError("no residue class realises the Frobenius action")
    return match


def verification_report(p, e, P_text, a_text, m=None):
    """One reduction-and-torsion verification as a JSON-ready dict."""
    field = FieldSpec.get(p, e)
    P = FqPolynomial.from_string(field, P_text)
    a = FqPolynomial.from_string(field, a_text)
    D = carlitz(p, e)
    Dred = reduce(D, P)
    tors = torsion(Dred, a, m)
    factors = module_structure(tors)
    unit = frobenius_unit(tors)
    from .ff_poly import unit_group_order
    group_order = unit_group_order(a) if a.degree >= 1 else 1
    return {
        "q": field.q,
        "P": P.to_string(),
        "a": a.to_string(),
        "rank": D.rank,
        "torsion_size": len(tors),
        "invariant_factors": [f.to_string(with_field=False) for f in factors],
        "frobenius_unit": unit.to_string(with_field=False),
        "group_order": group_order,
    }
