"""The number-field generator pipeline and its classical cross-check.

Ingredients: integer companion matrices with exactly verified characteristic
polynomials, Perron-Frobenius eigenvalues by bracketed power iteration,
fundamental Pell units from continued fractions (verified by brute force),
the generator value (log eps) * e^(2 pi i alpha), the j q-series, reduced
binary quadratic forms and class polynomials, exact-rational LLL, and an
integer-relation probe for minimal polynomials.

The experiment runner wires these together and emits a deterministic JSON
report; it records what the numerics produced and never asserts any field
isomorphism.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import isqrt, log, pi as float_pi

from . import bignum
from .bignum import BigComplex, BigFloat, digits_to_bits
from .errors import ContractError, DomainError, PrecisionError
from .nc_torus import QuadraticSurd, cf_expand, cf_convergents, _squarefree_split


# ---------------------------------------------------------------------------
# companion matrices and Perron-Frobenius


def char_poly(matrix):
    """Monic characteristic polynomial det(xI - M), coefficients c_0..c_m.

    Faddeev-LeVerrier; all divisions are exact over the integers.
    """
    m = len(matrix)
    coeffs = [0] * (m + 1)
    coeffs[m] = 1
    N = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    for k in range(1, m + 1):
        N = _matmul(matrix, N)
        tr = sum(N[i][i] for i in range(m))
        c = -tr // k
        if -tr % k:
            raise ContractError("Faddeev-LeVerrier division was not exact")
        coeffs[m - k] = c
        for i in range(m):
            N[i][i] += c
    return coeffs


def _matmul(A, B):
    n = len(A)
    m = len(B[0])
    k = len(B)
    return [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(m)] for i in range(n)]


class CompanionMatrix:
    """Subdiagonal of ones, last column a_0..a_{m-1}; char poly verified."""

    __slots__ = ("m", "entries", "nonnegative", "coeffs")

    def __init__(self, coeffs):
        coeffs = [int(c) for c in coeffs]
        m = len(coeffs)
        if m < 1:
            raise DomainError("need at least one coefficient")
        entries = [[0] * m for _ in range(m)]
        for i in range(1, m):
            entries[i][i - 1] = 1
        for i in range(m):
            entries[i][m - 1] = coeffs[i]
        self.m = m
        self.entries = [row[:] for row in entries]
        self.coeffs = coeffs[:]
        self.nonnegative = all(c >= 0 for c in coeffs)
        # det(xI - B) must equal x^m - a_{m-1} x^{m-1} - ... - a_0
        want = [-c for c in coeffs] + [1]
        if char_poly(entries) != want:
            raise ContractError("companion characteristic polynomial mismatch")

    def __repr__(self):
        return f"CompanionMatrix({self.coeffs})"


def _is_irreducible_nonneg(matrix):
    """Strong connectivity: some power of (I + M) up to 2 m^2 is positive."""
    m = len(matrix)
    if any(v < 0 for row in matrix for v in row):
        raise DomainError("matrix must be non-negative")
    cur = [[1 if (matrix[i][j] or i == j) else 0 for j in range(m)] for i in range(m)]
    step = [row[:] for row in cur]
    for _ in range(2 * m * m):
        if all(all(v for v in row) for row in cur):
            return True
        cur = [[1 if sum(cur[i][t] * step[t][j] for t in range(m)) else 0
                for j in range(m)] for i in range(m)]
    return all(all(v for v in row) for row in cur)


def largest_real_root(coeffs, tol):
    """Largest real root of a monic integer polynomial, by exact bisection."""
    m = len(coeffs) - 1

    def val(x):
        acc = Fraction(0)
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    hi = Fraction(1 + max(abs(c) for c in coeffs[:m]) if m else 1)
    if val(hi) <= 0:
        hi *= 2
    step = hi / 256
    t = hi
    while val(t) > 0:
        t -= step
        if t < -hi:
            raise DomainError("no real root located")
    lo, hi = t, t + step
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if val(mid) > 0:
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2


def perron_frobenius(matrix, prec):
    """Dominant eigenvalue of a non-negative irreducible integer matrix.

    Bracketed power iteration on M + I (always aperiodic for irreducible M,
    and it shifts the eigenvalue by exactly 1): the min/max Rayleigh
    quotients enclose the eigenvalue at every step.  The result is
    cross-checked against exact bisection on the characteristic polynomial
    before returning.
    """
    if hasattr(matrix, "entries"):
        matrix = matrix.entries
    m = len(matrix)
    if any(len(r) != m for r in matrix):
        raise DomainError("matrix must be square")
    if not _is_irreducible_nonneg(matrix):
        raise DomainError("matrix is not irreducible")
    shifted = [[matrix[i][j] + (1 if i == j else 0) for j in range(m)] for i in range(m)]
    wprec = prec + 32
    v = [Fraction(1) for _ in range(m)]
    tol = Fraction(1, 1 << (prec - 8 if prec > 16 else 8))
    lam_lo = lam_hi = None
    for _ in range(64 * prec):
        w = [sum(shifted[i][j] * v[j] for j in range(m)) for i in range(m)]
        lam_lo = min(w[i] / v[i] for i in range(m))
        lam_hi = max(w[i] / v[i] for i in range(m))
        if lam_hi - lam_lo < tol:
            break
        top = max(w)
        v = [x / top for x in w]
        # cap denominators to keep the iteration affordable
        v = [Fraction(round(x * (1 << wprec)), 1 << wprec) for x in v]
        v = [x if x > 0 else Fraction(1, 1 << wprec) for x in v]
    else:
        raise PrecisionError("power iteration did not converge")
    approx = (lam_lo + lam_hi) / 2 - 1
    root = largest_real_root(char_poly(matrix), Fraction(1, 1 << (prec + 4)))
    if abs(root - approx) > Fraction(1, 1 << (prec - 10 if prec > 20 else 10)):
        raise ContractError("power iteration and root isolation disagree")
    return BigFloat.from_fraction(approx, prec)


# ---------------------------------------------------------------------------
# Pell units


class PellSolution:
    """Smallest (a, b) with a^2 - D b^2 = +-4; epsilon = (a + b sqrt(D))/2."""

    __slots__ = ("D", "a", "b", "norm", "epsilon")

    def __init__(self, D, a, b, norm):
        self.D = D
        self.a = a
        self.b = b
        self.norm = norm
        self.epsilon = QuadraticSurd(a, b, 2, D)

    def __repr__(self):
        return f"PellSolution(D={self.D}, a={self.a}, b={self.b}, norm={self.norm:+d})"


def pell_fundamental(D):
    """Fundamental solution via continued fractions, verified by brute force."""
    if D < 2:
        raise DomainError("need D >= 2")
    s, core = _squarefree_split(D)
    if s != 1:
        raise DomainError(f"{D} is not squarefree")
    cands = []
    cf = cf_expand(QuadraticSurd.sqrt_of(D))
    depth = 2 * len(cf.period) + 4
    for p, q in cf_convergents(cf, depth):
        v = p * p - D * q * q
        if v in (1, -1):
            cands.append((2 * q, 2 * p, 4 * v))
        if v in (4, -4):
            cands.append((q, p, v))
    if D % 4 == 1:
        omega = (QuadraticSurd.from_fraction(1) + QuadraticSurd.sqrt_of(D)) \
            * QuadraticSurd.from_fraction(Fraction(1, 2))
        cfo = cf_expand(omega)
        for p, q in cf_convergents(cfo, 2 * max(1, len(cfo.period)) + 4):
            x = 2 * p - q
            v = x * x - D * q * q
            if v in (4, -4):
                cands.append((q, x, v))
    if not cands:
        raise ContractError("continued fractions produced no unit")
    b, a, norm = min(cands)
    # brute-force minimality up to the found bound
    for bb in range(1, b):
        for target in (4, -4):
            val = D * bb * bb + target
            if val > 0:
                r = isqrt(val)
                if r * r == val:
                    raise ContractError("continued-fraction unit is not minimal")
    if a * a - D * b * b not in (4, -4):
        raise ContractError("candidate does not solve the equation")
    sol = PellSolution(D, a, b, a * a - D * b * b)
    if not (sol.epsilon - QuadraticSurd.from_fraction(1)).sign() > 0:
        raise ContractError("fundamental unit must exceed 1")
    return sol


# ---------------------------------------------------------------------------
# generator values


def generator_complex(alpha, epsilon, digits):
    """(log eps) * e^(2 pi i alpha) at `digits` decimal digits.

    alpha is reduced modulo 1 exactly in surd arithmetic first; the two
    closed forms (scaled phase vs. exponential of the shifted argument) are
    evaluated and compared internally before the value is returned.
    """
    if not (epsilon - QuadraticSurd.from_fraction(1)).sign() > 0:
        raise DomainError("epsilon must exceed 1")
    prec = digits_to_bits(digits)
    af = alpha - QuadraticSurd.from_fraction(alpha.floor())
    af_big = af.to_bigfloat(prec + 64)
    log_eps = bignum.log(epsilon.to_bigfloat(prec + 64), prec + 32)
    z = bignum.exp_2pi_i(af_big, log_eps, prec)
    # second closed form: exp(log log eps + 2 pi i alpha)
    two_pi_a = bignum.pi(prec + 32).scale2(1) * af_big
    w = bignum.cexp(BigComplex(bignum.log(log_eps, prec + 32), two_pi_a))
    gap = (z - w).abs()
    tol = BigFloat.from_fraction(Fraction(1, 10 ** max(1, digits - 8)), 64)
    if not gap < tol:
        raise ContractError("the two closed forms disagree")  # pragma: no cover
    return z


def generator_real(alpha, epsilon, digits):
    """cos(2 pi alpha) * log(eps): the real-coefficient variant."""
    if not (epsilon - QuadraticSurd.from_fraction(1)).sign() > 0:
        raise DomainError("epsilon must exceed 1")
    prec = digits_to_bits(digits)
    af = alpha - QuadraticSurd.from_fraction(alpha.floor())
    af_big = af.to_bigfloat(prec + 64)
    log_eps = bignum.log(epsilon.to_bigfloat(prec + 64), prec + 32)
    two_pi_a = bignum.pi(prec + 32).scale2(1) * af_big
    return (bignum.cos(two_pi_a, prec) * log_eps).round_to(prec)


# ---------------------------------------------------------------------------
# the j value by q-series


def j_invariant(tau, digits):
    """E4^3 / Delta from q-expansions, for im(tau) >= 1/2."""
    prec = digits_to_bits(digits + 10) + 32
    y = tau.im
    if not y > BigFloat.from_fraction(Fraction(499, 1000), 64):
        raise DomainError("imaginary part below 1/2; reduce tau first")
    # q = e^(2 pi i tau); |q| = e^(-2 pi y) <= e^(-pi) < 0.05
    two_pi_y = bignum.pi(prec).scale2(1) * y.round_to(prec)
    r = bignum.exp(-two_pi_y, prec)
    q = bignum.exp_2pi_i(tau.re.round_to(prec + 64), r, prec)
    # truncation: 240 (n+1)^4 r^(n+1) below the target drives N
    y_f = float(Fraction(y.to_fraction()))
    N = int((digits + 16) * 2.302585 / (2 * float_pi * y_f)) + 8
    while 240.0 * (N + 1) ** 4 * pow(2.718281828, -2 * float_pi * y_f * (N + 1)) \
            > 10.0 ** (-(digits + 8)):
        N += 4
    sigma3 = _sigma3_table(N)
    one = BigComplex.from_ints(1, 0, prec)
    e4 = one
    delta_prod = one
    qn = one
    c240 = BigFloat.from_int(240, prec)
    for n in range(1, N + 1):
        qn = qn * q
        e4 = e4 + BigComplex(qn.re * c240 * BigFloat.from_int(sigma3[n], prec),
                             qn.im * c240 * BigFloat.from_int(sigma3[n], prec))
        delta_prod = delta_prod * (one - qn).pow_int(24)
    delta = q * delta_prod
    return (e4.pow_int(3)) / delta


def _sigma3_table(N):
    out = [0] * (N + 1)
    for d in range(1, N + 1):
        c = d ** 3
        for k in range(d, N + 1, d):
            out[k] += c
    return out


# ---------------------------------------------------------------------------
# reduced forms and class polynomials


class QuadraticFormClass:
    """All reduced primitive forms of one negative discriminant."""

    __slots__ = ("disc", "forms")

    def __init__(self, disc, forms):
        self.disc = disc
        self.forms = tuple(forms)

    @property
    def h(self):
        return len(self.forms)

    def __repr__(self):
        return f"QuadraticFormClass(disc={self.disc}, h={self.h})"


def reduced_forms(disc):
    """Exhaustive enumeration of reduced primitive (a, b, c)."""
    if disc >= 0 or disc % 4 not in (0, 1):
        raise DomainError("discriminant must be negative and 0 or 1 mod 4")
    out = []
    amax = isqrt(-disc // 3)
    for a in range(1, amax + 1):
        for b in range(-a, a + 1):
            if (b - disc) % 2:
                continue
            num = b * b - disc
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if b < 0 and (abs(b) == a or a == c):
                continue
            g = _gcd3(a, abs(b), c)
            if g != 1:
                continue
            out.append((a, b, c))
    out.sort()
    return QuadraticFormClass(disc, out)


def _gcd3(a, b, c):
    from math import gcd
    return gcd(gcd(a, b), c)


def suggested_digits(disc):
    """Working digits that keep class-polynomial rounding comfortable."""
    forms = reduced_forms(disc)
    est = sum(float_pi * (abs(disc) ** 0.5) / (a * log(10)) for a, _, _ in forms.forms)
    return int(est) + forms.h + 40


def nearest_int(x):
    """Closest integer to a BigFloat (exact: the shift keeps full precision)."""
    half = BigFloat.from_fraction(Fraction(1, 2), x.prec)
    return (x + half).floor()


def hilbert_class_poly(disc, digits):
    """(integer coefficients c_0..c_h of the class polynomial, max residual).

    Expands the product of (x - j(tau_Q)) over reduced forms at working
    precision and rounds; PrecisionError if any coefficient sits farther
    than 10^(-digits/2) from an integer.
    """
    forms = reduced_forms(disc)
    prec = digits_to_bits(digits) + 64
    root = BigFloat.from_int(-disc, prec).sqrt()
    poly = [BigComplex.from_ints(1, 0, prec)]  # leading coefficient
    for a, b, c in forms.forms:
        den = BigFloat.from_int(2 * a, prec)
        tau = BigComplex(BigFloat.from_int(-b, prec) / den, root / den)
        jv = j_invariant(tau, digits)
        # poly *= (x - jv)
        new = [BigComplex.from_ints(0, 0, prec) for _ in range(len(poly) + 1)]
        for i, coeff in enumerate(poly):
            new[i + 1] = new[i + 1] + coeff
            new[i] = new[i] - coeff * jv
        poly = new
    ints = []
    residual = BigFloat.zero(64)
    for coeff in poly:
        n = nearest_int(coeff.re)
        gap_re = (coeff.re - BigFloat.from_int(n, prec)).abs()
        gap_im = coeff.im.abs()
        for gap in (gap_re, gap_im):
            if residual < gap:
                residual = gap.round_to(64)
        ints.append(n)
    gate = BigFloat.from_fraction(Fraction(1, 10 ** (digits // 2)), 64)
    if not residual < gate:
        raise PrecisionError("class polynomial coefficients failed to round; "
                             "retry with more digits")
    return ints, residual


# ---------------------------------------------------------------------------
# LLL and integer relations


def lattice_reduce(basis, delta=Fraction(99, 100)):
    """LLL with exact rational Gram-Schmidt; returns (reduced, transform).

    The transform is unimodular and satisfies reduced = transform * basis.
    """
    b = [[int(v) for v in row] for row in basis]
    n = len(b)
    if n == 0:
        raise DomainError("empty basis")
    U = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def gram_schmidt():
        mu = [[Fraction(0)] * n for _ in range(n)]
        Bn = [Fraction(0)] * n
        star = []
        for i in range(n):
            vi = [Fraction(x) for x in b[i]]
            for j in range(i):
                if Bn[j] == 0:
                    raise DomainError("basis vectors are linearly dependent")
                mu[i][j] = Fraction(_dot(b[i], star[j])) / Bn[j]
                vi = [x - mu[i][j] * y for x, y in zip(vi, star[j])]
            star.append(vi)
            Bn[i] = _dot(vi, vi)
        if any(x == 0 for x in Bn):
            raise DomainError("basis vectors are linearly dependent")
        return mu, Bn

    mu, Bn = gram_schmidt()
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = _nearest_fraction_int(mu[k][j])
            if q:
                b[k] = [x - q * y for x, y in zip(b[k], b[j])]
                U[k] = [x - q * y for x, y in zip(U[k], U[j])]
                for t in range(j):
                    mu[k][t] -= q * mu[j][t]
                mu[k][j] -= q
        if Bn[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * Bn[k - 1]:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            U[k], U[k - 1] = U[k - 1], U[k]
            mu, Bn = gram_schmidt()
            k = max(k - 1, 1)
    det = _int_det(U)
    if det not in (1, -1):
        raise ContractError("transform is not unimodular")
    return b, U


def _dot(u, v):
    return sum(Fraction(x) * Fraction(y) for x, y in zip(u, v))


def _nearest_fraction_int(fr):
    return (fr.numerator * 2 + fr.denominator) // (2 * fr.denominator)


def _int_det(M):
    """Exact determinant by fraction-free elimination on a copy."""
    n = len(M)
    A = [[Fraction(v) for v in row] for row in M]
    det = Fraction(1)
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if A[r][col]:
                pivot = r
                break
        if pivot is None:
            return 0
        if pivot != col:
            A[col], A[pivot] = A[pivot], A[col]
            det = -det
        det *= A[col][col]
        inv = 1 / A[col][col]
        for r in range(col + 1, n):
            if A[r][col]:
                f = A[r][col] * inv
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    assert det.denominator == 1
    return det.numerator


class Recognition:
    """Outcome of the minimal-polynomial probe."""

    __slots__ = ("recognized", "coeffs", "residual", "gate_digits")

    def __init__(self, recognized, coeffs, residual, gate_digits):
        self.recognized = recognized
        self.coeffs = coeffs
        self.residual = residual
        self.gate_digits = gate_digits

    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else None

    def __repr__(self):
        if not self.recognized:
            return "Recognition(unrecognized)"
        return f"Recognition({self.coeffs})"


def recognize_min_poly(x, max_degree, height_bound, digits):
    """Integer-relation probe for the minimal polynomial of x.

    The relation lattice is scaled by 10^(digits/2) ("discovery"), and a
    candidate only counts when its evaluation at x, carried out at the full
    `digits`, falls below the gate 10^(-digits/2).  A relation tuned to the
    discovery lattice cannot beat its own rounding noise at the higher
    precision, so non-algebraic inputs are rejected, while any true relation
    of height below 10^(digits/2) survives both stages.
    """
    if digits < max(16, 5 * max_degree):
        raise DomainError("too few digits for this degree bound")
    complex_input = isinstance(x, BigComplex)
    wprec = digits_to_bits(digits) + 64
    if complex_input:
        z = BigComplex(x.re.round_to(min(x.prec, wprec)), x.im.round_to(min(x.prec, wprec)))
    else:
        z = BigComplex(x.round_to(min(x.prec, wprec)), BigFloat.zero(min(x.prec, wprec)))
    disc_digits = digits // 2
    scale = BigFloat.from_int(10 ** disc_digits, wprec)
    powers = [BigComplex.from_ints(1, 0, z.prec)]
    for _ in range(max_degree):
        powers.append(powers[-1] * z)
    rows = []
    for i in range(max_degree + 1):
        row = [0] * (max_degree + 1)
        row[i] = 1
        row.append(nearest_int(powers[i].re * scale))
        if complex_input:
            row.append(nearest_int(powers[i].im * scale))
        rows.append(row)
    reduced, _ = lattice_reduce(rows)
    gate = BigFloat.from_fraction(Fraction(1, 10 ** (digits // 2)), 64)
    if z.abs() < gate:
        # the input is zero at this resolution; its minimal polynomial is x
        return Recognition(True, [0, 1], z.abs().round_to(64), digits // 2)
    best = None
    for vec in reduced:
        coeffs = vec[: max_degree + 1]
        if all(c == 0 for c in coeffs):
            continue
        coeffs = _normalise_poly(coeffs)
        height = max(abs(c) for c in coeffs)
        if height > height_bound:
            continue
        value = BigComplex.from_ints(0, 0, z.prec)
        for c in reversed(coeffs):
            value = value * z + BigComplex.from_ints(c, 0, z.prec)
        residual = value.abs()
        if not residual < gate:
            continue
        # every gate survivor annihilates x, so the least degree (then least
        # height) survivor is the minimal polynomial up to content
        deg = len(coeffs) - 1
        key = (deg, height, tuple(coeffs))
        if best is None or key < best[0]:
            best = (key, coeffs, residual)
    if best is None:
        return Recognition(False, None, None, digits // 2)
    return Recognition(True, best[1], best[2], digits // 2)


def _normalise_poly(coeffs):
    from math import gcd
    trimmed = list(coeffs)
    while trimmed and trimmed[-1] == 0:
        trimmed.pop()
    # a minimal polynomial of a nonzero number has a nonzero constant term
    while len(trimmed) > 1 and trimmed[0] == 0:
        trimmed.pop(0)
    g = 0
    for c in trimmed:
        g = gcd(g, abs(c))
    if g > 1:
        trimmed = [c // g for c in trimmed]
    if trimmed[-1] < 0:
        trimmed = [-c for c in trimmed]
    return trimmed


# ---------------------------------------------------------------------------
# the experiment


EPSILON_ROUTE_NOTE = (
    "epsilon is the fundamental unit of the real quadratic order (smallest "
    "solution of x^2 - D y^2 = +-4).  The alternative reading, a "
    "Perron-Frobenius eigenvalue of a non-negative integer matrix of "
    "determinant +-1 whose characteristic polynomial is the minimal "
    "polynomial of sqrt(D), is unsatisfiable: that polynomial has constant "
    "term -D, not +-1."
)


def discriminant_for(D, convention="auto"):
    if convention == "4D":
        return -4 * D
    if convention == "D":
        if (-D) % 4 not in (0, 1):
            raise DomainError("-D is not a discriminant; use the 4D convention")
        return -D
    if convention == "auto":
        return -D if D % 4 == 3 else -4 * D
    raise DomainError(f"unknown discriminant convention {convention!r}")


def generator_experiment(D, digits=100, max_degree=8, height_bound=10 ** 12,
                         disc_convention="auto"):
    """Full pipeline for one squarefree D; returns a JSON-ready report dict.

    The report records inputs, conventions, gates and outcomes.  The
    recognition verdict is whatever the probe produced; the class
    polynomial is attached for degree comparison only.
    """
    s, _core = _squarefree_split(D)
    if D < 2 or s != 1:
        raise DomainError("need squarefree D >= 2")
    pell = pell_fundamental(D)
    alpha = QuadraticSurd.sqrt_of(D)
    beta = generator_complex(alpha, pell.epsilon, digits)
    prec = digits_to_bits(digits)
    log_eps = bignum.log(pell.epsilon.to_bigfloat(prec + 64), prec)
    modulus_gap = (beta.abs() - log_eps).abs()
    rec = recognize_min_poly(beta, max_degree, height_bound, digits)
    disc = discriminant_for(D, disc_convention)
    hcp_digits = max(digits, suggested_digits(disc))
    class_coeffs, residual = hilbert_class_poly(disc, hcp_digits)
    h = len(class_coeffs) - 1
    degree_compatible = None
    if rec.recognized:
        degree_compatible = (2 * h) % rec.degree() == 0
    report = {
        "inputs": {
            "D": D,
            "digits": digits,
            "max_degree": max_degree,
            "height_bound": height_bound,
            "disc_convention": disc_convention,
        },
        "alpha": alpha.to_string(),
        "epsilon": pell.epsilon.to_string(),
        "pell": {"a": pell.a, "b": pell.b, "norm": pell.norm},
        "epsilon_route": "pell-fundamental-unit",
        "epsilon_route_discrepancy": True,
        "epsilon_route_note": EPSILON_ROUTE_NOTE,
        "beta": {"re": beta.re.to_decimal(digits), "im": beta.im.to_decimal(digits)},
        "beta_modulus_matches_log_epsilon": bool(
            modulus_gap < BigFloat.from_fraction(Fraction(1, 10 ** max(1, digits - 10)), 64)),
        "recognition": {
            "verdict": "recognized" if rec.recognized else "unrecognized",
            "polynomial": rec.coeffs,
            "residual": rec.residual.to_decimal(10) if rec.residual is not None else None,
            "residual_gate": f"1e-{rec.gate_digits}",
        },
        "class_polynomial": {
            "discriminant": disc,
            "class_number": h,
            "coefficients": class_coeffs,
            "rounding_residual": residual.to_decimal(6),
            "digits": hcp_digits,
        },
        "degree_compatible_with_class_field": degree_compatible,
        "note": "the report records numerical outcomes only; no field "
                "isomorphism is asserted",
    }
    return report


def report_to_json(report):
    return json.dumps(report, sort_keys=True, indent=2)
