"""Batch command line: every pipeline behind one reproducible front end.

Each run echoes its full configuration into the output (JSON by default),
so byte-identical reruns are guaranteed by construction.  Exit codes:
0 success, 2 precondition violation, 3 precision or resource limit,
64 usage errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import class_field, cluster, drinfeld, ff_poly, nc_torus
from .bignum import BigComplex, BigFloat, digits_to_bits
from .errors import ContractError, DomainError, PrecisionError, ResourceError


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _field_from_q(q):
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        p = q
    e = 0
    n = q
    while n > 1 and n % p == 0:
        n //= p
        e += 1
    if n != 1 or e == 0:
        raise DomainError(f"{q} is not a prime power")
    return ff_poly.FieldSpec.get(p, e)


def _parse_ints(text):
    return [int(x) for x in text.split(",") if x.strip()]


def _parse_matrix2(text):
    vals = _parse_ints(text)
    if len(vals) != 4:
        raise DomainError("matrix needs four comma-separated integers a,b,c,d")
    return ((vals[0], vals[1]), (vals[2], vals[3]))


def _parse_square_matrix(text):
    rows = [_parse_ints(r) for r in text.split(";") if r.strip()]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DomainError("matrix rows must be 'a,b;c,d;...' and square")
    return rows


_TAU_SURD = re.compile(r"^\(?\s*(?P<a>-?\d+)?\s*\+?\s*i\*?sqrt\((?P<n>\d+)\)\s*\)?"
                       r"(?:/(?P<c>\d+))?$")


def _parse_tau(text, prec):
    """Upper-half-plane points: 'i', 'i*sqrt(N)', '(A+i*sqrt(N))/C' or 'x+yi'."""
    t = text.strip().replace(" ", "")
    if t == "i":
        return BigComplex(BigFloat.zero(prec), BigFloat.from_int(1, prec))
    m = _TAU_SURD.match(t)
    if m:
        a = int(m.group("a") or 0)
        n = int(m.group("n"))
        c = int(m.group("c") or 1)
        den = BigFloat.from_int(c, prec)
        return BigComplex(BigFloat.from_int(a, prec) / den,
                          BigFloat.from_int(n, prec).sqrt() / den)
    m = re.match(r"^(?P<re>[+-]?[\d.eE+-]+)?(?P<im>[+-][\d.eE+-]*)i$", t)
    if m:
        re_part = BigFloat.from_decimal(m.group("re") or "0", prec)
        im_text = m.group("im")
        if im_text in ("+", "-"):
            im_text += "1"
        return BigComplex(re_part, BigFloat.from_decimal(im_text, prec))
    raise DomainError(f"cannot parse tau {text!r}")


# ---------------------------------------------------------------------------
# subcommand handlers; each returns the result dict


def _run_fermat(args):
    field = _field_from_q(args.q)
    P = ff_poly.FqPolynomial.from_string(field, args.P)
    a = ff_poly.FqPolynomial.from_string(field, args.a)
    holds = ff_poly.fermat_check(a, P)
    return {"q": args.q, "P": P.to_string(), "a": a.to_string(),
            "exponent": field.q ** int(P.degree) - 1, "holds": holds}


def _run_factor(args):
    field = _field_from_q(args.q)
    f = ff_poly.FqPolynomial.from_string(field, args.poly)
    pieces, unit = ff_poly.factor(f, seed=args.seed)
    return {"q": args.q, "poly": f.to_string(), "unit": unit,
            "factors": [{"factor": g.to_string(with_field=False), "multiplicity": m}
                        for g, m in pieces]}


def _run_carlitz(args):
    field = _field_from_q(args.q)
    D = drinfeld.carlitz(field.p, field.e)
    out = {"q": args.q, "rho_T": D.rho_T.to_string(), "rank": D.rank,
           "trivial": drinfeld.is_trivial(D)}
    if args.a:
        a = ff_poly.FqPolynomial.from_string(field, args.a)
        out["a"] = a.to_string()
        out["rho_a"] = drinfeld.rho(D, a).to_string()
    return out


def _run_torsion(args):
    field = _field_from_q(args.q)
    return drinfeld.verification_report(field.p, field.e, args.P, args.a,
                                        m=args.m)


def _run_cluster(args):
    word = _parse_ints(args.word) if args.word else []
    seed = cluster.markov_seed()
    final_vars = cluster.laurent_expand(seed, word, bound=args.bound)
    final = cluster.Seed(final_vars, _mutated_B(seed, word))
    out = {"seed": seed.to_json_dict(), "word": word, "final": final.to_json_dict()}
    if args.specialize:
        values = [Fraction(v) for v in args.specialize.split(",")]
        specialized = [cluster.specialize(v, values) for v in final_vars]
        out["specialized"] = [str(v) for v in specialized]
        if len(specialized) == 3:
            x, y, z = specialized
            out["markov_invariant_holds"] = bool(x * x + y * y + z * z == 3 * x * y * z)
    if args.level_p:
        out["level_p"] = {"p": args.level_p,
                          "flags": [cluster.is_level_p(v, args.level_p)
                                    for v in final_vars]}
    return out


def _mutated_B(seed, word):
    cur = seed
    for k in word:
        cur = cluster.mutate(cur, k)
    return cur.B


def _run_torus(args):
    theta = nc_torus.QuadraticSurd.from_string(args.theta)
    cf = nc_torus.cf_expand(theta, max_terms=args.max_terms)
    out = {"theta": theta.to_string(),
           "cf": {"display": nc_torus.cf_to_string(cf),
                  "preperiod": list(cf.preperiod), "period": list(cf.period)}}
    try:
        data = nc_torus.effros_shen(cf, args.depth)
        out["effros_shen"] = {"depth": args.depth,
                              "matrices": [list(map(list, m)) for m in data.matrices],
                              "stationary": data.is_stationary()}
    except DomainError as exc:
        out["effros_shen"] = {"depth": args.depth, "error": str(exc)}
    if args.theta2:
        other = nc_torus.QuadraticSurd.from_string(args.theta2)
        res = nc_torus.morita_equivalent(theta, other)
        out["morita"] = {
            "theta2": other.to_string(),
            "equivalent": res.equivalent,
            "witness": [list(r) for r in res.witness] if res.witness else None,
            "witness_det": res.witness_det,
            "sl2_witness": [list(r) for r in res.sl2_witness] if res.sl2_witness else None,
        }
    if args.matrix:
        mat = _parse_matrix2(args.matrix)
        lam = nc_torus.dominant_eigenvalue(mat)
        value = nc_torus.connes_invariant(mat, digits_to_bits(args.digits))
        out["connes"] = {"matrix": [list(r) for r in mat],
                         "eigenvalue": lam.to_string(),
                         "log": value.to_decimal(args.digits)}
    return out


def _run_pell(args):
    sol = class_field.pell_fundamental(args.D)
    return {"D": args.D, "a": sol.a, "b": sol.b, "norm": sol.norm,
            "epsilon": sol.epsilon.to_string()}


def _run_pf(args):
    if args.coeffs:
        matrix = class_field.CompanionMatrix(_parse_ints(args.coeffs)).entries
    elif args.matrix:
        matrix = _parse_square_matrix(args.matrix)
    else:
        raise DomainError("provide --coeffs for a companion matrix or --matrix")
    value = class_field.perron_frobenius(matrix, digits_to_bits(args.digits))
    return {"matrix": matrix, "eigenvalue": value.to_decimal(args.digits)}


def _run_jinv(args):
    prec = digits_to_bits(args.digits) + 64
    tau = _parse_tau(args.tau, prec)
    j = class_field.j_invariant(tau, args.digits)
    n = class_field.nearest_int(j.re)
    gap = (j.re - BigFloat.from_int(n, j.re.prec)).abs()
    imag = j.im.abs()
    dist = gap if gap > imag else imag
    return {"tau": args.tau, "digits": args.digits,
            "j_re": j.re.to_decimal(args.digits), "j_im": j.im.to_decimal(args.digits),
            "nearest_integer": n, "integer_distance": dist.to_decimal(6)}


def _run_hcf(args):
    if args.disc is not None:
        disc = args.disc
    elif args.D is not None:
        disc = class_field.discriminant_for(args.D, args.disc_convention)
    else:
        raise DomainError("provide --disc or --D")
    digits = args.digits or class_field.suggested_digits(disc)
    coeffs, residual = class_field.hilbert_class_poly(disc, digits)
    forms = class_field.reduced_forms(disc)
    return {"disc": disc, "digits": digits, "class_number": forms.h,
            "forms": [list(f) for f in forms.forms],
            "coefficients": coeffs, "residual": residual.to_decimal(6)}


def _run_corollary12(args):
    return class_field.generator_experiment(
        args.D, digits=args.digits, max_degree=args.max_degree,
        height_bound=args.height_bound, disc_convention=args.disc_convention)


# ---------------------------------------------------------------------------
# wiring


def build_parser():
    parser = Parser(prog="abelex", description=__doc__)
    sub = parser.add_subparsers(dest="command")

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("json", "table"), default="json")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for any randomized routine")
        return p

    p = add("fermat", "residue power identity in GF(q)[T]")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--P", required=True)
    p.add_argument("--a", required=True)

    p = add("factor", "factor a polynomial over GF(q)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--poly", required=True)

    p = add("carlitz", "the canonical rank-1 module, optionally applied to a")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--a")

    p = add("torsion", "division points, structure and Frobenius residue")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--P", required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--m", type=int, default=None)

    p = add("cluster", "mutate the rank-3 seed along a word")
    p.add_argument("--word", default="")
    p.add_argument("--specialize")
    p.add_argument("--level-p", dest="level_p", type=int)
    p.add_argument("--bound", type=int, default=8)

    p = add("torus", "continued fraction, Bratteli data, tail equivalence, log eigenvalue")
    p.add_argument("--theta", required=True)
    p.add_argument("--theta2")
    p.add_argument("--matrix")
    p.add_argument("--depth", type=int, default=5)
    p.add_argument("--digits", type=int, default=30)
    p.add_argument("--max-terms", dest="max_terms", type=int, default=256)

    p = add("pell", "smallest solution of x^2 - D y^2 = +-4")
    p.add_argument("--D", type=int, required=True)

    p = add("pf", "dominant eigenvalue of a non-negative matrix")
    p.add_argument("--coeffs")
    p.add_argument("--matrix")
    p.add_argument("--digits", type=int, default=30)

    p = add("jinv", "modular j value from the q-series")
    p.add_argument("--tau", required=True)
    p.add_argument("--digits", type=int, default=60)

    p = add("hcf", "class polynomial from reduced forms")
    p.add_argument("--disc", type=int)
    p.add_argument("--D", type=int)
    p.add_argument("--digits", type=int)
    p.add_argument("--disc-convention", dest="disc_convention",
                   choices=("auto", "4D", "D"), default="auto")

    p = add("corollary12", "generator experiment: Pell unit, angle, "
                           "algebraicity probe, class-polynomial comparison")
    p.add_argument("--D", type=int, required=True)
    p.add_argument("--digits", type=int, default=100)
    p.add_argument("--max-degree", dest="max_degree", type=int, default=8)
    p.add_argument("--height-bound", dest="height_bound", type=int, default=10 ** 12)
    p.add_argument("--disc-convention", dest="disc_convention",
                   choices=("auto", "4D", "D"), default="auto")

    return parser


HANDLERS = {
    "fermat": _run_fermat,
    "factor": _run_factor,
    "carlitz": _run_carlitz,
    "torsion": _run_torsion,
    "cluster": _run_cluster,
    "torus": _run_torus,
    "pell": _run_pell,
    "pf": _run_pf,
    "jinv": _run_jinv,
    "hcf": _run_hcf,
    "corollary12": _run_corollary12,
}


def _flatten(prefix, value, out):
    if isinstance(value, dict):
        for k in sorted(value):
            _flatten(f"{prefix}.{k}" if prefix else str(k), value[k], out)
    elif isinstance(value, (list, tuple)):
        out.append((prefix, json.dumps(value)))
    else:
        out.append((prefix, value))


def render(payload, fmt):
    if fmt == "json":
        return json.dumps(payload, sort_keys=True, indent=2, default=str)
    lines = []
    flat = []
    _flatten("", payload, flat)
    width = max(len(k) for k, _ in flat)
    for k, v in flat:
        lines.append(f"{k.ljust(width)}  {v}")
    return "\n".join(lines)


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 64
    if not args.command:
        parser.print_usage(sys.stderr)
        return 64
    config = {k: v for k, v in sorted(vars(args).items()) if k not in ("command",)}
    try:
        result = HANDLERS[args.command](args)
    except DomainError as exc:
        print(f"precondition error: {exc}", file=sys.stderr)
        return 2
    except (PrecisionError, ResourceError) as exc:
        print(f"precision/resource error: {exc}", file=sys.stderr)
        return 3
    except ContractError as exc:
        print(f"internal contract violation: {exc}", file=sys.stderr)
        return 1
    payload = {"command": args.command, "config": config, "result": result}
    print(render(payload, args.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
