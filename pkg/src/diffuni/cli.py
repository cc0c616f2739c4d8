"""Command line interface: ``diffuni <command> ...`` or ``python -m diffuni``."""

from __future__ import annotations

import argparse
import json
import sys
import time

from .bounds import min_n_guarantee
from .diffop import compose_talpha, d_alpha, l_alpha
from .field import format_elem, parse_elem, parse_field
from .harness import ExperimentConfig, run_experiment, verify_paper_tables
from .errors import DiffUniError
from .morse import count_non_morse_alphas, is_morse
from .mset import gen_families, in_M, condition_xm, scan_l_primes, scan_M
from .poly import format_poly, parse_poly
from .uniformity import achieving_fraction, ddt_row, delta


def _emit(obj):
    print(json.dumps(obj, sort_keys=True))


def _n_range(s: str) -> list[int]:
    if ".." in s:
        lo, hi = s.split("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(v) for v in s.split(",")]


def cmd_lalpha(a):
    ctx = parse_field(a.field)
    f = parse_poly(ctx, a.f)
    alpha = parse_elem(ctx, a.alpha)
    res = l_alpha(f, alpha)
    _emit({
        "g": format_poly(res.g),
        "b_top": [format_elem(b) for b in res.b_top],
        "checks": {"roundtrip": compose_talpha(res.g, alpha) == d_alpha(f, alpha)},
    })


def _verdict_json(v):
    out = {"m": v.m, "member": v.member, "t": v.t, "n0": v.n0}
    if v.witness:
        w = v.witness
        out["witness"] = {"i": w.i, "j": w.j, "zeta1": format_elem(w.zeta1),
                          "zeta2": format_elem(w.zeta2), "field": f"{w.n0}:{w.modulus:x}"}
    return out


def cmd_morse(a):
    ctx = parse_field(a.field)
    if a.action == "check":
        rep = is_morse(parse_poly(ctx, a.g))
        _emit({
            "morse": rep.is_morse, "cond_a": rep.cond_a, "cond_b": rep.cond_b, "cond_c": rep.cond_c,
            "witness_a": format_poly(rep.witness_a) if rep.witness_a is not None else None,
            "witness_b": format_poly(rep.witness_b) if rep.witness_b is not None else None,
        })
        return 0
    f = parse_poly(ctx, a.f)
    scan = count_non_morse_alphas(f, workers=a.workers)
    out = {"count": scan.count, "cond_a_failures": len(scan.a_failures),
           "cond_b_failures": len(scan.b_failures)}
    if a.json:
        out["bad_alphas"] = [format_elem(x) for x in scan.bad_alphas]
    _emit(out)


def cmd_mset(a):
    if a.action == "check":
        _emit(_verdict_json(in_M(a.m) if a.m % 2 else condition_xm(a.m)))
    elif a.action == "scan":
        verdicts = scan_M(a.limit)
        if a.json:
            for v in verdicts:
                _emit(_verdict_json(v))
        else:
            _emit({"limit": a.limit, "non_members": [v.m for v in verdicts if not v.member]})
    elif a.action == "lprime":
        res = scan_l_primes(a.limit)
        _emit({"limit": a.limit, "ok": [l for l, ok in res if ok],
               "failures": [l for l, ok in res if not ok]})
    else:
        kind = {"first": "first_family", "second": "second_family"}.get(a.kind, a.kind)
        for e in gen_families(kind, l=a.l, kmin=a.kmin, kmax=a.kmax, smax=a.smax,
                              cap=a.cap, variant=a.variant):
            _emit({"m": e.m, "mod8": e.mod8, "provenance": e.provenance,
                   "expected_mod8": e.expected_mod8, "flagged": e.flagged})


def cmd_delta(a):
    ctx = parse_field(a.field)
    f = parse_poly(ctx, a.f)
    t0 = time.perf_counter()
    res = delta(f, exact_pairs=a.exact_pairs)
    out = {"delta": res.delta, "achieving_pairs": res.achieving_pairs, "partial": res.partial}
    if not res.partial:
        out["fraction"] = str(achieving_fraction(f) if not a.exact_pairs else
                              _frac(res.achieving_pairs, ctx.q))
    out["runtime_ms"] = round(1000 * (time.perf_counter() - t0), 3)
    _emit(out)


def _frac(p, q):
    from fractions import Fraction
    return Fraction(p, q * q)


def cmd_ddt(a):
    ctx = parse_field(a.field)
    f = parse_poly(ctx, a.f)
    alphas = [parse_elem(ctx, a.alpha)] if a.alpha else range(1, ctx.q)
    for al in alphas:
        _emit({"alpha": format_elem(al),
               "row": {format_elem(b): c for b, c in ddt_row(f, al).items()}})


def cmd_bounds(a):
    rep = min_n_guarantee(a.m)
    if a.json:
        _emit(rep.as_dict())
    else:
        print(f"m={rep.m} d={rep.d} morse_alpha_bound={rep.morse_alpha_bound} min_n={rep.min_n}")


def cmd_verify(a):
    if a.what == "tables":
        rep = verify_paper_tables()
        for c in rep.checks:
            if not c.ok or a.verbose:
                _emit({"table": c.table, "item": c.item, "expected": c.expected,
                       "got": c.got, "ok": c.ok})
        _emit({"tables_ok": rep.ok, "checked": len(rep.checks),
               "mismatches": len(rep.failures())})
        return 0 if rep.ok else 1
    mode = {"theorem": "theorem_max_uniformity", "conjecture": "conjecture_fraction",
            "census": "morse_census"}[a.what]
    cfg = ExperimentConfig(m=a.m, n_range=_n_range(a.n), samples=a.samples, seed=a.seed,
                           mode=mode, allow_non_member=a.allow_non_member,
                           restrict=a.restrict, exhaustive=a.exhaustive,
                           workers=a.workers, coherence=a.coherence)
    rec = run_experiment(cfg)
    sys.stdout.write(rec.to_csv() if a.csv else rec.to_jsonl())
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="diffuni", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("lalpha", help="decompose D_alpha f through x(x+alpha)")
    s.add_argument("--field", required=True)
    s.add_argument("--f", required=True, help="hex coefficients, highest degree first")
    s.add_argument("--alpha", required=True)
    s.set_defaults(func=cmd_lalpha)

    s = sub.add_parser("morse", help="Morse checks")
    ms = s.add_subparsers(dest="action", required=True)
    c = ms.add_parser("check")
    c.add_argument("--field", required=True)
    c.add_argument("--g", required=True)
    c = ms.add_parser("scan")
    c.add_argument("--field", required=True)
    c.add_argument("--f", required=True)
    c.add_argument("--json", action="store_true", help="include the bad alphas")
    c.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_morse)

    s = sub.add_parser("mset", help="membership in M and exponent families")
    ms = s.add_subparsers(dest="action", required=True)
    c = ms.add_parser("check")
    c.add_argument("--m", type=int, required=True)
    c = ms.add_parser("scan")
    c.add_argument("--limit", type=int, required=True)
    c.add_argument("--json", action="store_true")
    c = ms.add_parser("lprime")
    c.add_argument("--limit", type=int, required=True)
    c = ms.add_parser("families")
    c.add_argument("--kind", required=True,
                   choices=["pow2", "two_pows", "l_power", "first", "second",
                            "first_family", "second_family"])
    c.add_argument("--l", type=int)
    c.add_argument("--kmin", type=int)
    c.add_argument("--kmax", type=int, default=5)
    c.add_argument("--smax", type=int, default=3)
    c.add_argument("--cap", type=int)
    c.add_argument("--variant", choices=["abstract", "corollary"], default="abstract")
    s.set_defaults(func=cmd_mset)

    s = sub.add_parser("delta", help="differential uniformity")
    s.add_argument("--field", required=True)
    s.add_argument("--f", required=True)
    s.add_argument("--exact-pairs", action="store_true")
    s.set_defaults(func=cmd_delta)

    s = sub.add_parser("ddt", help="difference distribution table rows")
    s.add_argument("--field", required=True)
    s.add_argument("--f", required=True)
    s.add_argument("--alpha")
    s.set_defaults(func=cmd_ddt)

    s = sub.add_parser("bounds", help="explicit constants")
    bs = s.add_subparsers(dest="action", required=True)
    c = bs.add_parser("min-n")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("verify", help="experiments and golden tables")
    s.add_argument("what", choices=["theorem", "conjecture", "census", "tables"])
    s.add_argument("--m", type=int, default=7)
    s.add_argument("--n", default="8", help="e.g. 10..12 or 6,8")
    s.add_argument("--samples", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--restrict", choices=["degenerate", "generic"])
    s.add_argument("--exhaustive", action="store_true")
    s.add_argument("--allow-non-member", action="store_true")
    s.add_argument("--coherence", action="store_true")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--csv", action="store_true")
    s.add_argument("--verbose", action="store_true")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args) or 0
    except DiffUniError as e:
        print(f"diffuni: {type(e).__name__}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
