"""Command-line front end.

Exit codes: 0 success, 1 domain error (e.g. OutsideStableRange), 2 usage or
group-name errors. Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys

from . import cartan, diophantine, homotopy, poincare, screener
from .cartan import CartanClass, GroupNameError, parse_group

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class _Usage(Exception):
    pass


def _group(text: str) -> cartan.CartanGroup:
    try:
        return parse_group(text)
    except GroupNameError as exc:
        raise _Usage(str(exc)) from exc


def _group_json(g: cartan.CartanGroup) -> dict:
    return {"name": g.name, "cartan": g.cartan_name}


def _seed(text: str) -> int:
    if text in ("+", "+1", "1"):
        return 1
    if text in ("-", "-1"):
        return -1
    raise argparse.ArgumentTypeError(f"seed must be + or -, got {text!r}")


def _cartan_class(text: str) -> CartanClass:
    try:
        return CartanClass(text.upper())
    except ValueError:
        raise argparse.ArgumentTypeError(f"class must be one of A, B, C, D, got {text!r}")


# each handler returns (json_payload, text)

def cmd_dim(args):
    g = _group(args.group)
    d = cartan.dimension(g)
    return {"group": _group_json(g), "dimension": d}, f"dim {g.name} ({g.cartan_name}) = {d}"


def cmd_exponents(args):
    g = _group(args.group)
    ex = cartan.exponents(g)
    return (
        {"group": _group_json(g), "exponents": ex},
        f"exponents of {g.name} ({g.cartan_name}): {', '.join(map(str, ex))}",
    )


def cmd_poincare(args):
    g = _group(args.group)
    p = poincare.poincare_polynomial(g)
    factors = "".join(f"(1+t^{m})" for m in poincare.factor_degrees(g))
    text = f"P({g.name}, t) = {factors}\n  = {p}"
    return {"group": _group_json(g), "degree": p.degree, "coefficients": p.to_json()}, text


def cmd_betti(args):
    g = _group(args.group)
    b = poincare.betti(g, args.q)
    return {"group": _group_json(g), "q": args.q, "betti": str(b)}, f"b_{args.q}({g.name}) = {b}"


def cmd_homotopy(args):
    g = _group(args.group)
    value = homotopy.pi(g, args.k)
    bound = homotopy.stable_range_bound(g)
    return (
        {"group": _group_json(g), "k": args.k, "stable_bound": bound, "pi": value.to_json()},
        f"pi_{args.k}({g.name}) = {value}   (stable for k <= {bound})",
    )


def cmd_rn(args):
    sols = diophantine.solve_rn_bruteforce(args.max_b)
    lines = [f"2^b = k^2 + 7, b <= {args.max_b}: {len(sols)} solutions", "    b  k"]
    lines += [f"{s.b:5d}  {s.k}" for s in sols]
    return {"max_b": args.max_b, "solutions": [s.to_json() for s in sols]}, "\n".join(lines)


def cmd_qubit_scan(args):
    matches = diophantine.qubit_rotation_matches(args.max_n)
    lines = [f"dim SU(2^n) = dim SO(N), n <= {args.max_n}:", "    n      N      k"]
    lines += [f"{m.n:5d}  {m.N:5d}  {m.k:5d}" for m in matches]
    return {"max_n": args.max_n, "matches": [m.to_json() for m in matches]}, "\n".join(lines)


def cmd_pell(args):
    sols = diophantine.pell_enumerate(args.seed, args.count)
    sign = "+" if args.seed > 0 else "-"
    lines = [f"8d^2 = k^2 + 7 from seed (1, {sign}1):", "  step  d  k"]
    lines += [f"{i:6d}  {s.d}  {s.k}" for i, s in enumerate(sols, 1)]
    return {"seed": args.seed, "solutions": [s.to_json() for s in sols]}, "\n".join(lines)


def _report_text(r: screener.ScreeningReport) -> str:
    lines = [f"{r.group_a.name} vs {r.group_b.name}: {r.verdict.value}"]
    lines.append(f"  dimension   {r.dim_a} vs {r.dim_b}" + ("" if r.dims_match else "  (differ)"))
    if r.poly.equal:
        lines.append("  Poincare    equal")
    else:
        lines.append(f"  Poincare    differ first at t^{r.poly.degree}: b = {r.poly.a} vs {r.poly.b}")
    if r.homotopy_range is None:
        lines.append("  homotopy    skipped (no common stable range with k >= 2)")
    elif r.homotopy_witness is None:
        lo, hi = r.homotopy_range
        lines.append(f"  homotopy    agree for {lo} <= k <= {hi}")
    else:
        w = r.homotopy_witness
        lines.append(f"  homotopy    pi_{w.k}: {w.value_a} vs {w.value_b}")
    return "\n".join(lines)


def cmd_screen(args):
    r = screener.screen(_group(args.group_a), _group(args.group_b))
    return r.to_json(), _report_text(r)


def cmd_class_scan(args):
    try:
        pairs = screener.scan_class_pairs(args.x, args.y, args.max_rank)
    except ValueError as exc:
        raise _Usage(str(exc)) from exc
    x, y = args.x.value, args.y.value
    payload = {"class_x": x, "class_y": y, "max_rank": args.max_rank,
               "pairs": [list(p) for p in pairs]}
    text = f"equal Poincare polynomials {x}_i = {y}_j, ranks <= {args.max_rank}: " + (
        ", ".join(f"({x}{i}, {y}{j})" for i, j in pairs) or "none"
    )
    return payload, text


HEADLINE_PAIRS = (("SU(2)", "SO(3)"), ("SU(4)", "SO(6)"), ("SU(64)", "SO(91)"))


def cmd_paper(args):
    rn = diophantine.solve_rn_bruteforce(64)
    scan = screener.scan_qubit_rotations(20)
    reports = [screener.screen(parse_group(a), parse_group(b)) for a, b in HEADLINE_PAIRS]
    ab = screener.scan_class_pairs("A", "B", 100)
    ad = screener.scan_class_pairs("A", "D", 100)
    pell = diophantine.pell_enumerate(-1, 2)

    cand = screener.Verdict.CANDIDATE_HOMEOMORPHISM
    checks = {
        "rn_solutions": [(s.b, s.k) for s in rn] == [(3, 1), (4, 3), (5, 5), (7, 11), (15, 181)],
        "qubit_matches": [(m.n, m.N) for m, _ in scan] == [(1, 3), (2, 6), (6, 91)],
        "su2_so3_candidate": reports[0].verdict is cand,
        "su4_so6_candidate": reports[1].verdict is cand,
        "su64_so91_distinct": (
            reports[2].verdict is screener.Verdict.TOPOLOGICALLY_DISTINCT
            and reports[2].poly.degree == 5
            and reports[2].homotopy_witness is not None
            and reports[2].homotopy_witness.k == 5
        ),
        "a_b_unique": ab == [(1, 1)],
        "a_d_unique": ad == [(3, 3)],
        "pell_d11_k31": (pell[-1].d, pell[-1].k) == (11, 31),
    }
    payload = {
        "rn": [s.to_json() for s in rn],
        "qubit_scan": [{"match": m.to_json(), "report": r.to_json()} for m, r in scan],
        "screens": [r.to_json() for r in reports],
        "class_scan": {"A-B": [list(p) for p in ab], "A-D": [list(p) for p in ad]},
        "pell_minus": [s.to_json() for s in pell],
        "checks": checks,
        "all_ok": all(checks.values()),
    }
    lines = [
        "Ramanujan-Nagell solutions (b, k), b <= 64: "
        + ", ".join(f"({s.b}, {s.k})" for s in rn),
        "Qubit counts with dim SU(2^n) = dim SO(N), n <= 20: "
        + ", ".join(f"n={m.n} -> SO({m.N})" for m, _ in scan),
        "",
    ]
    lines += [_report_text(r) for r in reports]
    lines += [
        "",
        f"A_i / B_j with equal Poincare polynomial (rank <= 100): {ab}",
        f"A_i / D_j with equal Poincare polynomial (rank <= 100): {ad}",
        f"8d^2 = k^2 + 7, seed (1, -1), step 2: d={pell[-1].d}, k={pell[-1].k}, "
        f"N={(pell[-1].k + 1) // 2}",
        "",
    ]
    lines += [f"[{'PASS' if ok else 'FAIL'}] {name}" for name, ok in checks.items()]
    lines.append(
        "Conclusion: only SU(2)~SO(3) and SU(4)~SO(6) survive; SU(64) and SO(91) "
        "share dimension 4095 but differ topologically."
        if payload["all_ok"] else "Conclusion: reproduction FAILED"
    )
    return payload, "\n".join(lines), (EXIT_OK if payload["all_ok"] else EXIT_DOMAIN)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit JSON instead of text")

    p = argparse.ArgumentParser(
        prog="qubitgroups",
        description="Qubit symmetry groups vs rotation groups: exact checks.",
        parents=[common],
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(func=func)
        return sp

    for name, func, help in (
        ("dim", cmd_dim, "dimension of a group"),
        ("exponents", cmd_exponents, "exponents of a group"),
        ("poincare", cmd_poincare, "Poincare polynomial of a group"),
    ):
        add(name, func, help).add_argument("group")

    sp = add("betti", cmd_betti, "Betti number b_q")
    sp.add_argument("group")
    sp.add_argument("q", type=int)

    sp = add("homotopy", cmd_homotopy, "stable homotopy group pi_k")
    sp.add_argument("group")
    sp.add_argument("k", type=int)

    add("rn", cmd_rn, "solve 2^b = k^2 + 7 by exhaustive search").add_argument(
        "--max-b", type=int, required=True)
    add("qubit-scan", cmd_qubit_scan, "qubit counts matching a rotation dimension").add_argument(
        "--max-n", type=int, required=True)

    sp = add("pell", cmd_pell, "iterate solutions of 8d^2 = k^2 + 7")
    sp.add_argument("--seed", type=_seed, required=True, help="+ or -")
    sp.add_argument("--count", type=int, required=True)

    sp = add("screen", cmd_screen, "screen two groups for a homeomorphism")
    sp.add_argument("group_a")
    sp.add_argument("group_b")

    sp = add("class-scan", cmd_class_scan, "rank pairs with equal Poincare polynomials")
    sp.add_argument("x", type=_cartan_class)
    sp.add_argument("y", type=_cartan_class)
    sp.add_argument("--max-rank", type=int, required=True)

    add("paper", cmd_paper, "run the full reproduction")
    return p


def _positive(args) -> None:
    for attr in ("max_b", "max_n", "count", "max_rank"):
        v = getattr(args, attr, None)
        if v is not None and v < 1:
            raise _Usage(f"--{attr.replace('_', '-')} must be >= 1")
    for attr in ("q", "k"):
        v = getattr(args, attr, None)
        if v is not None and v < 0:
            raise _Usage(f"{attr} must be nonnegative")


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    as_json = getattr(args, "json", False)

    def emit_error(kind: str, exc: Exception, payload: dict | None = None) -> None:
        if as_json:
            body = payload or {"error": kind}
            body.setdefault("message", str(exc))
            print(json.dumps(body), file=stderr)
        else:
            print(f"{parser.prog}: {kind}: {exc}", file=stderr)

    try:
        _positive(args)
        result = args.func(args)
    except _Usage as exc:
        emit_error("UsageError", exc)
        return EXIT_USAGE
    except (homotopy.OutsideStableRange, homotopy.UnsupportedGroup) as exc:
        emit_error(type(exc).__name__, exc, exc.to_json())
        return EXIT_DOMAIN

    payload, text, *rest = result
    print(json.dumps(payload, indent=2) if as_json else text, file=stdout)
    return rest[0] if rest else EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
