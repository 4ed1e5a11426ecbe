"""Command-line interface: ``sylowbranch <command> ...``.

Human output is an aligned table or a single line; ``--json`` switches every
command to machine-readable output.  Malformed input exits with status 2 and
a failed verification with status 1.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from . import lr, omega, oracle
from .partitions import PartitionError, format_partition, parse_partition, parse_symbolic
from .trees import (
    CharDescriptor,
    TreeError,
    canonicalize,
    degree,
    enumerate_descriptors,
    enumerate_irr,
    format_descriptor,
    format_tree,
    linear_tree,
    mask_people,
    p_adic_descriptor,
    parse_descriptor,
    tree_stats,
)


class UsageError(Exception):
    pass


def _table(rows: Sequence[Sequence[object]], header: Sequence[str]) -> str:
    cells = [[str(c) for c in header]] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _emit(args, payload, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _theta(args) -> CharDescriptor:
    return parse_descriptor(args.theta, args.p, getattr(args, "n", None))


# -- irr ----------------------------------------------------------------------------------------


def cmd_irr_list(args) -> int:
    rows, payload = [], []
    for t in enumerate_irr(args.p, args.k):
        st = tree_stats(t, args.p)
        row = [format_tree(t), st.eta, st.gamma_at(0), st.gamma_at(1), st.value, args.p**st.degree_exponent]
        rows.append(row)
        payload.append(dict(zip(["tree", "eta", "gamma0", "gamma1", "value", "degree"], row)))
    _emit(args, payload, _table(rows, ["tree", "eta", "g0", "g1", "V", "degree"]))
    return 0


# -- omega ----------------------------------------------------------------------------------------


def cmd_omega_describe(args) -> int:
    theta = _theta(args)
    desc = omega.omega_shape(theta)
    st = theta.stats()
    payload = {
        "theta": format_descriptor(theta),
        "n": theta.n,
        "shape": desc.to_json(),
        "m": omega.little_m(theta),
        "M": omega.capital_M(theta),
        "eta": st.eta,
        "gamma": list(st.gamma),
        "value": st.value,
        "degree": degree(theta),
    }
    text = (
        f"theta  {payload['theta']}  (n={theta.n}, degree {payload['degree']})\n"
        f"stats  eta={st.eta} gamma={list(st.gamma)} value={st.value}\n"
        f"m={payload['m']} M={payload['M']}\n"
        f"Omega  {omega.describe_text(desc)}"
    )
    _emit(args, payload, text)
    return 0


def cmd_omega_member(args) -> int:
    theta = _theta(args)
    lam = parse_partition(args.lam)
    verdict = omega.omega_member(theta, lam)
    _emit(args, {"theta": format_descriptor(theta), "lambda": list(lam), "member": str(verdict)}, str(verdict))
    return 0


def cmd_omega_gap(args) -> int:
    theta = _theta(args)
    rep = omega.gap_report(theta)
    _emit(args, rep.to_json(), f"M-m={rep.gap} gamma1={rep.gamma1} c={rep.c}")
    return 0


# -- LR calculators ---------------------------------------------------------------------------------


def _set_text(members) -> str:
    return "{" + ", ".join(format_partition(m) for m in sorted(members, reverse=True)) + "}"


def _set_arg(text: str):
    if ":" in text:
        return parse_symbolic(text)
    return [parse_partition(x) for x in text.split(";") if x.strip()]


def cmd_lr(args) -> int:
    k = lr.lr_coeff(parse_partition(args.lam), parse_partition(args.mu), parse_partition(args.nu))
    _emit(args, {"coefficient": k}, str(k))
    return 0


def cmd_star(args) -> int:
    a, b = _set_arg(args.a), _set_arg(args.b)
    out = lr.star_explicit(lr.as_set(a), lr.as_set(b))
    _emit(args, {"set": [list(x) for x in sorted(out, reverse=True)]}, _set_text(out))
    return 0


def cmd_mixed(args) -> int:
    out = lr.mixed_set(args.q, lr.as_set(_set_arg(args.set)))
    _emit(args, {"set": [list(x) for x in sorted(out, reverse=True)]}, _set_text(out))
    return 0


# -- verification ----------------------------------------------------------------------------------


def cmd_verify(args) -> int:
    if args.p != 5:
        raise UsageError("verify supports p = 5 only")
    if args.n > oracle.FULL_OMEGA_MAX_N:
        raise oracle.ScaleError(f"verify enumerates partitions only up to n = {oracle.FULL_OMEGA_MAX_N}")
    thetas = [_theta(args)] if args.theta else list(enumerate_descriptors(5, args.n))
    start = time.perf_counter()
    reports = [oracle.verify(t) for t in thetas]
    bad = [r for r in reports if not r.ok]
    payload = {
        "n": args.n,
        "checked": len(reports),
        "mismatches": len(bad),
        "reports": [r.to_json() for r in (reports if args.theta or args.all_reports else bad)],
    }
    lines = [f"n={args.n}: {len(reports)} characters, {len(bad)} mismatches ({time.perf_counter() - start:.1f}s)"]
    for r in reports if args.theta else bad:
        lines.append(f"  {r.theta}: {'ok' if r.ok else 'MISMATCH'}  {r.shape}")
        lines.extend(f"    {m}" for m in r.mismatches)
    _emit(args, payload, "\n".join(lines))
    return 1 if bad else 0


# -- tables ------------------------------------------------------------------------------------------


def equivalence_classes(p: int, k: int) -> list[tuple[CharDescriptor, int]]:
    """Representatives of the classes under relabelling people, with class sizes."""
    classes: dict = {}
    for t in enumerate_irr(p, k):
        key = canonicalize(mask_people(t, p))
        if key not in classes:
            classes[key] = [t, 0]
        classes[key][1] += 1
    out = [(p_adic_descriptor(p, p**k, [t]), size) for t, size in classes.values()]
    out.sort(key=lambda x: (x[0].stats().value, x[0].stats().eta, format_descriptor(x[0])))
    return out


def _table_rows(entries: list[tuple[CharDescriptor, int | str]], names: Sequence[str] | None = None):
    rows = []
    for i, (theta, count) in enumerate(entries):
        st = theta.stats()
        n = theta.n
        rows.append([
            names[i] if names else format_descriptor(theta),
            count,
            degree(theta),
            st.eta,
            st.gamma_at(0),
            st.gamma_at(1),
            st.value,
            n - st.gamma_at(0),
            n - st.gamma_at(0) - st.gamma_at(1),
            omega.little_m(theta),
            omega.capital_M(theta),
            omega.describe_text(omega.omega_shape(theta)),
        ])
    return rows


TABLE_HEADER = ["representative", "class", "deg", "eta", "g0", "g1", "V", "n-g0", "n-g0-g1", "m", "M", "Omega"]


def cmd_tables(args) -> int:
    p = 5
    names = None
    if args.which in (5, 25):
        k = 1 if args.which == 5 else 2
        entries = equivalence_classes(p, k)
        note = f"Irr(P_{args.which}) up to relabelling people, p=5"
    else:
        labels = [(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0), (1, 1, 1)]
        entries = [(p_adic_descriptor(p, 125, [linear_tree(p, lab)]), "-") for lab in labels]
        names = ["X(" + ";".join(map(str, lab)) + ")" for lab in labels]
        note = "linear characters X(a;b;c) of P_125, p=5 (formula path only, no oracle at this size)"
    rows = _table_rows(entries, names)
    if args.json:
        print(json.dumps({"note": note, "rows": [dict(zip(TABLE_HEADER, r)) for r in rows]}, sort_keys=True))
    else:
        print(note)
        print(_table(rows, TABLE_HEADER))
    return 0


# -- parser --------------------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sylowbranch", description="Sylow branching coefficients of symmetric groups")
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    sub = ap.add_subparsers(dest="command", required=True)

    irr = sub.add_parser("irr", help="irreducible characters of P_{p^k}")
    irr_sub = irr.add_subparsers(dest="action", required=True)
    il = irr_sub.add_parser("list", help="list orbit representatives with statistics")
    il.add_argument("-p", type=int, required=True)
    il.add_argument("-k", type=int, required=True)
    il.set_defaults(func=cmd_irr_list)

    om = sub.add_parser("omega", help="closed-form Omega(theta)")
    om_sub = om.add_subparsers(dest="action", required=True)
    for name, func, help_text in [
        ("describe", cmd_omega_describe, "shape, m and M"),
        ("member", cmd_omega_member, "In / Out / Unknown for one partition"),
        ("gap", cmd_omega_gap, "M - m as gamma_1 + c"),
    ]:
        sp = om_sub.add_parser(name, help=help_text)
        sp.add_argument("-p", type=int, default=5)
        sp.add_argument("-n", type=int, default=None, help="defaults to the size implied by the trees")
        sp.add_argument("--theta", required=True, help='e.g. "X(1;1;0)" or "(0|1|0|0|2;5)"')
        if name == "member":
            sp.add_argument("--lambda", dest="lam", required=True, help="e.g. [98,27]")
        sp.set_defaults(func=func)

    sp = sub.add_parser("lr", help="Littlewood-Richardson coefficient")
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--mu", required=True)
    sp.add_argument("--nu", required=True)
    sp.set_defaults(func=cmd_lr)

    sp = sub.add_parser("star", help="star product of two sets (B:n:t, oB:n:t, P:n, oP:n or [..];[..])")
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.set_defaults(func=cmd_star)

    sp = sub.add_parser("mixed", help="mixed set M(q, A)")
    sp.add_argument("-q", type=int, required=True)
    sp.add_argument("--set", required=True)
    sp.set_defaults(func=cmd_mixed)

    sp = sub.add_parser("verify", help="compare the oracle with the closed form (p = 5, n <= 30)")
    sp.add_argument("-p", type=int, default=5)
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--theta", default=None)
    sp.add_argument("--all-reports", action="store_true", help="include passing characters in --json output")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("tables", help="reproduce the p = 5 tables for n = 5, 25 or 125")
    sp.add_argument("which", type=int, choices=[5, 25, 125])
    sp.set_defaults(func=cmd_tables)
    return ap


def run(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    # accept --json anywhere on the line
    as_json = "--json" in argv
    argv = [a for a in argv if a != "--json"]
    args = ap.parse_args(argv)
    args.json = as_json
    try:
        return args.func(args)
    except (PartitionError, TreeError, UsageError, lr.HypothesisError, omega.UnsupportedPrimeError,
            oracle.ScaleError, ValueError) as exc:
        print(f"sylowbranch: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
