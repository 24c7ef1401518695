"""Command-line interface.

Subcommands: construct, verify, encode, decode, simulate, msrd, info.
Exit codes: 0 success, 2 bad parameters or usage, 3 certification or
soundness failure (a concrete witness is printed).  All file formats are
JSON with a top-level "format_version".
"""

from __future__ import annotations

import argparse
import json
import sys

from . import msrd as msrdmod
from . import verify as ver
from .construct import (
    VARIANTS,
    LrcCode,
    construct as build_code,
    encode as encode_message,
)
from .errors import SkewcodeError
from .rng import CounterRng

EXIT_OK = 0
EXIT_PARAMS = 2
EXIT_CERT = 3


def _load_code(path):
    with open(path) as fh:
        return LrcCode.from_json(json.load(fh))


def _dump(obj, path):
    text = json.dumps(obj, indent=2)
    if path is None or path == "-":
        print(text)
    else:
        with open(path, "w") as fh:
            fh.write(text + "\n")


def _predicted_field_size(code):
    p = code.params
    q0 = code.tower.q0
    if p.variant in ("main", "main_improved"):
        return q0 ** max(min(p.h, p.r - p.a), 1) if p.h else q0
    if p.variant == "bch_a1":
        return code.tower.q  # q0^(s-1) by construction
    if p.variant.startswith("global_outside_a1"):
        return code.tower.q  # q0^(c-1) by construction
    if p.variant.startswith("global_outside"):
        return q0 ** max(p.h, 1)
    return code.tower.q


def cmd_construct(args):
    code = build_code(
        args.variant, args.n, args.r, args.h, args.a, q0=args.q0, h_local=args.h_local
    )
    _dump(code.to_json(), args.out)
    tw = code.tower
    print(
        f"variant={code.params.variant} n={args.n} r={args.r} h={args.h} "
        f"a={code.params.a} g={code.params.g} q0={tw.q0} m={tw.m} q={tw.q} "
        f"formula_q={_predicted_field_size(code)}",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_verify(args):
    code = _load_code(args.code)
    report = ver.is_maximally_recoverable(
        code,
        mode=args.mode,
        samples=args.samples,
        seed=args.seed,
        budget=args.budget,
        h_local=args.h_local,
    )
    if args.report:
        _dump(report.to_json(), args.report)
    if report.certified:
        print(
            f"certified: {report.patterns_checked} patterns, "
            f"{report.elapsed:.2f}s ({report.mode})"
        )
        return EXIT_OK
    for pat in report.failures[:5]:
        print(f"FAIL pattern {list(pat.columns)}", file=sys.stderr)
    for gi in report.mds_failures:
        print(f"FAIL local block {gi} is not MDS", file=sys.stderr)
    return EXIT_CERT


def cmd_encode(args):
    code = _load_code(args.code)
    message = json.loads(args.message)
    word = encode_message(code, message)
    _dump({"format_version": 1, "codeword": word}, args.out)
    return EXIT_OK


def cmd_decode(args):
    code = _load_code(args.code)
    received = json.loads(args.received)
    word, stats = ver.decode_with_stats(code, received)
    _dump({"format_version": 1, "codeword": word, "stats": stats}, args.out)
    return EXIT_OK


def cmd_simulate(args):
    code = _load_code(args.code)
    p = code.params
    tw = code.tower
    rng = CounterRng(args.seed)
    info_len = p.n - code.H.rows
    successes = 0
    local_reads_ok = True
    max_group_read = 0
    for _ in range(args.trials):
        msg = [tw.random_element(rng) for _ in range(info_len)]
        word = encode_message(code, msg)
        if args.distribution == "local":
            gi = rng.randbelow(p.g)
            s, e = code.groups[gi]
            cols = {s + i for i in rng.sample(p.r, p.a)}
        else:
            cols = set()
            for s, e in code.groups:
                cols.update(s + i for i in rng.sample(p.r, p.a))
            rest = [c for c in range(p.n) if c not in cols]
            cols.update(rest[i] for i in rng.sample(len(rest), p.h))
        rx = [None if i in cols else word[i] for i in range(p.n)]
        decoded, stats = ver.decode_with_stats(code, rx)
        if decoded == word:
            successes += 1
        if args.distribution == "local":
            reads = [grp["read"] for grp in stats["groups"]]
            if reads:
                max_group_read = max(max_group_read, max(reads))
            if not stats["local"] or any(rd > p.r - p.a for rd in reads):
                local_reads_ok = False
    out = {
        "format_version": 1,
        "trials": args.trials,
        "seed": args.seed,
        "distribution": args.distribution,
        "successes": successes,
        "max_group_read": max_group_read if args.distribution == "local" else None,
    }
    _dump(out, args.out)
    if successes != args.trials or not local_reads_ok:
        print("simulation found decoding failures", file=sys.stderr)
        return EXIT_CERT
    return EXIT_OK


def cmd_msrd(args):
    code = msrdmod.construct_msrd(args.q0, args.m, args.k)
    obj = code.to_json()
    if args.certify:
        obj["min_sum_rank_distance"] = msrdmod.min_sum_rank_bruteforce(code)
        obj["singleton_bound"] = code.n - code.k + 1
    _dump(obj, args.out)
    if args.certify and obj["min_sum_rank_distance"] != obj["singleton_bound"]:
        print("code is not MSRD", file=sys.stderr)
        return EXIT_CERT
    return EXIT_OK


def cmd_info(args):
    code = _load_code(args.code)
    p = code.params
    tw = code.tower
    print(f"variant: {p.variant}")
    print(f"n={p.n} r={p.r} h={p.h} a={p.a} g={p.g} h_local={p.h_local}")
    print(f"field: q0={tw.q0} (p={tw.p}, k={tw.k}) m={tw.m} q={tw.q}")
    print(f"H: {code.H.rows} x {code.H.cols}")
    print(f"groups: {code.groups}")
    print(f"global columns: {code.global_cols}")
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(
        prog="skewcode",
        description="maximally recoverable LRC / MSRD construction and certification",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a code and write its JSON bundle")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--h", type=int, required=True)
    c.add_argument("--a", type=int, default=1)
    c.add_argument("--q0", type=int, default=None)
    c.add_argument("--h-local", type=int, default=None, dest="h_local")
    c.add_argument("--variant", choices=VARIANTS, default="main")
    c.add_argument("--out", default="-")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="certify maximal recoverability")
    v.add_argument("code")
    v.add_argument("--mode", choices=["exhaustive", "sampled"], default="exhaustive")
    v.add_argument("--samples", type=int, default=10000)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--budget", type=int, default=ver.DEFAULT_BUDGET)
    v.add_argument("--h-local", type=int, default=None, dest="h_local")
    v.add_argument("--report", default=None)
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("encode", help="systematic encoding of a message")
    e.add_argument("--code", required=True)
    e.add_argument("--message", required=True, help="JSON list of element codes")
    e.add_argument("--out", default="-")
    e.set_defaults(func=cmd_encode)

    d = sub.add_parser("decode", help="recover erased symbols (null = erased)")
    d.add_argument("--code", required=True)
    d.add_argument("--received", required=True, help="JSON list, null for erasures")
    d.add_argument("--out", default="-")
    d.set_defaults(func=cmd_decode)

    s = sub.add_parser("simulate", help="seeded encode/erase/decode round trips")
    s.add_argument("--code", required=True)
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument(
        "--distribution", choices=["admissible", "local"], default="admissible"
    )
    s.add_argument("--out", default="-")
    s.set_defaults(func=cmd_simulate)

    m = sub.add_parser("msrd", help="build (and optionally certify) an MSRD code")
    m.add_argument("--q0", type=int, required=True)
    m.add_argument("--m", type=int, required=True)
    m.add_argument("--k", type=int, required=True)
    m.add_argument("--certify", action="store_true")
    m.add_argument("--out", default="-")
    m.set_defaults(func=cmd_msrd)

    i = sub.add_parser("info", help="summarize a code bundle")
    i.add_argument("code")
    i.set_defaults(func=cmd_info)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except SkewcodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS


if __name__ == "__main__":
    sys.exit(main())
