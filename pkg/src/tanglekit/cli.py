"""Command-line front end.

Subcommands:

    count tanglegrams --n N [--method direct|recurrence|mu]
    count trees       --n N [--method direct|oracle]
    count chains      --k K --n N [--method direct|recurrence]
    sample tanglegram|tree|chain --n N [--k K] --seed S --count C [--format json|text]
    asym  --n N --terms T --family a|b [--precision BITS]
    const f-quarter [--precision BITS]
    stats cherries --n N --samples M --seed S
    stats pattern --pattern "((..).)" --n N --samples M --seed S
    oracle tanglegrams --n N [--unordered] [--list] [--allow-slow]
    table paper

Counts print as full decimal integers.  Samples print one object per
line; JSON keys are emitted in a fixed order, and a fixed seed gives
byte-identical output across runs.  Exit codes: 0 success, 2 usage
error, 3 cap exceeded.
"""

import argparse
import json
import random
import sys

from mpmath import mp, mpf, nstr

from . import asym, counting, oracle, sample, tree


class _UsageError(Exception):
    pass


def _positive(s):
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _build_parser():
    ap = argparse.ArgumentParser(prog="tanglekit")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("count", help="exact counts")
    p.add_argument("what", choices=["tanglegrams", "trees", "chains"])
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--k", type=_positive, default=None)
    p.add_argument("--method", default="direct",
                   choices=["direct", "recurrence", "mu", "oracle"])

    p = sub.add_parser("sample", help="uniform random objects")
    p.add_argument("what", choices=["tanglegram", "tree", "chain"])
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--k", type=_positive, default=None)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=_positive, required=True)
    p.add_argument("--format", default="json", choices=["json", "text"])

    p = sub.add_parser("asym", help="asymptotic approximations of the tanglegram count")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--terms", type=int, required=True, choices=range(0, 7))
    p.add_argument("--family", required=True, choices=["a", "b"])
    p.add_argument("--precision", type=_positive, default=200)

    p = sub.add_parser("const", help="constants")
    p.add_argument("name", choices=["f-quarter"])
    p.add_argument("--precision", type=_positive, default=200)

    p = sub.add_parser("stats", help="sampled statistics of random tanglegrams")
    p.add_argument("what", choices=["cherries", "pattern"])
    p.add_argument("--pattern", default=None)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--samples", type=_positive, required=True)
    p.add_argument("--seed", type=int, required=True)

    p = sub.add_parser("oracle", help="brute-force enumeration")
    p.add_argument("what", choices=["tanglegrams"])
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--unordered", action="store_true")
    p.add_argument("--list", action="store_true", dest="list_classes")
    p.add_argument("--allow-slow", action="store_true")

    p = sub.add_parser("table", help="reference tables")
    p.add_argument("which", choices=["paper"])

    return ap


def _cmd_count(args):
    n = args.n
    if args.what == "tanglegrams":
        if args.method == "direct":
            print(counting.tanglegram_count(n))
        elif args.method == "recurrence":
            print(counting.tanglegram_count_rec(n))
        elif args.method == "mu":
            print(counting.tanglegram_count_mu(n))
        else:
            raise _UsageError("tanglegram methods are direct, recurrence, mu")
    elif args.what == "trees":
        if args.method == "direct":
            print(counting.tree_count(n))
        elif args.method == "oracle":
            print(counting.tree_count_oracle(n))
        else:
            raise _UsageError("tree methods are direct and oracle")
    else:
        if args.k is None:
            raise _UsageError("chains need --k")
        if args.method == "direct":
            print(counting.chain_count(args.k, n))
        elif args.method == "recurrence":
            print(counting.chain_count_rec(args.k, n))
        else:
            raise _UsageError("chain methods are direct and recurrence")
    return 0


def _format_text(obj):
    if isinstance(obj, sample.Tanglegram):
        return "%s %s %s" % (obj.left.key, obj.right.key,
                             ",".join(str(v) for v in obj.matching))
    if isinstance(obj, sample.TangledChain):
        trees_part = " ".join(t.key for t in obj.trees)
        match_part = " ".join(",".join(str(v) for v in m) for m in obj.matchings)
        return (trees_part + " | " + match_part) if match_part else trees_part
    return obj.key


def _cmd_sample(args):
    rng = random.Random(args.seed)
    for _ in range(args.count):
        if args.what == "tanglegram":
            obj = sample.random_tanglegram(args.n, rng)
        elif args.what == "tree":
            obj = sample.random_tree(args.n, rng)
        else:
            k = args.k if args.k is not None else 3
            obj = sample.random_chain(k, args.n, rng)
        if args.format == "json":
            if args.what == "tree":
                print(json.dumps({"n": args.n, "tree": obj.key}))
            else:
                print(json.dumps(obj.to_json()))
        else:
            print(_format_text(obj))
    return 0


def _cmd_asym(args):
    digits = max(int(args.precision * 0.301), 8)
    val = asym.t_asym(args.n, args.terms, args.family, args.precision)
    print(nstr(val, digits, strip_zeros=False))
    if args.n <= 2000:
        exact = counting.tanglegram_count_rec(args.n)
        with mp.workprec(args.precision + 20):
            rel = val / mpf(exact) - 1
        print("relative error vs exact: %s" % nstr(rel, 6))
    return 0


def _cmd_const(args):
    digits = max(int(args.precision * 0.301), 8)
    print(nstr(asym.f_fixed_point(args.precision), digits, strip_zeros=False))
    return 0


def _cmd_stats(args):
    if args.what == "pattern":
        if not args.pattern:
            raise _UsageError("stats pattern needs --pattern")
        try:
            pattern = tree.parse(args.pattern)
        except (AssertionError, IndexError):
            raise _UsageError("malformed pattern %r; write trees like ((..).)" % args.pattern)
    else:
        pattern = None
    rng = random.Random(args.seed)
    summary = sample.cherry_statistics(args.n, args.samples, rng, pattern=pattern)
    print(json.dumps(summary))
    return 0


def _cmd_oracle(args):
    if args.unordered:
        print(oracle.brute_unordered_count(args.n))
        return 0
    reps = oracle.brute_tanglegrams(args.n, allow_slow=args.allow_slow)
    print(len(reps))
    if args.list_classes:
        for tg in reps:
            print(json.dumps(tg.to_json()))
    return 0


def _cmd_table(args):
    rows = []
    rows.append(("n", "tanglegrams", "trees", "chains k=3", "rooted ordered", "rooted unordered"))
    for n in range(1, 11):
        t_n = counting.tanglegram_count(n)
        b_n = counting.tree_count(n)
        c_n = counting.chain_count(3, n)
        if n <= 7:
            ordered = len(oracle.brute_tanglegrams(n))
            unordered = oracle.brute_unordered_count(n)
            rows.append((n, t_n, b_n, c_n, ordered, unordered))
        else:
            rows.append((n, t_n, b_n, c_n, "", ""))
    widths = [max(len(str(r[i])) for r in rows) for i in range(len(rows[0]))]
    for r in rows:
        print("  ".join(str(v).rjust(w) for v, w in zip(r, widths)))
    return 0


_HANDLERS = {
    "count": _cmd_count,
    "sample": _cmd_sample,
    "asym": _cmd_asym,
    "const": _cmd_const,
    "stats": _cmd_stats,
    "oracle": _cmd_oracle,
    "table": _cmd_table,
}


def run(argv):
    """Parse argv (no program name) and execute; returns the exit code."""
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else int(e.code)
    try:
        return _HANDLERS[args.cmd](args)
    except _UsageError as e:
        print("usage error: %s" % e, file=sys.stderr)
        return 2
    except ValueError as e:
        print("error: %s" % e, file=sys.stderr)
        return 3


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
