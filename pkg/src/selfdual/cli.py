"""Command-line front end: gen, check, verify, bench.

Exit codes are a stable contract:
  0  success / instance is self-dual
  1  instance is not self-dual
  2  usage, parse or precondition error
  3  cross-check disagreement between algorithms (a bug signal)
"""

from __future__ import annotations

import argparse
import csv
import io
import signal
import statistics
import sys
import time
from typing import Callable, Optional

from .brute import DEFAULT_BRUTE_LIMIT, algorithm_dual, brute_selfdual, zero_count_by_evaluation
from .core import (
    MAX_VERTICES,
    Hypergraph,
    ParseError,
    PreconditionError,
    SelfDualVerdict,
    SizeLimitError,
    occupied_vertices,
    validate_pidnf,
)
from .counting import selfdual_by_count
from .fk import fk_selfdual
from .generator import GenConfig, binomial_family, default_trials, generate
from .instances import load_instance, save_instance
from .search import search_witness

CSV_HEADER = "n,m,seed,algo_fk_s,algo_count_s,algo_brute_s,algo_search_s,verdict"
BENCH_ALGOS = ("fk", "count", "brute", "search")


class _Timeout(Exception):
    pass


def _run_with_timeout(fn: Callable[[], SelfDualVerdict], seconds: float):
    """Run fn, aborting with _Timeout after the wall-clock budget (SIGALRM)."""
    if seconds <= 0:
        return fn()

    def handler(signum, frame):
        raise _Timeout()

    old = signal.signal(signal.SIGALRM, handler)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        return fn()
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


def _witness_str(x: int, n: int) -> str:
    return format(x, f"0{n}b")


def _verdict_word(v: SelfDualVerdict) -> str:
    return "self-dual" if v.self_dual else "not-self-dual"


def cmd_gen(args: argparse.Namespace) -> int:
    if args.n > MAX_VERTICES:
        print(f"error: n exceeds {MAX_VERTICES}", file=sys.stderr)
        return 2
    try:
        if args.family == "binomial":
            h = binomial_family(args.n)
            comments = [f"family=binomial n={args.n}"]
        else:
            trials = args.trials if args.trials is not None else default_trials(args.n)
            cfg = GenConfig(n=args.n, trials=trials, seed=args.seed, lo=args.lo, hi=args.hi)
            h = generate(cfg)
            comments = [f"seed={cfg.seed} trials={cfg.trials} lo={cfg.lo} hi={cfg.hi}"]
        save_instance(args.output, h, comments)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"n={h.n} m={len(h.edges)} seed={args.seed}")
    return 0


_CHECK_ALGOS = {
    "count": lambda h, limit: selfdual_by_count(h),
    "search": lambda h, limit: search_witness(h),
    "dual": lambda h, limit: algorithm_dual(h, limit=limit),
    "fk": lambda h, limit: fk_selfdual(h),
    "hs-brute": lambda h, limit: brute_selfdual(h, limit=limit),
}


def cmd_check(args: argparse.Namespace) -> int:
    try:
        h = load_instance(args.file, require_pidnf=not args.no_validate)
    except (OSError, ParseError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    runner = _CHECK_ALGOS[args.algo]
    start = time.perf_counter()
    try:
        verdict = runner(h, args.brute_limit)
    except (PreconditionError, SizeLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    elapsed = time.perf_counter() - start
    parts = [_verdict_word(verdict)]
    if verdict.count is not None:
        parts.append(f"hit-count {verdict.count}")
    if verdict.witness is not None:
        parts.append(f"witness {_witness_str(verdict.witness, h.n)}")
    parts.append(f"elapsed {elapsed:.6f}s")
    print(", ".join(parts))
    return 0 if verdict.self_dual else 1


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        h = load_instance(args.file, require_pidnf=True)
    except (OSError, ParseError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    verdicts: dict[str, SelfDualVerdict] = {}
    counts: dict[str, int] = {}

    verdicts["count"] = selfdual_by_count(h)
    counts["count"] = verdicts["count"].count
    verdicts["search"] = search_witness(h)
    verdicts["fk"] = fk_selfdual(h)
    if h.n <= args.brute_limit:
        verdicts["dual"] = algorithm_dual(h, limit=args.brute_limit)
        counts["eval"] = zero_count_by_evaluation(h, limit=args.brute_limit)
    if occupied_vertices(h).bit_count() <= args.brute_limit:
        verdicts["hs-brute"] = brute_selfdual(h, limit=args.brute_limit)
        counts["hs-brute"] = verdicts["hs-brute"].count

    for name, v in verdicts.items():
        extra = f" count={counts[name]}" if name in counts else ""
        print(f"{name}: {_verdict_word(v)}{extra}")
    if "eval" in counts:
        print(f"eval: zero-points={counts['eval']}")

    flags = {v.self_dual for v in verdicts.values()}
    agree = len(flags) == 1 and len(set(counts.values())) <= 1
    if not agree:
        print("DISAGREEMENT between algorithms", file=sys.stderr)
        return 3
    print("all algorithms agree")
    return 0


def _parse_sizes(spec: str) -> list[int]:
    if ".." in spec:
        a, b = spec.split("..", 1)
        lo, hi = int(a), int(b)
        if lo > hi:
            raise ValueError(f"bad size range {spec!r}")
        return list(range(lo, hi + 1))
    return [int(tok) for tok in spec.split(",")]


def _bench_runner(name: str, h: Hypergraph, brute_limit: int, force: bool):
    if name == "fk":
        return lambda: fk_selfdual(h)
    if name == "count":
        return lambda: selfdual_by_count(h)
    if name == "search":
        return lambda: search_witness(h)
    if name == "brute":
        if h.n > brute_limit and not force:
            raise SizeLimitError(f"n={h.n} exceeds brute limit {brute_limit} (use --force)")
        return lambda: brute_selfdual(h, limit=max(h.n, brute_limit))
    raise ValueError(f"unknown algorithm {name!r}")


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        sizes = _parse_sizes(args.sizes)
        algos = [a.strip() for a in args.algos.split(",") if a.strip()]
        for a in algos:
            if a not in BENCH_ALGOS:
                raise ValueError(f"unknown algorithm {a!r} (choose from {', '.join(BENCH_ALGOS)})")
        if any(n > MAX_VERTICES or n < 2 for n in sizes):
            raise ValueError(f"sizes must be within [2, {MAX_VERTICES}]")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    rows = []
    for n in sizes:
        # one deterministic instance per size: per-size seed = base seed + n
        seed = args.seed + n
        trials = args.trials if args.trials is not None else default_trials(n)
        cfg = GenConfig(n=n, trials=trials, seed=seed)
        h = generate(cfg)
        validate_pidnf(h)

        times: dict[str, Optional[float]] = {a: None for a in BENCH_ALGOS}
        verdicts: dict[str, SelfDualVerdict] = {}
        for algo in algos:
            try:
                runner = _bench_runner(algo, h, args.brute_limit, args.force)
            except SizeLimitError as exc:
                print(f"warning: skipping {algo} at n={n}: {exc}", file=sys.stderr)
                continue
            samples = []
            timed_out = False
            for _ in range(args.repeats):
                start = time.perf_counter()
                try:
                    verdict = _run_with_timeout(runner, args.timeout)
                except _Timeout:
                    timed_out = True
                    break
                samples.append(time.perf_counter() - start)
            if timed_out:
                print(f"warning: {algo} timed out at n={n} "
                      f"(>{args.timeout:g}s)", file=sys.stderr)
                continue
            verdicts[algo] = verdict
            times[algo] = statistics.median(samples)

        flags = {v.self_dual for v in verdicts.values()}
        if len(flags) > 1:
            print(f"cross-check FAILURE at n={n}:", file=sys.stderr)
            for algo, v in verdicts.items():
                print(f"  {algo}: {_verdict_word(v)}", file=sys.stderr)
            return 3
        verdict_word = _verdict_word(next(iter(verdicts.values()))) if verdicts else ""

        rows.append({
            "n": n, "m": len(h.edges), "seed": seed, "verdict": verdict_word,
            **{f"algo_{a}_s": times[a] for a in BENCH_ALGOS},
        })

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER.split(","))
    for r in rows:
        writer.writerow([
            r["n"], r["m"], r["seed"],
            *(f"{r[f'algo_{a}_s']:.6f}" if r[f"algo_{a}_s"] is not None else ""
              for a in BENCH_ALGOS),
            r["verdict"],
        ])
    csv_text = buf.getvalue()
    if args.csv:
        try:
            with open(args.csv, "w", encoding="utf-8") as fh:
                fh.write(csv_text)
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2

    cols = ["n", "m", "seed"] + [f"algo_{a}_s" for a in BENCH_ALGOS] + ["verdict"]
    table = [cols] + [
        [str(r["n"]), str(r["m"]), str(r["seed"])]
        + [f"{r[f'algo_{a}_s']:.6f}" if r[f"algo_{a}_s"] is not None else "-"
           for a in BENCH_ALGOS]
        + [r["verdict"] or "-"]
        for r in rows
    ]
    widths = [max(len(row[i]) for row in table) for i in range(len(cols))]
    for row in table:
        print("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="selfdual",
                                     description="Self-duality testing toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate an instance file")
    p.add_argument("-n", type=int, required=True, help="universe size")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--lo", type=int, default=None)
    p.add_argument("--hi", type=int, default=None)
    p.add_argument("--family", choices=["random", "binomial"], default="random")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", help="decide self-duality of an instance")
    p.add_argument("file")
    p.add_argument("--algo", choices=sorted(_CHECK_ALGOS), required=True)
    p.add_argument("--no-validate", action="store_true",
                   help="skip the Sperner/intersection precondition check")
    p.add_argument("--brute-limit", type=int, default=DEFAULT_BRUTE_LIMIT)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="run all applicable algorithms and cross-check")
    p.add_argument("file")
    p.add_argument("--brute-limit", type=int, default=DEFAULT_BRUTE_LIMIT)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="timing comparison over generated instances")
    p.add_argument("--sizes", required=True, help="range a..b or comma list")
    p.add_argument("--algos", default=",".join(BENCH_ALGOS))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=None,
                   help="generator trials per size (default 64*2^(n-3))")
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--csv", default=None, help="write CSV to this path")
    p.add_argument("--timeout", type=float, default=300.0,
                   help="per-(algorithm, instance) budget in seconds")
    p.add_argument("--brute-limit", type=int, default=DEFAULT_BRUTE_LIMIT)
    p.add_argument("--force", action="store_true",
                   help="run brute force past its size cap")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
