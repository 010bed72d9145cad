"""Command-line front end: ``powerlab analyze|verify|enumerate|export``.

Exit codes: 0 success, 1 a claim did not match its expected status,
2 usage error, 3 capacity refusal, 4 internal or I/O error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .groups import (DEFAULT_CAP, SWEEP_CAP, AbelianGroup, CapacityError, GroupSpecError,
                     check_cap, enumerate_abelian_groups, is_cyclic, order_cap,
                     p_group_prime, parse_group)
from .invariants import analyze
from .powergraph import EXPORT_FORMATS, FULL, PROPER, build_power_graph, export_graph

EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3
EXIT_INTERNAL = 4

FAMILIES = ("all-abelian", "cyclic", "exponent-p", "mixed-23", "noncyclic-pn")


class UsageError(Exception):
    pass


@dataclass
class SweepConfig:
    min_order: int = 2
    max_order: int = 64
    families: list[str] = field(default_factory=lambda: ["all-abelian"])
    theorems: list[str] | str = "all"
    output_dir: str | None = None
    format: str = "text"
    parallelism: int = 1
    oracle_mode: bool = False

    def validate(self) -> None:
        if self.min_order < 1 or self.max_order < 1:
            raise UsageError("orders must be positive")
        if self.min_order > self.max_order and self.max_order >= 2:
            raise UsageError(f"--min-order {self.min_order} exceeds --max-order {self.max_order}")
        cap = order_cap(SWEEP_CAP)
        if self.max_order > cap:
            raise CapacityError(f"--max-order {self.max_order} is above the sweep cap of {cap} "
                                "(set POWERLAB_CAP to raise it)")
        unknown = set(self.families) - set(FAMILIES)
        if unknown:
            raise UsageError(f"unknown families {sorted(unknown)}; choose from {', '.join(FAMILIES)}")
        if self.parallelism < 1:
            raise UsageError("--parallelism must be at least 1")


def _in_families(G: AbelianGroup, families) -> bool:
    if "all-abelian" in families:
        return True
    from .theorems import mixed_23_case
    p = p_group_prime(G)
    tests = {
        "cyclic": is_cyclic(G),
        "exponent-p": p is not None and all(q == p for q in G.factors),
        "mixed-23": mixed_23_case(G) is not None,
        "noncyclic-pn": p is not None and not is_cyclic(G),
    }
    return any(tests[f] for f in families)


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    print(f"wrote {path}", file=sys.stderr)


# -- commands ----------------------------------------------------------------------------

def cmd_analyze(args) -> int:
    G = parse_group(args.spec)
    check_cap(G, order_cap(DEFAULT_CAP))
    variant = FULL if args.full else PROPER
    g = build_power_graph(G, variant)
    report = analyze(g)
    text = report.to_json() if args.format == "json" else report.to_text()
    out_dir = Path(args.output_dir) if args.output_dir else None
    if out_dir:
        ext = "json" if args.format == "json" else "txt"
        _write(out_dir / f"{variant}_{G.name}.report.{ext}", text)
    else:
        sys.stdout.write(text)
    for fmt in EXPORT_FORMATS:
        if getattr(args, fmt):
            kwargs = {"class_labels": args.class_labels} if fmt == "dot" else {}
            ext = {"dot": "dot", "json": "json", "edgelist": "txt"}[fmt]
            _write((out_dir or Path(".")) / f"{variant}_{G.name}.{ext}",
                   export_graph(g, fmt, **kwargs))
    return 0


def run_verify(config: SweepConfig):
    from . import theorems as th

    config.validate()
    ids = list(th.THEOREM_IDS) if config.theorems == "all" else list(config.theorems)
    for t in ids:
        th.claim(t)
    if config.oracle_mode and th.ORACLE_ID not in ids:
        ids.append(th.ORACLE_ID)
    fams = tuple(config.families)
    where = None if "all-abelian" in fams else (lambda G: _in_families(G, fams))
    return th.run_claims(ids, config.min_order, config.max_order,
                         workers=config.parallelism, where=where)


def cmd_verify(args) -> int:
    from . import theorems as th

    theorems = "all" if args.theorems == "all" else [t.strip() for t in args.theorems.split(",") if t.strip()]
    config = SweepConfig(
        min_order=args.min_order, max_order=args.max_order,
        families=[f.strip() for f in args.families.split(",")],
        theorems=theorems, output_dir=args.output_dir, format=args.format,
        parallelism=args.parallelism, oracle_mode=args.oracle)
    try:
        for t in ([] if theorems == "all" else theorems):
            th.claim(t)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if 1 <= config.max_order < 2:
        # only the trivial group lies below order 2 and its proper power graph is empty
        config.min_order = min(config.min_order, config.max_order)
        print(f"powerlab: warning: --max-order {config.max_order} gives an empty sweep; "
              "use --max-order 2 or more", file=sys.stderr)
    verdicts = run_verify(config)
    cfg = asdict(config)
    cfg.pop("output_dir")
    cfg.pop("parallelism")  # reports must not depend on the worker count
    cfg.pop("format")
    report = th.report_json(verdicts, cfg, timings=args.timings)
    summary = th.report_text(verdicts, timings=args.timings)
    if args.output_dir:
        _write(Path(args.output_dir) / "report.json", report)
        _write(Path(args.output_dir) / "summary.txt", summary)
    sys.stdout.write(report if args.format == "json" else summary)
    if args.format == "text":
        for v in verdicts:
            for cex in v.counterexamples[: args.show]:
                print(f"  {v.theorem_id} counterexample {cex['group']}: {cex['witness']}")
    mismatched = [v.theorem_id for v in verdicts if not v.matches_expectation]
    if mismatched:
        print(f"claims not matching their expected status: {', '.join(mismatched)}", file=sys.stderr)
        return EXIT_MISMATCH
    return 0


def _parse_range(text: str) -> tuple[int, int]:
    for sep in ("..", "-", ":"):
        if sep in text:
            lo, hi = text.split(sep, 1)
            return int(lo), int(hi)
    n = int(text)
    return n, n


def cmd_enumerate(args) -> int:
    try:
        lo, hi = _parse_range(args.orders)
    except ValueError:
        raise UsageError(f"cannot parse order range {args.orders!r}; use N or A..B") from None
    if lo < 1 or lo > hi:
        raise UsageError(f"invalid order range {args.orders!r}")
    for n in range(lo, hi + 1):
        for G in enumerate_abelian_groups(n):
            p = p_group_prime(G)
            flags = ["cyclic" if is_cyclic(G) else "non-cyclic"]
            if p is not None:
                flags.append(f"{p}-group")
            print(f"{n}\t{G.name}\t{' '.join(flags)}")
    return 0


def cmd_export(args) -> int:
    G = parse_group(args.spec)
    check_cap(G, order_cap(DEFAULT_CAP))
    g = build_power_graph(G, FULL if args.full else PROPER)
    kwargs = {"class_labels": args.class_labels} if args.format == "dot" else {}
    text = export_graph(g, args.format, **kwargs)
    if args.output:
        _write(Path(args.output), text)
    else:
        sys.stdout.write(text)
    return 0


# -- parser ------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="powerlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="invariants of one power graph")
    p.add_argument("spec", help="cyclic factor orders, e.g. '4,2' or 'C4xC2'")
    v = p.add_mutually_exclusive_group()
    v.add_argument("--proper", action="store_true", help="P*(G), identity removed (default)")
    v.add_argument("--full", action="store_true", help="P(G)")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--dot", action="store_true", help="also write a Graphviz DOT file")
    p.add_argument("--json", action="store_true", help="also write the graph as JSON")
    p.add_argument("--edgelist", action="store_true", help="also write an i-j edge list")
    p.add_argument("--class-labels", action="store_true",
                   help="DOT labels q_i/p_i/r_i by element-order class")
    p.add_argument("--output-dir", help="directory for the report and exports")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="sweep the claims over abelian groups")
    p.add_argument("--min-order", type=int, default=2)
    p.add_argument("--max-order", type=int, default=64)
    p.add_argument("--theorems", default="all", help="'all' or comma-separated ids")
    p.add_argument("--families", default="all-abelian",
                   help=f"comma-separated subset of {', '.join(FAMILIES)}")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--output-dir", help="write report.json and summary.txt here")
    p.add_argument("--parallelism", type=int, default=1)
    p.add_argument("--oracle", action="store_true", help="add brute-force oracle cross-checks")
    p.add_argument("--timings", action="store_true", help="include wall times (not reproducible)")
    p.add_argument("--show", type=int, default=3, help="counterexamples printed per claim")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list abelian groups of an order or order range")
    p.add_argument("orders", help="N or A..B")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("export", help="serialize one power graph")
    p.add_argument("spec")
    p.add_argument("--format", choices=EXPORT_FORMATS, default="dot")
    p.add_argument("--full", action="store_true")
    p.add_argument("--class-labels", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GroupSpecError) as exc:
        print(f"powerlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"powerlab: refused: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except OSError as exc:
        print(f"powerlab: I/O error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001
        print(f"powerlab: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
