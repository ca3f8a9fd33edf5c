"""Command-line frontend: inspect, realize, classify, certify, orbit.

Exit codes: 0 success, 2 soundness violation (including a failed
certificate), 3 search exhausted, 4 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from .certificates import IDENTITY_CATALOG, SAMPLED_CATALOG, CertificateSpec, run_certificate
from .classifier import (
    ClassifyOptions,
    Status,
    build_witness,
    classify_family,
    export_table,
    summary,
    theorem_rule_engine,
    write_witnesses,
)
from .combinatorics import is_compatible, orbit, parse_couple, parse_pattern
from .errors import ModuliError, NotHyperbolic, ParseError, SoundnessViolation, ZeroCoefficient
from .exact import Polynomial, is_hyperbolic, moduli_order, sign_pattern
from .search import (
    DEFAULT_DEN_BOUND,
    DEFAULT_ITERATIONS,
    DEFAULT_RESTARTS,
    SearchSpec,
    search_realization,
)

EXIT_OK = 0
EXIT_SOUNDNESS = 2
EXIT_EXHAUSTED = 3
EXIT_INPUT = 4


@dataclass(frozen=True)
class RunConfig:
    command: str
    seed: int = 0
    trials: int = 10_000
    restarts: int = DEFAULT_RESTARTS
    iterations: int = DEFAULT_ITERATIONS
    den_bound: int = DEFAULT_DEN_BOUND
    out: Optional[Path] = None
    fmt: str = "csv"

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        return cls(
            args.command,
            getattr(args, "seed", 0),
            getattr(args, "trials", 10_000),
            getattr(args, "restarts", DEFAULT_RESTARTS),
            getattr(args, "iters", DEFAULT_ITERATIONS),
            getattr(args, "den_bound", DEFAULT_DEN_BOUND),
            None if getattr(args, "out", None) is None else Path(args.out),
            getattr(args, "format", "csv"),
        )


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text, encoding="utf-8")
        print(f"wrote {out}")


def _read_poly(arg: str) -> Polynomial:
    path = Path(arg)
    text = path.read_text(encoding="utf-8") if path.is_file() else arg
    return Polynomial.parse(text.strip())


# ---------------------------------------------------------------------------
# Commands


def cmd_inspect(args: argparse.Namespace) -> int:
    poly = _read_poly(args.poly)
    if poly.degree < 1:
        raise ValueError("need a polynomial of degree at least 1")
    hyperbolic = is_hyperbolic(poly)
    report: dict = {"polynomial": str(poly), "degree": poly.degree}
    try:
        pattern = sign_pattern(poly)
    except ZeroCoefficient as exc:
        if hyperbolic:
            print(f"ZeroCoefficient: {exc}", file=sys.stderr)
            return EXIT_INPUT
        report.update(pattern=None, hyperbolic=False, note=f"not hyperbolic; {exc}")
        pattern = None
    if pattern is not None:
        report.update(
            pattern=pattern.text(),
            blocks=str(pattern),
            changes=pattern.changes,
            preservations=pattern.preservations,
            hyperbolic=hyperbolic,
        )
        try:
            order = moduli_order(poly)
            report.update(order=order.word, code="(" + ",".join(map(str, order.code)) + ")")
        except NotHyperbolic:
            report.update(order=None, code=None, note="not hyperbolic: order of moduli undefined")
        except ModuliError as exc:
            report.update(order=None, code=None, note=f"{type(exc).__name__}: {exc}")
    if args.json:
        print(json.dumps(report, indent=2, ensure_ascii=False))
    else:
        for key, value in report.items():
            print(f"{key:>13}: {value}")
    return EXIT_OK


def cmd_realize(args: argparse.Namespace) -> int:
    cfg = RunConfig.from_args(args)
    couple = parse_couple(args.couple)
    if not is_compatible(couple):
        print(f"incompatible couple {couple.text()}: need {couple.pattern.changes} P letters", file=sys.stderr)
        return EXIT_INPUT
    decision = theorem_rule_engine(couple)
    if decision is not None and not decision.realizable:
        print(f"{couple.text()}: NonRealizable")
        print(f"  {decision.citation()}")
        return EXIT_OK
    wit = build_witness(couple, decision)
    source = "construction"
    if wit is None:
        spec = SearchSpec(couple, cfg.restarts, cfg.iterations, cfg.seed, cfg.den_bound)
        result = search_realization(spec)
        wit = result.witness
        source = f"search (restart {result.best_restart})"
        if wit is None:
            print(f"{couple.text()}: SearchFailed after {result.restarts_used} restarts, best float margin {result.best_margin:.3e}")
            return EXIT_EXHAUSTED
    print(f"{couple.text()}: Realizable via {source}, verified={wit.verified}", file=sys.stderr)
    _emit(wit.dumps() + "\n", cfg.out)
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    cfg = RunConfig.from_args(args)
    pattern = parse_pattern(args.pattern)
    options = ClassifyOptions(
        seed=cfg.seed,
        restarts=cfg.restarts,
        iterations=cfg.iterations,
        denominator_bound=cfg.den_bound,
        search=not args.no_search,
        cross_check=args.cross_check,
        workers=args.workers,
    )
    entries = classify_family(pattern, options)
    if args.witness_dir:
        entries = write_witnesses(entries, Path(args.witness_dir))
    _emit(export_table(entries, cfg.fmt), cfg.out)
    counts = summary(entries)
    print(", ".join(f"{k}={v}" for k, v in counts.items() if v), file=sys.stderr)
    return EXIT_EXHAUSTED if counts[Status.SEARCH_FAILED.value] else EXIT_OK


def cmd_certify(args: argparse.Namespace) -> int:
    cfg = RunConfig.from_args(args)
    ids = args.id or (list(SAMPLED_CATALOG) + list(IDENTITY_CATALOG))
    unknown = [i for i in ids if i not in SAMPLED_CATALOG and i not in IDENTITY_CATALOG]
    if unknown:
        print(f"unknown certificate id(s): {', '.join(unknown)}", file=sys.stderr)
        return EXIT_INPUT
    reports = [run_certificate(CertificateSpec(i, cfg.trials, cfg.seed)) for i in ids]
    if args.json or cfg.out is not None:
        _emit(json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True, ensure_ascii=False) + "\n", cfg.out)
    else:
        for r in reports:
            print(r.line())
    return EXIT_OK if all(r.passed for r in reports) else EXIT_SOUNDNESS


def cmd_orbit(args: argparse.Namespace) -> int:
    couple = parse_couple(args.couple)
    members = sorted(orbit(couple), key=lambda c: (c.pattern.blocks, c.code))
    if args.json:
        print(json.dumps([c.to_dict() for c in members], indent=2, ensure_ascii=False))
    else:
        for c in members:
            print(f"{c.text():<22} {c.pattern.compact():<14} {c.order.word}")
        print(f"orbit size {len(members)}")
    return EXIT_OK


# ---------------------------------------------------------------------------


def _add_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    p.add_argument("--restarts", type=int, default=DEFAULT_RESTARTS, help="search restarts")
    p.add_argument("--iters", type=int, default=DEFAULT_ITERATIONS, help="pattern-search iterations per restart")
    p.add_argument("--den-bound", type=int, default=DEFAULT_DEN_BOUND, help="denominator bound for rational snapping")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="moduli-orders", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("inspect", help="sign pattern, order of moduli and code of a polynomial")
    p.add_argument("poly", help='polynomial such as "x^3+1/2x^2-11/2x-5", or a file containing one')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("realize", help="witness for a couple, or the rule ruling it out")
    p.add_argument("couple", help='"S2,4,2 (2,1,2)" or "pattern=++----++ order=PNNNNNP"')
    _add_budget(p)
    p.add_argument("--out", help="write the witness JSON here")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("classify", help="realizability table of a sign pattern")
    p.add_argument("pattern", help='"S3,2,2" or "+++--++"')
    _add_budget(p)
    p.add_argument("--format", choices=["json", "csv", "markdown"], default="csv")
    p.add_argument("--out", help="write the table here")
    p.add_argument("--witness-dir", help="write one witness JSON per realizable couple into this directory")
    p.add_argument("--no-search", action="store_true", help="leave undecided couples Unknown")
    p.add_argument("--cross-check", action="store_true", help="also search rule-impossible couples")
    p.add_argument("--workers", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("certify", help="run sampled certificates and identity checks")
    p.add_argument("--id", action="append", help="catalog id; repeatable; default runs all")
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write the JSON report here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("orbit", help="orbit of a couple under i_m and i_r")
    p.add_argument("couple")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_orbit)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_INPUT
    try:
        return args.func(args)
    except SoundnessViolation as exc:
        print(f"SoundnessViolation: {exc}", file=sys.stderr)
        return EXIT_SOUNDNESS
    except (ParseError, ValueError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
