"""Command-line front end.

Exit codes: 0 success, 1 usage or configuration error, 2 a property
violation was found.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .complexity import CLOSED, VIOLATED, closure_under_theta, complexity_profile, sufficient_window
from .core import Antimorphism, ParseError, Word, build_factor_index, parse_theta, parse_word_spec
from .generators import BudgetExceeded, builtin_corpus, parse_generator
from .palindromic import richness_report
from .rauzy import n_simple_paths, rauzy_dot, rauzy_graph, reduced_dot, super_reduced_dot, super_reduced_graph
from .suite import PROPERTIES, Target, corpus_targets, mutate, run_suite

SCHEMA_VERSION = 1
MAX_WINDOW = 5000


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    """Resolved input for one command."""

    theta: Antimorphism
    word: Word
    source: str  # literal:<text> | file:<path> | generator spec
    complete: bool  # the word is the whole object, not a window
    n_min: int
    n_max: int
    fmt: str
    out: Optional[str]
    verbose: int = 0


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            n = int(text)
            return n, n
        return int(lo), int(hi)
    except ValueError:
        raise UsageError(f"bad n-range {text!r}; expected e.g. 0..20") from None


def _load(args) -> tuple[Antimorphism, Word, str, bool, Optional[int]]:
    """Resolve the word source. Returns theta, word, source, complete, period."""
    sources = [s for s in (args.word, args.file, args.gen) if s is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one of --word, --file, --gen")
    theta = parse_theta(args.theta) if args.theta else None
    if args.file is not None:
        try:
            text = Path(args.file).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc}") from None
        spec = parse_word_spec(text)
        return spec.theta, spec.word, f"file:{args.file}", True, None
    if args.word is not None:
        if theta is None:
            raise UsageError("--word needs --theta")
        return theta, theta.alphabet.parse(args.word), f"literal:{args.word}", True, None
    gen, gen_theta = parse_generator(args.gen, theta)
    if theta is not None and gen_theta is not None and theta.alphabet != gen_theta.alphabet:
        raise UsageError("--theta alphabet does not match the generator")
    theta = theta or gen_theta
    return theta, gen, args.gen, False, gen.period


def _config(args, default_n: int = 20) -> RunConfig:
    theta, w, source, complete, period = _load(args)
    if args.n is not None:
        n_min, n_max = _parse_range(args.n)
    else:
        n_min, n_max = 0, default_n
    if n_min < 0 or n_max < n_min:
        raise UsageError(f"bad n-range {n_min}..{n_max}")
    if complete:
        word = w
        if args.window is not None:
            word = w[: args.window]
    else:
        window = args.window or min(sufficient_window(n_max + 1, period), MAX_WINDOW)
        try:
            word = w.prefix(window)
        except BudgetExceeded as exc:
            raise UsageError(str(exc)) from None
        source = f"{source}@{window}"
    if args.n is not None and n_max + 1 > len(word):
        raise UsageError(f"n = {n_max} needs a window of at least {n_max + 1}, got {len(word)}")
    if getattr(args, "mutate", None) is not None:
        word = mutate(word, args.mutate)
        source = f"{source}#mutate={args.mutate}"
    return RunConfig(theta, word, source, complete, n_min, n_max, args.format, args.out,
                     getattr(args, "verbose", 0))


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(cfg: RunConfig) -> int:
    theta, w = cfg.theta, cfg.word
    report = richness_report(theta, w)
    N = min(cfg.n_max, len(w) - 1)
    profile = complexity_profile(theta, w, N, cfg.source) if N >= 0 else None
    mode = "complete" if cfg.complete else "window"
    closure = closure_under_theta(theta, w, max(N + 1, 0), mode)
    rows = [r for r in profile.rows if r.n >= cfg.n_min] if profile else []
    violated = closure.verdict == CLOSED and any(r.status == VIOLATED for r in rows)

    if cfg.fmt == "csv":
        if profile is None:
            text = "n,C,dC,P,lhs,rhs,status\n"
        else:
            lines = profile.to_csv().splitlines()
            keep = [lines[0]] + [ln for ln, r in zip(lines[1:], profile.rows) if r.n >= cfg.n_min]
            text = "\n".join(keep) + "\n"
    elif cfg.fmt == "json":
        doc = {
            "schema": f"thetarich.analyze/{SCHEMA_VERSION}",
            "source": cfg.source,
            "theta": theta.spec(),
            "window_length": len(w),
            "richness": report.to_dict(),
            "closure": closure.to_dict(),
            "profile": None
            if profile is None
            else {**profile.to_dict(), "rows": [r for r in profile.to_dict()["rows"] if r["n"] >= cfg.n_min]},
        }
        if not cfg.verbose:
            doc["richness"]["word"] = None if len(w) > 200 else doc["richness"]["word"]
        text = json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    else:
        lines = [
            f"source: {cfg.source}",
            f"theta: {theta.spec()}",
            f"window_length: {len(w)}",
            f"rich: {str(report.is_rich).lower()}  pal_count={report.pal_count} bound={report.bound}"
            f" defect={report.defect}",
        ]
        if report.witness is not None:
            wt = report.witness
            lines.append(
                f"witness: prefix of length {len(wt.prefix)} ending {wt.prefix[-6:].text()!r},"
                f" suffix {wt.suffix.text()!r} occurs {wt.suffix_occurrences} times"
            )
        lines.append(f"closure: {closure.verdict}")
        if rows:
            lines.append("   n     C    dC     P   lhs   rhs  status")
            for r in rows:
                lines.append(f"{r.n:4d}{r.C:6d}{r.dC:6d}{r.P:6d}{r.lhs:6d}{r.rhs:6d}  {r.status}")
        text = "\n".join(lines) + "\n"
    _emit(text, cfg.out)
    return 2 if violated else 0


def cmd_rauzy(cfg: RunConfig, out_dir: Optional[str]) -> int:
    n = cfg.n_max
    if n + 1 > len(cfg.word):
        raise UsageError(f"n = {n} exceeds the window (length {len(cfg.word)})")
    idx = build_factor_index(cfg.word, n + 1)
    graph = rauzy_graph(idx, n)
    paths = n_simple_paths(idx, n)
    sred = super_reduced_graph(cfg.theta, idx, n, paths)
    docs = {
        f"rauzy_{n}.dot": rauzy_dot(graph),
        f"reduced_{n}.dot": reduced_dot(paths, idx.alphabet),
        f"super_reduced_{n}.dot": super_reduced_dot(sred, cfg.theta),
    }
    if out_dir:
        d = Path(out_dir)
        d.mkdir(parents=True, exist_ok=True)
        for name, text in docs.items():
            (d / name).write_text(text)
    else:
        _emit("".join(f"// {name}\n{text}" for name, text in docs.items()), cfg.out)
    return 0


def cmd_verify(args) -> int:
    if args.list:
        for pid, desc in PROPERTIES.items():
            print(f"{pid:<22} {desc}")
        return 0
    n_max = _parse_range(args.n)[1] if args.n else 30
    if any(s is not None for s in (args.word, args.file, args.gen)):
        cfg = _config(args, default_n=n_max)
        targets = [Target(cfg.source, cfg.theta, cfg.word, not cfg.complete)]
    else:
        window = args.window or 1500
        try:
            targets = corpus_targets(window, args.corpus or None)
        except KeyError as exc:
            raise UsageError(str(exc)) from None
        if args.mutate is not None:
            targets = [Target(f"{t.name}#mutate={args.mutate}", t.theta, mutate(t.word, args.mutate),
                              t.aperiodic) for t in targets]
    unknown = set(args.only or ()) - set(PROPERTIES)
    if unknown:
        raise UsageError(f"unknown property ids: {sorted(unknown)}")
    rows = run_suite(targets, N=n_max, only=args.only)
    failed = [r for r in rows if not r.passed]
    if args.format == "json":
        doc = {
            "schema": f"thetarich.verify/{SCHEMA_VERSION}",
            "n_max": n_max,
            "targets": [{"name": t.name, "theta": t.theta.spec(), "window_length": len(t.word)}
                        for t in targets],
            "rows": [r.to_dict() for r in rows],
            "passed": not failed,
        }
        text = json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    else:
        shown = rows if args.verbose else [r for r in rows if r.n is None or not r.passed]
        lines = [r.line() for r in shown]
        lines.append(f"{len(rows) - len(failed)}/{len(rows)} checks passed")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 2 if failed else 0


def cmd_generate(args) -> int:
    theta = parse_theta(args.theta) if args.theta else None
    gen, _ = parse_generator(args.gen, theta)
    try:
        w = gen.prefix(args.length)
    except BudgetExceeded as exc:
        raise UsageError(str(exc)) from None
    _emit(w.text(args.sep) + "\n", args.out)
    return 0


def cmd_corpus(args) -> int:
    entries = builtin_corpus()
    if args.format == "json":
        doc = [{"name": e.name, "theta": e.theta.spec(), "generator": e.make().spec,
                "description": e.description} for e in entries]
        _emit(json.dumps(doc, indent=2, ensure_ascii=False) + "\n", args.out)
    else:
        lines = [f"{e.name:<14} theta: {e.theta.spec():<12} {e.description}" for e in entries]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _add_source(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("word source")
    g.add_argument("--word", help="literal word, tokenized by the theta alphabet")
    g.add_argument("--file", help="word-spec file (alphabet:/theta:/word: lines)")
    g.add_argument("--gen", help="generator spec, e.g. periodic:ccaa' or morphic:ex5.1")
    p.add_argument("--theta", help="theta spec, e.g. \"a<->a' c\"")
    p.add_argument("--window", type=int, help="prefix length to analyze")
    p.add_argument("--n", help="n or n-range lo..hi")
    p.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("-v", "--verbose", action="count", default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="thetarich", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="richness report and complexity profile")
    _add_source(p)
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")

    p = sub.add_parser("rauzy", help="write Rauzy, reduced and super reduced graphs as DOT")
    _add_source(p)
    p.add_argument("--out-dir", help="directory for the three DOT files")
    p.set_defaults(format="dot")

    p = sub.add_parser("verify", help="run the property checks on the corpus or one word")
    _add_source(p)
    p.add_argument("--list", action="store_true", help="print property ids and exit")
    p.add_argument("--corpus", nargs="*", help="restrict to these builtin words")
    p.add_argument("--only", nargs="*", help="restrict to these property ids")
    p.add_argument("--mutate", type=int, help="replace the letter at this position (fault injection)")
    p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("generate", help="print a prefix of a generated word")
    p.add_argument("--gen", required=True)
    p.add_argument("--theta")
    p.add_argument("--length", type=int, default=100)
    p.add_argument("--sep", default="", help="separator between letters")
    p.add_argument("--out")

    p = sub.add_parser("corpus", help="list the builtin words")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--out")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        if args.command == "analyze":
            return cmd_analyze(_config(args))
        if args.command == "rauzy":
            if args.n is None:
                raise UsageError("rauzy needs --n")
            return cmd_rauzy(_config(args), args.out_dir)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "generate":
            return cmd_generate(args)
        if args.command == "corpus":
            return cmd_corpus(args)
    except ParseError as exc:
        print(f"thetarich: error: {exc} (offending token: {exc.token!r})", file=sys.stderr)
        return 1
    except (UsageError, ValueError) as exc:
        print(f"thetarich: error: {exc}", file=sys.stderr)
        return 1
    return 1


if __name__ == "__main__":
    sys.exit(main())
