"""Command-line front end: compare, bench, validate.

Exit codes: 0 success, 2 usage or configuration problem, 3 missing asset
file, 4 malformed data (also used for numerical non-convergence during a
run). ``compare`` prints one number to stdout; ``bench`` writes report
files and keeps stdout empty, logging progress to stderr.
"""

from __future__ import annotations

import argparse
import dataclasses
import logging
import sys
from pathlib import Path

from .benchmark import compare_sentences, run_benchmark
from .config import KNOWN_KINDS, parse_config, validate_assets, MethodSpec
from .datasets import load_afs, load_mrpc, load_sick
from .errors import ConfigError, ConvergenceError, DataFormatError, MissingAssetError
from .figures import render_report_chart
from .taxonomy import load_taxonomy
from .textprep import default_stopwords, load_stopwords
from .vectorspace import load_embeddings

log = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="textsim",
        description="Sentence similarity scoring and benchmark runner.")
    sub = parser.add_subparsers(dest="command", required=True)

    compare = sub.add_parser(
        "compare", help="score one sentence pair with a chosen method")
    compare.add_argument("sentence1")
    compare.add_argument("sentence2")
    compare.add_argument("--method", required=True, choices=KNOWN_KINDS)
    compare.add_argument("--taxonomy", help="IS-A taxonomy TSV (lin+string)")
    compare.add_argument("--corpus", help="one-document-per-line corpus "
                                          "(pmi+string, lsa+string, tfidf)")
    compare.add_argument("--embeddings", help="sentence embedding TSV "
                                              "(not usable with compare)")
    compare.add_argument("--stopwords", help="stopword list, one word per line")
    compare.add_argument("--weights", type=float, metavar="W_STRING",
                         help="string-component weight in [0, 1]; the "
                              "knowledge component gets the complement")
    compare.add_argument("--window", type=int, default=5,
                         help="co-occurrence window size (pmi+string)")
    compare.add_argument("--rank", type=int, default=100,
                         help="latent dimensions (lsa+string)")
    compare.add_argument("--seed", type=int, default=0,
                         help="seed for iterative factorization starts")
    compare.set_defaults(func=cmd_compare)

    bench = sub.add_parser(
        "bench", help="run the configured methods over the configured datasets")
    bench.add_argument("--config", required=True, help="benchmark config file")
    bench.add_argument("--out", default="report",
                       help="output base path; writes BASE.md, BASE.csv, BASE.png")
    bench.add_argument("--seed", type=int, default=None,
                       help="override the config seed")
    bench.set_defaults(func=cmd_bench)

    validate = sub.add_parser(
        "validate", help="check that asset and dataset files parse cleanly")
    validate.add_argument("--config")
    validate.add_argument("--taxonomy")
    validate.add_argument("--embeddings")
    validate.add_argument("--stopwords")
    validate.add_argument("--mrpc")
    validate.add_argument("--afs")
    validate.add_argument("--sick")
    validate.set_defaults(func=cmd_validate)
    return parser


def cmd_compare(args: argparse.Namespace) -> int:
    stopwords = (load_stopwords(args.stopwords) if args.stopwords
                 else default_stopwords())
    if args.weights is not None:
        w_string = args.weights
    else:
        w_string = 1.0 if args.method == "string" else 0.5
    method = MethodSpec(name=args.method, kind=args.method,
                        taxonomy=args.taxonomy, corpus=args.corpus,
                        embeddings=args.embeddings, w_string=w_string,
                        window=args.window, rank=args.rank)
    score = compare_sentences(method, args.sentence1, args.sentence2,
                              stopwords, seed=args.seed)
    print(f"{score:.6f}")
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.INFO,
                        format="%(message)s")
    config = parse_config(args.config)
    if args.seed is not None:
        config = dataclasses.replace(config, seed=args.seed)
    validate_assets(config)
    table = run_benchmark(config)

    out = Path(args.out)
    if out.parent != Path("."):
        out.parent.mkdir(parents=True, exist_ok=True)
    md_path = out.with_suffix(".md")
    csv_path = out.with_suffix(".csv")
    png_path = out.with_suffix(".png")
    md_path.write_text(table.to_markdown(), encoding="utf-8")
    csv_path.write_text(table.to_csv(), encoding="utf-8")
    render_report_chart(table, png_path)
    for p in (md_path, csv_path, png_path):
        log.info("wrote %s", p)
    return 0


def _exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, ConfigError):
        return 2
    if isinstance(exc, MissingAssetError):
        return 3
    if isinstance(exc, (DataFormatError, ConvergenceError)):
        return 4
    return 2  # remaining ValueErrors are misuse of flags or parameters


def cmd_validate(args: argparse.Namespace) -> int:
    def check_config(path):
        cfg = parse_config(path)
        validate_assets(cfg)
        return f"{len(cfg.methods)} methods"

    checks = [
        ("stopwords", args.stopwords, lambda p: f"{len(load_stopwords(p))} words"),
        ("taxonomy", args.taxonomy,
         lambda p: f"{len(load_taxonomy(p).parents)} concepts"),
        ("embeddings", args.embeddings,
         lambda p: (lambda t: f"{len(t.vectors)} vectors, dimension {t.dimension}")(
             load_embeddings(p))),
        ("mrpc", args.mrpc, lambda p: f"{len(load_mrpc(p))} records"),
        ("afs", args.afs, lambda p: f"{len(load_afs(p))} records"),
        ("sick", args.sick, lambda p: f"{len(load_sick(p)[0])} records"),
        ("config", args.config, check_config),
    ]
    requested = [(kind, path, fn) for kind, path, fn in checks if path is not None]
    if not requested:
        print("error: nothing to validate, pass at least one asset flag",
              file=sys.stderr)
        return 2
    first_failure = 0
    for kind, path, fn in requested:
        try:
            detail = fn(path)
        except (ValueError, OSError, ConvergenceError) as exc:
            print(f"ERROR {kind} {path}: {exc}", file=sys.stderr)
            if first_failure == 0:
                first_failure = _exit_code_for(exc)
        else:
            print(f"OK {kind} {path}: {detail}")
    return first_failure


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MissingAssetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (DataFormatError, ConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
