"""Command-line entry point: build, validate and stats subcommands."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .aggregation import (
    index_by_category,
    index_by_ingredient,
    index_by_letter,
    index_by_provenance,
    overview_stats,
)
from .config import BuildConfig, ConfigError, build_config, load_config_file
from .diagnostics import DiagnosticsReport
from .emit import (
    EmitError,
    SiteDataset,
    canonical_json,
    check_image_manifest,
    emit_site_data,
)
from .model import Cookbook
from .table_ingest import ParseError, group_recipes, parse_table
from .viz_datasets import (
    build_cooccurrence_matrix,
    build_map_dataset,
    build_network,
    build_piechart,
    build_units_profile,
)
from .vocabulary import (
    VocabularySet,
    load_vocabulary,
    resolve_corpus,
    validate_corpus,
)


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", type=Path, metavar="PATH",
                        help="flat key=value configuration file")
    parser.add_argument("--input", type=Path, metavar="TSV",
                        help="working table export")
    parser.add_argument("--vocab", type=Path, metavar="DIR",
                        help="controlled vocabulary directory")
    parser.add_argument("--images", type=Path, metavar="DIR",
                        help="digitised photos directory, cross-checked when given")
    parser.add_argument("--out", type=Path, metavar="DIR",
                        help="output directory (default: data)")
    parser.add_argument("--strict", action="store_true", default=None,
                        help="unresolved terms become errors; any error aborts")
    parser.add_argument("--edge-threshold", type=int, metavar="N",
                        help="minimum co-occurrence for a network edge (default: 1)")
    parser.add_argument("--matrix-cap", type=int, metavar="N",
                        help="most-used ingredient cap for the matrix (default: 200)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cookbook-compiler",
        description="Compile a cookbook transcription table into JSON site data.")
    sub = parser.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build", help="run the full pipeline and emit JSON")
    _add_common_flags(build)
    build.set_defaults(handler=cmd_build)

    validate = sub.add_parser("validate", help="report diagnostics, write nothing")
    _add_common_flags(validate)
    validate.add_argument("--format", choices=("text", "json"), default="text",
                          help="report rendering (default: text)")
    validate.set_defaults(handler=cmd_validate)

    stats = sub.add_parser("stats", help="print corpus statistics, write nothing")
    _add_common_flags(stats)
    stats.set_defaults(handler=cmd_stats)

    return parser


def _assemble_config(args: argparse.Namespace) -> BuildConfig:
    config = build_config(load_config_file(args.config)) if args.config else BuildConfig()
    if args.input is not None:
        config.input_path = args.input
    if args.vocab is not None:
        config.vocab_dir = args.vocab
    if args.images is not None:
        config.images_dir = args.images
    if args.out is not None:
        config.out_dir = args.out
    if args.strict is not None:
        config.strict = args.strict
    if args.edge_threshold is not None:
        config.edge_threshold = args.edge_threshold
    if args.matrix_cap is not None:
        config.matrix_cap = args.matrix_cap
    config.ensure_valid()
    return config


def _load_corpus(config: BuildConfig,
                 ) -> tuple[list[Cookbook], VocabularySet, DiagnosticsReport]:
    """parse -> group -> load vocabulary -> resolve -> validate."""
    report = DiagnosticsReport()
    try:
        data = config.input_path.read_bytes()
    except OSError as exc:
        raise ParseError(f"cannot read {config.input_path}: {exc}") from exc

    rows, parse_report = parse_table(data, config.columns)
    report.merge(parse_report)
    cookbooks, group_report = group_recipes(rows)
    report.merge(group_report)

    if config.vocab_dir is not None:
        vocab, vocab_report = load_vocabulary(config.vocab_dir)
        report.merge(vocab_report)
    else:
        vocab = VocabularySet()

    resolve_corpus(cookbooks, vocab)
    report.merge(validate_corpus(cookbooks, vocab, strict=config.strict))
    return cookbooks, vocab, report


def cmd_build(config: BuildConfig, args: argparse.Namespace) -> int:
    cookbooks, vocab, report = _load_corpus(config)
    if config.strict and report.has_errors:
        print(report.format_text(), file=sys.stderr)
        print("build aborted; no files written", file=sys.stderr)
        return 1

    map_dataset, map_report = build_map_dataset(cookbooks, vocab)
    report.merge(map_report)
    matrix = build_cooccurrence_matrix(cookbooks, config.matrix_cap, report)
    dataset = SiteDataset(
        overview=overview_stats(cookbooks, vocab),
        alphabet=index_by_letter(cookbooks),
        categories=index_by_category(cookbooks),
        ingredients=index_by_ingredient(cookbooks),
        provenance=index_by_provenance(cookbooks),
        map=map_dataset,
        matrix=matrix,
        network=build_network(matrix, config.edge_threshold),
        piechart=build_piechart(cookbooks),
        units=build_units_profile(cookbooks),
        cookbooks=cookbooks,
    )
    if config.images_dir is not None:
        report.merge(check_image_manifest(dataset, config.images_dir))

    manifest = emit_site_data(dataset, config.out_dir)
    print(report.format_text(), file=sys.stderr)
    for relative in manifest:
        print(config.out_dir / relative)
    return 0


def cmd_validate(config: BuildConfig, args: argparse.Namespace) -> int:
    _, _, report = _load_corpus(config)
    if args.format == "json":
        sys.stdout.buffer.write(canonical_json(report.to_payload()))
        sys.stdout.buffer.flush()
    else:
        print(report.format_text())
    return 1 if report.has_errors else 0


def cmd_stats(config: BuildConfig, args: argparse.Namespace) -> int:
    cookbooks, vocab, report = _load_corpus(config)
    print(report.format_text(), file=sys.stderr)

    stats = overview_stats(cookbooks, vocab)
    print(f"cookbooks: {stats.cookbook_count} / recipes: {stats.recipe_count}"
          f" / ingredients: {stats.ingredient_count}")
    if stats.gender_recipes:
        tallies = " ".join(f"{gender}={count}"
                           for gender, count in stats.gender_recipes.items())
        print(f"gender: {tallies}")
    for index in (index_by_letter(cookbooks), index_by_category(cookbooks),
                  index_by_ingredient(cookbooks), index_by_provenance(cookbooks)):
        sizes = index.bucket_sizes()
        if sizes:
            counts = " ".join(f"{key}={size}" for key, size in sizes.items())
            print(f"{index.facet}: {counts}")
        else:
            print(f"{index.facet}: (empty)")
    return 0


def run(argv: list[str] | None = None) -> int:
    """Entry point; returns the process exit code."""
    args = _build_parser().parse_args(argv)
    try:
        config = _assemble_config(args)
        return args.handler(config, args)
    except (ConfigError, ParseError, EmitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(run())
