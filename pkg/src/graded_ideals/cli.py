"""
Command-line front end.

    graded-ideals classify --spec ring.json [--json] [--no-timestamp]
    graded-ideals radical --spec ring.json
    graded-ideals localize --spec ring.json
    graded-ideals enumerate --spec ring.json
    graded-ideals theorems [--corpus small|default|large] [--id prop2 ...]
    graded-ideals witness

Reports go to stdout, logs to stderr. Exit codes: 0 ok, 2 parse error,
3 precondition violated, 4 size cap exceeded.
"""

import argparse
import dataclasses
import logging
import sys
from typing import List, Optional

from dotenv import load_dotenv

from graded_ideals import reports
from graded_ideals.classify import classify_full
from graded_ideals.config import get_settings
from graded_ideals.constants import (
    CORPUS_PRESET_NAMES,
    EXIT_CAP_EXCEEDED,
    EXIT_OK,
    EXIT_PARSE_ERROR,
    EXIT_PRECONDITION,
)
from graded_ideals.corpus import CORPUS_PRESETS, build_corpus
from graded_ideals.errors import (
    GradedAlgebraError,
    RingTooLargeError,
    SpecDocumentError,
    UnknownTheoremError,
)
from graded_ideals.euclid_witness import verify_witness_facts
from graded_ideals.ideal_lattice import enumerate_graded_ideals, grad_radical
from graded_ideals.localization import extend_ideal, localize
from graded_ideals.mult_set import closure
from graded_ideals.spec_document import ParsedSpec, load_spec
from graded_ideals.theorem_suite import REGISTRY, run_all

logger = logging.getLogger(__name__)


def _emit(args: argparse.Namespace, text: str, document: dict) -> None:
    sys.stdout.write(reports.to_json(document) if args.json else text)


def _require_ideal(spec: ParsedSpec) -> None:
    if spec.ideal is None:
        raise SpecDocumentError("This command needs an 'ideal' entry in the spec document")


def cmd_classify(args: argparse.Namespace) -> int:
    spec = load_spec(args.spec)
    _require_ideal(spec)
    mult_set = spec.mult_set if spec.mult_set is not None else closure(spec.ring, [])
    table = classify_full(spec.ring, spec.ideal, mult_set)  # type: ignore[arg-type]
    document = reports.classification_document(table, reports.timestamp(not args.no_timestamp))
    _emit(args, reports.classification_text(table), document)
    return EXIT_OK


def cmd_radical(args: argparse.Namespace) -> int:
    spec = load_spec(args.spec)
    _require_ideal(spec)
    radical = grad_radical(spec.ideal)  # type: ignore[arg-type]
    record = reports.radical_record(spec.ideal, radical)  # type: ignore[arg-type]
    record["generated_at"] = reports.timestamp(not args.no_timestamp)
    _emit(args, reports.radical_text(spec.ideal, radical), record)  # type: ignore[arg-type]
    return EXIT_OK


def cmd_localize(args: argparse.Namespace) -> int:
    spec = load_spec(args.spec)
    if spec.mult_set is None:
        raise SpecDocumentError("localize needs a 'mult_set' entry in the spec document")
    local = localize(spec.ring, spec.mult_set)
    extended = extend_ideal(local, spec.ideal) if spec.ideal is not None else None
    record = reports.localization_record(local, extended)
    record["generated_at"] = reports.timestamp(not args.no_timestamp)
    _emit(args, reports.localization_text(local, extended), record)
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    spec = load_spec(args.spec)
    ideals = enumerate_graded_ideals(spec.ring)
    record = reports.enumeration_record(spec.ring, ideals)
    record["generated_at"] = reports.timestamp(not args.no_timestamp)
    _emit(args, reports.enumeration_text(spec.ring, ideals), record)
    return EXIT_OK


def cmd_theorems(args: argparse.Namespace) -> int:
    settings = get_settings()
    preset = args.corpus or settings.corpus
    config = dataclasses.replace(CORPUS_PRESETS[preset], max_set_generators=settings.max_set_generators)
    theorem_ids = args.id or None
    if theorem_ids:
        unknown = [t for t in theorem_ids if t not in REGISTRY]
        if unknown:
            raise UnknownTheoremError(f"Unknown theorem id(s): {', '.join(unknown)}")

    logger.info(f"Running {len(theorem_ids) if theorem_ids else len(REGISTRY)} checks on the {preset} corpus")
    results = run_all(build_corpus(config), theorem_ids)
    document = reports.theorems_document(results, preset, include_timing=not args.no_timestamp)
    _emit(args, reports.theorems_text(results), document)
    return EXIT_OK


def cmd_witness(args: argparse.Namespace) -> int:
    facts = verify_witness_facts()
    document = reports.witness_document(facts, reports.timestamp(not args.no_timestamp))
    _emit(args, reports.witness_text(facts), document)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graded-ideals",
        description="Classify graded ideals of finite graded rings and audit the weakly S-primary results",
    )
    parser.add_argument("--verbose", "-v", action="store_true", help="Log at DEBUG level")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add_output_flags(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--json", action="store_true", help="Emit a JSON document instead of text")
        sub.add_argument("--no-timestamp", action="store_true", help="Omit time-dependent fields from JSON output")

    for name, handler, help_text in [
        ("classify", cmd_classify, "Full classification table of (P, S)"),
        ("radical", cmd_radical, "Graded radical of P"),
        ("localize", cmd_localize, "S^-1 R and S^-1 P"),
        ("enumerate", cmd_enumerate, "All graded ideals of the ring"),
    ]:
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("--spec", "-s", required=True, help="Path to a JSON ring-spec document")
        add_output_flags(sub)
        sub.set_defaults(handler=handler)

    theorems = subparsers.add_parser("theorems", help="Run the theorem suite over a corpus")
    theorems.add_argument("--corpus", "-c", choices=CORPUS_PRESET_NAMES, default=None,
                          help="Corpus preset (default from GRADED_CORPUS)")
    theorems.add_argument("--id", "-i", action="append", default=None,
                          help="Run only this theorem id (repeatable)")
    add_output_flags(theorems)
    theorems.set_defaults(handler=cmd_theorems)

    witness = subparsers.add_parser("witness", help="Check the infinite-ring witness facts")
    add_output_flags(witness)
    witness.set_defaults(handler=cmd_witness)
    return parser


def _configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else getattr(logging, get_settings().log_level.upper(), logging.INFO)
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
        force=True,
    )


def main(argv: Optional[List[str]] = None) -> int:
    load_dotenv()
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)

    try:
        return args.handler(args)
    except SpecDocumentError as e:
        logger.error(str(e))
        return EXIT_PARSE_ERROR
    except RingTooLargeError as e:
        logger.error(str(e))
        return EXIT_CAP_EXCEEDED
    except GradedAlgebraError as e:
        logger.error(str(e))
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
