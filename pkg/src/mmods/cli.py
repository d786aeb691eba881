"""Command-line interface: convert, validate, infer, emit-ontology, vocab.

Exit codes: 0 success, 1 parse failure, 2 I/O or usage failure,
3 validation found errors, 4 unknown vocabulary name. Artifacts go to
stdout (or --out), diagnostics to stderr. Same inputs and flags produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .axioms import catalog
from .graph import BlankNode, Graph
from .inference import materialize
from .mapping import map_record
from .modsxml import ModsParseError, parse_mods_xml
from .serialize import (
    NTriplesError,
    read_ntriples,
    report_to_document,
    write_ntriples,
    write_report_json,
    write_report_text,
    write_turtle,
)
from .validate import validate
from .vocab import DEFAULT_BASE_IRI, VocabularyRegistry

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_IO = 2
EXIT_INVALID = 3
EXIT_UNKNOWN_NAME = 4


class _CliError(Exception):
    def __init__(self, exit_code: int, message: str):
        super().__init__(message)
        self.exit_code = exit_code


def _base_iri(args) -> str:
    if args.base_iri:
        return args.base_iri
    return os.environ.get("MMODS_BASE_IRI") or DEFAULT_BASE_IRI


def _read_bytes(path: str) -> bytes:
    try:
        with open(path, "rb") as handle:
            return handle.read()
    except OSError as exc:
        raise _CliError(EXIT_IO, f"cannot read {path}: {exc}") from exc


def _write_output(text: str, out_path) -> None:
    if out_path is None:
        sys.stdout.write(text)
        return
    try:
        with open(out_path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    except OSError as exc:
        raise _CliError(EXIT_IO, f"cannot write {out_path}: {exc}") from exc


def _warn(message: str) -> None:
    print(f"warning: {message}", file=sys.stderr)


def _parse_mods(path: str):
    try:
        return parse_mods_xml(_read_bytes(path), source=path)
    except ModsParseError as exc:
        raise _CliError(EXIT_PARSE, str(exc)) from exc


def _read_graph_file(path: str) -> Graph:
    try:
        text = _read_bytes(path).decode("utf-8")
        return read_ntriples(text)
    except (NTriplesError, UnicodeDecodeError) as exc:
        raise _CliError(EXIT_PARSE, f"{path}: {exc}") from exc


def _merge(graphs: list[Graph]) -> Graph:
    """Union of several graphs with per-input blank node renaming."""
    merged = Graph()
    for graph in graphs:
        renamed: dict = {}

        def fresh(term):
            if not isinstance(term, BlankNode):
                return term
            if term.label not in renamed:
                renamed[term.label] = merged.fresh_blank()
            return renamed[term.label]

        for s, p, o in graph.triples():
            merged.add(fresh(s), p, fresh(o))
    return merged


def _serialize_graph(graph: Graph, registry, fmt: str) -> str:
    if fmt == "nt":
        return write_ntriples(graph)
    return write_turtle(graph, registry)


def _cmd_convert(args) -> int:
    registry = VocabularyRegistry(_base_iri(args))
    graphs = []
    for path in args.inputs:
        document = _parse_mods(path)
        result = map_record(document, registry)
        for warning in result.warnings:
            _warn(f"{path}: {warning}")
        graphs.append(result.graph)
    _write_output(_serialize_graph(_merge(graphs), registry, args.format), args.out)
    return EXIT_OK


def _load_for_validation(path: str, args, registry) -> Graph:
    fmt = args.input_format
    if fmt is None:
        fmt = "nt" if path.endswith(".nt") else "xml"
    if fmt == "nt":
        return _read_graph_file(path)
    document = _parse_mods(path)
    result = map_record(document, registry)
    for warning in result.warnings:
        _warn(f"{path}: {warning}")
    return result.graph


def _cmd_validate(args) -> int:
    registry = VocabularyRegistry(_base_iri(args))
    rules = catalog(registry)
    reports = []
    for path in args.inputs:
        graph = _load_for_validation(path, args, registry)
        reports.append(
            validate(
                graph,
                rules,
                registry,
                infer=not args.no_infer,
                strict=args.strict,
                source=path,
            )
        )
    if args.report == "json":
        if len(reports) == 1:
            text = write_report_json(reports[0])
        else:
            text = json.dumps([report_to_document(r) for r in reports], indent=2) + "\n"
    else:
        blocks = []
        for report in reports:
            header = f"source: {report.source}\n" if len(reports) > 1 else ""
            blocks.append(header + write_report_text(report))
        text = "".join(blocks)
    _write_output(text, args.out)
    if any(not report.ok() for report in reports):
        return EXIT_INVALID
    return EXIT_OK


def _cmd_infer(args) -> int:
    registry = VocabularyRegistry(_base_iri(args))
    rules = catalog(registry)
    graph = _read_graph_file(args.input)
    _write_output(
        _serialize_graph(materialize(graph, rules), registry, args.format), args.out
    )
    return EXIT_OK


def _cmd_emit_ontology(args) -> int:
    from .vocab import emit_ontology

    registry = VocabularyRegistry(_base_iri(args))
    rules = catalog(registry)
    graph = emit_ontology(registry, rules)
    _write_output(_serialize_graph(graph, registry, args.format), args.out)
    return EXIT_OK


def _cmd_vocab(args) -> int:
    registry = VocabularyRegistry(_base_iri(args))
    if args.name is not None:
        vocab = registry.vocabularies.get(args.name)
        if vocab is None:
            raise _CliError(EXIT_UNKNOWN_NAME, f"unknown vocabulary: {args.name!r}")
        lines = list(vocab.local_names())
    else:
        lines = [
            f"{vocab.name}\t{member}"
            for vocab in registry.vocabularies.values()
            for member in vocab.local_names()
        ]
    _write_output("\n".join(lines) + ("\n" if lines else ""), args.out)
    return EXIT_OK


def _add_common(parser) -> None:
    parser.add_argument(
        "--base-iri",
        default=None,
        help="base IRI for vocabulary terms (env MMODS_BASE_IRI, then built-in default)",
    )
    parser.add_argument("--out", default=None, help="output file (default stdout)")


def _add_format(parser) -> None:
    parser.add_argument(
        "--format",
        choices=("nt", "ttl"),
        default="ttl",
        help="graph output format (default ttl)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mmods",
        description="Compile MODS XML into a typed graph, validate it, and reason over it.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    convert = commands.add_parser("convert", help="MODS XML to graph")
    convert.add_argument("inputs", nargs="+", metavar="FILE")
    _add_common(convert)
    _add_format(convert)
    convert.set_defaults(func=_cmd_convert)

    check = commands.add_parser("validate", help="check a graph or record against the rules")
    check.add_argument("inputs", nargs="+", metavar="FILE")
    _add_common(check)
    check.add_argument(
        "--report", choices=("json", "text"), default="text", help="report format"
    )
    check.add_argument(
        "--input-format",
        choices=("xml", "nt"),
        default=None,
        help="override extension-based input sniffing",
    )
    check.add_argument("--strict", action="store_true", help="treat vocabulary warnings as errors")
    check.add_argument("--no-infer", action="store_true", help="skip rule materialization")
    check.set_defaults(func=_cmd_validate)

    infer = commands.add_parser("infer", help="materialize inference rules to fixpoint")
    infer.add_argument("input", metavar="FILE")
    _add_common(infer)
    _add_format(infer)
    infer.set_defaults(func=_cmd_infer)

    emit = commands.add_parser("emit-ontology", help="write the class and property declarations")
    _add_common(emit)
    _add_format(emit)
    emit.set_defaults(func=_cmd_emit_ontology)

    vocab = commands.add_parser("vocab", help="list controlled vocabulary members")
    vocab.add_argument("name", nargs="?", default=None)
    _add_common(vocab)
    vocab.set_defaults(func=_cmd_vocab)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
