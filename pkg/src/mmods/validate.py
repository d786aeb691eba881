"""Closed-world constraint checking over explicit graphs.

Each constraint is read as an integrity check on the triples actually
present (optionally after materializing inferred triples), not as open-world
entailment: a required edge that is absent is a violation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .axioms import Constraint, ConstraintCatalog, DatatypeFiller, Filler, VocabFiller
from .graph import (
    RDF_TYPE,
    Graph,
    Iri,
    Literal,
    Term,
    format_term,
    format_triple,
    term_sort_key,
)
from .inference import materialize
from .vocab import VocabularyRegistry


@dataclass(frozen=True)
class Finding:
    """One constraint violation or warning, anchored on a focus node."""

    code: str
    axiom_id: str
    severity: str
    focus: str
    detail: str
    message: str


class ValidationReport:
    """Findings from one validation run plus summary counts."""

    def __init__(self, findings: list[Finding], source: str = ""):
        self.findings = findings
        self.source = source

    @property
    def errors(self) -> int:
        return sum(1 for f in self.findings if f.severity == "error")

    @property
    def warnings(self) -> int:
        return sum(1 for f in self.findings if f.severity == "warning")

    @property
    def infos(self) -> int:
        return sum(1 for f in self.findings if f.severity == "info")

    def ok(self) -> bool:
        return self.errors == 0

    def summary(self) -> dict:
        return {"errors": self.errors, "warnings": self.warnings, "infos": self.infos}


def _typed(graph: Graph, cls: Iri) -> list:
    return sorted({t.s for t in graph.match(None, RDF_TYPE, cls)}, key=term_sort_key)


def _is_typed(graph: Graph, term: Term, cls: Iri) -> bool:
    return not isinstance(term, Literal) and (term, RDF_TYPE, cls) in graph


def _vocab_member(graph: Graph, registry: VocabularyRegistry, vocab_name: str, term: Term) -> bool:
    """Closed vocabularies admit only listed members; open ones also admit
    any IRI the graph types with the vocabulary class."""
    vocab = registry.vocabularies[vocab_name]
    if term in vocab.individuals:
        return True
    if not vocab.closed and isinstance(term, Iri):
        return (term, RDF_TYPE, vocab.class_iri) in graph
    return False


def _filler_ok(graph: Graph, registry: VocabularyRegistry, filler: Optional[Filler], term: Term) -> bool:
    if filler is None:
        return True
    if isinstance(filler, Iri):
        return _is_typed(graph, term, filler)
    if isinstance(filler, VocabFiller):
        return _vocab_member(graph, registry, filler.vocabulary, term)
    return isinstance(term, Literal) and term.datatype == filler.datatype


def _filler_text(filler: Filler) -> str:
    if isinstance(filler, Iri):
        return f"a node typed {format_term(filler)}"
    if isinstance(filler, VocabFiller):
        return f"a member of the {filler.vocabulary} vocabulary"
    return f"a literal of datatype {format_term(filler.datatype)}"


def _finding(constraint: Constraint, severity: str, focus: Term, detail: str) -> Finding:
    return Finding(
        code=constraint.code,
        axiom_id=constraint.axiom_id,
        severity=severity,
        focus=format_term(focus),
        detail=detail,
        message=constraint.message,
    )


def _check_existential(graph, constraint, registry):
    out = []
    for x in _typed(graph, constraint.scope_class):
        edges = graph.match(x, constraint.prop, None)
        if not any(_filler_ok(graph, registry, constraint.filler, t.o) for t in edges):
            detail = (
                f"{format_term(x)} has no {format_term(constraint.prop)} edge to "
                f"{_filler_text(constraint.filler)}"
            )
            out.append(_finding(constraint, "error", x, detail))
    return out


def _check_max_one(graph, constraint, registry):
    out = []
    edges = graph.match(None, constraint.prop, None)
    if constraint.direction == "forward":
        groups: dict = {}
        for t in edges:
            if constraint.scope_class is not None and not _is_typed(graph, t.s, constraint.scope_class):
                continue
            if constraint.filler is not None and not _filler_ok(graph, registry, constraint.filler, t.o):
                continue
            groups.setdefault(t.s, set()).add(t.o)
        for focus in sorted(groups, key=term_sort_key):
            objects = groups[focus]
            if len(objects) > 1:
                listed = ", ".join(sorted(format_term(o) for o in objects))
                detail = (
                    f"{format_term(focus)} has {len(objects)} distinct "
                    f"{format_term(constraint.prop)} objects: {listed}"
                )
                out.append(_finding(constraint, "error", focus, detail))
        return out
    groups = {}
    for t in edges:
        if constraint.scope_class is not None and not _is_typed(graph, t.o, constraint.scope_class):
            continue
        if constraint.filler is not None and not _filler_ok(graph, registry, constraint.filler, t.s):
            continue
        groups.setdefault(t.o, set()).add(t.s)
    for focus in sorted(groups, key=term_sort_key):
        subjects = groups[focus]
        if len(subjects) > 1:
            listed = ", ".join(sorted(format_term(s) for s in subjects))
            detail = (
                f"{format_term(focus)} has {len(subjects)} distinct incoming "
                f"{format_term(constraint.prop)} subjects: {listed}"
            )
            out.append(_finding(constraint, "error", focus, detail))
    return out


def _check_universal_range(graph, constraint, registry, strict):
    out = []
    vocab_filler = isinstance(constraint.filler, VocabFiller)
    severity = "error" if (not vocab_filler or strict) else "warning"
    for t in graph.match(None, constraint.prop, None):
        if not _filler_ok(graph, registry, constraint.filler, t.o):
            detail = f"object of {format_triple(t)} is not {_filler_text(constraint.filler)}"
            out.append(_finding(constraint, severity, t.s, detail))
    return out


def _check_inverse_existential(graph, constraint, registry):
    out = []
    for x in _typed(graph, constraint.scope_class):
        incoming = graph.match(None, constraint.prop, x)
        if not any(_is_typed(graph, t.s, constraint.source_class) for t in incoming):
            detail = (
                f"{format_term(x)} has no incoming {format_term(constraint.prop)} edge "
                f"from a node typed {format_term(constraint.source_class)}"
            )
            out.append(_finding(constraint, "error", x, detail))
    return out


def _check_negated_path(graph, constraint, registry):
    out = []
    for x in _typed(graph, constraint.scope_class):
        hit = None
        for step in graph.match(x, constraint.prop, None):
            if isinstance(step.o, Literal):
                continue
            tails = graph.match(step.o, constraint.prop2, None)
            if tails:
                hit = (step.o, tails[0].o)
                break
        if hit is not None:
            detail = (
                f"{format_term(x)} reaches {format_term(hit[1])} via "
                f"{format_term(constraint.prop)} then {format_term(constraint.prop2)}"
            )
            out.append(_finding(constraint, "error", x, detail))
    return out


def _check_structural_tautology(graph, constraint, registry):
    out = []
    for t in graph.match(None, constraint.prop, None):
        if constraint.scope_class is not None and not _is_typed(graph, t.s, constraint.scope_class):
            continue
        if not _filler_ok(graph, registry, constraint.filler, t.o):
            detail = f"object of {format_triple(t)} is not {_filler_text(constraint.filler)}"
            out.append(_finding(constraint, "warning", t.s, detail))
    return out


def _check_scoped_domain(graph, constraint, registry):
    out = []
    seen = set()
    for t in graph.match(None, constraint.prop, None):
        if t.s in seen:
            continue
        if _is_typed(graph, t.o, constraint.filler) and not _is_typed(graph, t.s, constraint.required_class):
            seen.add(t.s)
            detail = (
                f"{format_term(t.s)} has a {format_term(constraint.prop)} edge to "
                f"{format_term(t.o)} but is not typed {format_term(constraint.required_class)}"
            )
            out.append(_finding(constraint, "error", t.s, detail))
    return out


def check_constraint(
    graph: Graph,
    constraint: Constraint,
    registry: VocabularyRegistry,
    strict: bool = False,
) -> list[Finding]:
    """Findings for one constraint, in deterministic focus order."""
    kind = constraint.kind
    if kind in ("subclass_of", "role_chain"):
        return []
    if kind == "existential":
        return _check_existential(graph, constraint, registry)
    if kind == "max_one":
        return _check_max_one(graph, constraint, registry)
    if kind == "universal_range":
        return _check_universal_range(graph, constraint, registry, strict)
    if kind == "inverse_existential":
        return _check_inverse_existential(graph, constraint, registry)
    if kind == "negated_path":
        return _check_negated_path(graph, constraint, registry)
    if kind == "structural_tautology":
        return _check_structural_tautology(graph, constraint, registry)
    if kind == "scoped_domain":
        return _check_scoped_domain(graph, constraint, registry)
    raise ValueError(f"unknown constraint kind: {kind}")


def validate(
    graph: Graph,
    catalog: ConstraintCatalog,
    registry: VocabularyRegistry,
    *,
    infer: bool = True,
    strict: bool = False,
    source: str = "",
) -> ValidationReport:
    """Check every catalog constraint; inferred triples count by default."""
    target = materialize(graph, catalog) if infer else graph
    findings: list[Finding] = []
    for constraint in catalog:
        findings.extend(check_constraint(target, constraint, registry, strict))
    return ValidationReport(findings, source=source)
