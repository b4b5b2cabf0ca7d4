"""Text formats: the ``.ihg`` DSL, a JSON schema, and DOT export.

All representations go through :class:`HypergraphDocument`, a faithful
surface-level form that preserves declaration order and the written member
order of each edge.  Converting to :class:`~ihg.model.ImplicationHypergraph`
normalizes edges to sets; converting back orders members by proposition
position, which is why emitters are byte-deterministic.

DSL grammar, one statement per line (``#`` starts a comment)::

    prop <id> ["<label>"]
    <id> [& <id>]* => <id> [& <id>]*

Ids used in edges without a ``prop`` line are declared implicitly, in first
appearance order.  ``prop`` itself is a reserved word and cannot name a
proposition in this format.  Labels may escape ``\"`` and ``\\\\``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from . import model
from .model import ImplicationHypergraph, Proposition

_ID_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_TOKEN_RE = re.compile(r'"(?:[^"\\]|\\.)*"|#[^\n]*|=>|&|[A-Za-z_][A-Za-z0-9_]*|\S')


class DslError(ValueError):
    """Base for ``.ihg`` parse errors; carries source name and line number."""

    def __init__(self, message: str, *, line: int | None = None, source: str | None = None):
        self.reason = message
        self.line = line
        self.source = source
        prefix = ""
        if source is not None:
            prefix += source
        if line is not None:
            prefix += f":{line}"
        super().__init__(f"{prefix}: {message}" if prefix else message)


class DslSyntaxError(DslError):
    pass


class DuplicateProposition(DslError, model.DuplicatePropositionId):
    pass


class SelfIntersectingEdge(DslError, model.SelfIntersectingEdge):
    pass


class SchemaError(ValueError):
    """A JSON document does not match the hypergraph schema."""

    def __init__(self, path: str, problem: str):
        self.path = path
        self.problem = problem
        super().__init__(f"{path}: {problem}")


@dataclass(frozen=True)
class DocProposition:
    id: str
    label: str | None = None
    line: int | None = field(default=None, compare=False)


@dataclass(frozen=True)
class DocEdge:
    tail: tuple[str, ...]
    head: tuple[str, ...]
    line: int | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "tail", tuple(self.tail))
        object.__setattr__(self, "head", tuple(self.head))


@dataclass(frozen=True)
class HypergraphDocument:
    propositions: tuple[DocProposition, ...]
    edges: tuple[DocEdge, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "propositions", tuple(self.propositions))
        object.__setattr__(self, "edges", tuple(self.edges))


def to_hypergraph(doc: HypergraphDocument) -> ImplicationHypergraph:
    return model.build(
        [Proposition(p.id, p.label) for p in doc.propositions],
        [(e.tail, e.head) for e in doc.edges],
    )


def document_of(h: ImplicationHypergraph) -> HypergraphDocument:
    return HypergraphDocument(
        tuple(DocProposition(p.id, p.label) for p in h.propositions),
        tuple(DocEdge(h.sorted_members(e.tail), h.sorted_members(e.head)) for e in h.edges),
    )


def _decode_label(raw: str, line: int, source: str | None) -> str:
    text = re.sub(r"\\(.)", r"\1", raw[1:-1])
    if not text:
        raise DslSyntaxError("label must not be empty", line=line, source=source)
    return text


def parse_dsl(text: str, source: str | None = None) -> HypergraphDocument:
    declared: dict[str, DocProposition] = {}
    edges: list[DocEdge] = []

    def declare(pid: str, label: str | None, line: int) -> None:
        if pid == "prop":
            raise DslSyntaxError("'prop' is a reserved word", line=line, source=source)
        if pid in declared:
            raise DuplicateProposition(
                f"proposition {pid!r} is already declared", line=line, source=source
            )
        declared[pid] = DocProposition(pid, label, line)

    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        tokens: list[str] = []
        for match in _TOKEN_RE.finditer(raw_line):
            tok = match.group()
            if tok.startswith("#"):
                break
            if len(tok) == 1 and tok != "&" and not _ID_RE.match(tok):
                hint = "unterminated label" if tok == '"' else f"unexpected character {tok!r}"
                raise DslSyntaxError(hint, line=lineno, source=source)
            tokens.append(tok)
        if not tokens:
            continue

        if tokens[0] == "prop":
            if len(tokens) < 2 or not _ID_RE.match(tokens[1]):
                raise DslSyntaxError("expected 'prop <id> [\"label\"]'", line=lineno, source=source)
            label = None
            if len(tokens) == 3 and tokens[2].startswith('"'):
                label = _decode_label(tokens[2], lineno, source)
            elif len(tokens) != 2:
                raise DslSyntaxError("expected 'prop <id> [\"label\"]'", line=lineno, source=source)
            declare(tokens[1], label, lineno)
            continue

        # Edge statement: <id> [& <id>]* => <id> [& <id>]*
        tail: list[str] = []
        head: list[str] = []
        side, expect_id = tail, True
        for tok in tokens:
            if expect_id:
                if not _ID_RE.match(tok):
                    raise DslSyntaxError(f"expected a proposition id, got {tok!r}", line=lineno, source=source)
                if tok == "prop":
                    raise DslSyntaxError("'prop' is a reserved word", line=lineno, source=source)
                side_name = "tail" if side is tail else "head"
                if tok in side:
                    raise DslSyntaxError(f"repeated proposition {tok!r} in {side_name}", line=lineno, source=source)
                side.append(tok)
                expect_id = False
            elif tok == "&":
                expect_id = True
            elif tok == "=>":
                if side is head:
                    raise DslSyntaxError("more than one '=>' in an edge", line=lineno, source=source)
                side, expect_id = head, True
            else:
                raise DslSyntaxError(f"expected '&' or '=>', got {tok!r}", line=lineno, source=source)
        if expect_id or not head:
            raise DslSyntaxError("incomplete edge statement", line=lineno, source=source)
        shared = sorted(set(tail) & set(head))
        if shared:
            raise SelfIntersectingEdge(
                f"{', '.join(shared)} appears in both tail and head", line=lineno, source=source
            )
        for pid in tail + head:
            if pid not in declared:
                declare(pid, None, lineno)
        edges.append(DocEdge(tuple(tail), tuple(head), lineno))

    return HypergraphDocument(tuple(declared.values()), tuple(edges))


def _encode_label(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dsl(doc: HypergraphDocument) -> str:
    lines = []
    for p in doc.propositions:
        lines.append(f"prop {p.id}" + (f" {_encode_label(p.label)}" if p.label is not None else ""))
    if doc.propositions and doc.edges:
        lines.append("")
    for e in doc.edges:
        lines.append(f"{' & '.join(e.tail)} => {' & '.join(e.head)}")
    return "\n".join(lines) + "\n"


def emit_json(doc: HypergraphDocument) -> str:
    data = {
        "propositions": [{"id": p.id, "label": p.label} for p in doc.propositions],
        "edges": [{"tail": list(e.tail), "head": list(e.head)} for e in doc.edges],
    }
    return json.dumps(data, indent=2) + "\n"


def _require_keys(obj: dict, path: str, required: tuple[str, ...], optional: tuple[str, ...] = ()) -> None:
    for key in obj:
        if key not in required and key not in optional:
            raise SchemaError(f"{path}.{key}", "unknown key")
    for key in required:
        if key not in obj:
            raise SchemaError(path, f"missing required key {key!r}")


def _member_list(value: object, path: str, known: dict[str, int]) -> tuple[str, ...]:
    if not isinstance(value, list):
        raise SchemaError(path, "expected an array of proposition ids")
    if not value:
        raise SchemaError(path, "must not be empty")
    out: list[str] = []
    for j, item in enumerate(value):
        if not isinstance(item, str):
            raise SchemaError(f"{path}[{j}]", "expected a string")
        if item not in known:
            raise SchemaError(f"{path}[{j}]", f"unknown proposition {item!r}")
        if item in out:
            raise SchemaError(f"{path}[{j}]", f"repeated proposition {item!r}")
        out.append(item)
    return tuple(out)


def parse_json(text: str) -> HypergraphDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise SchemaError("$", "expected an object")
    _require_keys(data, "$", ("propositions", "edges"))

    raw_props = data["propositions"]
    if not isinstance(raw_props, list):
        raise SchemaError("$.propositions", "expected an array")
    props: list[DocProposition] = []
    index: dict[str, int] = {}
    for i, entry in enumerate(raw_props):
        path = f"$.propositions[{i}]"
        if not isinstance(entry, dict):
            raise SchemaError(path, "expected an object")
        _require_keys(entry, path, ("id",), ("label",))
        pid = entry["id"]
        if not isinstance(pid, str) or not _ID_RE.match(pid):
            raise SchemaError(f"{path}.id", "expected an identifier string")
        if pid in index:
            raise SchemaError(f"{path}.id", f"duplicate proposition {pid!r}")
        label = entry.get("label")
        if label is not None and (not isinstance(label, str) or not label):
            raise SchemaError(f"{path}.label", "expected a non-empty string or null")
        index[pid] = i
        props.append(DocProposition(pid, label))

    raw_edges = data["edges"]
    if not isinstance(raw_edges, list):
        raise SchemaError("$.edges", "expected an array")
    edges: list[DocEdge] = []
    for k, entry in enumerate(raw_edges):
        path = f"$.edges[{k}]"
        if not isinstance(entry, dict):
            raise SchemaError(path, "expected an object")
        _require_keys(entry, path, ("tail", "head"))
        tail = _member_list(entry["tail"], f"{path}.tail", index)
        head = _member_list(entry["head"], f"{path}.head", index)
        shared = sorted(set(tail) & set(head))
        if shared:
            raise SchemaError(path, f"{', '.join(shared)} appears in both tail and head")
        edges.append(DocEdge(tail, head))

    return HypergraphDocument(tuple(props), tuple(edges))


def _quote_dot(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(doc: HypergraphDocument) -> str:
    """Render as a DOT digraph with one point-shaped junction node per edge.

    Every tail member gets an arc into the edge's junction and the junction
    an arc to every head member, so a document with e edges produces
    sum(|tail| + |head|) arcs.
    """
    ids = {p.id for p in doc.propositions}
    prefix = "e"
    while any(f"{prefix}{k}" in ids for k in range(len(doc.edges))):
        prefix = "_" + prefix

    lines = ["digraph implication_hypergraph {", "  rankdir=LR;"]
    for p in doc.propositions:
        lines.append(f"  {_quote_dot(p.id)} [label={_quote_dot(p.label or p.id)}];")
    for k, e in enumerate(doc.edges):
        junction = f"{prefix}{k}"
        lines.append(f"  {_quote_dot(junction)} [shape=point, label=\"\"];")
        for t in e.tail:
            lines.append(f"  {_quote_dot(t)} -> {_quote_dot(junction)};")
        for u in e.head:
            lines.append(f"  {_quote_dot(junction)} -> {_quote_dot(u)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
