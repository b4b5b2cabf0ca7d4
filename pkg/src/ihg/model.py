"""Core model: propositions, hyperedges, and the implication hypergraph.

An implication hypergraph pairs a finite *ordered* list of propositions with
directed hyperedges.  Each edge asserts that the conjunction of its tail
propositions implies every proposition in its head.  The proposition order is
semantically relevant: it fixes the row/column indices of the adjacency
matrix and the member order used by every renderer, which keeps all outputs
reproducible.

Structural rules split in two groups.  Hard shape errors (unknown ids, empty
sides, a proposition on both sides of one edge) are rejected by :func:`build`.
Softer design rules — strictness and minimality of the edge set — are reported
by :func:`validate` as findings, because instances violating them still have a
perfectly solvable information system.
"""

from __future__ import annotations

import re
from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property

_ID_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

# Validation rule identifiers, as reported in ValidationReport findings.
STRICTNESS = "STRICTNESS"
MINIMALITY_SHORTCUT = "MINIMALITY_SHORTCUT"
MINIMALITY_SUPERSET_TAIL = "MINIMALITY_SUPERSET_TAIL"
DUPLICATE_EDGE = "DUPLICATE_EDGE"
SELF_INTERSECTING_EDGE = "SELF_INTERSECTING_EDGE"

ERROR = "error"
WARNING = "warning"


class HypergraphError(ValueError):
    """Base class for structural errors raised while building a hypergraph."""


class DuplicatePropositionId(HypergraphError):
    """Two propositions share an id."""


class UnknownProposition(HypergraphError):
    """An edge references an id that is not declared."""


class InvalidPropositionId(HypergraphError):
    """An id does not match ``[A-Za-z_][A-Za-z0-9_]*``."""


class EmptyTailOrHead(HypergraphError):
    """An edge has an empty tail or an empty head."""


class SelfIntersectingEdge(HypergraphError):
    """An edge mentions the same proposition in tail and head."""


@dataclass(frozen=True)
class Proposition:
    id: str
    label: str | None = None


@dataclass(frozen=True)
class Hyperedge:
    """Directed hyperedge: the tail conjunction implies every head member.

    Accepts any iterables of ids; members are stored as frozensets.  Shape
    constraints (non-empty, disjoint sides) are enforced by :func:`build`.
    """

    tail: frozenset[str]
    head: frozenset[str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "tail", frozenset(self.tail))
        object.__setattr__(self, "head", frozenset(self.head))


@dataclass(frozen=True)
class ImplicationHypergraph:
    propositions: tuple[Proposition, ...]
    edges: tuple[Hyperedge, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "propositions", tuple(self.propositions))
        object.__setattr__(self, "edges", tuple(self.edges))

    @cached_property
    def ids(self) -> tuple[str, ...]:
        return tuple(p.id for p in self.propositions)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {p.id: i for i, p in enumerate(self.propositions)}

    @property
    def order(self) -> int:
        """Number of propositions (the dimension of the adjacency matrix)."""
        return len(self.propositions)

    def index(self, proposition_id: str) -> int:
        try:
            return self._index[proposition_id]
        except KeyError:
            raise UnknownProposition(f"unknown proposition {proposition_id!r}") from None

    def proposition(self, proposition_id: str) -> Proposition:
        return self.propositions[self.index(proposition_id)]

    def sorted_members(self, members: Iterable[str]) -> tuple[str, ...]:
        """Order ids by proposition position; unknown ids go last, lexically.

        Frozenset iteration order varies between interpreter runs, so every
        renderer must pass members through here to stay byte-deterministic.
        """
        n = len(self.propositions)
        return tuple(sorted(members, key=lambda m: (self._index.get(m, n), m)))

    def render_edge(self, edge: Hyperedge) -> str:
        tail = " & ".join(self.sorted_members(edge.tail))
        head = " & ".join(self.sorted_members(edge.head))
        return f"{tail} => {head}"


@dataclass(frozen=True)
class Finding:
    rule: str
    severity: str
    subjects: tuple[str, ...]
    message: str


@dataclass(frozen=True)
class ValidationReport:
    findings: tuple[Finding, ...]

    @property
    def errors(self) -> tuple[Finding, ...]:
        return tuple(f for f in self.findings if f.severity == ERROR)

    @property
    def warnings(self) -> tuple[Finding, ...]:
        return tuple(f for f in self.findings if f.severity == WARNING)

    @property
    def ok(self) -> bool:
        return not self.errors


def build(
    propositions: Iterable[Proposition | str],
    edges: Iterable[Hyperedge | tuple[Iterable[str], Iterable[str]]] = (),
) -> ImplicationHypergraph:
    """Construct an immutable hypergraph, enforcing the structural contract.

    Propositions may be given as plain id strings; edges as (tail, head)
    pairs.  Order is preserved and fixes the matrix indices.
    """
    props = tuple(p if isinstance(p, Proposition) else Proposition(p) for p in propositions)
    seen: set[str] = set()
    for p in props:
        if not _ID_RE.match(p.id):
            raise InvalidPropositionId(f"invalid proposition id {p.id!r}")
        if p.id in seen:
            raise DuplicatePropositionId(f"duplicate proposition id {p.id!r}")
        if p.label is not None and not p.label:
            raise HypergraphError(f"proposition {p.id!r} has an empty label")
        seen.add(p.id)

    built_edges = []
    for k, e in enumerate(edges):
        edge = e if isinstance(e, Hyperedge) else Hyperedge(*e)
        if not edge.tail or not edge.head:
            raise EmptyTailOrHead(f"edge #{k} has an empty tail or head")
        for member in sorted(edge.tail | edge.head):
            if member not in seen:
                raise UnknownProposition(f"edge #{k} references unknown proposition {member!r}")
        overlap = edge.tail & edge.head
        if overlap:
            shared = ", ".join(sorted(overlap))
            raise SelfIntersectingEdge(f"edge #{k} has {shared} in both tail and head")
        built_edges.append(edge)
    return ImplicationHypergraph(props, tuple(built_edges))


def dependency_digraph(h: ImplicationHypergraph) -> frozenset[tuple[str, str]]:
    """Arcs (v, u) for every edge with v in its tail and u in its head."""
    return frozenset((t, u) for e in h.edges for t in e.tail for u in e.head)


def leaves(h: ImplicationHypergraph) -> frozenset[str]:
    """Propositions appearing in no tail; they imply nothing."""
    in_tails = {t for e in h.edges for t in e.tail}
    return frozenset(p.id for p in h.propositions if p.id not in in_tails)


def _successors(h: ImplicationHypergraph) -> dict[str, tuple[str, ...]]:
    succ: dict[str, set[str]] = {pid: set() for pid in h.ids}
    for v, u in dependency_digraph(h):
        succ[v].add(u)
    return {v: h.sorted_members(us) for v, us in succ.items()}


def is_acyclic(h: ImplicationHypergraph) -> bool:
    """True iff the dependency digraph has no directed cycle."""
    succ = _successors(h)
    indegree = {pid: 0 for pid in h.ids}
    for v in h.ids:
        for u in succ[v]:
            indegree[u] += 1
    queue = [pid for pid in h.ids if indegree[pid] == 0]
    visited = 0
    while queue:
        v = queue.pop()
        visited += 1
        for u in succ[v]:
            indegree[u] -= 1
            if indegree[u] == 0:
                queue.append(u)
    return visited == len(h.ids)


def _descendants(succ: dict[str, tuple[str, ...]], start: str) -> set[str]:
    # Vertices reachable from `start` in >= 1 step (start itself only if on a cycle).
    seen: set[str] = set()
    stack = list(succ[start])
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        stack.extend(succ[v])
    return seen


def validate(h: ImplicationHypergraph) -> ValidationReport:
    """Report strictness/minimality findings; errors vs warnings per rule.

    Exact (tail, head) reversals and duplicate edges are errors; shortcut
    arcs and superset tails are warnings, since such instances still solve.
    """
    findings: list[Finding] = []

    edge_keys = [(e.tail, e.head) for e in h.edges]
    reported_duplicates: set[tuple[frozenset[str], frozenset[str]]] = set()
    for key in edge_keys:
        count = edge_keys.count(key)
        if count > 1 and key not in reported_duplicates:
            reported_duplicates.add(key)
            rendered = h.render_edge(Hyperedge(*key))
            findings.append(Finding(
                DUPLICATE_EDGE, ERROR, (rendered,),
                f"edge '{rendered}' is declared {count} times",
            ))

    for e in h.edges:
        overlap = e.tail & e.head
        if overlap:
            rendered = h.render_edge(e)
            shared = ", ".join(h.sorted_members(overlap))
            findings.append(Finding(
                SELF_INTERSECTING_EDGE, ERROR, (rendered,),
                f"edge '{rendered}' has {shared} in both tail and head",
            ))

    for i, e in enumerate(h.edges):
        for e2 in h.edges[i + 1:]:
            if e.tail == e2.head and e.head == e2.tail:
                a, b = h.render_edge(e), h.render_edge(e2)
                findings.append(Finding(
                    STRICTNESS, ERROR, (a, b),
                    f"edges '{a}' and '{b}' are exact reversals of each other",
                ))
            if e.head == e2.head and e.tail != e2.tail:
                if e.tail < e2.tail:
                    smaller, larger = e, e2
                elif e2.tail < e.tail:
                    smaller, larger = e2, e
                else:
                    continue
                a, b = h.render_edge(smaller), h.render_edge(larger)
                findings.append(Finding(
                    MINIMALITY_SUPERSET_TAIL, WARNING, (a, b),
                    f"edge '{b}' strengthens the tail of '{a}' without changing the head",
                ))

    succ = _successors(h)
    for v in h.ids:
        two_step: set[str] = set()
        for w in succ[v]:
            two_step |= _descendants(succ, w)
        for u in succ[v]:
            if u in two_step:
                findings.append(Finding(
                    MINIMALITY_SHORTCUT, WARNING, (v, u),
                    f"arc {v} -> {u} is also derivable through a path of length >= 2",
                ))

    findings.sort(key=lambda f: (f.severity != ERROR, f.rule, f.subjects))
    return ValidationReport(tuple(findings))
