"""Deterministic instance generation plus an independent solver oracle.

The generator builds pseudo-random hypergraphs from a :class:`GenSpec`; two
calls with equal specs return equal instances.  ``max_edges`` is an upper
bound — when the sampler keeps hitting duplicates it gives up and returns a
smaller edge set rather than looping forever.

The oracle recomputes information forms for acyclic instances by direct
substitution along a reverse topological order, never touching the linear
solver, so the two implementations can be checked against each other.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .model import Hyperedge, ImplicationHypergraph, build, dependency_digraph
from .solver import InfoForm


class InfeasibleSpec(ValueError):
    """The requested shape admits no valid hypergraph."""


class CyclicInput(ValueError):
    """The oracle only handles acyclic dependency digraphs."""


@dataclass(frozen=True)
class GenSpec:
    nodes: int
    max_edges: int
    max_tail: int = 3
    max_head: int = 2
    acyclic: bool = False
    seed: int = 0


def generate(spec: GenSpec) -> ImplicationHypergraph:
    """Sample an instance: p1..pN and up to ``max_edges`` distinct edges."""
    if spec.nodes < 1:
        raise InfeasibleSpec(f"need at least one node, got {spec.nodes}")
    if spec.max_edges < 0:
        raise InfeasibleSpec(f"max_edges must be >= 0, got {spec.max_edges}")
    if spec.max_tail < 1 or spec.max_head < 1:
        raise InfeasibleSpec("max_tail and max_head must be >= 1")
    if spec.max_edges > 0 and spec.nodes < 2:
        raise InfeasibleSpec("edges need two distinct propositions; got a single node")

    rng = random.Random(spec.seed)
    ids = [f"p{i}" for i in range(1, spec.nodes + 1)]
    ranked = list(ids)
    if spec.acyclic:
        rng.shuffle(ranked)

    edges: list[Hyperedge] = []
    seen: set[tuple[frozenset[str], frozenset[str]]] = set()
    attempts = 0
    while len(edges) < spec.max_edges and attempts < 50 * spec.max_edges + 50:
        attempts += 1
        if spec.acyclic:
            cut = rng.randrange(1, spec.nodes)
            tail_pool, head_pool = ranked[:cut], ranked[cut:]
        else:
            tail_pool = ids
        # leave at least one proposition for the head
        tail_cap = min(spec.max_tail, len(tail_pool), spec.nodes - 1)
        tail = rng.sample(tail_pool, rng.randint(1, tail_cap))
        if not spec.acyclic:
            head_pool = [pid for pid in ids if pid not in tail]
        head_size = rng.randint(1, min(spec.max_head, len(head_pool)))
        head = rng.sample(head_pool, head_size)
        key = (frozenset(tail), frozenset(head))
        if key in seen:
            continue
        seen.add(key)
        edges.append(Hyperedge(*key))
    return build(ids, edges)


def fixed_point_oracle(h: ImplicationHypergraph) -> tuple[InfoForm, ...]:
    """Forms by direct substitution, leaves = nu, each head use adds eps.

    Works only when the dependency digraph is acyclic; evaluation proceeds
    from the leaves upward, so no simultaneous system is ever solved.
    """
    out_arcs: dict[str, list[str]] = {pid: [] for pid in h.ids}
    indegree = {pid: 0 for pid in h.ids}
    for v, u in sorted(dependency_digraph(h)):
        out_arcs[v].append(u)
        indegree[u] += 1
    order: list[str] = [pid for pid in h.ids if indegree[pid] == 0]
    cursor = 0
    while cursor < len(order):
        for u in out_arcs[order[cursor]]:
            indegree[u] -= 1
            if indegree[u] == 0:
                order.append(u)
        cursor += 1
    if len(order) < len(h.ids):
        raise CyclicInput("dependency digraph has a cycle")

    in_tails = {t for e in h.edges for t in e.tail}
    forms: dict[str, InfoForm] = {}
    eps_unit = InfoForm(Fraction(0), Fraction(1))
    for pid in reversed(order):
        if pid not in in_tails:
            forms[pid] = InfoForm(Fraction(1), Fraction(0))
            continue
        total = InfoForm(Fraction(0), Fraction(0))
        for e in h.edges:
            if pid not in e.tail:
                continue
            share = Fraction(1, len(e.tail))
            for u in h.sorted_members(e.head):
                total = total + (forms[u] + eps_unit).scaled(share)
        forms[pid] = total
    return tuple(forms[pid] for pid in h.ids)
