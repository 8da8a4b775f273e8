"""Expansion steps and the closure loop that builds Schützenberger automata.

A relation (r, s) has an expansion site at (v1, v2) when one side labels a
path v1 -> v2 but the other side does not.  An elementary expansion sews a
fresh chain labeled by the missing side between v1 and v2; a full round
sews every site visible at the start of the round and then folds.
Iterating rounds to a fixpoint yields the Schützenberger automaton of the
start word (any closed endpoint is the automaton); budgets bound the loop
because the fixpoint can be an infinite graph.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .presentation import Presentation, Word
from .word_graph import BirootedGraph, GraphBuilder, fold, linear_graph


class Direction(enum.Enum):
    """Which relation side was read at the site; the other side gets sewn."""

    LHS_READ = "lhs-read"
    RHS_READ = "rhs-read"


@dataclass(frozen=True)
class ExpansionSite:
    relation_index: int
    direction: Direction
    start: int
    end: int


@dataclass(frozen=True)
class Budget:
    """Bounds on the closure iteration; both limits must be positive."""

    max_rounds: int = 64
    max_vertices: int = 100_000

    def __post_init__(self):
        if self.max_rounds < 1 or self.max_vertices < 1:
            raise ValueError("budget limits must be positive")


class Status(enum.Enum):
    CLOSED = "closed"
    BUDGET_EXCEEDED = "budget-exceeded"


@dataclass
class ClosureResult:
    """Outcome of a closure run with instrumentation.

    vertex_history holds the vertex count before round 1 and after every
    completed round, so its length is rounds + 1.  fold_events counts the
    vertex merges performed inside rounds (not any determinization of the
    input graph).
    """

    status: Status
    graph: BirootedGraph
    rounds: int
    fold_events: int
    vertex_history: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "rounds": self.rounds,
            "fold_events": self.fold_events,
            "vertex_history": list(self.vertex_history),
        }


class StaleSiteError(RuntimeError):
    """The site's missing side became readable; sewing it would be redundant."""


def _sides(site: ExpansionSite, p: Presentation) -> tuple[Word, Word]:
    lhs, rhs = p.relations[site.relation_index]
    if site.direction is Direction.LHS_READ:
        return lhs, rhs
    return rhs, lhs


def find_expansions(g: BirootedGraph, p: Presentation) -> list[ExpansionSite]:
    """All expansion sites of g, in canonical order.

    Determinism makes the read path unique per start vertex, so the scan is
    start-vertex driven; sites are ordered by (start vertex BFS index,
    relation index, direction).
    """
    if not g.is_deterministic:
        raise ValueError("find_expansions() requires a deterministic graph")
    sites = []
    for start in g.bfs_order():
        for rel_index, (lhs, rhs) in enumerate(p.relations):
            for direction, read, sew in (
                (Direction.LHS_READ, lhs, rhs),
                (Direction.RHS_READ, rhs, lhs),
            ):
                end = g.walk(start, read)
                if end is None:
                    continue
                if g.walk(start, sew) == end:
                    continue
                sites.append(ExpansionSite(rel_index, direction, start, end))
    return sites


def _sew(b: GraphBuilder, start: int, end: int, side: Word) -> None:
    # Relation sides are positive, so a sewn chain is all forward edges.
    prev = start
    for x, _ in side.letters[:-1]:
        nv = b.new_vertex()
        b.add_edge(prev, x, nv)
        prev = nv
    b.add_edge(prev, side.letters[-1][0], end)


def elementary_expansion(g: BirootedGraph, site: ExpansionSite, p: Presentation) -> BirootedGraph:
    """Sew the site's missing side between start and end; no folding.

    The site is revalidated first: if the read side no longer labels a
    start -> end path the site is invalid (ValueError); if the missing side
    has become readable the site is stale (StaleSiteError) and the input
    graph is unchanged.
    """
    read, sew = _sides(site, p)
    b = GraphBuilder.from_graph(g)
    if site.end not in b.readable_ends(site.start, read):
        raise ValueError("invalid site: read side does not label a start -> end path")
    if site.end in b.readable_ends(site.start, sew):
        raise StaleSiteError("opposite side already readable between the site's roots")
    _sew(b, site.start, site.end, sew)
    return b.freeze()


def _sew_round(
    g: BirootedGraph, p: Presentation, sites: list[ExpansionSite]
) -> tuple[BirootedGraph, int, int]:
    """Sew the given sites (skipping stale ones), fold, and freeze."""
    b = GraphBuilder.from_graph(g)
    sewn = 0
    for site in sites:
        _, sew = _sides(site, p)
        # Earlier sewing in this round may have saturated the site already.
        if site.end in b.readable_ends(site.start, sew):
            continue
        _sew(b, site.start, site.end, sew)
        sewn += 1
    merges = b.fold()
    return b.freeze(), merges, sewn


def full_p_expansion(
    g: BirootedGraph, p: Presentation, site_order: str = "canonical"
) -> BirootedGraph:
    """One full round: sew every site found at round start, then fold.

    Sites that only become available mid-round are left for the next round.
    site_order ("canonical" or "reversed") picks the processing order; the
    results agree up to isomorphism because folding is confluent.
    """
    if site_order not in ("canonical", "reversed"):
        raise ValueError(f"unknown site order {site_order!r}")
    sites = find_expansions(g, p)
    if site_order == "reversed":
        sites.reverse()
    graph, _, _ = _sew_round(g, p, sites)
    return graph


def close(g: BirootedGraph, p: Presentation, budget: Budget = Budget()) -> ClosureResult:
    """Iterate full rounds until no site remains or a budget limit trips.

    On budget exhaustion the returned graph is the last completed round's
    approximation; that is a status, not an error.
    """
    if not g.is_deterministic:
        raise ValueError("close() requires a deterministic graph")
    history = [len(g.vertices)]
    rounds = 0
    fold_events = 0
    while True:
        sites = find_expansions(g, p)
        if not sites:
            status = Status.CLOSED
            break
        if rounds >= budget.max_rounds:
            status = Status.BUDGET_EXCEEDED
            break
        g, merges, _ = _sew_round(g, p, sites)
        rounds += 1
        fold_events += merges
        history.append(len(g.vertices))
        if len(g.vertices) > budget.max_vertices:
            status = Status.BUDGET_EXCEEDED
            break
    return ClosureResult(status, g, rounds, fold_events, tuple(history))


def schutzenberger_automaton(
    w: Word, p: Presentation, budget: Budget = Budget()
) -> ClosureResult:
    """Close the folded linear graph of w over p.

    The linear graph of w already accepts exactly words equivalent to or
    above w, so the closed result is the Schützenberger automaton of w.
    """
    p.check_word(w)
    return close(fold(linear_graph(w)).final, p, budget)
