"""Reference oracles for fill structure, recomputed from scratch.

These are deliberately simple (BFS and explicit set unions) so they can
serve as independent ground truth for the sketching data structures.
"""

from __future__ import annotations

import time
from collections import deque
from typing import Iterable

from .graph import StaticGraph
from .result import OrderingResult


def fill_degree_bruteforce(g: StaticGraph, eliminated: Iterable[int], v: int) -> int:
    """Fill degree of remaining vertex v: the number of remaining vertices
    (excluding v) reachable from v through paths whose internal vertices are
    all eliminated.  BFS that terminates at remaining vertices."""
    elim = set(eliminated)
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    if v in elim:
        raise ValueError(f"vertex {v} is eliminated")
    seen = {v}
    terminals = set()
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w in seen:
                continue
            seen.add(w)
            if w in elim:
                queue.append(w)
            else:
                terminals.add(w)
    return len(terminals)


def _eliminated_components(g: StaticGraph, elim: set[int]) -> tuple[dict[int, int], list[set[int]]]:
    """Connected components of the eliminated induced subgraph.

    Returns (component id per eliminated vertex, remaining-neighbor set per
    component)."""
    comp_of: dict[int, int] = {}
    comp_nrem: list[set[int]] = []
    for x in elim:
        if x in comp_of:
            continue
        cid = len(comp_nrem)
        nrem: set[int] = set()
        comp_nrem.append(nrem)
        queue = deque([x])
        comp_of[x] = cid
        while queue:
            y = queue.popleft()
            for w in g.adj[y]:
                if w in elim:
                    if w not in comp_of:
                        comp_of[w] = cid
                        queue.append(w)
                else:
                    nrem.add(w)
    return comp_of, comp_nrem


def fill_graph_bruteforce(g: StaticGraph, eliminated: Iterable[int]) -> dict[int, tuple[int, ...]]:
    """Explicit fill-graph adjacency over the remaining vertices.

    Two remaining vertices are adjacent iff they are connected by a
    (possibly empty) path of eliminated vertices."""
    elim = set(eliminated)
    comp_of, comp_nrem = _eliminated_components(g, elim)
    out: dict[int, tuple[int, ...]] = {}
    for v in range(g.n):
        if v in elim:
            continue
        nbrs: set[int] = set()
        for w in g.adj[v]:
            if w in elim:
                nbrs |= comp_nrem[comp_of[w]]
            else:
                nbrs.add(w)
        nbrs.discard(v)
        out[v] = tuple(sorted(nbrs))
    return out


def exact_mindeg_bruteforce(g: StaticGraph) -> OrderingResult:
    """Lexicographically-first minimum-degree ordering, recomputing all fill
    degrees from scratch at every step.  Deterministic; no RNG."""
    t0 = time.perf_counter()
    eliminated: list[int] = []
    order: list[int] = []
    degrees: list[int] = []
    for _ in range(g.n):
        fill = fill_graph_bruteforce(g, eliminated)
        best = min((len(nbrs), v) for v, nbrs in fill.items())
        order.append(best[1])
        degrees.append(best[0])
        eliminated.append(best[1])
    return OrderingResult(
        order=order,
        reported_degree=degrees,
        algorithm="bruteforce",
        seed=0,
        counters={"steps": g.n},
        wall_time=time.perf_counter() - t0,
    )


def total_fill(g: StaticGraph, order: list[int]) -> int:
    """Number of edges appearing in some intermediate fill graph that are
    absent from g, each counted once."""
    if sorted(order) != list(range(g.n)):
        raise ValueError("order is not a permutation")
    adj: list[set[int]] = [set(g.adj[v]) for v in range(g.n)]
    fill = 0
    for v in order:
        nbrs = sorted(adj[v])
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1:]:
                if b not in adj[a]:
                    adj[a].add(b)
                    adj[b].add(a)
                    fill += 1
            adj[a].discard(v)
        adj[v].clear()
    return fill


def greedy_degree_trace(g: StaticGraph, order: list[int]) -> tuple[list[int], list[int]]:
    """Replay an elimination order; at each step report the pivot's fill
    degree and the minimum fill degree over remaining vertices.

    Maintains the fill graph explicitly with sets, independent of the
    component-graph machinery."""
    if sorted(order) != list(range(g.n)):
        raise ValueError("order is not a permutation")
    adj: list[set[int]] = [set(g.adj[v]) for v in range(g.n)]
    remaining = set(range(g.n))
    pivot_deg: list[int] = []
    min_deg: list[int] = []
    for v in order:
        pivot_deg.append(len(adj[v]))
        min_deg.append(min(len(adj[u]) for u in remaining))
        nbrs = sorted(adj[v])
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1:]:
                adj[a].add(b)
                adj[b].add(a)
            adj[a].discard(v)
        adj[v].clear()
        remaining.discard(v)
    return pivot_deg, min_deg
