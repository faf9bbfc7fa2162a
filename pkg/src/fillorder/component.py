"""Dynamic component graph: the partially eliminated state under pivots.

Eliminated vertices are contracted into component vertices whose ids are
drawn from the original vertex ids.  The structure is quasi-bipartite:
component vertices are only adjacent to remaining vertices.  Pivoting
merges neighbor sets smaller-into-larger, so every stored endpoint moves
O(log n) times over a full elimination.

Observers (the sketch copies) receive callbacks at the points where the
key-propagation protocol needs the pre-mutation neighbor sets:

  on_pivot_begin(v, nr, nc)   after v is detached and re-registered as a
                              component vertex; nr/nc are snapshots of its
                              former remaining/component neighborhoods
  on_unlink(w, v, nrem_w)     after v left Nrem(w), before w is melded
  on_meld(winner, loser, nrem_winner, nrem_loser)
                              before the two components' sets are merged;
                              the loser's id dies, the winner keeps its id
"""

from __future__ import annotations

from sortedcontainers import SortedList

from .graph import StaticGraph


class ComponentGraph:
    def __init__(self, origin: StaticGraph):
        n = origin.n
        self.origin = origin
        self._remaining = bytearray(b"\x01" * n)
        self._parent = list(range(n))
        self._nrem: list[SortedList | None] = [SortedList(origin.adj[v]) for v in range(n)]
        self._ncomp: list[SortedList | None] = [SortedList() for _ in range(n)]
        self._vrem = SortedList(range(n))
        self._vcomp: SortedList = SortedList()
        self.pivots = 0
        self.meld_count = 0

    # ---------------- queries ----------------

    @property
    def n(self) -> int:
        return self.origin.n

    def is_remaining(self, v: int) -> bool:
        return bool(self._remaining[v])

    def state(self, v: int) -> tuple[str, int | None]:
        """("remaining", None) or ("eliminated", live component id)."""
        if self._remaining[v]:
            return ("remaining", None)
        return ("eliminated", self.component_of(v))

    def component_of(self, v: int) -> int | None:
        """Live component id a vertex was eliminated into, or None."""
        if self._remaining[v]:
            return None
        root = v
        parent = self._parent
        while parent[root] != root:
            root = parent[root]
        while parent[v] != root:
            parent[v], v = root, parent[v]
        return root

    def remaining_vertices(self) -> SortedList:
        return self._vrem

    def component_vertices(self) -> SortedList:
        return self._vcomp

    def remaining_neighbors(self, v: int) -> SortedList:
        """Remaining neighborhood of a remaining vertex or live component.

        Returned object is a live view; do not mutate."""
        s = self._nrem[v]
        if s is None:
            raise ValueError(f"vertex {v} is not live")
        return s

    def component_neighbors(self, v: int) -> SortedList:
        if not self._remaining[v]:
            raise ValueError(f"vertex {v} is not remaining")
        return self._ncomp[v]

    def remaining_degree(self, v: int) -> int:
        return len(self.remaining_neighbors(v))

    def sample_remaining_neighbor(self, v: int, rng) -> int:
        s = self.remaining_neighbors(v)
        if not s:
            raise ValueError(f"vertex {v} has no remaining neighbors")
        return s[int(rng.integers(0, len(s)))]

    def sample_random_component(self, rng) -> int:
        if not self._vcomp:
            raise ValueError("no component vertices")
        return self._vcomp[int(rng.integers(0, len(self._vcomp)))]

    def fill_neighborhood(self, u: int) -> set[int]:
        """Exact fill neighborhood of a remaining vertex (set union)."""
        if not self._remaining[u]:
            raise ValueError(f"vertex {u} is not remaining")
        out = set(self._nrem[u])
        for x in self._ncomp[u]:
            out.update(self._nrem[x])
        out.discard(u)
        return out

    def fill_degree_exact(self, u: int) -> int:
        return len(self.fill_neighborhood(u))

    def fill_eval_cost(self, u: int) -> int:
        """Endpoint count touched by an exact fill-degree evaluation of u."""
        c = 1 + len(self._nrem[u])
        for x in self._ncomp[u]:
            c += len(self._nrem[x])
        return c

    def stored_endpoints(self) -> int:
        total = 0
        for v in self._vrem:
            total += len(self._nrem[v]) + len(self._ncomp[v])
        for x in self._vcomp:
            total += len(self._nrem[x])
        return total

    # ---------------- updates ----------------

    def pivot(self, v: int, observers=()) -> int:
        """Eliminate remaining vertex v, melding it with every adjacent
        component.  Returns the live id of the merged component."""
        if not self._remaining[v]:
            raise ValueError(f"vertex {v} is not remaining")
        nr = list(self._nrem[v])
        nc = list(self._ncomp[v])

        for y in nr:
            self._nrem[y].remove(v)
        for w in nc:
            self._nrem[w].remove(v)

        self._remaining[v] = 0
        self._vrem.remove(v)
        self._vcomp.add(v)
        self._nrem[v] = SortedList(nr)
        self._ncomp[v] = None
        for y in nr:
            self._ncomp[y].add(v)

        for obs in observers:
            obs.on_pivot_begin(v, nr, nc)

        cur = v
        for w in nc:
            for obs in observers:
                obs.on_unlink(w, v, self._nrem[w])
            cur = self._meld(cur, w, observers)
        self.pivots += 1
        return cur

    def _meld(self, a: int, b: int, observers) -> int:
        na, nb = self._nrem[a], self._nrem[b]
        if len(na) >= len(nb):
            winner, loser = a, b
        else:
            winner, loser = b, a
        for obs in observers:
            obs.on_meld(winner, loser, self._nrem[winner], self._nrem[loser])

        wset = self._nrem[winner]
        for y in self._nrem[loser]:
            self._ncomp[y].remove(loser)
            if y not in wset:
                wset.add(y)
                self._ncomp[y].add(winner)
        self._parent[loser] = winner
        self._vcomp.remove(loser)
        self._nrem[loser] = None
        self.meld_count += 1
        return winner

    # ---------------- consistency (used by tests) ----------------

    def check_invariants(self) -> None:
        for v in self._vrem:
            assert self._remaining[v]
            for y in self._nrem[v]:
                assert self._remaining[y] and v in self._nrem[y]
            for x in self._ncomp[v]:
                assert not self._remaining[x]
                assert self._nrem[x] is not None and v in self._nrem[x]
        for x in self._vcomp:
            assert not self._remaining[x]
            assert self._ncomp[x] is None
            for y in self._nrem[x]:
                assert self._remaining[y] and x in self._ncomp[y]
        assert self.stored_endpoints() <= 2 * self.origin.m
