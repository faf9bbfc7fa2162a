"""One key-propagation sketch copy over a component graph.

Every vertex gets a random key; each remaining vertex tracks the minimum
key over its closed fill neighborhood.  Keys are packed as
(draw << VID_BITS) | vertex_id so comparisons are lexicographic with a
vertex-id tiebreak and the minimizer id can be unpacked from the minimum.

Per remaining vertex u, `fill[u]` keeps one slot per contributor: u
itself, each remaining neighbor, and each adjacent component (whose slot
holds the minimum key over that component's remaining neighborhood).
Pivots propagate slot updates eagerly through the observer callbacks of
ComponentGraph; the set of vertices whose minimum changed during a pivot
is reported back to the caller.
"""

from __future__ import annotations

import numpy as np

from .component import ComponentGraph
from .minstruct import LazyMinHeap, SourceMinMap

VID_BITS = 20
VID_MASK = (1 << VID_BITS) - 1
_KEY_SCALE = float(2**64)


class DynamicSketch:
    def __init__(self, cgraph: ComponentGraph, rng, index: int = 0, draws=None):
        if cgraph.pivots != 0:
            raise ValueError("sketch must be attached to a fresh component graph")
        g = cgraph.origin
        if g.n >= 1 << VID_BITS:
            raise ValueError(f"graph too large for key packing (n >= 2^{VID_BITS})")
        self.cgraph = cgraph
        self.index = index
        if draws is None:
            # keys stay in (0, 1): a zero key would break quantile reciprocals
            draws = rng.integers(1, 2**64, size=g.n, dtype=np.uint64)
        elif len(draws) != g.n:
            raise ValueError("need one key draw per vertex")
        self._key = [(int(d) << VID_BITS) | v for v, d in enumerate(draws)]
        self._fill: list[SourceMinMap | None] = []
        for u in range(g.n):
            entries = {u: self._key[u]}
            for y in g.adj[u]:
                entries[y] = self._key[y]
            self._fill.append(SourceMinMap(entries))
        self._rkeys: list[LazyMinHeap | None] = [None] * g.n
        # minimum observed at first touch within the current pivot, per vertex
        self._pre_min: dict[int, int] = {}
        self.counters = {
            "updates": 0,
            "informs": 0,
            "melds": 0,
            "changed_total": 0,
            "pivots": 0,
        }

    # ---------------- key access ----------------

    def key_of(self, v: int) -> int:
        return self._key[v]

    def key_float(self, v: int) -> float:
        return (self._key[v] >> VID_BITS) / _KEY_SCALE

    # ---------------- queries ----------------

    def query_min(self, u: int) -> int:
        """Vertex holding the minimum key over u's closed fill neighborhood."""
        fm = self._fill[u]
        if fm is None:
            raise ValueError(f"vertex {u} is not remaining")
        return fm.min() & VID_MASK

    def min_key_float(self, u: int) -> float:
        fm = self._fill[u]
        if fm is None:
            raise ValueError(f"vertex {u} is not remaining")
        return (fm.min() >> VID_BITS) / _KEY_SCALE

    # ---------------- slot updates with change tracking ----------------

    def _slot_set(self, y: int, source: int, value: int) -> None:
        fm = self._fill[y]
        if y not in self._pre_min:
            self._pre_min[y] = fm.min()
        fm.set(source, value)
        self.counters["updates"] += 1

    def _slot_pop(self, y: int, source: int) -> int:
        fm = self._fill[y]
        if y not in self._pre_min:
            self._pre_min[y] = fm.min()
        value = fm.pop(source)
        self.counters["updates"] += 1
        return value

    # ---------------- observer protocol ----------------

    def on_pivot_begin(self, v: int, nr: list[int], nc: list[int]) -> None:
        key = self._key
        rk = LazyMinHeap(key[y] for y in nr)
        self._rkeys[v] = rk
        for y in nr:
            self._slot_pop(y, v)
        if nr:
            mv = rk.min()
            for y in nr:
                self._slot_set(y, v, mv)
        self._fill[v] = None

    def on_unlink(self, w: int, v: int, nrem_w) -> None:
        rk = self._rkeys[w]
        before = rk.min()
        rk.discard(self._key[v])
        self.counters["updates"] += 1
        after = rk.min()
        if before != after and len(nrem_w):
            self.counters["informs"] += len(nrem_w)
            for y in nrem_w:
                self._slot_set(y, w, after)

    def on_meld(self, winner: int, loser: int, nrem_winner, nrem_loser) -> None:
        rw = self._rkeys[winner]
        rl = self._rkeys[loser]
        mw = rw.min()
        ml = rl.min()
        if ml is not None and (mw is None or ml < mw):
            # winner's side sees a smaller component minimum
            self.counters["informs"] += len(nrem_winner)
            for y in nrem_winner:
                self._slot_set(y, winner, ml)
        elif mw is not None and (ml is None or mw < ml):
            self.counters["informs"] += len(nrem_loser)
            for y in nrem_loser:
                self._slot_set(y, loser, mw)
        # equal minima arise when both sides share the minimizing neighbor

        key = self._key
        for y in nrem_loser:
            value = self._slot_pop(y, loser)
            fm = self._fill[y]
            if winner not in fm:
                self._slot_set(y, winner, value)
            # else: duplicate contributor slot dies; both carry the merged min
            if y not in nrem_winner:
                rw.add(key[y])
                self.counters["updates"] += 1
        self._rkeys[loser] = None
        self.counters["melds"] += 1

    def finish_pivot(self) -> list[int]:
        """Collect the vertices whose minimizer changed during the pivot
        just applied to the shared component graph.

        A vertex counts as changed only if its minimum after the pivot
        differs from the one before; transient flips inside the pivot do
        not register."""
        fill = self._fill
        out = sorted(
            y for y, pre in self._pre_min.items()
            if fill[y] is not None and fill[y].min() != pre
        )
        self._pre_min.clear()
        self.counters["changed_total"] += len(out)
        self.counters["pivots"] += 1
        return out

    # ---------------- standalone driving ----------------

    def pivot_vertex(self, v: int) -> list[int]:
        """Pivot v on the privately owned component graph.

        Only valid when this sketch is the sole observer of its graph;
        ensembles must drive the shared ComponentGraph directly."""
        self.cgraph.pivot(v, observers=(self,))
        return self.finish_pivot()


def new_sketch(g, rng, index: int = 0) -> DynamicSketch:
    """Fresh sketch copy with a private component graph."""
    return DynamicSketch(ComponentGraph(g), rng, index=index)
