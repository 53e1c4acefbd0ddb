"""Count matroids over a host graph's edges: independence, rank, tight sets.

For integral a >= 1 and b >= -2a, the edge sets whose spanned subgraph is
(a, b)-sparse form a matroid (the classical b <= 0 regime, extended to
positive b).  The public oracle answers independence by calling the exact
sparsity engine; rank is matroid greedy over ascending edge ids.

The private engine classes at the bottom give the partition module an
incremental view of the same matroids: insert, delete, and fundamental
circuits.  A circuit query finds the unique minimal tight vertex set
containing the new edge's endpoints via a forced min-cut, which is exact:
minimal tight sets through a fixed pair are closed under intersection.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import MatroidRegimeError
from .graphs import EdgeSet, Graph, VertexSet
from .mincut import selection_max
from .pebble import PebbleGame
from .sparsity import SparsityParams, is_sparse

LOREA = "lorea"
WHITE_WHITELEY = "white_whiteley"


@dataclass(eq=False)
class CountMatroidOracle:
    host: Graph
    a: int
    b: int
    validity_class: str
    _cache: dict[frozenset[int], bool] = field(default_factory=dict, repr=False)

    @property
    def params(self) -> SparsityParams:
        return SparsityParams(self.a, self.b)

    def is_independent(self, s: EdgeSet) -> bool:
        if s.host != self.host:
            raise ValueError("edge set belongs to a different host graph")
        cached = self._cache.get(s.ids)
        if cached is not None:
            return cached
        if not s.ids:
            result = True
        elif 2 * self.a + self.b < 1:
            # pathological bound: any edge already violates e <= a*2 + b
            result = False
        else:
            result = is_sparse(self.host.edge_subgraph(s.ids), self.params).sparse
        self._cache[s.ids] = result
        return result

    def rank(self, s: EdgeSet) -> int:
        if s.host != self.host:
            raise ValueError("edge set belongs to a different host graph")
        picked: list[int] = []
        for eid in s.sorted():
            if self.is_independent(EdgeSet(self.host, picked + [eid])):
                picked.append(eid)
        return len(picked)

    def __repr__(self) -> str:
        return f"CountMatroidOracle(a={self.a}, b={self.b}, {self.validity_class})"


def make_oracle(host: Graph, a: int, b: int) -> CountMatroidOracle:
    """Build the (a, b) count-matroid oracle; rejects parameters outside b >= -2a."""
    if not (isinstance(a, int) and isinstance(b, int)):
        raise MatroidRegimeError("count matroids here need integral a and b")
    if a < 1:
        raise MatroidRegimeError(f"need a >= 1, got a={a}")
    if b < -2 * a:
        raise MatroidRegimeError(f"need b >= -2a = {-2 * a}, got b={b}")
    cls = LOREA if b <= 0 else WHITE_WHITELEY
    return CountMatroidOracle(host, a, b, cls)


def is_independent(o: CountMatroidOracle, s: EdgeSet) -> bool:
    return o.is_independent(s)


def rank(o: CountMatroidOracle, s: EdgeSet) -> int:
    return o.rank(s)


def find_tight_components(o: CountMatroidOracle, s: EdgeSet) -> list[VertexSet]:
    """Vertex sets of the maximal connected (a, b)-tight subgraphs of (V(s), s).

    Needs the regime -a <= b <= 0, where such sets are pairwise vertex
    disjoint.  Each edge's minimal tight set (forced min-cut) is computed and
    overlapping ones are merged; a tight set has no isolated vertices, so the
    merge recovers every maximal connected tight subgraph exactly.
    """
    if o.validity_class != LOREA or o.b < -o.a:
        raise MatroidRegimeError("tight components need -a <= b <= 0")
    if not o.is_independent(s):
        raise ValueError("edge set is dependent; tight components are defined on independent sets")
    g = o.host
    ordered = s.sorted()
    pairs = [g.edges[i] for i in ordered]
    tight_sets: list[list[int]] = []
    for u, v in pairs:
        value, umin, _ = selection_max(g.n, pairs, o.a, 1, free_vertices=(u, v))
        # value - 2a = max of e(U) - a|U| over U containing u, v; tight iff == b
        if value - 2 * o.a == o.b:
            tight_sets.append(umin)
    # merge overlapping minimal tight sets (union of intersecting tight sets is tight)
    parent = list(range(len(tight_sets)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    owner: dict[int, int] = {}
    for i, verts in enumerate(tight_sets):
        for v in verts:
            if v in owner:
                ri, rj = find(i), find(owner[v])
                if ri != rj:
                    parent[rj] = ri
            else:
                owner[v] = i
    clusters: dict[int, set[int]] = {}
    for i, verts in enumerate(tight_sets):
        clusters.setdefault(find(i), set()).update(verts)
    result = [VertexSet(g, verts) for verts in clusters.values()]
    result.sort(key=lambda vs: vs.sorted())
    return result


# ---------------------------------------------------------------------------
# incremental engines for the partition machinery
# ---------------------------------------------------------------------------


class ForestEngine:
    """(1, -1) incremental oracle: adjacency forest with path queries."""

    def __init__(self, host: Graph):
        self.host = host
        self.adj: list[dict[int, int]] = [dict() for _ in range(host.n)]  # nbr -> eid

    def insertable(self, u: int, v: int) -> bool:
        return self._path(u, v) is None

    def insert(self, eid: int, u: int, v: int) -> bool:
        if not self.insertable(u, v):
            return False
        self.adj[u][v] = eid
        self.adj[v][u] = eid
        return True

    def delete(self, eid: int) -> None:
        u, v = self.host.edges[eid]
        del self.adj[u][v]
        del self.adj[v][u]

    def circuit(self, u: int, v: int) -> list[int]:
        path = self._path(u, v)
        if path is None:
            raise ValueError("edge is independent; no circuit")
        return path

    def _path(self, u: int, v: int) -> list[int] | None:
        if u == v:
            return []
        prev: dict[int, tuple[int, int]] = {u: (-1, -1)}
        dq = deque([u])
        while dq:
            x = dq.popleft()
            for y, eid in self.adj[x].items():
                if y in prev:
                    continue
                prev[y] = (x, eid)
                if y == v:
                    path = []
                    while y != u:
                        x0, e0 = prev[y]
                        path.append(e0)
                        y = x0
                    path.reverse()
                    return path
                dq.append(y)
        return None


class PebbleCountEngine:
    """Integral (a, b) with -2a < b <= 0: pebble inserts, min-cut circuits."""

    def __init__(self, host: Graph, a: int, b: int):
        self.host = host
        self.a, self.b = a, b
        self.game = PebbleGame(host.n, a, -b)
        self.members: set[int] = set()

    def insertable(self, u: int, v: int) -> bool:
        return self.game.insertable(u, v)

    def insert(self, eid: int, u: int, v: int) -> bool:
        if not self.game.insert(u, v, key=eid):
            return False
        self.members.add(eid)
        return True

    def delete(self, eid: int) -> None:
        self.game.delete(eid)
        self.members.remove(eid)

    def circuit(self, u: int, v: int) -> list[int]:
        ordered = sorted(self.members)
        pairs = [self.host.edges[i] for i in ordered]
        value, umin, _ = selection_max(self.host.n, pairs, self.a, 1, free_vertices=(u, v))
        if value - 2 * self.a != self.b:
            raise ValueError("edge is independent; no circuit")
        inside = set(umin)
        return [
            eid
            for eid, (x, y) in zip(ordered, pairs)
            if x in inside and y in inside
        ]


class MincutCountEngine:
    """Integral (a, b) with b > 0: forced min-cut for both tests and circuits."""

    def __init__(self, host: Graph, a: int, b: int):
        self.host = host
        self.a, self.b = a, b
        self.members: set[int] = set()

    def _forced(self, u: int, v: int) -> tuple[int, list[int], list[int]]:
        ordered = sorted(self.members)
        pairs = [self.host.edges[i] for i in ordered]
        value, umin, umax = selection_max(self.host.n, pairs, self.a, 1, free_vertices=(u, v))
        return value - 2 * self.a, umin, ordered

    def insertable(self, u: int, v: int) -> bool:
        shifted, _, _ = self._forced(u, v)
        return shifted < self.b  # no tight set through u, v

    def insert(self, eid: int, u: int, v: int) -> bool:
        if not self.insertable(u, v):
            return False
        self.members.add(eid)
        return True

    def delete(self, eid: int) -> None:
        self.members.remove(eid)

    def circuit(self, u: int, v: int) -> list[int]:
        shifted, umin, ordered = self._forced(u, v)
        if shifted != self.b:
            raise ValueError("edge is independent; no circuit")
        inside = set(umin)
        return [
            eid
            for eid in ordered
            if self.host.edges[eid][0] in inside and self.host.edges[eid][1] in inside
        ]


class TrivialEngine:
    """b == -2a: only the empty set is independent."""

    def __init__(self, host: Graph):
        self.host = host

    def insertable(self, u: int, v: int) -> bool:
        return False

    def insert(self, eid: int, u: int, v: int) -> bool:
        return False

    def delete(self, eid: int) -> None:
        raise ValueError("trivial matroid holds no elements")

    def circuit(self, u: int, v: int) -> list[int]:
        return []  # the new element alone is dependent


def engine_for(oracle: CountMatroidOracle):
    """Incremental engine matching an oracle's matroid."""
    a, b = oracle.a, oracle.b
    if (a, b) == (1, -1):
        return ForestEngine(oracle.host)
    if b > 0:
        return MincutCountEngine(oracle.host, a, b)
    if b == -2 * a:
        return TrivialEngine(oracle.host)
    return PebbleCountEngine(oracle.host, a, b)
