"""Incremental (k, l)-sparsity maintenance by pebble accounting.

State: an orientation of the currently accepted edges plus k pebbles per
vertex, spending one pebble per outgoing arc (invariant: pebbles[v] +
outdeg[v] == k).  An edge {u, v} can be accepted while keeping every
edge-containing subgraph at e(U) <= k|U| - l exactly when l + 1 pebbles can
be gathered onto {u, v} by reversing directed paths.  When gathering stalls,
the set of vertices reachable from {u, v} spans a subgraph that would be
pushed past the bound; that region is the refutation callers consume.

Valid for 0 <= l < 2k; parallel edges are fine as long as 2 <= 2k - l,
loops never are.  Deletion is trivial: drop the arc and refund the pebble.
"""

from __future__ import annotations

from typing import Sequence


class PebbleGame:
    def __init__(self, n: int, k: int, l: int):
        if k < 1 or not (0 <= l < 2 * k):
            raise ValueError(f"pebble game needs k >= 1 and 0 <= l < 2k, got ({k}, {l})")
        self.n = n
        self.k = k
        self.l = l
        self.pebbles = [k] * n
        self.out: list[dict[int, int]] = [dict() for _ in range(n)]  # head -> arc count
        self.orient: dict[int, tuple[int, int]] = {}  # edge key -> (tail, head)
        self._keys_on: dict[tuple[int, int], list[int]] = {}  # (tail, head) -> keys
        self.last_region: list[int] = []
        # timestamped DFS scratch space: no per-search allocation
        self._mark = [0] * n
        self._prev = [0] * n
        self._stamp = 0
        self._seen_stamp = 0

    # -- internals ----------------------------------------------------------

    def _collect_one(self, target: int, exclude: tuple[int, int]) -> bool:
        """Move one pebble onto ``target`` by reversing a directed path.

        Pebbles on ``exclude`` vertices are off limits (already counted).
        On failure the visit stamps identify the region for later assembly.
        """
        self._stamp += 1
        stamp = self._stamp
        mark = self._mark
        prev = self._prev
        pebbles = self.pebbles
        out = self.out
        mark[target] = stamp
        stack = [target]
        found = -1
        while stack:
            x = stack.pop()
            for y in out[x]:
                if mark[y] == stamp:
                    continue
                mark[y] = stamp
                prev[y] = x
                if pebbles[y] > 0 and y != exclude[0] and y != exclude[1]:
                    found = y
                    stack.clear()
                    break
                stack.append(y)
        self._seen_stamp = stamp
        if found < 0:
            return False
        y = found
        while y != target:
            x = prev[y]
            self._reverse_arc(x, y)
            y = x
        pebbles[found] -= 1
        pebbles[target] += 1
        return True

    def _region_from(self, stamp_a: int, stamp_b: int) -> list[int]:
        mark = self._mark
        return sorted(
            v for v in range(self.n) if mark[v] == stamp_a or mark[v] == stamp_b
        )

    def _reverse_arc(self, x: int, y: int) -> None:
        cnt = self.out[x][y]
        if cnt == 1:
            del self.out[x][y]
        else:
            self.out[x][y] = cnt - 1
        self.out[y][x] = self.out[y].get(x, 0) + 1
        # keep named orientations consistent: flip a named arc only when the
        # remaining anonymous multiplicity cannot absorb the reversal
        keys = self._keys_on.get((x, y))
        if keys and len(keys) > self.out[x].get(y, 0):
            key = keys.pop()
            if not keys:
                del self._keys_on[(x, y)]
            self._keys_on.setdefault((y, x), []).append(key)
            self.orient[key] = (y, x)

    def _gather(self, u: int, v: int) -> bool:
        need = self.l + 1
        while self.pebbles[u] + self.pebbles[v] < need:
            if self._collect_one(u, (u, v)):
                continue
            su = self._seen_stamp
            if self._collect_one(v, (u, v)):
                continue
            self.last_region = self._region_from(su, self._seen_stamp)
            return False
        return True

    def gather_max(self, u: int, v: int, stop_at: int | None = None) -> int:
        """Largest pebble count collectible onto {u, v}; equals the minimum of
        k|U| - e(U) over vertex sets containing both (for the current edges).

        When the count reaches ``stop_at`` the gather aborts early (callers
        scanning for a minimum cannot improve on it anyway) and the region is
        not recorded.  Otherwise it runs to a double stall and ``last_region``
        holds a reachability-closed set attaining the returned minimum.
        """
        while True:
            have = self.pebbles[u] + self.pebbles[v]
            if stop_at is not None and have >= stop_at:
                return have
            if self._collect_one(u, (u, v)):
                continue
            su = self._seen_stamp
            if self._collect_one(v, (u, v)):
                continue
            self.last_region = self._region_from(su, self._seen_stamp)
            return have

    # -- public surface -----------------------------------------------------

    def insertable(self, u: int, v: int) -> bool:
        """True iff accepting {u, v} keeps the edge set (k, l)-sparse.

        Pure with respect to the edge set; the orientation may shift, which
        is harmless.  On False, ``last_region`` holds the blocked vertex set.
        """
        if u == v:
            raise ValueError("loops are never sparse here")
        return self._gather(u, v)

    def insert(self, u: int, v: int, key: int | None = None) -> bool:
        if u == v:
            raise ValueError("loops are never sparse here")
        if not self._gather(u, v):
            return False
        tail, head = (u, v) if self.pebbles[u] > 0 else (v, u)
        self.pebbles[tail] -= 1
        self.out[tail][head] = self.out[tail].get(head, 0) + 1
        if key is not None:
            self.orient[key] = (tail, head)
            self._keys_on.setdefault((tail, head), []).append(key)
        return True

    def delete(self, key: int) -> None:
        tail, head = self.orient.pop(key)
        keys = self._keys_on[(tail, head)]
        keys.remove(key)
        if not keys:
            del self._keys_on[(tail, head)]
        cnt = self.out[tail][head]
        if cnt == 1:
            del self.out[tail][head]
        else:
            self.out[tail][head] = cnt - 1
        self.pebbles[tail] += 1


def scaled_sparsity_decision(
    n: int,
    edges: Sequence[tuple[int, int]],
    k: int,
    l: int,
    copies: int = 1,
) -> tuple[bool, list[int]]:
    """Decide whether ``copies`` parallel copies of each edge form a (k, l)-sparse
    multigraph; on failure also return the blocked vertex region.

    This scales rational bounds to integers: a simple graph is (p/q, b)-sparse
    with b <= 0 iff its q-fold blow-up is (p, -b*q)-sparse.
    """
    game = PebbleGame(n, k, l)
    for u, v in edges:
        for _ in range(copies):
            if not game.insert(u, v):
                return False, game.last_region
    return True, []
