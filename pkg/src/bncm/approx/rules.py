"""Stage 1: rewrite a perfect matching with rules I-V until the reduced
matching has the six structural properties Stage 2 relies on.

Edges are keyed ``(u, v)`` with ``u < v``; "ascending order" below always
means ascending edge key. No rule ever creates a d-edge, so every d-edge that
survives is an original edge of length at most delta.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

import numpy as np

from ..errors import ClaimViolation, InvariantViolation, NonAdjacentCells, PropertyViolation
from .grid import GridContext, cell_corners, d_corner, flanking_cells

MAX_ROUNDS = 64


@dataclass(frozen=True)
class Firing:
    rule: str  # "I", "II", "III-b", "III-c", "III-d", "IV", "V"
    removed: tuple[tuple[int, int], ...]
    added: tuple[tuple[int, int], ...]


def _key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _pair(a, b):
    return (a, b) if a < b else (b, a)


def group_by_cell(ix: np.ndarray, iy: np.ndarray) -> dict[tuple[int, int], list[int]]:
    """Point indices per cell, ascending within each cell."""
    if len(ix) == 0:
        return {}
    order = np.lexsort((np.arange(len(ix)), iy, ix))
    sx, sy = ix[order], iy[order]
    brk = np.flatnonzero((np.diff(sx) != 0) | (np.diff(sy) != 0)) + 1
    starts = np.concatenate(([0], brk))
    ends = np.concatenate((brk, [len(order)]))
    order_l = order.tolist()
    sxl, syl = sx.tolist(), sy.tolist()
    return {(sxl[s], syl[s]): order_l[s:e] for s, e in zip(starts.tolist(), ends.tolist())}


@dataclass
class Reducer:
    """Mutable Stage-1 state: the current matching plus indexes of its
    external edges by corner (d-edges) and by cell pair (s-edges)."""

    points: np.ndarray
    mate: list[int]
    grid: GridContext
    trace: list[Firing] = field(default_factory=list)
    rounds: int = 0

    def __post_init__(self):
        self.p = self.points.tolist()
        self.cx = self.grid.ix.tolist()
        self.cy = self.grid.iy.tolist()
        self.rho = self.grid.zone_radius
        mate = np.asarray(self.mate)
        u = np.flatnonzero(np.arange(len(mate)) < mate)
        v = mate[u]
        d = self.points[u] - self.points[v]
        measured = float((d * d).sum(axis=1).max()) if len(u) else 0.0
        self.delta2 = max(measured, self.grid.delta * self.grid.delta)
        self.dedges: dict[tuple[int, int], set[tuple[int, int]]] = {}
        self.sedges: dict[tuple, set[tuple[int, int]]] = {}
        ext = (self.grid.ix[u] != self.grid.ix[v]) | (self.grid.iy[u] != self.grid.iy[v])
        for a, b in zip(u[ext].tolist(), v[ext].tolist()):
            self._register(a, b)
        self.cell_points = group_by_cell(self.grid.ix, self.grid.iy)

    # -- bookkeeping -------------------------------------------------------

    def cell(self, u: int) -> tuple[int, int]:
        return (self.cx[u], self.cy[u])

    def _slot(self, u, v):
        a, b = self.cell(u), self.cell(v)
        dx, dy = abs(a[0] - b[0]), abs(a[1] - b[1])
        if dx > 1 or dy > 1:
            raise NonAdjacentCells(f"edge {(u, v)} joins non-adjacent cells {a}, {b}")
        if dx == 0 and dy == 0:
            return None
        if dx == 0 or dy == 0:
            return self.sedges, _pair(a, b)
        return self.dedges, d_corner(a, b)

    def _register(self, u, v):
        slot = self._slot(u, v)
        if slot is not None:
            table, k = slot
            table.setdefault(k, set()).add(_key(u, v))

    def _unregister(self, u, v):
        slot = self._slot(u, v)
        if slot is not None:
            table, k = slot
            s = table[k]
            s.discard(_key(u, v))
            if not s:
                del table[k]

    def is_edge(self, key) -> bool:
        return self.mate[key[0]] == key[1]

    def kind(self, u, v) -> str:
        slot = self._slot(u, v)
        if slot is None:
            return "I"
        return "S" if slot[0] is self.sedges else "D"

    def _replace(self, rule, old, new):
        for u, v in old:
            self._unregister(u, v)
            self.mate[u] = self.mate[v] = -1
        for u, v in new:
            assert self.mate[u] == -1 and self.mate[v] == -1
            self.mate[u], self.mate[v] = v, u
            self._register(u, v)
        self.trace.append(Firing(rule, tuple(_key(*e) for e in old), tuple(_key(*e) for e in new)))

    def _len2(self, u, v) -> float:
        (ax, ay), (bx, by) = self.p[u], self.p[v]
        dx, dy = ax - bx, ay - by
        return dx * dx + dy * dy

    def _better(self, *options):
        """Pick the re-pairing with the shorter longest edge, then the
        lexicographically least edge list."""
        def rank(opt):
            return (max(self._len2(u, v) for u, v in opt), sorted(_key(u, v) for u, v in opt))
        return min(options, key=rank)

    def _split(self, key, cell):
        """(endpoint of edge ``key`` inside ``cell``, the other endpoint)."""
        u, v = key
        return (u, v) if self.cell(u) == cell else (v, u)

    def in_zone(self, w: int, corner) -> bool:
        ax, ay = self.grid.corner_xy(*corner)
        x, y = self.p[w]
        return abs(x - ax) + abs(y - ay) < self.rho

    def zone_points(self, key) -> list[int]:
        """Points inside the two danger zones of d-edge ``key``."""
        a, b = self.cell(key[0]), self.cell(key[1])
        corner = d_corner(a, b)
        out = []
        for f in flanking_cells(a, b):
            out.extend(w for w in self.cell_points.get(f, ()) if self.in_zone(w, corner))
        return sorted(out)

    def d_keys(self) -> list[tuple[int, int]]:
        return sorted(k for s in self.dedges.values() for k in s)

    # -- rules -------------------------------------------------------------

    def rule_i(self):
        """Two d-edges on one corner joining the same two cells become two
        internal edges."""
        groups = []
        for corner, keys in self.dedges.items():
            by_cells: dict = {}
            for k in keys:
                by_cells.setdefault(_pair(self.cell(k[0]), self.cell(k[1])), []).append(k)
            groups.extend(sorted(g) for g in by_cells.values() if len(g) > 1)
        for g in sorted(groups):
            for e1, e2 in zip(g[0::2], g[1::2]):
                u1, v1 = e1
                w2, z2 = self._split(e2, self.cell(u1))
                self._replace("I", [e1, e2], [(u1, w2), (v1, z2)])

    def rule_ii(self):
        """Two d-edges on one corner joining different cell pairs become two
        s-edges."""
        pending = sorted(sorted(keys) for keys in self.dedges.values() if len(keys) > 1)
        for e1, e2 in pending:
            u1, v1 = e1
            u2, v2 = e2
            new = self._better([(u1, u2), (v1, v2)], [(u1, v2), (v1, u2)])
            self._replace("II", [e1, e2], new)

    def rule_iii(self):
        """Clear danger zones: a d-edge with a point of some edge e2 in one
        of its zones is rewired together with e2."""
        for e1 in self.d_keys():
            if not self.is_edge(e1):
                continue
            inside = self.zone_points(e1)
            if inside:
                self._fire_iii(e1, inside[0])

    def _fire_iii(self, e1, r):
        u1, v1 = e1
        A, B = self.cell(u1), self.cell(v1)
        corner = d_corner(A, B)
        C = self.cell(r)
        q = self.mate[r]
        e2 = _key(r, q)
        kind = self.kind(r, q)
        if kind == "S":
            Cq = self.cell(q)
            if Cq not in (A, B):
                raise ClaimViolation(1, f"s-edge {e2} leaves the zone cell {C} towards {Cq}")
            x, y = self._split(e1, Cq)
            self._replace("III-b", [e1, e2], [(q, x), (r, y)])
            return
        if kind == "D":
            raise ClaimViolation(1, f"d-edge {e2} has an endpoint in the danger zone of {e1}")
        e3 = None
        for b in cell_corners(C):
            if b == corner:
                continue
            for k3 in self.dedges.get(b, ()):
                if C in (self.cell(k3[0]), self.cell(k3[1])):
                    continue
                if self.in_zone(q, b):
                    e3 = (k3, b)
        if e3 is None:
            new = self._better([(r, u1), (q, v1)], [(r, v1), (q, u1)])
            self._replace("III-c", [e1, e2], new)
            return
        k3, b = e3
        if abs(b[0] - corner[0]) + abs(b[1] - corner[1]) != 1:
            raise ClaimViolation(2, f"corner {b} of {k3} is not adjacent to {corner}")
        cells3 = (self.cell(k3[0]), self.cell(k3[1]))
        shared = A if A in cells3 else B if B in cells3 else None
        if shared is None:
            raise ClaimViolation(2, f"{e1} and {k3} share no cell")
        x, y = self._split(e1, shared)
        self._replace("III-d", [e1, e2], [(q, x), (r, y)])

    def _iv_partner(self, e1):
        A, B = self.cell(e1[0]), self.cell(e1[1])
        best = None
        for X in (A, B):
            for F in flanking_cells(A, B):
                for k in self.sedges.get(_pair(X, F), ()):
                    if best is None or k < best[0]:
                        best = (k, X)
        return best

    def rule_iv(self):
        """A d-edge and an s-edge leaving the same cell towards side-adjacent
        cells become an internal edge and an s-edge."""
        heap = self.d_keys()
        heapq.heapify(heap)
        while heap:
            e1 = heapq.heappop(heap)
            if not self.is_edge(e1) or self.kind(*e1) != "D":
                continue
            hit = self._iv_partner(e1)
            if hit is None:
                continue
            e2, X = hit
            p1, q1 = self._split(e1, X)
            p2, q2 = self._split(e2, X)
            self._replace("IV", [e1, e2], [(p1, p2), (q1, q2)])
            # the new s-edge may pair with d-edges on the corners of its side
            Y, F = self.cell(q1), self.cell(q2)
            if Y[0] == F[0]:
                side = [(Y[0], max(Y[1], F[1])), (Y[0] + 1, max(Y[1], F[1]))]
            else:
                side = [(max(Y[0], F[0]), Y[1]), (max(Y[0], F[0]), Y[1] + 1)]
            for corner in side:
                for k in self.dedges.get(corner, ()):
                    heapq.heappush(heap, k)

    def rule_v(self):
        """Two s-edges joining the same two cells become two internal edges."""
        groups = sorted(sorted(keys) for keys in self.sedges.values() if len(keys) > 1)
        for g in groups:
            for e1, e2 in zip(g[0::2], g[1::2]):
                u1, v1 = e1
                w2, z2 = self._split(e2, self.cell(u1))
                self._replace("V", [e1, e2], [(u1, w2), (v1, z2)])

    # -- driver ------------------------------------------------------------

    def pending(self) -> dict[str, int]:
        """Number of places where each rule could still fire."""
        counts = dict.fromkeys(("I", "II", "III", "IV", "V"), 0)
        for keys in self.dedges.values():
            pairs = [_pair(self.cell(u), self.cell(v)) for u, v in keys]
            counts["I"] += len(pairs) - len(set(pairs))
            counts["II"] += len(set(pairs)) > 1
        for e in self.d_keys():
            counts["III"] += bool(self.zone_points(e))
            counts["IV"] += self._iv_partner(e) is not None
        counts["V"] = sum(len(s) > 1 for s in self.sedges.values())
        return counts

    def run(self) -> "Reducer":
        for _ in range(MAX_ROUNDS):
            self.rounds += 1
            self.rule_i()
            self.rule_ii()
            self.rule_iii()
            self.rule_iv()
            self.rule_v()
            if not any(self.pending().values()):
                return self
        raise InvariantViolation(f"rules still applicable after {MAX_ROUNDS} rounds")

    # -- verification ------------------------------------------------------

    def check_properties(self) -> None:
        """Raise PropertyViolation(k) for the first structural property k
        (1-6) that fails on the current matching."""
        n = len(self.mate)
        for u, v in enumerate(self.mate):
            if v < 0 or v >= n or self.mate[v] != u or v == u:
                raise PropertyViolation(1, f"point {u} is not perfectly matched")
            if u < v:
                a, b = self.cell(u), self.cell(v)
                if abs(a[0] - b[0]) > 1 or abs(a[1] - b[1]) > 1:
                    raise PropertyViolation(1, f"edge {(u, v)} joins non-adjacent cells")
        for corner, keys in self.dedges.items():
            if len(keys) > 1:
                raise PropertyViolation(2, f"corner {corner} carries {len(keys)} d-edges")
        for e in self.d_keys():
            if self._len2(*e) > self.delta2:
                raise PropertyViolation(3, f"d-edge {e} longer than delta")
        for e in self.d_keys():
            if self.zone_points(e):
                raise PropertyViolation(4, f"danger zone of {e} holds points {self.zone_points(e)}")
        targets: dict = {}
        for (a, b), keys in self.sedges.items():
            for _ in keys:
                targets.setdefault(a, []).append(b)
                targets.setdefault(b, []).append(a)
        for e in self.d_keys():
            a, b = self.cell(e[0]), self.cell(e[1])
            targets.setdefault(a, []).append(b)
            targets.setdefault(b, []).append(a)
        for c, ts in targets.items():
            if len(ts) > 4 or len(set(ts)) != len(ts):
                raise PropertyViolation(5, f"cell {c} has external edges to {ts}")
        for e in self.d_keys():
            a, b = self.cell(e[0]), self.cell(e[1])
            for f in flanking_cells(a, b):
                for x in (a, b):
                    if _pair(f, x) in self.sedges:
                        raise PropertyViolation(6, f"s-edge between {f} and {x} next to d-edge {e}")


def reduce_rules(points, mate, grid: GridContext) -> Reducer:
    """Run rules I-V to a fixpoint and verify the resulting properties."""
    red = Reducer(np.asarray(points, dtype=float), list(mate), grid).run()
    red.check_properties()
    return red
