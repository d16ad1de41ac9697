"""Maximum-cardinality matching in general graphs (Edmonds' blossom method).

Straightforward O(V^3) variant: one BFS per free vertex, blossoms are
contracted by relabelling their base. A vertex from which no augmenting path
exists never gains one later in the same run, so each root is tried once.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence


def _find_augmenting_path(root: int, adj: Sequence[Sequence[int]], mate: list[int]) -> tuple[int, list[int]]:
    n = len(adj)
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    return to, parent
                nxt = mate[to]
                used[nxt] = True
                queue.append(nxt)
    return -1, parent


def max_matching(adj: Sequence[Sequence[int]], mate: list[int] | None = None) -> list[int]:
    """Return a maximum matching as a mate array (``-1`` for unmatched).

    ``mate`` may hold any valid matching of the graph to warm-start from; it
    is not modified.
    """
    n = len(adj)
    mate = [-1] * n if mate is None else list(mate)
    # greedy seed
    for v in range(n):
        if mate[v] == -1:
            for to in adj[v]:
                if mate[to] == -1 and to != v:
                    mate[v], mate[to] = to, v
                    break
    for root in range(n):
        if mate[root] != -1:
            continue
        end, parent = _find_augmenting_path(root, adj, mate)
        while end != -1:
            pv = parent[end]
            nxt = mate[pv]
            mate[end], mate[pv] = pv, end
            end = nxt
    return mate


def matching_size(mate: Sequence[int]) -> int:
    return sum(1 for v, m in enumerate(mate) if m > v)
