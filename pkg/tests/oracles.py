"""Deliberately naive reimplementations used to cross-check the library.

Nothing here imports the code under test's algorithms: relations are
boolean matrices closed by Floyd-Warshall, components come from
breadth-first search, and hom-sets from filtering every possible table.
"""
from __future__ import annotations

import itertools
from collections import deque


def warshall(n: int, pairs) -> set[tuple[int, int]]:
    m = [[i == j for j in range(n)] for i in range(n)]
    for i, j in pairs:
        m[i][j] = True
    for k in range(n):
        for i in range(n):
            if m[i][k]:
                for j in range(n):
                    m[i][j] = m[i][j] or m[k][j]
    return {(i, j) for i in range(n) for j in range(n) if m[i][j]}


def bfs_components(n: int, edges) -> list[set[int]]:
    adj = {x: set() for x in range(n)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    seen, out = set(), []
    for s in range(n):
        if s in seen:
            continue
        comp, queue = {s}, deque([s])
        while queue:
            for y in adj[queue.popleft()]:
                if y not in comp:
                    comp.add(y)
                    queue.append(y)
        seen |= comp
        out.append(comp)
    return out


def cyclic_points(f) -> set[int]:
    """x is cyclic iff f^t(x) = x for some 1 <= t <= n."""
    n = len(f)
    out = set()
    for x in range(n):
        y = x
        for _ in range(n):
            y = f[y]
            if y == x:
                out.add(x)
                break
    return out


def iterate(f, t: int) -> tuple[int, ...]:
    g = tuple(range(len(f)))
    for _ in range(t):
        g = tuple(f[v] for v in g)
    return g


def preorder_homs(rel_x: set, nx: int, rel_y: set, ny: int) -> list[tuple[int, ...]]:
    return [t for t in itertools.product(range(ny), repeat=nx)
            if all((t[i], t[j]) in rel_y for i, j in rel_x)]


def endo_homs(f, g) -> list[tuple[int, ...]]:
    return [t for t in itertools.product(range(len(g)), repeat=len(f))
            if all(t[f[x]] == g[t[x]] for x in range(len(f)))]


def count_labeled_preorders(n: int) -> int:
    """Transitive reflexive relations on n points, by filtering every relation."""
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    total = 0
    for bits in itertools.product((False, True), repeat=len(off)):
        rel = {p for p, b in zip(off, bits) if b} | {(i, i) for i in range(n)}
        if all((a, d) in rel for a, b in rel for c, d in rel if b == c):
            total += 1
    return total
