"""Finite preordered sets with the (equivalence relations, partial orders) theory.

A preorder on ``range(n)`` is stored as bitmask rows: bit ``j`` of ``up[i]``
is set iff ``i <= j``.  The module also carries the finite-space adapter
(specialization preorder) and the three pretorsion theories of finite sets,
viewed as discrete preorders.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from networkx.utils import UnionFind

from .category import FiniteObj, Mor
from .errors import IndexOutOfRange, LawViolation, NoZCokernel, NoZKernel, NotATopology
from .theory import Factorization, Theory


def _bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def _close(rows: list[int]) -> tuple[int, ...]:
    # Warshall on bitmask rows; rows already contain the reflexive bits.
    n = len(rows)
    for k in range(n):
        bit, row_k = 1 << k, rows[k]
        for i in range(n):
            if rows[i] & bit:
                rows[i] |= row_k
    return tuple(rows)


@dataclass(frozen=True)
class PreordObj(FiniteObj):
    n: int
    up: tuple[int, ...]
    kind = "preord"

    def __post_init__(self):
        up = tuple(self.up)
        object.__setattr__(self, "up", up)
        if len(up) != self.n or any(r >> self.n for r in up):
            raise LawViolation(f"relation rows {up} do not fit {self.n} elements")
        for i, row in enumerate(up):
            if not row >> i & 1:
                raise LawViolation(f"not reflexive at {i}")
            for j in _bits(row):
                if up[j] & ~row:
                    raise LawViolation(f"not transitive at {i} <= {j}")

    def le(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def pairs(self) -> list[tuple[int, int]]:
        """Non-reflexive related pairs ``(i, j)`` with ``i <= j``."""
        return [(i, j) for i in range(self.n) for j in _bits(self.up[i]) if i != j]

    def __repr__(self):
        rel = " ".join(f"{i}<{j}" for i, j in self.pairs())
        return f"PreordObj(n={self.n}, le=[{rel}])"

    # -- instance hooks ---------------------------------------------------
    def respects(self, cod, table):
        return all(cod.le(table[i], table[j]) for i, j in self.pairs())

    def assign_ok(self, cod, table, i):
        ti, row = table[i], self.up[i]
        for j in range(i):
            if row >> j & 1 and not cod.le(ti, table[j]):
                return False
            if self.up[j] >> i & 1 and not cod.le(table[j], ti):
                return False
        return True

    def edges(self):
        return self.pairs()

    def restrict(self, members: Sequence[int]) -> PreordObj:
        members = sorted(members)
        rows = []
        for a in members:
            rows.append(sum(1 << k for k, b in enumerate(members) if self.le(a, b)))
        return PreordObj(len(members), tuple(rows))

    def sum(self, other: PreordObj) -> PreordObj:
        return PreordObj(self.n + other.n, self.up + tuple(r << self.n for r in other.up))

    def product(self, other: PreordObj) -> PreordObj:
        m = other.n
        rows = []
        for a in range(self.n):
            for b in range(m):
                rows.append(sum(1 << (c * m + d) for c in _bits(self.up[a]) for d in _bits(other.up[b])))
        return PreordObj(self.n * m, tuple(rows))

    def quotient(self, pairs):
        proj, k = _classes(self.n, pairs)
        return closure(k, ((proj[i], proj[j]) for i, j in self.pairs())), proj

    def image_structure(self, cod, table):
        image = sorted(set(table))
        index = {v: i for i, v in enumerate(image)}
        return closure(len(image), ((index[table[i]], index[table[j]]) for i, j in self.pairs()))

    @classmethod
    def empty(cls):
        return cls(0, ())

    @classmethod
    def point(cls):
        return cls(1, (1,))

    # -- predicates -------------------------------------------------------
    def is_symmetric(self) -> bool:
        return all(self.le(j, i) for i, j in self.pairs())

    def is_antisymmetric(self) -> bool:
        return not any(self.le(j, i) for i, j in self.pairs())

    def is_discrete(self) -> bool:
        return all(row == 1 << i for i, row in enumerate(self.up))


def _classes(n: int, pairs: Iterable[tuple[int, int]]) -> tuple[tuple[int, ...], int]:
    """Equivalence generated by ``pairs``; classes numbered by smallest member."""
    uf = UnionFind(range(n))
    for a, b in pairs:
        uf.union(a, b)
    label: dict = {}
    proj = []
    for x in range(n):
        proj.append(label.setdefault(uf[x], len(label)))
    return tuple(proj), len(label)


def closure(n: int, pairs: Iterable[tuple[int, int]] = ()) -> PreordObj:
    """Smallest preorder on ``range(n)`` containing ``pairs``."""
    rows = [1 << i for i in range(n)]
    for i, j in pairs:
        if not (0 <= i < n and 0 <= j < n):
            raise IndexOutOfRange(f"pair ({i}, {j}) outside range({n})")
        rows[i] |= 1 << j
    return PreordObj(n, _close(rows))


def discrete(n: int) -> PreordObj:
    return closure(n)


def codiscrete(n: int) -> PreordObj:
    return PreordObj(n, ((1 << n) - 1,) * n)


def chain(n: int) -> PreordObj:
    return closure(n, ((i, i + 1) for i in range(n - 1)))


# -- finite topological spaces ---------------------------------------------

def _check_topology(n: int, opens: Iterable[Iterable[int]]) -> set[frozenset]:
    family = {frozenset(U) for U in opens}
    for U in family:
        if any(not 0 <= x < n for x in U):
            raise IndexOutOfRange(f"open set {sorted(U)} outside range({n})")
    full = frozenset(range(n))
    if frozenset() not in family:
        raise NotATopology(frozenset(), frozenset(), "missing the empty set")
    if full not in family:
        raise NotATopology(full, full, "missing the whole space")
    for U, V in itertools.combinations(sorted(family, key=sorted), 2):
        if U | V not in family:
            raise NotATopology(U, V, "union not open")
        if U & V not in family:
            raise NotATopology(U, V, "intersection not open")
    return family


def from_finite_top(n: int, opens: Iterable[Iterable[int]]) -> PreordObj:
    """Specialization preorder: ``x <= y`` iff every open set containing x contains y."""
    family = _check_topology(n, opens)
    pairs = [(x, y) for x in range(n) for y in range(n)
             if all(y in U for U in family if x in U)]
    return closure(n, pairs)


def to_finite_top(X: PreordObj) -> list[frozenset[int]]:
    """The up-closed subsets, i.e. the Alexandrov topology inducing ``X``."""
    out = []
    for mask in range(1 << X.n):
        if all(X.up[i] & ~mask == 0 for i in _bits(mask)):
            out.append(frozenset(_bits(mask)))
    return out


def is_partition_topology(n: int, opens) -> bool:
    family = _check_topology(n, opens)
    full = frozenset(range(n))
    return all(full - U in family for U in family)


def is_kolmogorov(n: int, opens) -> bool:
    family = _check_topology(n, opens)
    return all(any((x in U) != (y in U) for U in family)
               for x, y in itertools.combinations(range(n), 2))


# -- theories ---------------------------------------------------------------

def _enumerate_preorders(n: int):
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    seen = set()
    for mask in range(1 << len(off)):
        rows = [1 << i for i in range(n)]
        for k, (i, j) in enumerate(off):
            if mask >> k & 1:
                rows[i] |= 1 << j
        if all(rows[j] & ~rows[i] == 0 for i in range(n) for j in _bits(rows[i])):
            t = tuple(rows)
            if t not in seen:
                seen.add(t)
                yield PreordObj(n, t)


class PreordTheory(Theory):
    """(Eq, ParOrd): equivalence relations are torsion, partial orders torsion-free."""

    name = "preord"
    obj_type = PreordObj

    def _enumerate(self, n):
        return _enumerate_preorders(n)

    def random_object(self, rng: random.Random, n: int) -> PreordObj:
        density = rng.choice((0.1, 0.25, 0.5))
        pairs = [(i, j) for i in range(n) for j in range(n) if i != j and rng.random() < density]
        return closure(n, pairs)

    def is_torsion(self, X):
        return X.is_symmetric()

    def is_torsionfree(self, X):
        return X.is_antisymmetric()

    def is_trivial_obj(self, X):
        return X.is_discrete()

    def trivial_witness(self, f):
        # Edge-wise: f is trivial iff it is constant along every related pair.
        X = f.dom
        if any(f.table[i] != f.table[j] for i, j in X.pairs()):
            return None
        comps = X.components
        Z = discrete(len(comps))
        return Factorization(Z, Mor.trusted(X, Z, X.component_of),
                             Mor.trusted(Z, f.cod, [f.table[c[0]] for c in comps]))

    def is_trivial_mor(self, f):
        return all(f.table[i] == f.table[j] for i, j in f.dom.pairs())

    def torsion_part(self, X):
        T = PreordObj(X.n, tuple(sum(1 << j for j in _bits(X.up[i]) if X.le(j, i)) for i in range(X.n)))
        return T, Mor.trusted(T, X, range(X.n))

    def torsionfree_part(self, X):
        F, proj = X.quotient((i, j) for i, j in X.pairs() if X.le(j, i))
        return F, Mor.trusted(X, F, proj)

    def z_kernel(self, f):
        X = f.dom
        rows = tuple(sum(1 << j for j in _bits(X.up[i]) if f.table[i] == f.table[j]) for i in range(X.n))
        K = PreordObj(X.n, rows)
        return Mor.trusted(K, X, range(X.n))

    def z_cokernel(self, f):
        Q, proj = f.cod.quotient((f.table[i], f.table[j]) for i, j in f.dom.pairs())
        return Mor.trusted(f.cod, Q, proj)


class FinSetTheory(Theory):
    """The three pretorsion theories of finite sets, as discrete preorders.

    ``variant`` is ``"F0"`` for (all sets, sets with at most one element),
    ``"all"`` for (all, all) and ``"empty"`` for ({empty set}, all).
    """

    obj_type = PreordObj

    def __init__(self, variant: str = "F0"):
        if variant not in ("F0", "all", "empty"):
            raise ValueError(f"unknown variant {variant!r}")
        self.variant = variant
        self.name = f"finset-{variant}"

    def _enumerate(self, n):
        yield discrete(n)

    def random_object(self, rng, n):
        return discrete(n)

    def is_torsion(self, X):
        return X.n == 0 if self.variant == "empty" else True

    def is_torsionfree(self, X):
        return X.n <= 1 if self.variant == "F0" else True

    def trivial_witness(self, f):
        X = f.dom
        if self.variant == "all":
            return Factorization(X, Mor.trusted(X, X, range(X.n)), f)
        if X.n == 0:
            return Factorization(X, Mor.trusted(X, X, ()), f)
        if self.variant == "F0" and len(set(f.table)) == 1:
            P = discrete(1)
            return Factorization(P, Mor.trusted(X, P, [0] * X.n), Mor.trusted(P, f.cod, [f.table[0]]))
        return None

    def torsion_part(self, X):
        if self.variant == "empty":
            E = discrete(0)
            return E, Mor.trusted(E, X, ())
        return X, Mor.trusted(X, X, range(X.n))

    def torsionfree_part(self, X):
        if self.variant == "F0" and X.n > 1:
            P = discrete(1)
            return P, Mor.trusted(X, P, [0] * X.n)
        return X, Mor.trusted(X, X, range(X.n))

    def z_kernel(self, f):
        if self.is_trivial_mor(f):
            return Mor.trusted(f.dom, f.dom, range(f.dom.n))
        if self.variant == "empty":
            E = discrete(0)
            return Mor.trusted(E, f.dom, ())
        raise NoZKernel(f"{f!r} has no Z-kernel in {self.name}")

    def z_cokernel(self, f):
        Y = f.cod
        if self.variant == "all" or f.dom.n == 0:
            return Mor.trusted(Y, Y, range(Y.n))
        if self.variant == "empty":
            raise NoZCokernel(f"{f!r} has no Z-cokernel in {self.name}")
        # F0: collapse the image of f to a single point.
        image = set(f.table)
        Q, proj = Y.quotient((min(image), y) for y in image)
        return Mor.trusted(Y, Q, proj)
