"""Endomappings of finite sets with the (cycles, forests) pretorsion theory."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from networkx.utils import UnionFind

from .category import FiniteObj, Mor
from .errors import LawViolation
from .theory import Factorization, Theory


@dataclass(frozen=True)
class EndoObj(FiniteObj):
    n: int
    f: tuple[int, ...]
    kind = "endo"

    def __post_init__(self):
        f = tuple(self.f)
        object.__setattr__(self, "f", f)
        if len(f) != self.n or any(not 0 <= v < self.n for v in f):
            raise LawViolation(f"{list(f)} is not an endofunction of range({self.n})")

    def __repr__(self):
        return f"EndoObj(n={self.n}, f={list(self.f)})"

    def respects(self, cod, table):
        g = cod.f
        return all(table[fx] == g[table[x]] for x, fx in enumerate(self.f))

    def assign_ok(self, cod, table, i):
        f, g = self.f, cod.f
        if f[i] <= i and table[f[i]] != g[table[i]]:
            return False
        return all(table[i] == g[table[x]] for x in range(i) if f[x] == i)

    def edges(self):
        return list(enumerate(self.f))

    def restrict(self, members: Sequence[int]) -> EndoObj:
        members = sorted(members)
        index = {v: i for i, v in enumerate(members)}
        try:
            return EndoObj(len(members), tuple(index[self.f[x]] for x in members))
        except KeyError:
            raise LawViolation(f"{members} is not closed under the endofunction") from None

    def sum(self, other: EndoObj) -> EndoObj:
        return EndoObj(self.n + other.n, self.f + tuple(v + self.n for v in other.f))

    def product(self, other: EndoObj) -> EndoObj:
        m = other.n
        return EndoObj(self.n * m, tuple(self.f[a] * m + other.f[b] for a in range(self.n) for b in range(m)))

    def quotient(self, pairs):
        # Congruence closure: merging a and b forces f(a) ~ f(b).
        uf = UnionFind(range(self.n))
        work = list(pairs)
        while work:
            a, b = work.pop()
            if uf[a] != uf[b]:
                uf.union(a, b)
                work.append((self.f[a], self.f[b]))
        label: dict = {}
        proj = tuple(label.setdefault(uf[x], len(label)) for x in range(self.n))
        g = [0] * len(label)
        for x in range(self.n):
            g[proj[x]] = proj[self.f[x]]
        return EndoObj(len(label), tuple(g)), proj

    def image_structure(self, cod, table):
        return cod.restrict(sorted(set(table)))

    @classmethod
    def empty(cls):
        return cls(0, ())

    @classmethod
    def point(cls):
        return cls(1, (0,))

    # -- dynamics ---------------------------------------------------------
    def power(self, t: int) -> tuple[int, ...]:
        """Table of the t-th iterate, by repeated squaring."""
        result, base = tuple(range(self.n)), self.f
        while t:
            if t & 1:
                result = tuple(base[v] for v in result)
            base = tuple(base[v] for v in base)
            t >>= 1
        return result

    def cyclic(self) -> tuple[int, ...]:
        """Elements lying on a cycle: the image of f^m for any m >= n."""
        g, p = self.f, 1
        while p < self.n:
            g = tuple(g[v] for v in g)
            p *= 2
        return tuple(sorted(set(g)))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for x in self.cyclic():
            if x in seen:
                continue
            cyc, y = [], x
            while y not in seen:
                seen.add(y)
                cyc.append(y)
                y = self.f[y]
            out.append(tuple(cyc))
        return out

    def is_bijection(self) -> bool:
        return len(set(self.f)) == self.n

    def is_identity(self) -> bool:
        return all(v == x for x, v in enumerate(self.f))


def weak_components(X: EndoObj) -> tuple[tuple[int, ...], ...]:
    return X.components


class EndoTheory(Theory):
    """(C, F): bijections are torsion, eventually idempotent maps torsion-free."""

    name = "endo"
    obj_type = EndoObj

    def _enumerate(self, n):
        return (EndoObj(n, t) for t in itertools.product(range(n), repeat=n))

    def random_object(self, rng: random.Random, n: int) -> EndoObj:
        return EndoObj(n, tuple(rng.randrange(n) for _ in range(n)))

    def is_torsion(self, X):
        return X.is_bijection()

    def is_torsionfree(self, X):
        return X.power(X.n) == X.power(X.n + 1)

    def is_trivial_obj(self, X):
        return X.is_identity()

    def trivial_witness(self, phi):
        X, g = phi.dom, phi.cod.f
        t = phi.table
        if any(t[x] != t[fx] for x, fx in enumerate(X.f)) or any(g[v] != v for v in t):
            return None
        comps = X.components
        Z = EndoObj(len(comps), tuple(range(len(comps))))
        return Factorization(Z, Mor.trusted(X, Z, X.component_of),
                             Mor.trusted(Z, phi.cod, [t[c[0]] for c in comps]))

    def is_trivial_mor(self, phi):
        t, g = phi.table, phi.cod.f
        return all(t[x] == t[fx] and g[t[x]] == t[x] for x, fx in enumerate(phi.dom.f))

    def torsion_part(self, X):
        members = X.cyclic()
        return X.restrict(members), Mor.trusted(X.restrict(members), X, members)

    def torsionfree_part(self, X):
        F, proj = X.quotient((x, X.f[x]) for x in X.cyclic())
        return F, Mor.trusted(X, F, proj)

    def z_kernel(self, phi):
        X, g, t = phi.dom, phi.cod.f, phi.table
        keep = {x for x in range(X.n) if g[t[x]] == t[x] and t[X.f[x]] == t[x]}
        # Largest f-invariant subset of the kill set.
        while True:
            drop = {x for x in keep if X.f[x] not in keep}
            if not drop:
                break
            keep -= drop
        members = sorted(keep)
        return Mor.trusted(X.restrict(members), X, members)

    def z_cokernel(self, phi):
        X, Y, t = phi.dom, phi.cod, phi.table
        pairs = [(t[c[0]], t[x]) for c in X.components for x in c]
        pairs += [(t[x], Y.f[t[x]]) for x in range(X.n)]
        Q, proj = Y.quotient(pairs)
        return Mor.trusted(Y, Q, proj)
