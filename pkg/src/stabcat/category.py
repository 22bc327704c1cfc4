"""Finite concrete lextensive categories presented by element tables.

Objects have carrier ``range(n)`` plus an instance-specific structure;
morphisms are value tables.  Subobjects are literal subsets renumbered in
increasing order, so two representatives of the same complemented subobject
are equal as Python values.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

from networkx.utils import UnionFind

from .errors import DomainMismatch, LawViolation
from .report import Report


class FiniteObj:
    """Common surface of instance objects (``PreordObj``, ``EndoObj``)."""

    n: int
    kind: str = "?"

    # -- instance hooks -------------------------------------------------
    def respects(self, cod: FiniteObj, table: Sequence[int]) -> bool:
        raise NotImplementedError

    def assign_ok(self, cod: FiniteObj, table: Sequence[int], i: int) -> bool:
        """Check the constraints between element ``i`` and elements ``< i``."""
        raise NotImplementedError

    def edges(self) -> Iterable[tuple[int, int]]:
        raise NotImplementedError

    def restrict(self, members: Sequence[int]) -> FiniteObj:
        raise NotImplementedError

    def sum(self, other: FiniteObj) -> FiniteObj:
        raise NotImplementedError

    def product(self, other: FiniteObj) -> FiniteObj:
        raise NotImplementedError

    def quotient(self, pairs: Iterable[tuple[int, int]]) -> tuple[FiniteObj, tuple[int, ...]]:
        raise NotImplementedError

    def image_structure(self, cod: FiniteObj, table: Sequence[int]) -> FiniteObj:
        """Smallest structure on the sorted image of ``table`` making it a morphism."""
        raise NotImplementedError

    @classmethod
    def empty(cls) -> FiniteObj:
        raise NotImplementedError

    @classmethod
    def point(cls) -> FiniteObj:
        raise NotImplementedError

    # -- derived --------------------------------------------------------
    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Connected components, each sorted, listed by smallest member."""
        uf = UnionFind(range(self.n))
        for a, b in self.edges():
            uf.union(a, b)
        return tuple(sorted(tuple(sorted(s)) for s in uf.to_sets()))

    @cached_property
    def component_of(self) -> tuple[int, ...]:
        index = [0] * self.n
        for k, comp in enumerate(self.components):
            for x in comp:
                index[x] = k
        return tuple(index)


@dataclass(frozen=True)
class Mor:
    dom: FiniteObj
    cod: FiniteObj
    table: tuple[int, ...]

    def __post_init__(self):
        if type(self.dom) is not type(self.cod):
            raise DomainMismatch(f"{type(self.dom).__name__} -> {type(self.cod).__name__}")
        table = tuple(self.table)
        object.__setattr__(self, "table", table)
        if len(table) != self.dom.n:
            raise LawViolation(f"table has {len(table)} entries for a domain of size {self.dom.n}")
        if any(not 0 <= v < self.cod.n for v in table):
            raise LawViolation(f"table {table} leaves the codomain of size {self.cod.n}")
        if not self.dom.respects(self.cod, table):
            raise LawViolation(f"table {table} breaks the {self.dom.kind} morphism law")

    @classmethod
    def trusted(cls, dom, cod, table) -> Mor:
        # Skips validation; only for tables produced by construction.
        m = object.__new__(cls)
        object.__setattr__(m, "dom", dom)
        object.__setattr__(m, "cod", cod)
        object.__setattr__(m, "table", tuple(table))
        return m

    def __call__(self, x: int) -> int:
        return self.table[x]

    def __repr__(self):
        return f"Mor({self.dom!r} -> {self.cod!r}, {list(self.table)})"


def identity(X: FiniteObj) -> Mor:
    return Mor.trusted(X, X, range(X.n))


def compose(g: Mor, f: Mor) -> Mor:
    """``g`` after ``f``."""
    if f.cod != g.dom:
        raise DomainMismatch("compose: codomain of f differs from domain of g")
    gt = g.table
    return Mor.trusted(f.dom, g.cod, [gt[v] for v in f.table])


def inclusion(X: FiniteObj, members: Sequence[int]) -> Mor:
    members = tuple(sorted(members))
    return Mor.trusted(X.restrict(members), X, members)


def restrict_mor(f: Mor, members: Sequence[int]) -> Mor:
    """``f`` precomposed with the inclusion of ``members`` into its domain."""
    members = tuple(sorted(members))
    return Mor.trusted(f.dom.restrict(members), f.cod, [f.table[x] for x in members])


def corestrict(f: Mor, members: Sequence[int]) -> Mor:
    """``f`` viewed as landing in the induced object on ``members``."""
    members = tuple(sorted(members))
    index = {v: i for i, v in enumerate(members)}
    return Mor.trusted(f.dom, f.cod.restrict(members), [index[v] for v in f.table])


def is_mono(f: Mor) -> bool:
    # Monos are the injective tables in both bundled instances (tested by cancellation).
    return len(set(f.table)) == len(f.table)


def is_epi(f: Mor) -> bool:
    return len(set(f.table)) == f.cod.n


def inverse(f: Mor) -> Mor | None:
    if not (is_mono(f) and is_epi(f)):
        return None
    inv = [0] * f.cod.n
    for x, y in enumerate(f.table):
        inv[y] = x
    if not f.cod.respects(f.dom, inv):
        return None
    return Mor.trusted(f.cod, f.dom, inv)


def is_iso(f: Mor) -> bool:
    return inverse(f) is not None


def lift_through_mono(m: Mor, f: Mor) -> Mor | None:
    """The ``e`` with ``m . e = f`` for injective ``m``, if it exists."""
    if m.cod != f.cod:
        raise DomainMismatch("lift_through_mono: different codomains")
    back = {y: x for x, y in enumerate(m.table)}
    try:
        table = [back[y] for y in f.table]
    except KeyError:
        return None
    if not f.dom.respects(m.dom, table):
        return None
    return Mor.trusted(f.dom, m.dom, table)


def descend_through_epi(e: Mor, f: Mor) -> Mor | None:
    """The ``u`` with ``u . e = f`` for surjective ``e``, if it exists."""
    if e.dom != f.dom:
        raise DomainMismatch("descend_through_epi: different domains")
    table: list[int | None] = [None] * e.cod.n
    for x, y in enumerate(e.table):
        if table[y] is None:
            table[y] = f.table[x]
        elif table[y] != f.table[x]:
            return None
    if any(v is None for v in table) or not e.cod.respects(f.cod, table):
        return None
    return Mor.trusted(e.cod, f.cod, table)


# -- hom-set enumeration ----------------------------------------------------

def iter_homs(X: FiniteObj, Y: FiniteObj, rng: random.Random | None = None) -> Iterator[Mor]:
    """Depth-first enumeration with pruning; lexicographic unless ``rng`` shuffles."""
    if type(X) is not type(Y):
        raise DomainMismatch("iter_homs across instances")
    n, values = X.n, list(range(Y.n))
    table = [0] * n

    def extend(i):
        if i == n:
            yield Mor.trusted(X, Y, table)
            return
        order = values[:]
        if rng is not None:
            rng.shuffle(order)
        for v in order:
            table[i] = v
            if X.assign_ok(Y, table, i):
                yield from extend(i + 1)

    yield from extend(0)


@lru_cache(maxsize=None)
def homs(X: FiniteObj, Y: FiniteObj) -> tuple[Mor, ...]:
    return tuple(iter_homs(X, Y))


def random_hom(X: FiniteObj, Y: FiniteObj, rng: random.Random) -> Mor | None:
    return next(iter_homs(X, Y, rng), None)


def monos_into(Y: FiniteObj, sources: Iterable[FiniteObj]) -> Iterator[Mor]:
    for B in sources:
        if B.n <= Y.n:
            yield from (m for m in homs(B, Y) if is_mono(m))


# -- sums -------------------------------------------------------------------

@dataclass(frozen=True)
class CoproductData:
    left: FiniteObj
    right: FiniteObj
    sum: FiniteObj
    inj_left: Mor
    inj_right: Mor


def coproduct(X: FiniteObj, Y: FiniteObj) -> CoproductData:
    S = X.sum(Y)
    return CoproductData(
        X, Y, S,
        Mor.trusted(X, S, range(X.n)),
        Mor.trusted(Y, S, range(X.n, X.n + Y.n)),
    )


def copair(f: Mor, g: Mor, cp: CoproductData) -> Mor:
    if f.dom != cp.left or g.dom != cp.right or f.cod != g.cod:
        raise DomainMismatch("copair: legs do not match the coproduct")
    table = [0] * cp.sum.n
    for x, v in zip(cp.inj_left.table, f.table):
        table[x] = v
    for x, v in zip(cp.inj_right.table, g.table):
        table[x] = v
    return Mor.trusted(cp.sum, f.cod, table)


def sum_mor(f: Mor, g: Mor) -> Mor:
    """``f + g`` between the canonical sums."""
    src, dst = coproduct(f.dom, g.dom), coproduct(f.cod, g.cod)
    return copair(compose(dst.inj_left, f), compose(dst.inj_right, g), src)


@dataclass(frozen=True)
class ComplementedSub:
    ambient: FiniteObj
    members: tuple[int, ...]
    complement: tuple[int, ...]

    def __post_init__(self):
        members, complement = tuple(sorted(self.members)), tuple(sorted(self.complement))
        object.__setattr__(self, "members", members)
        object.__setattr__(self, "complement", complement)
        if set(members) & set(complement) or len(members) + len(complement) != self.ambient.n \
                or set(members) | set(complement) != set(range(self.ambient.n)):
            raise LawViolation("members and complement must partition the carrier")
        inside = set(members)
        if any((a in inside) != (b in inside) for a, b in self.ambient.edges()):
            raise LawViolation(f"{members} is not a union of components")

    @classmethod
    def of(cls, X: FiniteObj, members: Iterable[int]) -> ComplementedSub:
        members = set(members)
        return cls(X, tuple(members), tuple(x for x in range(X.n) if x not in members))

    @property
    def obj(self) -> FiniteObj:
        return self.ambient.restrict(self.members)

    @property
    def inclusion(self) -> Mor:
        return inclusion(self.ambient, self.members)

    @property
    def complement_sub(self) -> ComplementedSub:
        return ComplementedSub(self.ambient, self.complement, self.members)


def complemented_subobjects(X: FiniteObj) -> list[ComplementedSub]:
    """All unions of connected components, ordered by the bitmask of chosen components."""
    comps = X.components
    out = []
    for mask in range(1 << len(comps)):
        members = [x for k, c in enumerate(comps) if mask >> k & 1 for x in c]
        out.append(ComplementedSub.of(X, members))
    return out


def pullback_along_complemented(f: Mor, beta: ComplementedSub) -> tuple[ComplementedSub, Mor]:
    if beta.ambient != f.cod:
        raise DomainMismatch("pullback_along_complemented: beta lives elsewhere")
    inside = set(beta.members)
    sub = ComplementedSub.of(f.dom, (x for x in range(f.dom.n) if f.table[x] in inside))
    index = {v: i for i, v in enumerate(beta.members)}
    restricted = Mor.trusted(sub.obj, beta.obj, [index[f.table[x]] for x in sub.members])
    return sub, restricted


# -- finite limits and colimits ---------------------------------------------

def pullback(f: Mor, g: Mor) -> tuple[FiniteObj, Mor, Mor]:
    """Pullback of the cospan ``f: A -> D <- B: g`` as pairs in lexicographic order."""
    if f.cod != g.cod:
        raise DomainMismatch("pullback: cospan legs have different codomains")
    A, B = f.dom, g.dom
    pairs = [(a, b) for a in range(A.n) for b in range(B.n) if f.table[a] == g.table[b]]
    P = A.product(B).restrict([a * B.n + b for a, b in pairs])
    return P, Mor.trusted(P, A, [a for a, _ in pairs]), Mor.trusted(P, B, [b for _, b in pairs])


def product(X: FiniteObj, Y: FiniteObj) -> tuple[FiniteObj, Mor, Mor]:
    P = X.product(Y)
    return (P, Mor.trusted(P, X, [i // Y.n for i in range(P.n)]),
            Mor.trusted(P, Y, [i % Y.n for i in range(P.n)]))


def equalizer(f: Mor, g: Mor) -> Mor:
    if f.dom != g.dom or f.cod != g.cod:
        raise DomainMismatch("equalizer of non-parallel pair")
    return inclusion(f.dom, [x for x in range(f.dom.n) if f.table[x] == g.table[x]])


def coequalizer(f: Mor, g: Mor) -> Mor:
    if f.dom != g.dom or f.cod != g.cod:
        raise DomainMismatch("coequalizer of non-parallel pair")
    Q, proj = f.cod.quotient(zip(f.table, g.table))
    return Mor.trusted(f.cod, Q, proj)


def is_pullback_square(top: Mor, left: Mor, right: Mor, bottom: Mor) -> bool:
    """Is ``P -top-> B``, ``P -left-> A`` over ``A -bottom-> D <-right- B`` a pullback?"""
    if compose(bottom, left) != compose(right, top):
        return False
    P0, p1, p2 = pullback(bottom, right)
    index = {(a, b): i for i, (a, b) in enumerate(zip(p1.table, p2.table))}
    comparison = Mor.trusted(left.dom, P0, [index[(left.table[x], top.table[x])] for x in range(left.dom.n)])
    return is_iso(comparison)


def is_block_sum(Z: FiniteObj, left: Sequence[int]) -> bool:
    """Does the split ``left`` / rest of ``Z`` exhibit ``Z`` as a coproduct?"""
    inside = set(left)
    return all((a in inside) == (b in inside) for a, b in Z.edges())


def verify_extensivity(X: FiniteObj, Y: FiniteObj, probes: Iterable[Mor],
                       cp: CoproductData | None = None) -> Report:
    """Disjointness of the injections and universality along every probe into the sum."""
    cp = cp or coproduct(X, Y)
    report = Report("extensivity")
    report.case("inj_left mono", is_mono(cp.inj_left), cp.inj_left)
    report.case("inj_right mono", is_mono(cp.inj_right), cp.inj_right)
    P, _, _ = pullback(cp.inj_left, cp.inj_right)
    report.case("disjoint", P.n == 0, P)
    left = set(cp.inj_left.table)
    report.case("covering", left | set(cp.inj_right.table) == set(range(cp.sum.n)), cp)
    for p in probes:
        if p.cod != cp.sum:
            raise DomainMismatch("probe does not land in the sum")
        P1, _, _ = pullback(cp.inj_left, p)
        P2, _, _ = pullback(cp.inj_right, p)
        part = [x for x in range(p.dom.n) if p.table[x] in left]
        report.case("universal", is_block_sum(p.dom, part) and P1.n + P2.n == p.dom.n, p)
    return report
