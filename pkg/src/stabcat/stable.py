"""Partial morphisms over complemented subobjects and the stable category.

A stable morphism is stored as its reduced representative: the support keeps
exactly the components of the source on which the map is not trivial.  Two
partial morphisms are congruent iff they reduce to the same thing, which is
what makes stable morphisms hashable.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as cartesian
from typing import Iterable, Sequence

from .category import ComplementedSub, FiniteObj, Mor, complemented_subobjects, coproduct, homs, identity
from .errors import CokernelUnverified, DomainMismatch, KernelUnverified
from .report import Report
from .theory import Theory, probe_bound

Padded = tuple  # one entry per source element, None outside the support


@dataclass(frozen=True)
class PartialMor:
    """``(alpha, f)``: a complemented subobject of ``src`` and a map from it to ``dst``."""

    src: FiniteObj
    dst: FiniteObj
    support: ComplementedSub
    map: Mor

    def __post_init__(self):
        if self.support.ambient != self.src:
            raise DomainMismatch("support is not a subobject of the source")
        if self.map.cod != self.dst or self.map.dom != self.support.obj:
            raise DomainMismatch("map does not run from the support to the target")

    @classmethod
    def from_padded(cls, src: FiniteObj, dst: FiniteObj, padded: Sequence[int | None]) -> PartialMor:
        members = [x for x, v in enumerate(padded) if v is not None]
        sub = ComplementedSub.of(src, members)
        return cls(src, dst, sub, Mor(sub.obj, dst, [padded[x] for x in members]))

    @classmethod
    def total(cls, f: Mor) -> PartialMor:
        sub = ComplementedSub.of(f.dom, range(f.dom.n))
        return cls(f.dom, f.cod, sub, Mor.trusted(sub.obj, f.cod, f.table))

    @property
    def padded(self) -> Padded:
        out: list = [None] * self.src.n
        for x, v in zip(self.support.members, self.map.table):
            out[x] = v
        return tuple(out)

    def __repr__(self):
        return f"PartialMor({self.src!r} -> {self.dst!r}, support={list(self.support.members)}, map={list(self.map.table)})"


def par_compose(second: PartialMor, first: PartialMor) -> PartialMor:
    """Support is the preimage of ``second.support``; map is the composite."""
    if first.dst != second.src:
        raise DomainMismatch("partial morphisms are not composable")
    p1, p2 = first.padded, second.padded
    return PartialMor.from_padded(first.src, second.dst, [None if v is None else p2[v] for v in p1])


def par_identity(X: FiniteObj) -> PartialMor:
    return PartialMor.total(identity(X))


def zero_morphisms(X: FiniteObj, Y: FiniteObj) -> tuple[PartialMor, PartialMor, PartialMor]:
    """``X -> 0``, ``0 -> Y`` and their composite, all with empty support."""
    zero = X.empty()
    omega = PartialMor.from_padded(X, zero, [None] * X.n)
    alpha = PartialMor.from_padded(zero, Y, [])
    return omega, alpha, par_compose(alpha, omega)


@dataclass(frozen=True)
class CongruenceDiagram:
    """Certificate that two partial morphisms are congruent.

    ``common`` is the part where both are defined and agree; ``comp1`` and
    ``comp2`` are the remainders of the two supports, where each map must be
    trivial.
    """

    first: PartialMor
    second: PartialMor
    common: ComplementedSub
    comp1: tuple[int, ...]
    comp2: tuple[int, ...]

    def check(self, theory: Theory) -> Report:
        report = Report("congruence diagram")
        C = set(self.common.members)
        a1, a2 = set(self.first.support.members), set(self.second.support.members)
        report.case("A1 = C + C1c", a1 == C | set(self.comp1) and not C & set(self.comp1), self)
        report.case("A2 = C + C2c", a2 == C | set(self.comp2) and not C & set(self.comp2), self)
        p1, p2 = self.first.padded, self.second.padded
        report.case("f1 = f2 on C", all(p1[x] == p2[x] for x in C), self)
        report.case("f1 trivial on C1c", _trivial_on(theory, self.first.src, self.first.dst, p1, self.comp1), self)
        report.case("f2 trivial on C2c", _trivial_on(theory, self.second.src, self.second.dst, p2, self.comp2), self)
        return report


def _trivial_on(theory: Theory, X: FiniteObj, Y: FiniteObj, padded: Padded, members: Sequence[int]) -> bool:
    members = sorted(members)
    return theory.is_trivial_mor(Mor.trusted(X.restrict(members), Y, [padded[x] for x in members]))


@lru_cache(maxsize=None)
def _component_objs(X: FiniteObj) -> tuple[FiniteObj, ...]:
    return tuple(X.restrict(c) for c in X.components)


@dataclass(frozen=True)
class StableMor:
    """Reduced representative of a congruence class of partial morphisms."""

    src: FiniteObj
    dst: FiniteObj
    padded: Padded

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(x for x, v in enumerate(self.padded) if v is not None)

    @property
    def partial(self) -> PartialMor:
        return PartialMor.from_padded(self.src, self.dst, self.padded)

    @property
    def map(self) -> Mor:
        return self.partial.map

    def is_zero(self) -> bool:
        return all(v is None for v in self.padded)

    def __repr__(self):
        table = " ".join("-" if v is None else str(v) for v in self.padded)
        return f"[[{self.src!r} -> {self.dst!r}: {table}]]"


@dataclass(frozen=True)
class StableCoproduct:
    left: FiniteObj
    right: FiniteObj
    sum: FiniteObj
    inj_left: StableMor
    inj_right: StableMor


class StableCategory:
    """Stab(C) for one pretorsion theory, computed on reduced representatives."""

    def __init__(self, theory: Theory):
        self.theory = theory
        self._homs: dict = {}

    # -- normal forms -----------------------------------------------------
    def _reduce(self, src: FiniteObj, dst: FiniteObj, padded: Sequence[int | None]) -> StableMor:
        out = list(padded)
        triv = self.theory.is_trivial_mor
        for comp, obj in zip(src.components, _component_objs(src)):
            if out[comp[0]] is None:
                continue
            if triv(Mor.trusted(obj, dst, [out[x] for x in comp])):
                for x in comp:
                    out[x] = None
        return StableMor(src, dst, tuple(out))

    def reduce(self, p: PartialMor) -> StableMor:
        return self._reduce(p.src, p.dst, p.padded)

    def sigma(self, f: Mor) -> StableMor:
        return self._reduce(f.dom, f.cod, f.table)

    def identity(self, X: FiniteObj) -> StableMor:
        return self.sigma(identity(X))

    def zero(self, X: FiniteObj, Y: FiniteObj) -> StableMor:
        return StableMor(X, Y, (None,) * X.n)

    def compose(self, q: StableMor, p: StableMor) -> StableMor:
        if p.dst != q.src:
            raise DomainMismatch("stable morphisms are not composable")
        t = q.padded
        return self._reduce(p.src, q.dst, [None if v is None else t[v] for v in p.padded])

    # -- congruence -------------------------------------------------------
    def eq(self, p1: PartialMor, p2: PartialMor) -> tuple[bool, CongruenceDiagram | None]:
        """Decide congruence with the largest candidate common part."""
        if p1.src != p2.src or p1.dst != p2.dst:
            raise DomainMismatch("congruence needs parallel partial morphisms")
        X = p1.src
        t1, t2 = p1.padded, p2.padded
        common = [x for c in X.components
                  if all(t1[x] is not None and t1[x] == t2[x] for x in c) for x in c]
        inside = set(common)
        rest1 = tuple(x for x in p1.support.members if x not in inside)
        rest2 = tuple(x for x in p2.support.members if x not in inside)
        if not (_trivial_on(self.theory, X, p1.dst, t1, rest1) and _trivial_on(self.theory, X, p2.dst, t2, rest2)):
            return False, None
        return True, CongruenceDiagram(p1, p2, ComplementedSub.of(X, sorted(common)), rest1, rest2)

    def eq_exhaustive(self, p1: PartialMor, p2: PartialMor) -> bool:
        """Search every complemented C inside both supports for a valid diagram."""
        X = p1.src
        t1, t2 = p1.padded, p2.padded
        shared = [c for c in X.components if all(t1[x] is not None and t2[x] is not None for x in c)]
        for mask in range(1 << len(shared)):
            C = sorted(x for i, c in enumerate(shared) if mask >> i & 1 for x in c)
            rest1 = [x for x in p1.support.members if x not in C]
            rest2 = [x for x in p2.support.members if x not in C]
            diagram = CongruenceDiagram(p1, p2, ComplementedSub.of(X, C), tuple(rest1), tuple(rest2))
            if diagram.check(self.theory).ok:
                return True
        return False

    # -- hom-sets ---------------------------------------------------------
    def homs(self, X: FiniteObj, Y: FiniteObj) -> tuple[StableMor, ...]:
        """Every stable morphism ``X -> Y``, one reduced representative each."""
        key = (X, Y)
        if key not in self._homs:
            triv = self.theory.is_trivial_mor
            options = []
            for obj in _component_objs(X):
                options.append([None] + [f.table for f in homs(obj, Y) if not triv(f)])
            out = []
            for choice in cartesian(*options):
                padded: list = [None] * X.n
                for comp, tab in zip(X.components, choice):
                    if tab is not None:
                        for x, v in zip(comp, tab):
                            padded[x] = v
                out.append(StableMor(X, Y, tuple(padded)))
            self._homs[key] = tuple(out)
        return self._homs[key]

    # -- coproducts -------------------------------------------------------
    def coproduct(self, X: FiniteObj, Y: FiniteObj) -> StableCoproduct:
        cp = coproduct(X, Y)
        return StableCoproduct(X, Y, cp.sum, self.sigma(cp.inj_left), self.sigma(cp.inj_right))

    def copair(self, s: StableMor, t: StableMor, cp: StableCoproduct) -> StableMor:
        if s.dst != t.dst or s.src != cp.left or t.src != cp.right:
            raise DomainMismatch("copair needs morphisms out of the two summands into one target")
        return StableMor(cp.sum, s.dst, s.padded + t.padded)

    # -- kernels and cokernels --------------------------------------------
    def sigma_kernel(self, f: Mor) -> StableMor:
        return self.sigma(self.theory.z_kernel(f))

    def sigma_cokernel(self, f: Mor) -> StableMor:
        return self.sigma(self.theory.z_cokernel(f))

    def kernel_candidate(self, s: StableMor) -> StableMor:
        """``Z-kernel(f|A) + A^c`` included into the source."""
        X = s.src
        p = s.partial
        A, rest = p.support.members, p.support.complement
        k = self.theory.z_kernel(p.map)
        cp = coproduct(k.dom, X.restrict(rest))
        table = [A[v] for v in k.table] + list(rest)
        return self.sigma(Mor(cp.sum, X, table))

    def kernel(self, s: StableMor, probes: Sequence[FiniteObj] | None = None) -> StableMor:
        k = self.kernel_candidate(s)
        report = self.verify_kernel(k, s, probes)
        if not report.ok:
            raise KernelUnverified(report.summary())
        return k

    def cokernel(self, s: StableMor, probes: Sequence[FiniteObj] | None = None) -> StableMor:
        q = self.sigma_cokernel(s.partial.map) if s.support else self.identity(s.dst)
        report = self.verify_cokernel(s, q, probes)
        if not report.ok:
            raise CokernelUnverified(report.summary())
        return q

    # -- oracles ----------------------------------------------------------
    def _probes(self, probes):
        return self.theory.objects(probe_bound()) if probes is None else probes

    def verify_kernel(self, k: StableMor, s: StableMor, probes=None) -> Report:
        report = Report("stable kernel")
        report.case("s . k = 0", self.compose(s, k).is_zero(), k)
        for W in self._probes(probes):
            hits: dict = {}
            for mu in self.homs(W, k.src):
                lam = self.compose(k, mu)
                hits[lam] = hits.get(lam, 0) + 1
            for lam in self.homs(W, s.src):
                if self.compose(s, lam).is_zero():
                    if not report.case("unique factorization", hits.get(lam, 0) == 1, lam):
                        return report
        return report

    def verify_cokernel(self, s: StableMor, q: StableMor, probes=None) -> Report:
        report = Report("stable cokernel")
        report.case("q . s = 0", self.compose(q, s).is_zero(), q)
        for W in self._probes(probes):
            hits: dict = {}
            for mu in self.homs(q.dst, W):
                lam = self.compose(mu, q)
                hits[lam] = hits.get(lam, 0) + 1
            for lam in self.homs(s.dst, W):
                if self.compose(lam, s).is_zero():
                    if not report.case("unique factorization", hits.get(lam, 0) == 1, lam):
                        return report
        return report

    def verify_coproduct(self, cp: StableCoproduct, probes=None) -> Report:
        report = Report("stable coproduct")
        for W in self._probes(probes):
            hits: dict = {}
            for h in self.homs(cp.sum, W):
                key = (self.compose(h, cp.inj_left), self.compose(h, cp.inj_right))
                hits[key] = hits.get(key, 0) + 1
            for u in self.homs(cp.left, W):
                for v in self.homs(cp.right, W):
                    if not report.case("unique copair", hits.get((u, v), 0) == 1, (u, v)):
                        return report
                    h = self.copair(u, v, cp)
                    report.case("copair formula", (self.compose(h, cp.inj_left), self.compose(h, cp.inj_right)) == (u, v), (u, v))
        return report

    def exactness_image(self, X: FiniteObj, probes=None) -> Report:
        """Sigma of the canonical sequence of ``X`` is short exact in Stab."""
        _, eps = self.theory.torsion_part(X)
        _, eta = self.theory.torsionfree_part(X)
        k, q = self.sigma(eps), self.sigma(eta)
        report = Report(f"exact image {X!r}")
        report.absorb(self.verify_kernel(k, q, probes))
        report.absorb(self.verify_cokernel(k, q, probes))
        return report


def all_partials(X: FiniteObj, Y: FiniteObj) -> Iterable[PartialMor]:
    """Every partial morphism ``X -> Y``, reduced or not."""
    for sub in complemented_subobjects(X):
        for f in homs(sub.obj, Y):
            yield PartialMor(X, Y, sub, f)
