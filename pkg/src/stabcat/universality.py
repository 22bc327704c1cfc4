"""Torsion-theory functors into tabulated pointed categories, and the factorization through Stab.

Targets are explicit finite tables.  A Stab-fragment is tabulated by
enumerating every stable morphism between a fixed list of objects.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Callable, Hashable, Iterator, Sequence

from .category import (
    FiniteObj, Mor, complemented_subobjects, compose, coproduct, homs, identity,
)
from .errors import NotCoproductPreserving, NotTTFunctor
from .pretorsion import functor_on_mor
from .report import Report
from .stable import PartialMor, StableCategory, StableMor, all_partials
from .theory import Theory


@dataclass
class FiniteTTCategory:
    """A finite pointed category given by tables, with a torsion theory on it.

    Morphisms are integers ``0..len(dom)-1``; ``payload`` optionally records
    what each object and morphism stands for.
    """

    objects: list
    dom: list[int]
    cod: list[int]
    comp: dict[tuple[int, int], int]
    ident: list[int]
    zero_object: int
    torsion: frozenset[int]
    torsionfree: frozenset[int]
    coproducts: dict[tuple[int, int], tuple[int, int, int]] = field(default_factory=dict)
    sequences: dict[int, tuple[int, int]] = field(default_factory=dict)
    payload: list = field(default_factory=list)

    def __post_init__(self):
        self.homs: dict[tuple[int, int], list[int]] = {}
        for m, (a, b) in enumerate(zip(self.dom, self.cod)):
            self.homs.setdefault((a, b), []).append(m)
        self._index = {p: m for m, p in enumerate(self.payload)}

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    def hom(self, a: int, b: int) -> list[int]:
        return self.homs.get((a, b), [])

    def then(self, f: int, g: int) -> int:
        """``g . f``."""
        return self.comp[(g, f)]

    def index_of(self, payload) -> int:
        return self._index[payload]

    def zero(self, a: int, b: int) -> int:
        z = self.zero_object
        return self.then(self.hom(a, z)[0], self.hom(z, b)[0])

    def is_zero(self, m: int) -> bool:
        return m == self.zero(self.dom[m], self.cod[m])

    # -- universal properties by table search -------------------------------
    def is_kernel(self, k: int, q: int) -> bool:
        if self.cod[k] != self.dom[q] or not self.is_zero(self.then(k, q)):
            return False
        K, A = self.dom[k], self.cod[k]
        for w in range(self.n_objects):
            hits: dict[int, int] = {}
            for mu in self.hom(w, K):
                lam = self.then(mu, k)
                hits[lam] = hits.get(lam, 0) + 1
            for lam in self.hom(w, A):
                if self.is_zero(self.then(lam, q)) and hits.get(lam, 0) != 1:
                    return False
        return True

    def is_cokernel(self, q: int, k: int) -> bool:
        if self.cod[k] != self.dom[q] or not self.is_zero(self.then(k, q)):
            return False
        B, Q = self.cod[k], self.cod[q]
        for w in range(self.n_objects):
            hits: dict[int, int] = {}
            for mu in self.hom(Q, w):
                lam = self.then(q, mu)
                hits[lam] = hits.get(lam, 0) + 1
            for lam in self.hom(B, w):
                if self.is_zero(self.then(k, lam)) and hits.get(lam, 0) != 1:
                    return False
        return True

    def is_short_exact(self, k: int, q: int) -> bool:
        return self.is_kernel(k, q) and self.is_cokernel(q, k)

    def is_coproduct(self, inl: int, inr: int) -> bool:
        s = self.cod[inl]
        if self.cod[inr] != s:
            return False
        a, b = self.dom[inl], self.dom[inr]
        for w in range(self.n_objects):
            hits: dict = {}
            for h in self.hom(s, w):
                key = (self.then(inl, h), self.then(inr, h))
                hits[key] = hits.get(key, 0) + 1
            if len(hits) != len(self.hom(a, w)) * len(self.hom(b, w)) or any(c != 1 for c in hits.values()):
                return False
        return True

    def copair(self, u: int, v: int, inl: int, inr: int) -> int | None:
        s = self.cod[inl]
        for h in self.hom(s, self.cod[u]):
            if self.then(inl, h) == u and self.then(inr, h) == v:
                return h
        return None

    # -- self-check ---------------------------------------------------------
    def check(self, associativity: bool = True) -> Report:
        report = Report("tt-category tables")
        for m in range(len(self.dom)):
            a, b = self.dom[m], self.cod[m]
            report.case("left identity", self.then(m, self.ident[b]) == m, m)
            report.case("right identity", self.then(self.ident[a], m) == m, m)
        if associativity:
            for f in range(len(self.dom)):
                for g in self._out(self.cod[f]):
                    gf = self.then(f, g)
                    for h in self._out(self.cod[g]):
                        ok = self.then(gf, h) == self.then(f, self.then(g, h))
                        if not report.case("associativity", ok, (f, g, h)):
                            break
        z = self.zero_object
        for a in range(self.n_objects):
            report.case("zero object initial", len(self.hom(z, a)) == 1, a)
            report.case("zero object terminal", len(self.hom(a, z)) == 1, a)
        for t in self.torsion:
            for f in self.torsionfree:
                report.case("hom(T', F') = 0", all(self.is_zero(m) for m in self.hom(t, f)), (t, f))
        for (a, b), (s, inl, inr) in self.coproducts.items():
            report.case("tabulated coproduct", self.dom[inl] == a and self.dom[inr] == b
                        and self.is_coproduct(inl, inr), (a, b))
        for a, (k, q) in self.sequences.items():
            report.case("sequence exact", self.cod[k] == a and self.is_short_exact(k, q), a)
            report.case("sequence ends in T' and F'", self.dom[k] in self.torsion and self.cod[q] in self.torsionfree, a)
        return report

    def _out(self, a: int) -> list[int]:
        if not hasattr(self, "_outs"):
            self._outs: dict[int, list[int]] = {}
            for m, d in enumerate(self.dom):
                self._outs.setdefault(d, []).append(m)
        return self._outs.get(a, [])

    def bare(self) -> FiniteTTCategory:
        """The same tables with objects renamed to indices and no payload."""
        return FiniteTTCategory(list(range(self.n_objects)), list(self.dom), list(self.cod), dict(self.comp),
                                list(self.ident), self.zero_object, self.torsion, self.torsionfree,
                                dict(self.coproducts), dict(self.sequences), [])

    @classmethod
    def zero_category(cls) -> FiniteTTCategory:
        """One object, one morphism."""
        return cls(["0"], [0], [0], {(0, 0): 0}, [0], 0, frozenset({0}), frozenset({0}),
                   {(0, 0): (0, 0, 0)}, {0: (0, 0)}, ["id0"])


@dataclass
class FunctorTable:
    """Object and morphism assignments into a :class:`FiniteTTCategory`."""

    object_map: dict[Hashable, int]
    morphism_map: dict[Hashable, int]

    def obj(self, x) -> int:
        return self.object_map[x]

    def mor(self, f) -> int:
        return self.morphism_map[f]


# -- fragments -----------------------------------------------------------------

def materialize_fragment(theory: Theory, seeds: Sequence[FiniteObj], max_n: int = 3) -> tuple[FiniteObj, ...]:
    """Close ``seeds`` under complemented subobjects, T, F and binary sums, up to carrier ``max_n``."""
    seen: set = set()
    work = list(seeds) + [theory.empty()]
    while work:
        X = work.pop()
        if X in seen or X.n > max_n:
            continue
        seen.add(X)
        work.extend(sub.obj for sub in complemented_subobjects(X))
        work.append(theory.torsion_part(X)[0])
        work.append(theory.torsionfree_part(X)[0])
        for Y in list(seen):
            if X.n + Y.n <= max_n:
                work.append(coproduct(X, Y).sum)
                work.append(coproduct(Y, X).sum)
    return tuple(sorted(seen, key=lambda o: (o.n, repr(o))))


def tabulate_stab(S: StableCategory, objects: Sequence[FiniteObj]) -> FiniteTTCategory:
    """Every stable morphism between ``objects``, with composition, sums and canonical sequences."""
    theory = S.theory
    index = {X: i for i, X in enumerate(objects)}
    payload: list[StableMor] = []
    dom, cod = [], []
    for X in objects:
        for Y in objects:
            for s in S.homs(X, Y):
                payload.append(s)
                dom.append(index[X])
                cod.append(index[Y])
    mid = {s: m for m, s in enumerate(payload)}
    by_dom: dict[int, list[int]] = {}
    for m, d in enumerate(dom):
        by_dom.setdefault(d, []).append(m)
    comp = {}
    for f, s in enumerate(payload):
        for g in by_dom.get(cod[f], []):
            comp[(g, f)] = mid[S.compose(payload[g], s)]
    ident = [mid[S.identity(X)] for X in objects]
    coproducts = {}
    for X in objects:
        for Y in objects:
            cp = S.coproduct(X, Y)
            if cp.sum in index:
                coproducts[(index[X], index[Y])] = (index[cp.sum], mid[cp.inj_left], mid[cp.inj_right])
    sequences = {}
    for X in objects:
        T, eps = theory.torsion_part(X)
        F, eta = theory.torsionfree_part(X)
        if T in index and F in index:
            sequences[index[X]] = (mid[S.sigma(eps)], mid[S.sigma(eta)])
    torsion = frozenset(i for i, X in enumerate(objects) if theory.is_torsion(X))
    free = frozenset(i for i, X in enumerate(objects) if theory.is_torsionfree(X))
    # Any trivial object is a zero object of Stab.
    zero = next(i for i, X in enumerate(objects) if theory.is_trivial_obj(X))
    return FiniteTTCategory(list(objects), dom, cod, comp, ident, zero,
                            torsion, free, coproducts, sequences, payload)


def source_morphisms(objects: Sequence[FiniteObj]) -> Iterator[Mor]:
    for X in objects:
        for Y in objects:
            yield from homs(X, Y)


# -- tt-functors ---------------------------------------------------------------

G_KINDS = ("sigma", "free", "torsion", "zero")


def make_functor(kind: str, S: StableCategory, objects: Sequence[FiniteObj],
                 target: FiniteTTCategory) -> FunctorTable:
    """Tabulate one of the bundled functors ``C -> target`` on the fragment."""
    theory = S.theory
    if kind == "zero":
        return FunctorTable({X: 0 for X in objects}, {f: 0 for f in source_morphisms(objects)})
    index = {X: i for i, X in enumerate(target.objects)}
    on_obj: Callable[[FiniteObj], FiniteObj]
    on_mor: Callable[[Mor], Mor]
    if kind == "sigma":
        on_obj, on_mor = (lambda X: X), (lambda f: f)
    elif kind == "free":
        on_obj, on_mor = (lambda X: theory.torsionfree_part(X)[0]), (lambda f: functor_on_mor("F", f, theory))
    elif kind == "torsion":
        on_obj, on_mor = (lambda X: theory.torsion_part(X)[0]), (lambda f: functor_on_mor("T", f, theory))
    else:
        raise ValueError(f"unknown functor kind {kind!r}; expected one of {G_KINDS}")
    objs = {X: index[on_obj(X)] for X in objects}
    mors = {f: target.index_of(S.sigma(on_mor(f))) for f in source_morphisms(objects)}
    return FunctorTable(objs, mors)


def _check_functor_laws(G: FunctorTable, objects, target: FiniteTTCategory, report: Report):
    for X in objects:
        report.case("G(id) = id", G.mor(identity(X)) == target.ident[G.obj(X)], X)
    for X in objects:
        for Y in objects:
            for f in homs(X, Y):
                report.case("G(f) typed", (target.dom[G.mor(f)], target.cod[G.mor(f)]) == (G.obj(X), G.obj(Y)), f)
                for Z in objects:
                    for g in homs(Y, Z):
                        report.case("G(g f) = G(g) G(f)", G.mor(compose(g, f)) == target.then(G.mor(f), G.mor(g)), (f, g))


def is_torsion_theory_functor(G: FunctorTable, theory: Theory, objects: Sequence[FiniteObj],
                              target: FiniteTTCategory, laws: bool = True) -> Report:
    """Condition (1) on objects and condition (2) on canonical sequences."""
    report = Report("tt-functor")
    if laws:
        _check_functor_laws(G, objects, target, report)
    for X in objects:
        if theory.is_torsion(X):
            report.case("(1) torsion to T'", G.obj(X) in target.torsion, X)
        if theory.is_torsionfree(X):
            report.case("(1) torsion-free to F'", G.obj(X) in target.torsionfree, X)
        _, eps = theory.torsion_part(X)
        _, eta = theory.torsionfree_part(X)
        if eps in G.morphism_map and eta in G.morphism_map:
            report.case("(2) image of canonical sequence short exact",
                        target.is_short_exact(G.mor(eps), G.mor(eta)), X)
    return report


def is_coproduct_preserving(G: FunctorTable, objects: Sequence[FiniteObj], target: FiniteTTCategory) -> Report:
    report = Report("coproduct preservation")
    present = set(objects)
    for X in objects:
        for Y in objects:
            cp = coproduct(X, Y)
            if cp.sum in present:
                report.case("G(X+Y) is a sum", target.is_coproduct(G.mor(cp.inj_left), G.mor(cp.inj_right)), (X, Y))
    return report


# -- the induced functor H -------------------------------------------------------

def _h_value(p: PartialMor, G: FunctorTable, target: FiniteTTCategory) -> int:
    """``G.mor(f) + 0`` along ``X = A + A^c``."""
    sub = p.support
    rest = sub.complement_sub
    inl, inr = G.mor(sub.inclusion), G.mor(rest.inclusion)
    u = G.mor(p.map)
    v = target.zero(G.obj(rest.obj), G.obj(p.dst))
    h = target.copair(u, v, inl, inr)
    if h is None:
        raise NotCoproductPreserving(f"no copair for {p!r} in the target")
    return h


def induced_H(G: FunctorTable, S: StableCategory, objects: Sequence[FiniteObj],
              target: FiniteTTCategory, stab: FiniteTTCategory, precheck: bool = True) -> FunctorTable:
    """``H`` on the tabulated fragment ``stab`` with ``H . Sigma = G``."""
    if precheck:
        tt = is_torsion_theory_functor(G, S.theory, objects, target)
        if not tt.ok:
            raise NotTTFunctor(tt.summary())
        cp = is_coproduct_preserving(G, objects, target)
        if not cp.ok:
            raise NotCoproductPreserving(cp.summary())
    mors = {m: _h_value(s.partial, G, target) for m, s in enumerate(stab.payload)}
    return FunctorTable({i: G.obj(X) for i, X in enumerate(stab.objects)}, mors)


def check_induced(H: FunctorTable, G: FunctorTable, S: StableCategory, objects: Sequence[FiniteObj],
                  target: FiniteTTCategory, stab: FiniteTTCategory) -> Report:
    """Well-definedness, ``H Sigma = G``, functoriality, sums and the tt-functor conditions for ``H``."""
    report = Report("induced H")
    for X in objects:
        for Y in objects:
            for p in all_partials(X, Y):
                m = stab.index_of(S.reduce(p))
                report.case("well-defined on congruence classes", _h_value(p, G, target) == H.mor(m), p)
    for f in source_morphisms(objects):
        report.case("H Sigma = G", H.mor(stab.index_of(S.sigma(f))) == G.mor(f), f)
    for m in range(len(stab.dom)):
        report.case("H typed", (target.dom[H.mor(m)], target.cod[H.mor(m)]) == (H.obj(stab.dom[m]), H.obj(stab.cod[m])), m)
    for (g, f), gf in stab.comp.items():
        report.case("H functorial", H.mor(gf) == target.then(H.mor(f), H.mor(g)), (stab.payload[f], stab.payload[g]))
    for a in range(stab.n_objects):
        report.case("H(id) = id", H.mor(stab.ident[a]) == target.ident[H.obj(a)], a)
        report.case("H(zero) = zero", H.mor(stab.zero(a, a)) == target.zero(H.obj(a), H.obj(a)), a)
    for (a, b), (_, inl, inr) in stab.coproducts.items():
        report.case("H preserves sums", target.is_coproduct(H.mor(inl), H.mor(inr)), (a, b))
    for a in range(stab.n_objects):
        if a in stab.torsion:
            report.case("(1) H: T to T'", H.obj(a) in target.torsion, a)
        if a in stab.torsionfree:
            report.case("(1) H: F to F'", H.obj(a) in target.torsionfree, a)
    for a, (k, q) in stab.sequences.items():
        report.case("(2) H keeps sequences exact", target.is_short_exact(H.mor(k), H.mor(q)), a)
    return report


# -- uniqueness ------------------------------------------------------------------

def _is_candidate(Hc: dict[int, int], G: FunctorTable, S: StableCategory, sub: FiniteTTCategory,
                  target: FiniteTTCategory, objects) -> bool:
    for (g, f), gf in sub.comp.items():
        if Hc[gf] != target.then(Hc[f], Hc[g]):
            return False
    for a in range(sub.n_objects):
        if Hc[sub.ident[a]] != target.ident[G.obj(objects[a])]:
            return False
    for _, inl, inr in sub.coproducts.values():
        if not target.is_coproduct(Hc[inl], Hc[inr]):
            return False
    return True


def candidate_tables(G: FunctorTable, S: StableCategory, objects: Sequence[FiniteObj],
                     sub: FiniteTTCategory, target: FiniteTTCategory) -> tuple[int, Iterator[dict[int, int]]]:
    """All assignments on ``sub`` with ``H' Sigma = G`` fixed; the rest range over whole hom-sets."""
    forced: dict[int, int] = {}
    for f in source_morphisms(objects):
        forced[sub.index_of(S.sigma(f))] = G.mor(f)
    free = [m for m in range(len(sub.dom)) if m not in forced]
    choices = [target.hom(G.obj(objects[sub.dom[m]]), G.obj(objects[sub.cod[m]])) for m in free]
    count = 1
    for c in choices:
        count *= len(c)

    def gen():
        for pick in cartesian(*choices):
            table = dict(forced)
            table.update(zip(free, pick))
            yield table

    return count, gen()


def verify_uniqueness(G: FunctorTable, H: FunctorTable, S: StableCategory, objects: Sequence[FiniteObj],
                      sub: FiniteTTCategory, stab: FiniteTTCategory, target: FiniteTTCategory,
                      candidates=None) -> Report:
    """Every surviving candidate on ``sub`` (functorial, preserving sums, ``H' Sigma = G``) equals ``H``.

    ``sub`` tabulates Stab on ``objects``; ``H`` lives on the larger ``stab``.
    """
    report = Report("uniqueness of H")
    expected = {m: H.mor(stab.index_of(s)) for m, s in enumerate(sub.payload)}
    if candidates is None:
        count, candidates = candidate_tables(G, S, objects, sub, target)
    else:
        candidates = list(candidates)
        count = len(candidates)
    survivors = 0
    for Hc in candidates:
        if _is_candidate(Hc, G, S, sub, target, objects):
            survivors += 1
            report.case("survivor equals H", Hc == expected, Hc)
    report.case("some candidate survives", survivors >= 1, None)
    report.notes.append(f"candidates={count} survivors={survivors}")
    return report


def stab_is_torsion_theory(S: StableCategory, objects: Sequence[FiniteObj], stab: FiniteTTCategory | None = None) -> Report:
    """Hom from torsion to torsion-free objects is zero in Stab, and Sigma keeps canonical sequences exact."""
    theory = S.theory
    report = Report("Stab torsion theory")
    for X in objects:
        if not theory.is_torsion(X):
            continue
        for Y in objects:
            if theory.is_torsionfree(Y):
                report.case("hom(T, F) = 0 in Stab", all(s.is_zero() for s in S.homs(X, Y)), (X, Y))
    for X in objects:
        report.absorb(S.exactness_image(X))
    if stab is not None:
        report.absorb(stab.check(associativity=False))
    return report
