"""Instance-generic pretorsion machinery and its exhaustive oracles.

Everything here quantifies over finite probe sets: "for every object Y" means
every object of the theory with carrier at most the probe bound.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product as cartesian
from typing import Iterable, Sequence

from .category import (
    FiniteObj, Mor, complemented_subobjects, compose, coequalizer, coproduct, copair,
    descend_through_epi, equalizer, homs, is_epi, is_iso, is_mono,
    is_pullback_square, lift_through_mono, monos_into, product, pullback,
)
from .errors import NoFactorization, NoZKernel, ZKernelUnverified
from .report import Report
from .theory import Theory, probe_bound


@dataclass(frozen=True)
class CanonicalSequence:
    torsion: FiniteObj
    counit: Mor
    object: FiniteObj
    unit: Mor
    free: FiniteObj


def canonical_sequence(X: FiniteObj, theory: Theory) -> CanonicalSequence:
    T, eps = theory.torsion_part(X)
    F, eta = theory.torsionfree_part(X)
    return CanonicalSequence(T, eps, X, eta, F)


def _probes(theory: Theory, probes: Sequence[FiniteObj] | None) -> Sequence[FiniteObj]:
    return theory.objects(probe_bound()) if probes is None else probes


def verify_z_kernel(k: Mor, f: Mor, theory: Theory, probes: Sequence[FiniteObj] | None = None) -> Report:
    """Exhaustive check that ``k`` is a Z-kernel of ``f`` against every probe."""
    report = Report("z-kernel")
    report.case("composite trivial", theory.is_trivial_mor(compose(f, k)), k)
    for Y in _probes(theory, probes):
        hits: dict[tuple, int] = {}
        for lam2 in homs(Y, k.dom):
            key = compose(k, lam2).table
            hits[key] = hits.get(key, 0) + 1
        for lam in homs(Y, f.dom):
            if theory.is_trivial_mor(compose(f, lam)):
                if not report.case("unique factorization", hits.get(lam.table, 0) == 1, lam):
                    return report
    return report


def verify_z_cokernel(f: Mor, q: Mor, theory: Theory, probes: Sequence[FiniteObj] | None = None) -> Report:
    report = Report("z-cokernel")
    report.case("composite trivial", theory.is_trivial_mor(compose(q, f)), q)
    for W in _probes(theory, probes):
        hits: dict[tuple, int] = {}
        for mu2 in homs(q.cod, W):
            key = compose(mu2, q).table
            hits[key] = hits.get(key, 0) + 1
        for mu in homs(f.cod, W):
            if theory.is_trivial_mor(compose(mu, f)):
                if not report.case("unique factorization", hits.get(mu.table, 0) == 1, mu):
                    return report
    return report


def verify_canonical(seq: CanonicalSequence, theory: Theory, probes=None) -> Report:
    report = Report(f"canonical {seq.object!r}")
    report.case("torsion part in T", theory.is_torsion(seq.torsion), seq.torsion)
    report.case("free part in F", theory.is_torsionfree(seq.free), seq.free)
    report.absorb(verify_z_kernel(seq.counit, seq.unit, theory, probes))
    report.absorb(verify_z_cokernel(seq.counit, seq.unit, theory, probes))
    return report


def verified_z_kernel(f: Mor, theory: Theory, probes=None) -> Mor:
    """``theory.z_kernel(f)``, refusing to return it unless the oracle agrees."""
    k = theory.z_kernel(f)
    report = verify_z_kernel(k, f, theory, probes)
    if not report.ok:
        raise ZKernelUnverified(report.summary())
    return k


def brute_trivial(f: Mor, theory: Theory, probes: Sequence[FiniteObj]) -> bool:
    """Does ``f`` factor through some trivial probe object?  Independent of the witness hook."""
    for Z in probes:
        if theory.is_trivial_obj(Z):
            for a in homs(f.dom, Z):
                if any(compose(b, a) == f for b in homs(Z, f.cod)):
                    return True
    return False


# -- functors T and F ---------------------------------------------------------

def functor_on_mor(which: str, f: Mor, theory: Theory) -> Mor:
    """``T(f)`` or ``F(f)``, the unique filler of the naturality square."""
    if which == "T":
        _, eps_x = theory.torsion_part(f.dom)
        _, eps_y = theory.torsion_part(f.cod)
        out = lift_through_mono(eps_y, compose(f, eps_x))
    elif which == "F":
        _, eta_x = theory.torsionfree_part(f.dom)
        _, eta_y = theory.torsionfree_part(f.cod)
        out = descend_through_epi(eta_x, compose(eta_y, f))
    else:
        raise ValueError(f"which must be 'T' or 'F', not {which!r}")
    if out is None:
        raise NoFactorization(f"{which}({f!r}) has no filler")
    return out


# -- extremal epimorphisms ----------------------------------------------------

def is_extremal_epi(q: Mor, candidates: Iterable[FiniteObj] | None = None) -> bool:
    """Every factorization ``q = m . e`` with ``m`` mono has ``m`` iso.

    With ``candidates`` the search runs over every mono from a candidate
    object; without, only the image factorization is tried.
    """
    if not is_epi(q):
        return False
    if candidates is None:
        M = q.dom.image_structure(q.cod, q.table)
        return M == q.cod
    for M in candidates:
        if M.n > q.cod.n:
            continue
        for m in homs(M, q.cod):
            if is_mono(m) and lift_through_mono(m, q) is not None and not is_iso(m):
                return False
    return True


# -- samples ------------------------------------------------------------------

@dataclass(frozen=True)
class Sample:
    """Objects and ordered pairs of objects a checker quantifies over."""

    label: str
    objects: tuple[FiniteObj, ...]
    pairs: tuple[tuple[FiniteObj, FiniteObj], ...]
    exhaustive: bool

    @classmethod
    def exhaustive_upto(cls, theory: Theory, max_n: int = 3) -> Sample:
        objs = theory.objects(max_n)
        return cls(f"{theory.name} n<={max_n}", objs, tuple(cartesian(objs, objs)), True)

    @classmethod
    def random(cls, theory: Theory, count: int = 200, max_n: int = 5, seed: int = 0) -> Sample:
        rng = random.Random(seed)
        objs = tuple(theory.random_object(rng, rng.randint(0, max_n)) for _ in range(count + 1))
        pairs = tuple(zip(objs, objs[1:])) + tuple((X, X) for X in objs[:count])
        return cls(f"{theory.name} random x{count} n<={max_n} seed={seed}", objs[:count], pairs, False)

    def parallel(self, X: FiniteObj, Y: FiniteObj, cap: int = 40) -> list[tuple[Mor, Mor]]:
        """Parallel pairs ``X => Y``: all of them, or those among the first ``cap`` maps when sampling."""
        hs = homs(X, Y) if self.exhaustive else homs(X, Y)[:cap]
        return [(f, g) for f in hs for g in hs]

    def extremal(self, q: Mor, theory: Theory) -> bool:
        if self.exhaustive and q.cod.n <= probe_bound():
            return is_extremal_epi(q, theory.objects(q.cod.n))
        return is_extremal_epi(q)


# -- closure and stability checkers -------------------------------------------

def check_hom_triviality(theory: Theory, objects: Sequence[FiniteObj]) -> Report:
    report = Report("hom-triviality T->F")
    torsion = [X for X in objects if theory.is_torsion(X)]
    free = [X for X in objects if theory.is_torsionfree(X)]
    for X in torsion:
        for Y in free:
            for f in homs(X, Y):
                report.case("T->F trivial", theory.is_trivial_mor(f), f)
    return report


def check_pretorsion(theory: Theory, objects: Sequence[FiniteObj], probes=None) -> Report:
    """Both pretorsion axioms: hom-triviality and a verified canonical sequence per object."""
    report = Report(f"pretorsion {theory.name}")
    report.absorb(check_hom_triviality(theory, objects))
    for X in objects:
        seq = canonical_sequence(X, theory)
        report.absorb(verify_canonical(seq, theory, probes))
    return report


def _implication(report: Report, name: str, premise: tuple[bool, object], conclusion: tuple[bool, object]):
    holds, _ = premise
    ok, witness = conclusion
    report.case(name, not holds or ok, witness)


def _closed(pred_src, pred_dst, arrows: Iterable[Mor], end: str) -> tuple[bool, object]:
    """Is the class closed along ``arrows``?  ``end`` says which side must inherit."""
    for m in arrows:
        a, b = (m.cod, m.dom) if end == "dom" else (m.dom, m.cod)
        if pred_src(a) and not pred_dst(b):
            return False, m
    return True, None


def check_lemma1(theory: Theory, sample: Sample) -> Report:
    report = Report(f"lemma1 {sample.label}")
    zero, one = theory.empty(), theory.terminal()
    # (1)
    report.case("(1) initial in T", theory.is_torsion(zero), zero)
    report.case("(1) terminal is terminal", all(len(homs(X, one)) == 1 for X in sample.objects), one)
    report.case("(1) terminal in F", theory.is_torsionfree(one), one)
    # (2)
    report.case("(2) initial in Z", theory.is_trivial_obj(zero), zero)
    report.case("(2) F(0) = 0", theory.torsionfree_part(zero)[0].n == 0, zero)
    # (3)
    for X, Y in sample.pairs:
        T, _ = theory.torsion_part(X)
        for q in homs(T, Y):
            if is_epi(q) and sample.extremal(q, theory):
                report.case("(3) T closed under extremal quotients", theory.is_torsion(Y), q)
    # (5) and (6)
    monos = [m for X, Y in sample.pairs for m in homs(X, Y) if is_mono(m)]
    epis = [q for X, Y in sample.pairs for q in homs(X, Y) if is_epi(q)]
    Zp, Tp, Fp = theory.is_trivial_obj, theory.is_torsion, theory.is_torsionfree
    _implication(report, "(5) Z sub-closed => F sub-closed",
                 _closed(Zp, Zp, monos, "dom"), _closed(Fp, Fp, monos, "dom"))
    _implication(report, "(5) Z quotient-closed => T quotient-closed",
                 _closed(Zp, Zp, epis, "cod"), _closed(Tp, Tp, epis, "cod"))
    # The global equivalence needs the whole category; the per-mono form holds on any sample:
    # the left square of n is a pullback iff the pullback of eps_Y along n is torsion.
    bad_square = None
    for n in monos:
        _, eps_y = theory.torsion_part(n.cod)
        P, _, _ = pullback(n, eps_y)
        square = _left_square_is_pullback(n, theory)
        report.case("(6) left square is a pullback <=> pulled-back torsion part in T", square == Tp(P), n)
        if bad_square is None and not square:
            bad_square = n
    if sample.exhaustive:
        t_closed, witness = _closed(Tp, Tp, monos, "dom")
        report.case("(6) T sub-closed <=> left squares are pullbacks", t_closed == (bad_square is None),
                    witness or bad_square)
    # (7)
    for X, Y in sample.pairs:
        if Tp(X) and Tp(Y):
            report.case("(7) T closed under coproducts", Tp(coproduct(X, Y).sum), (X, Y))
            for f, g in sample.parallel(X, Y):
                report.case("(7) T closed under coequalizers", Tp(coequalizer(f, g).cod), (f, g))
        if Fp(X) and Fp(Y):
            report.case("(7) F closed under products", Fp(product(X, Y)[0]), (X, Y))
            for f, g in sample.parallel(X, Y):
                report.case("(7) F closed under equalizers", Fp(equalizer(f, g).dom), (f, g))
    return report


def _left_square_is_pullback(n: Mor, theory: Theory) -> bool:
    _, eps_x = theory.torsion_part(n.dom)
    _, eps_y = theory.torsion_part(n.cod)
    return is_pullback_square(top=eps_x, left=functor_on_mor("T", n, theory), right=n, bottom=eps_y)


def check_closure_props(theory: Theory, sample: Sample, small: int = 2) -> Report:
    report = Report(f"closure {sample.label}")
    Tp, Fp, Zp = theory.is_torsion, theory.is_torsionfree, theory.is_trivial_obj
    for X, Y in sample.pairs:
        S = coproduct(X, Y).sum
        report.case("F closed under complemented subobjects", not Fp(S) or (Fp(X) and Fp(Y)), (X, Y))
        report.case("T closed under coproducts", not (Tp(X) and Tp(Y)) or Tp(S), (X, Y))
        report.case("Z closed under coproducts", not (Zp(X) and Zp(Y)) or Zp(S), (X, Y))
        report.case("F closed under coproducts", not (Fp(X) and Fp(Y)) or Fp(S), (X, Y))
    for X in sample.objects:
        for sub in complemented_subobjects(X):
            A = sub.obj
            for name, pred in (("T", Tp), ("F", Fp), ("Z", Zp)):
                report.case(f"{name} closed under complemented subobjects", not pred(X) or pred(A), sub)
    # Copair of trivial morphisms, both routes.
    for X1, X2, Y in _triples(theory, sample, small):
        cp = coproduct(X1, X2)
        for g1 in homs(X1, Y):
            w1 = theory.trivial_witness(g1)
            if w1 is None:
                continue
            for g2 in homs(X2, Y):
                w2 = theory.trivial_witness(g2)
                if w2 is None:
                    continue
                g = copair(g1, g2, cp)
                report.case("copair of trivials trivial", theory.is_trivial_mor(g), g)
                try:
                    k = theory.z_kernel(g)
                    report.case("route (a): Z-kernel of copair is iso", is_iso(k), g)
                except NoZKernel:
                    pass
                mid = coproduct(w1.middle, w2.middle)
                through = compose(copair(w1.second, w2.second, mid),
                                  copair(compose(mid.inj_left, w1.first), compose(mid.inj_right, w2.first), cp))
                report.case("route (b): factors through Z1+Z2", through == g and Zp(mid.sum), g)
    return report


def _triples(theory, sample, small):
    if sample.exhaustive:
        objs = theory.objects(small)
        return [(a, b, c) for a in objs for b in objs for c in objs]
    objs = sample.objects
    return [(objs[i], objs[i + 1], objs[i + 2]) for i in range(0, len(objs) - 2, 3)]


def check_magenta(theory: Theory, sample: Sample) -> Report:
    """Triviality is stable under pullback along coprojections, monos and Z-kernels."""
    report = Report(f"magenta {sample.label}")
    Zp = theory.is_trivial_obj
    targets = sorted({Y for _, Y in sample.pairs}, key=lambda o: (o.n, repr(o)))
    sources: dict = {}
    for X, Y in sample.pairs:
        sources.setdefault(Y, []).append(X)
    for X in sample.objects:
        for sub in complemented_subobjects(X):
            report.case("(i) Z closed under complemented subobjects", not Zp(X) or Zp(sub.obj), sub)
    for Y in targets:
        arrows = {"coprojection": [s.inclusion for s in complemented_subobjects(Y)]}
        if sample.exhaustive:
            mono_sources = sample.objects
        else:
            mono_sources = [Y] + sources[Y] + [s.obj for s in complemented_subobjects(Y)]
        arrows["mono"] = list(monos_into(Y, mono_sources))
        zk = {}
        for W in sources[Y]:
            for h in homs(Y, W):
                try:
                    k = theory.z_kernel(h)
                except NoZKernel:
                    continue
                zk[k] = None
        arrows["Z-kernel"] = list(zk)
        trivials = [g for X in sources[Y] for g in homs(X, Y) if theory.is_trivial_mor(g)]
        for kind, ms in arrows.items():
            for m in ms:
                for g in trivials:
                    _, _, g_tilde = pullback(g, m)
                    report.case(f"(ii) pullback along {kind}", theory.is_trivial_mor(g_tilde), (g, m))
                for W in sources[Y]:
                    for g in homs(W, m.dom):
                        if theory.is_trivial_mor(compose(m, g)):
                            report.case(f"(iii) cancel {kind}", theory.is_trivial_mor(g), (g, m))
    return report
