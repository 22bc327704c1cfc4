"""Named verification suites and the planted-bug fixtures that keep them honest."""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field, replace

from .category import CoproductData, Mor, compose, coproduct, homs, verify_extensivity
from .endo import EndoObj, EndoTheory
from .preord import FinSetTheory, PreordObj, PreordTheory, closure, codiscrete
from .pretorsion import (
    Sample, check_closure_props, check_lemma1, check_magenta, check_pretorsion,
)
from .report import Failure, Report
from .sampling import random_parallel_pair
from .stable import StableCategory, all_partials
from .theory import Theory
from .universality import (
    G_KINDS, FiniteTTCategory, FunctorTable, check_induced, induced_H, is_torsion_theory_functor,
    make_functor, stab_is_torsion_theory, tabulate_stab, verify_uniqueness,
)

SUITES = ("lemma1", "closure", "magenta", "stable", "exact", "coproduct", "universal")


@dataclass(frozen=True)
class SuiteConfig:
    max_n: int = 3
    seed: int = 0
    random_count: int = 200
    random_max_n: int = 5
    magenta_random_count: int = 25
    stable_pairs: int = 500
    corrupt: bool = False


@dataclass
class SuiteReport:
    suite: str
    cases: int = 0
    failures: list[Failure] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, report: Report) -> None:
        self.cases += report.cases
        self.failures += [Failure(f"{report.name}/{f.check}", f.witness) for f in report.failures]
        self.notes += [f"{report.name}: {n}" for n in report.notes]

    def render(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        lines = [f"[{status}] {self.suite}: {self.cases} cases, {len(self.failures)} failures, {self.wall_time:.1f}s"]
        lines += [f"  FAIL {f}" for f in self.failures]
        lines += [f"  note {n}" for n in self.notes]
        return "\n".join(lines)


def theories() -> list[Theory]:
    return [PreordTheory(), EndoTheory()]


# -- planted bugs --------------------------------------------------------------

class OverCollapsingCokernel:
    """Wraps a theory so every Z-cokernel is followed by a collapse to one point."""

    def __init__(self, base: Theory):
        self.base = base
        self.name = f"{base.name}+overcollapse"

    def __getattr__(self, attr):
        return getattr(self.base, attr)

    def z_cokernel(self, f: Mor) -> Mor:
        q = self.base.z_cokernel(f)
        if q.cod.n <= 1:
            return q
        P, proj = q.cod.quotient((0, y) for y in range(q.cod.n))
        return compose(Mor.trusted(q.cod, P, proj), q)


def corrupted_sum(theory: Theory) -> tuple[CoproductData, list[Mor]]:
    """A fake sum of two points: blocks linked by an edge (preorders) or glued together (endomaps)."""
    X = theory.terminal()
    if isinstance(X, PreordObj):
        S, right = closure(2, [(0, 1)]), [1]
    else:
        S, right = X, [0]
    bad = CoproductData(X, X, S, Mor(X, S, [0]), Mor(X, S, right))
    return bad, [Mor(S, S, range(S.n))]


class MisclassifiedTorsion:
    """Wraps a theory so that two-element torsion-free objects also count as torsion."""

    def __init__(self, base: Theory):
        self.base = base
        self.name = f"{base.name}+misclassified"

    def __getattr__(self, attr):
        return getattr(self.base, attr)

    def is_torsion(self, X) -> bool:
        b = self.base
        return b.is_torsion(X) or (X.n == 2 and b.is_torsionfree(X) and not b.is_trivial_obj(X))

    def is_trivial_obj(self, X) -> bool:
        return self.is_torsion(X) and self.base.is_torsionfree(X)


class MissedTrivialMaps:
    """Wraps a theory so that maps into a one-element object are wrongly called non-trivial."""

    def __init__(self, base: Theory):
        self.base = base
        self.name = f"{base.name}+missed"

    def __getattr__(self, attr):
        return getattr(self.base, attr)

    def is_trivial_mor(self, f: Mor) -> bool:
        return self.base.is_trivial_mor(f) and f.cod.n != 1


def perturb_functor(H: FunctorTable, target: FiniteTTCategory, stab: FiniteTTCategory) -> tuple[FunctorTable, int] | None:
    """Change ``H`` on the first morphism whose hom-set in the target has another element."""
    for m in range(len(stab.dom)):
        choices = target.hom(H.obj(stab.dom[m]), H.obj(stab.cod[m]))
        other = [c for c in choices if c != H.mor(m)]
        if other:
            mors = dict(H.morphism_map)
            mors[m] = other[0]
            return FunctorTable(dict(H.object_map), mors), m
    return None


def drop_torsion_object(target: FiniteTTCategory, keep_zero: bool = True) -> FiniteTTCategory:
    """The same tables with one non-zero torsion object removed from T'."""
    victim = next(a for a in sorted(target.torsion) if a != target.zero_object or not keep_zero)
    return replace(target, torsion=target.torsion - {victim})


# -- suites --------------------------------------------------------------------

def _samples(theory: Theory, cfg: SuiteConfig, count: int | None = None):
    yield Sample.exhaustive_upto(theory, cfg.max_n)
    yield Sample.random(theory, count or cfg.random_count, cfg.random_max_n, cfg.seed)


def suite_lemma1(cfg: SuiteConfig, out: SuiteReport):
    for th in theories():
        if cfg.corrupt:
            th = MisclassifiedTorsion(th)
        for sample in _samples(th, cfg):
            out.add(check_lemma1(th, sample))


def suite_closure(cfg: SuiteConfig, out: SuiteReport):
    for th in theories():
        for sample in _samples(th, cfg):
            out.add(check_closure_props(th, sample))
    if cfg.corrupt:
        out.add(check_closure_props(FinSetTheory("F0"), Sample.exhaustive_upto(FinSetTheory("F0"), 2)))


def suite_magenta(cfg: SuiteConfig, out: SuiteReport):
    for th in theories():
        for sample in _samples(th, cfg, cfg.magenta_random_count):
            out.add(check_magenta(th, sample))
    if cfg.corrupt:
        th = MissedTrivialMaps(PreordTheory())
        out.add(check_magenta(th, Sample.exhaustive_upto(th, 2)))


def suite_stable(cfg: SuiteConfig, out: SuiteReport):
    for th in theories():
        S = StableCategory(th)
        rng = random.Random(cfg.seed)
        report = Report(f"stable {th.name}")
        outcomes = {True: 0, False: 0}
        for _ in range(cfg.stable_pairs):
            p1, p2 = random_parallel_pair(th, rng)
            fast, diagram = S.eq(p1, p2)
            slow = S.eq_exhaustive(p1, p2)
            if cfg.corrupt:
                fast = not fast
            outcomes[slow] += 1
            report.case("greedy decision = exhaustive search", fast == slow, (p1, p2))
            if diagram is not None:
                report.case("certificate checks", diagram.check(th).ok, diagram)
            r1 = S.reduce(p1)
            report.case("reduce idempotent", S.reduce(r1.partial) == r1, p1)
            report.case("reduce(p) ~ p", S.eq(r1.partial, p1)[0], p1)
        report.notes.append(f"congruent={outcomes[True]} not congruent={outcomes[False]}")
        small = th.objects(min(cfg.max_n, 2))
        for X in small:
            for Y in small:
                reduced = S.homs(X, Y)
                for i, s in enumerate(reduced):
                    for t in reduced[i + 1:]:
                        report.case("reduced forms pairwise incongruent", not S.eq(s.partial, t.partial)[0], (s, t))
                for p in all_partials(X, Y):
                    report.case("every partial reduces into the hom-set", S.reduce(p) in reduced, p)
        out.add(report)


def suite_exact(cfg: SuiteConfig, out: SuiteReport):
    for th in theories():
        if cfg.corrupt:
            th = OverCollapsingCokernel(th)
        S = StableCategory(th)
        objs = th.objects(cfg.max_n)
        out.add(check_pretorsion(th, objs))
        report = Report(f"Sigma exact {th.name}")
        for X in objs:
            report.absorb(S.exactness_image(X))
        for X in objs:
            for Y in objs:
                for f in homs(X, Y):
                    s = S.sigma(f)
                    ok_k = S.verify_kernel(S.sigma_kernel(f), s).ok
                    ok_q = S.verify_cokernel(s, S.sigma_cokernel(f)).ok
                    report.case("Sigma(Z-kernel) is a kernel", ok_k, f)
                    report.case("Sigma(Z-cokernel) is a cokernel", ok_q, f)
                    if not (ok_k and ok_q):
                        break
        out.add(report)


def suite_coproduct(cfg: SuiteConfig, out: SuiteReport):
    for th in theories():
        S = StableCategory(th)
        objs = th.objects(cfg.max_n)
        report = Report(f"coproducts {th.name}")
        for X in objs:
            for Y in objs:
                if X.n + Y.n <= cfg.max_n:
                    report.absorb(S.verify_coproduct(S.coproduct(X, Y)))
                    cp = coproduct(X, Y)
                    probes = [m for Z in objs for m in homs(Z, cp.sum)]
                    report.absorb(verify_extensivity(X, Y, probes, cp))
        if cfg.corrupt:
            bad, probes = corrupted_sum(th)
            report.absorb(verify_extensivity(bad.left, bad.right, probes, bad))
        out.add(report)


def suite_universal(cfg: SuiteConfig, out: SuiteReport):
    for th in theories():
        S = StableCategory(th)
        objs = th.objects(cfg.max_n)
        stab = tabulate_stab(S, objs)
        out.add(stab.check(associativity=cfg.max_n <= 2))
        out.add(stab_is_torsion_theory(S, objs))
        sub_objs = sweep_objects(th)
        sweep = set(sub_objs) <= set(objs)
        sub = tabulate_stab(S, sub_objs) if sweep else None
        if not sweep:
            out.notes.append(f"{th.name}: uniqueness sweep skipped, it needs max_n >= 3")
        for kind in G_KINDS:
            target = FiniteTTCategory.zero_category() if kind == "zero" else stab
            G = make_functor(kind, S, objs, target)
            H = induced_H(G, S, objs, target, stab)
            if cfg.corrupt:
                H = perturb_functor(H, target, stab)[0] if kind != "zero" else H
            r = check_induced(H, G, S, objs, target, stab)
            r.name = f"induced H {th.name} G={kind}"
            out.add(r)
            if sweep:
                u = verify_uniqueness(make_functor(kind, S, sub_objs, target), H, S, sub_objs, sub, stab, target)
                u.name = f"uniqueness {th.name} G={kind}"
                out.add(u)
        if cfg.corrupt:
            G = make_functor("sigma", S, objs, stab)
            out.add(is_torsion_theory_functor(G, th, objs, drop_torsion_object(stab), laws=False))


def sweep_objects(theory: Theory) -> list:
    """The 3-object fragment ``{1, A, A+1}`` for the uniqueness sweep: A a two-cycle, or a codiscrete pair."""
    A = EndoObj(2, (1, 0)) if isinstance(theory, EndoTheory) else codiscrete(2)
    pt = theory.terminal()
    return [pt, A, coproduct(A, pt).sum]


RUNNERS = {
    "lemma1": suite_lemma1, "closure": suite_closure, "magenta": suite_magenta, "stable": suite_stable,
    "exact": suite_exact, "coproduct": suite_coproduct, "universal": suite_universal,
}


def run_suite(name: str, cfg: SuiteConfig = SuiteConfig()) -> SuiteReport:
    if name not in RUNNERS:
        raise KeyError(name)
    out = SuiteReport(name)
    start = time.perf_counter()
    RUNNERS[name](cfg, out)
    out.wall_time = time.perf_counter() - start
    return out


def run_all(cfg: SuiteConfig = SuiteConfig()) -> list[SuiteReport]:
    return [run_suite(name, cfg) for name in SUITES]
