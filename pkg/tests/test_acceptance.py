"""Acceptance criteria 1-10.  Each test prints one PASS/FAIL line.

Run directly (``python tests/test_acceptance.py``) for just the ten lines,
or through pytest, where the lines are repeated in the terminal summary.
"""
from __future__ import annotations

import random
import sys
import time

import pytest

from stabcat.category import homs, is_iso, verify_extensivity
from stabcat.endo import EndoTheory
from stabcat.preord import FinSetTheory, PreordTheory, chain
from stabcat.pretorsion import Sample, check_lemma1, check_magenta, check_pretorsion, verify_z_cokernel
from stabcat.report import Report
from stabcat.sampling import random_parallel_pair
from stabcat.stable import StableCategory, all_partials
from stabcat.suites import (
    OverCollapsingCokernel, SuiteConfig, corrupted_sum, drop_torsion_object, perturb_functor, run_suite,
)
from stabcat.universality import check_induced, induced_H, is_torsion_theory_functor, make_functor, tabulate_stab

RESULTS: list[str] = []


def record(number: int, title: str, report: Report | None, ok: bool, detail: str, started: float) -> None:
    status = "PASS" if ok else "FAIL"
    line = f"[{status}] criterion {number:>2}: {title} ({detail}; {time.perf_counter() - started:.1f}s)"
    if report is not None and report.failures:
        line += f"\n      first failure: {report.failures[0]}"
    RESULTS.append(line)
    print(line, flush=True)


def theories():
    return [PreordTheory(), EndoTheory()]


def test_criterion_01_pretorsion_axioms():
    start = time.perf_counter()
    report = Report("criterion 1")
    counts = []
    for th in theories():
        objs = th.objects(3)
        counts.append(f"{th.name}: {len(objs)} objects")
        report.absorb(check_pretorsion(th, objs, objs))
    elapsed = time.perf_counter() - start
    ok = report.ok and elapsed < 60
    record(1, "pretorsion axioms, all objects n<=3", report, ok, ", ".join(counts) + f", {report.cases} cases", start)
    assert ok, report.summary()


def test_criterion_02_lemma_items():
    start = time.perf_counter()
    report = Report("criterion 2")
    for th in theories():
        report.absorb(check_lemma1(th, Sample.exhaustive_upto(th, 3)))
        report.absorb(check_lemma1(th, Sample.random(th, 200, 5, seed=0)))
    record(2, "lemma items (1)(2)(3)(5)(6)(7), exhaustive n<=3 and 200 random n<=5", report, report.ok,
           f"{report.cases} cases", start)
    assert report.ok, report.summary()


def test_criterion_03_pullback_stability():
    start = time.perf_counter()
    report = Report("criterion 3")
    for th in theories():
        report.absorb(check_magenta(th, Sample.exhaustive_upto(th, 3)))
    record(3, "triviality stable under pullback along coprojections, monos, Z-kernels, n<=3", report,
           report.ok, f"{report.cases} cases", start)
    assert report.ok, report.summary()


def test_criterion_04_congruence_decision():
    start = time.perf_counter()
    report = Report("criterion 4")
    tallies = []
    for th in theories():
        S, rng = StableCategory(th), random.Random(0)
        congruent = 0
        for _ in range(500):
            p1, p2 = random_parallel_pair(th, rng, max_src=6, max_dst=4)
            fast, _ = S.eq(p1, p2)
            slow = S.eq_exhaustive(p1, p2)
            congruent += slow
            report.case("greedy = exhaustive", fast == slow, (p1, p2))
        tallies.append(f"{th.name} {congruent}/500 congruent")
    record(4, "stable_eq agrees with exhaustive search on 500 pairs per instance", report, report.ok,
           ", ".join(tallies), start)
    assert report.ok, report.summary()


def test_criterion_05_normal_form():
    start = time.perf_counter()
    report = Report("criterion 5")
    for th in theories():
        S, rng = StableCategory(th), random.Random(1)
        for _ in range(500):
            for p in random_parallel_pair(th, rng):
                r = S.reduce(p)
                report.case("reduce idempotent", S.reduce(r.partial) == r, p)
                report.case("reduce(p) ~ p", S.eq_exhaustive(r.partial, p), p)
        for X in th.objects(2):
            for Y in th.objects(2):
                reduced = S.homs(X, Y)
                for i, s in enumerate(reduced):
                    for t in reduced[i + 1:]:
                        report.case("distinct reduced forms incongruent", not S.eq_exhaustive(s.partial, t.partial), (s, t))
                for p in all_partials(X, Y):
                    report.case("every class has a reduced form", S.reduce(p) in reduced, p)
    record(5, "reduce idempotent, reduce(p) ~ p, reduced forms unique per class", report, report.ok,
           f"{report.cases} cases", start)
    assert report.ok, report.summary()


def test_criterion_06_sigma_preservation():
    start = time.perf_counter()
    report = Report("criterion 6")
    for th in theories():
        S = StableCategory(th)
        objs = th.objects(3)
        for X in objs:
            for Y in objs:
                if X.n + Y.n <= 3:
                    report.absorb(S.verify_coproduct(S.coproduct(X, Y), objs))
        for X in objs:
            for Y in objs:
                for f in homs(X, Y):
                    s = S.sigma(f)
                    report.absorb(S.verify_kernel(S.sigma_kernel(f), s, objs))
                    report.absorb(S.verify_cokernel(s, S.sigma_cokernel(f), objs))
        for X in objs:
            report.absorb(S.exactness_image(X, objs))
    record(6, "Sigma keeps sums, Z-kernels, Z-cokernels and canonical sequences, n<=3", report, report.ok,
           f"{report.cases} cases", start)
    assert report.ok, report.summary()


def test_criterion_07_endo_characterization():
    start = time.perf_counter()
    th = EndoTheory()
    report = Report("criterion 7")

    def agree(X):
        powers = X.power(X.n) == X.power(X.n + 1)
        eta_iso = is_iso(th.torsionfree_part(X)[1])
        no_long_cycle = all(len(c) < 2 for c in X.cycles())
        return powers == eta_iso == no_long_cycle

    tables = [X for X in th.objects(4) if X.n == 4]
    for X in tables:
        report.case("three characterizations agree", agree(X), X)
    rng = random.Random(0)
    for _ in range(1000):
        X = th.random_object(rng, rng.randint(1, 7))
        report.case("three characterizations agree", agree(X), X)
    ok = report.ok and len(tables) == 256
    record(7, "f^n = f^(n+1) <=> eta iso <=> no cycle of length >= 2", report, ok,
           f"{len(tables)} tables at n=4 plus 1000 seeded at n<=7", start)
    assert ok, report.summary()


def test_criterion_08_finite_sets():
    start = time.perf_counter()
    th = FinSetTheory("F0")
    objs = th.objects(4)
    report = check_pretorsion(th, objs, objs)
    record(8, "(all sets, sets with at most one element) is a pretorsion theory, n<=4", report, report.ok,
           f"{len(objs)} objects, {report.cases} cases", start)
    assert report.ok, report.summary()


def test_criterion_09_universality():
    start = time.perf_counter()
    report = run_suite("universal", SuiteConfig(max_n=3))
    sweeps = [n for n in report.notes if "candidates=" in n]
    elapsed = time.perf_counter() - start
    ok = report.ok and elapsed < 300
    detail = f"{report.cases} cases; " + "; ".join(n.replace("uniqueness ", "") for n in sweeps)
    record(9, "induced H factors every bundled tt-functor and is unique on the sweep", None, ok, detail, start)
    assert ok, report.render()


def test_criterion_10_negative_controls():
    start = time.perf_counter()
    caught = {}
    # Corrupted sum.
    for th in theories():
        bad, probes = corrupted_sum(th)
        r = verify_extensivity(bad.left, bad.right, probes, bad)
        caught[f"corrupted sum {th.name}"] = r
    # Over-collapsed cokernel, checked on the smallest morphism whose cokernel target has two points.
    for th in theories():
        wrong = OverCollapsingCokernel(th)
        f = homs(th.empty(), chain(2) if th.name == "preord" else th.objects(2)[-1])[0]
        caught[f"over-collapsed cokernel {th.name}"] = verify_z_cokernel(f, wrong.z_cokernel(f), th)
    # Perturbed H, and a functor missing a torsion object.
    for th in theories():
        S = StableCategory(th)
        objs = th.objects(2)
        stab = tabulate_stab(S, objs)
        G = make_functor("sigma", S, objs, stab)
        H = induced_H(G, S, objs, stab, stab)
        bad_H, _ = perturb_functor(H, stab, stab)
        caught[f"perturbed H {th.name}"] = check_induced(bad_H, G, S, objs, stab, stab)
        caught[f"dropped torsion object {th.name}"] = is_torsion_theory_functor(
            G, th, objs, drop_torsion_object(stab), laws=False)
    misses = [name for name, r in caught.items() if r.ok or r.failures[0].witness is None]
    witnesses = "; ".join(f"{name}: {r.failures[0].check}" for name, r in caught.items() if not r.ok)
    ok = not misses
    record(10, "every planted bug is caught with a witness", None, ok,
           f"{len(caught) - len(misses)}/{len(caught)} caught" + (f", missed {misses}" if misses else ""), start)
    if ok:
        RESULTS.append("      " + witnesses)
    assert ok, misses


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
