import pytest
from hypothesis import given, strategies as st

from stabcat.category import Mor, compose, homs, identity, is_iso
from stabcat.endo import EndoObj, EndoTheory
from stabcat.preord import FinSetTheory, PreordTheory, chain, codiscrete, discrete
from stabcat.pretorsion import (
    Sample, brute_trivial, canonical_sequence, check_closure_props, check_lemma1, check_magenta,
    check_pretorsion, functor_on_mor, is_extremal_epi, verify_canonical, verify_z_cokernel, verify_z_kernel,
)
from stabcat.suites import MisclassifiedTorsion, OverCollapsingCokernel
from strategies import morphisms

THEORIES = {"preord": PreordTheory(), "endo": EndoTheory()}
CYCLE3 = EndoObj(3, (1, 2, 0))


@pytest.mark.parametrize("X, th", [(discrete(2), THEORIES["preord"]), (EndoObj(2, (0, 1)), THEORIES["endo"])])
def test_trivial_object_has_identity_sequence(X, th):
    seq = canonical_sequence(X, th)
    assert seq.counit == identity(X) and is_iso(seq.unit)


@pytest.mark.parametrize("X, th", [(codiscrete(2), THEORIES["preord"]), (CYCLE3, THEORIES["endo"])])
def test_torsion_object_sequence_ends_in_a_point(X, th):
    seq = canonical_sequence(X, th)
    assert seq.torsion == X and seq.counit == identity(X) and seq.free.n == 1
    assert verify_canonical(seq, th).ok


@pytest.mark.parametrize("kind", THEORIES)
def test_identity_is_z_kernel_of_trivial_map(kind):
    th = THEORIES[kind]
    X = codiscrete(2) if kind == "preord" else EndoObj(2, (1, 0))
    f = homs(X, th.terminal())[0]
    assert verify_z_kernel(identity(X), f, th).ok
    assert verify_z_cokernel(f, identity(f.cod), th).ok


@pytest.mark.parametrize("kind", THEORIES)
def test_empty_subobject_is_not_a_z_kernel_of_a_mono(kind):
    th = THEORIES[kind]
    X = chain(2) if kind == "preord" else EndoObj(2, (0, 0))
    f = identity(X)
    k = Mor(th.empty(), X, [])
    report = verify_z_kernel(k, f, th)
    assert not report.ok and report.failures[0].witness.dom.n == 1


@pytest.mark.parametrize("kind", THEORIES)
def test_over_collapsed_cokernel_is_caught(kind):
    th = THEORIES[kind]
    bad = OverCollapsingCokernel(th)
    X = chain(2) if kind == "preord" else EndoObj(2, (0, 0))
    f = Mor(th.empty(), X, [])
    report = verify_z_cokernel(f, bad.z_cokernel(f), th)
    assert not report.ok and report.failures[0].witness is not None


@pytest.mark.parametrize("kind", THEORIES)
def test_torsion_functor_preserves_identities(kind):
    th = THEORIES[kind]
    for X in th.objects(3):
        T = th.torsion_part(X)[0]
        assert functor_on_mor("T", identity(X), th) == identity(T)
        F = th.torsionfree_part(X)[0]
        assert functor_on_mor("F", identity(X), th) == identity(F)


@pytest.mark.parametrize("kind", THEORIES)
def test_empty_object_is_trivial(kind):
    th = THEORIES[kind]
    assert check_lemma1(th, Sample.exhaustive_upto(th, 1)).ok
    E = th.empty()
    assert th.is_torsionfree(E) and th.is_torsion(E) and th.torsionfree_part(E)[0] == E


@pytest.mark.parametrize("kind", THEORIES)
def test_pretorsion_axioms_small(kind):
    th = THEORIES[kind]
    assert check_pretorsion(th, th.objects(2), th.objects(2)).ok


@pytest.mark.parametrize("kind", THEORIES)
def test_lemma_items_small(kind):
    th = THEORIES[kind]
    assert check_lemma1(th, Sample.exhaustive_upto(th, 2)).ok
    assert check_lemma1(th, Sample.random(th, 20, 4, seed=1)).ok


def test_misclassified_torsion_breaks_the_lemma():
    th = MisclassifiedTorsion(PreordTheory())
    assert not check_lemma1(th, Sample.exhaustive_upto(th, 2)).ok


@pytest.mark.parametrize("kind", THEORIES)
def test_closure_and_pullback_stability_small(kind):
    th = THEORIES[kind]
    assert check_closure_props(th, Sample.exhaustive_upto(th, 2), small=1).ok
    assert check_magenta(th, Sample.exhaustive_upto(th, 2)).ok


def test_sets_with_at_most_one_element_lose_coproduct_closure():
    th = FinSetTheory("F0")
    report = check_closure_props(th, Sample.exhaustive_upto(th, 2), small=1)
    assert not report.ok
    assert {f.check for f in report.failures} >= {"Z closed under coproducts", "F closed under coproducts"}


@pytest.mark.parametrize("variant", ["F0", "all", "empty"])
def test_set_variants_are_pretorsion_theories(variant):
    th = FinSetTheory(variant)
    assert check_pretorsion(th, th.objects(3), th.objects(3)).ok


def test_extremal_epi_fast_path_matches_search():
    th = PreordTheory()
    for X in th.objects(2):
        for Y in th.objects(2):
            for q in homs(X, Y):
                assert is_extremal_epi(q) == is_extremal_epi(q, th.objects(2))


@pytest.mark.parametrize("kind", THEORIES)
def test_triviality_hook_agrees_with_brute_factorization(kind):
    th = THEORIES[kind]
    objs = th.objects(2)
    for X in objs:
        for Y in objs:
            for f in homs(X, Y):
                assert th.is_trivial_mor(f) == brute_trivial(f, th, objs), f


@pytest.mark.parametrize("kind", THEORIES)
@given(data=st.data())
def test_torsion_and_free_functors_compose(kind, data):
    th = THEORIES[kind]
    f = data.draw(morphisms(kind, 3))
    g = data.draw(morphisms(kind, 3, dom=f.cod))
    for which in ("T", "F"):
        lhs = functor_on_mor(which, compose(g, f), th)
        assert lhs == compose(functor_on_mor(which, g, th), functor_on_mor(which, f, th))


@pytest.mark.parametrize("kind", THEORIES)
@given(data=st.data())
def test_counit_and_unit_are_natural(kind, data):
    th = THEORIES[kind]
    f = data.draw(morphisms(kind, 3))
    sx, sy = canonical_sequence(f.dom, th), canonical_sequence(f.cod, th)
    assert compose(f, sx.counit) == compose(sy.counit, functor_on_mor("T", f, th))
    assert compose(sy.unit, f) == compose(functor_on_mor("F", f, th), sx.unit)
