import random

from hypothesis import given

from oracles import bfs_components, cyclic_points, iterate
from stabcat.category import Mor, compose, homs, identity, is_iso
from stabcat.endo import EndoObj, EndoTheory, weak_components
from stabcat.pretorsion import verify_z_cokernel, verify_z_kernel
from strategies import endos, morphisms

TH = EndoTheory()
CYCLE2 = EndoObj(2, (1, 0))
PT = EndoObj(1, (0,))


def test_weak_component_examples():
    assert weak_components(EndoObj(3, (0, 1, 2))) == ((0,), (1,), (2,))
    assert weak_components(EndoObj(3, (1, 2, 0))) == ((0, 1, 2),)
    assert weak_components(EndoObj(3, (1, 0, 2))) == ((0, 1), (2,))


def test_torsion_part_examples():
    X = EndoObj(3, (2, 0, 1))
    assert TH.torsion_part(X)[0] == X
    T, eps = TH.torsion_part(EndoObj(5, (1, 2, 0, 3, 3)))
    assert eps.table == (0, 1, 2, 3)
    assert TH.torsion_part(EndoObj(2, (0, 0)))[1].table == (0,)


def test_torsionfree_part_examples():
    X = EndoObj(3, (0, 0, 1))
    F, eta = TH.torsionfree_part(X)
    assert F == X and is_iso(eta)
    assert TH.torsionfree_part(EndoObj(3, (1, 2, 0)))[0] == PT
    F, eta = TH.torsionfree_part(EndoObj(5, (1, 2, 0, 3, 3)))
    assert F.n == 3
    assert eta(0) == eta(1) == eta(2)
    assert F.f[eta(0)] == eta(0) and F.f[eta(3)] == eta(3) and F.f[eta(4)] == eta(3)
    assert len({eta(0), eta(3), eta(4)}) == 3


def test_trivial_morphism_examples():
    Y = EndoObj(2, (0, 1))
    assert TH.is_trivial_mor(Mor(CYCLE2.sum(PT), Y, [0, 0, 1]))
    assert not TH.is_trivial_mor(identity(CYCLE2))
    f = Mor(CYCLE2, EndoObj(2, (1, 1)), [1, 1])
    w = TH.trivial_witness(f)
    assert w is not None and w.middle == PT and compose(w.second, w.first) == f


def test_z_kernel_examples():
    f = Mor(CYCLE2, PT, [0, 0])
    assert TH.z_kernel(f) == identity(CYCLE2)
    assert TH.z_kernel(identity(CYCLE2)).dom.n == 0
    g = Mor(CYCLE2.sum(CYCLE2), CYCLE2.sum(PT), [2, 2, 0, 1])
    assert TH.z_kernel(g).table == (0, 1)


def test_z_cokernel_examples():
    E = EndoObj(0, ())
    Y = CYCLE2.sum(PT)
    assert TH.z_cokernel(Mor(E, Y, [])) == identity(Y)
    q = TH.z_cokernel(identity(Y))
    assert q.cod == EndoObj(2, (0, 1))
    Y2 = CYCLE2.sum(CYCLE2)
    q = TH.z_cokernel(Mor(CYCLE2, Y2, [0, 1]))
    assert q(0) == q(1) and q.cod.f[q(0)] == q(0)
    assert q(2) != q(3) and q.cod.f[q(2)] == q(3)


# -- characterization of torsion-free endomaps ---------------------------------------

def three_ways(X: EndoObj) -> tuple[bool, bool, bool]:
    powers = X.power(X.n) == X.power(X.n + 1)
    eta_iso = is_iso(TH.torsionfree_part(X)[1])
    no_long_cycle = all(len(c) < 2 for c in X.cycles())
    return powers, eta_iso, no_long_cycle


def test_characterization_on_all_small_tables():
    tables = [X for X in TH.objects(4) if X.n == 4]
    assert len(tables) == 256
    for X in tables:
        assert len(set(three_ways(X))) == 1, X


def test_characterization_on_seeded_tables():
    rng = random.Random(0)
    for _ in range(1000):
        X = TH.random_object(rng, rng.randint(1, 7))
        assert len(set(three_ways(X))) == 1, X


@given(endos(8))
def test_cyclic_part_matches_naive_orbit_search(X):
    assert set(X.cyclic()) == cyclic_points(X.f)
    assert X.power(X.n + 2) == iterate(X.f, X.n + 2)


@given(endos(7))
def test_components_match_breadth_first_search(X):
    assert {frozenset(c) for c in X.components} == {frozenset(c) for c in bfs_components(X.n, enumerate(X.f))}


@given(endos(6))
def test_parts_land_in_their_classes(X):
    T, eps = TH.torsion_part(X)
    F, eta = TH.torsionfree_part(X)
    assert TH.is_torsion(T) and TH.is_torsionfree(F)
    assert TH.is_trivial_mor(compose(eta, eps))


@given(morphisms("endo", 3))
def test_z_kernel_and_cokernel_pass_their_oracles(f):
    probes = TH.objects(2)
    assert verify_z_kernel(TH.z_kernel(f), f, TH, probes).ok
    assert verify_z_cokernel(f, TH.z_cokernel(f), TH, probes).ok


@given(morphisms("endo", 3))
def test_triviality_predicate_agrees_with_witness(f):
    assert (TH.trivial_witness(f) is not None) == TH.is_trivial_mor(f)


def test_enumeration_counts_every_table():
    assert [sum(1 for X in TH.objects(n) if X.n == n) for n in range(4)] == [1, 1, 4, 27]
    assert all(len(homs(X, PT)) == 1 for X in TH.objects(3))
