from stabcat.dot import hasse_edges, object_dot, sequence_dot
from stabcat.endo import EndoObj, EndoTheory
from stabcat.preord import chain, closure, codiscrete
from stabcat.pretorsion import canonical_sequence


def test_three_cycle_is_one_directed_cycle():
    text = object_dot(EndoObj(3, (1, 2, 0)))
    assert text.count("subgraph cluster_") == 1
    assert {"n0 -> n1;", "n1 -> n2;", "n2 -> n0;"} <= {l.strip() for l in text.splitlines()}


def test_chain_has_one_hasse_edge():
    assert hasse_edges(chain(2)) == [(0, 1)]
    assert object_dot(chain(2)).count("->") == 1


def test_chain_of_three_drops_the_transitive_edge():
    assert hasse_edges(chain(3)) == [(0, 1), (1, 2)]


def test_equivalent_elements_are_joined_both_ways():
    X = closure(3, [(0, 1), (1, 0), (1, 2)])
    text = object_dot(X)
    assert "n0 -> n1 [dir=both style=dashed];" in text
    assert hasse_edges(X) == [(0, 2)]


def test_empty_object_is_an_empty_graph():
    text = object_dot(EndoObj(0, ()))
    assert "->" not in text and "[label" not in text


def test_sequence_has_three_clusters_and_both_maps():
    seq = canonical_sequence(EndoObj(5, (1, 2, 0, 3, 3)), EndoTheory())
    text = sequence_dot(seq)
    assert text.count("subgraph cluster_") >= 3
    assert text.count('label="eps"') == 4 and text.count('label="eta"') == 5


def test_codiscrete_pair_has_no_hasse_edges():
    assert hasse_edges(codiscrete(2)) == []
