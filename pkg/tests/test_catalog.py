"""Named graphs: fixed constructions and the name grammar."""

import pytest

from pivotminors import (
    Graph,
    complement,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    graph_names,
    is_bipartite,
    is_isomorphic,
    is_named_graph,
    named_graph,
    path_graph,
    star_graph,
    wheel_graph,
)


def test_basic_constructors():
    assert path_graph(1) == Graph(1)
    assert path_graph(4) == Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert cycle_graph(5).degree_sequence() == (2,) * 5
    assert complete_graph(4).num_edges == 6
    assert star_graph(3) == Graph(4, [(0, 1), (0, 2), (0, 3)])
    w = wheel_graph(5)
    assert w.n == 6 and w.num_edges == 10
    assert w.degree(5) == 5  # hub is the last vertex
    with pytest.raises(ValueError):
        cycle_graph(2)
    with pytest.raises(ValueError):
        wheel_graph(2)


def test_special_graph_shapes():
    cases = {
        "paw": (4, 4), "diamond": (4, 5), "dart": (5, 6), "bull": (5, 5),
        "gem": (5, 7), "house": (5, 6), "prism": (6, 9), "BW3": (7, 9),
        "co-BW3": (7, 12), "claw": (4, 3),
        "O1": (4, 2), "O2": (5, 5), "O3": (5, 6), "O4": (6, 9),
        "O5": (6, 8), "O6": (6, 8), "O7": (5, 8), "O8": (6, 9),
        "O9": (5, 7),
    }
    for name, (n, m) in cases.items():
        g = named_graph(name)
        assert (g.n, g.num_edges) == (n, m), name


def test_complement_identities():
    assert is_isomorphic(complement(cycle_graph(6)), named_graph("prism"))
    assert is_isomorphic(complement(named_graph("BW3")), named_graph("co-BW3"))
    assert is_isomorphic(complement(named_graph("house")), named_graph("P5"))
    assert is_isomorphic(
        complement(named_graph("O9")),
        disjoint_union(path_graph(2), path_graph(3)),
    )
    assert is_isomorphic(complement(named_graph("diamond")), named_graph("P2+2P1"))


def test_cobw3_structure():
    # two cliques of sizes 3 and 4 joined by a matching
    g = named_graph("co-BW3")
    assert g.degree_sequence() == (3, 3, 3, 3, 4, 4, 4)
    assert not is_bipartite(g)


def test_bw3_is_bipartite():
    g = named_graph("BW3")
    assert is_bipartite(g)
    assert g.degree_sequence() == (2, 2, 2, 3, 3, 3, 3)


def test_name_grammar():
    assert named_graph("2P2") == disjoint_union(path_graph(2), path_graph(2))
    assert named_graph("3P1") == Graph(3)
    assert named_graph("P2+2P1") == disjoint_union(path_graph(2), Graph(2))
    assert is_isomorphic(named_graph("K1,3"), star_graph(3))
    assert is_isomorphic(named_graph("K1,3"), named_graph("claw"))
    assert named_graph("K4") == complete_graph(4)
    assert named_graph("W4").n == 5
    assert is_isomorphic(named_graph("K3,3"), complete_multipartite([3, 3]))
    assert is_isomorphic(named_graph("K2,2"), cycle_graph(4))
    assert named_graph("K2,2,2").num_edges == 12


def test_names_are_case_insensitive():
    assert named_graph("PAW") == named_graph("paw")
    assert named_graph("cobw3") == named_graph("co-BW3")
    assert named_graph("c5") == named_graph("C5")


def test_unknown_names():
    assert not is_named_graph("K")
    assert not is_named_graph("frobnitz")
    with pytest.raises(KeyError):
        named_graph("frobnitz")


def test_graph_names_resolve():
    names = graph_names()
    assert "paw" in names and "o9" in names
    for name in names:
        assert is_named_graph(name)
        named_graph(name)
