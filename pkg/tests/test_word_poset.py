import itertools

import networkx as nx
import numpy as np
import pytest

from augmentation import augment_partition, augment_raising
from errors import NotAPoset, SizeLimit, ValidationError
from induced_order import AlignmentWitness, leq_bruteforce, leq_chronological, leq_induced, witness
from poset_core import chain, product_leq, transitive_closure, trivial_poset
from word_poset import (
    UnionFind,
    build_word_poset,
    components_frame,
    connected_components,
    enumerate_words,
    leq_frame,
    minimal_words,
    render_word,
    transitive_reduction,
    word_labels,
    word_separator,
)

from conftest import ETA, PHI, PI


def test_enumerate_words_canonical_order():
    alphabet = trivial_poset([PI, PHI])
    assert enumerate_words(alphabet, 2) == [
        (), (PI,), (PHI,), (PI, PI), (PI, PHI), (PHI, PI), (PHI, PHI),
    ]
    assert len(enumerate_words(alphabet, 3)) == 15
    assert enumerate_words(alphabet, 0) == [()]
    assert enumerate_words(trivial_poset([]), 5) == [()]


def test_enumerate_words_limits():
    with pytest.raises(SizeLimit):
        enumerate_words(trivial_poset([PI, PHI]), 20)
    with pytest.raises(SizeLimit):
        enumerate_words(trivial_poset([PI, PHI]), 3, node_cap=14)
    with pytest.raises(ValidationError):
        enumerate_words(trivial_poset([PI, PHI]), -1)


@pytest.mark.parametrize(
    "letters, max_len, node_cap",
    [
        ([PI, PHI], 100000, 20000),
        ([PI], 20000, 20000),
        ([PI, ETA, PHI], 9, 29523),
    ],
)
def test_enumerate_words_size_limit_on_long_windows(letters, max_len, node_cap):
    with pytest.raises(SizeLimit, match="node cap"):
        enumerate_words(trivial_poset(letters), max_len, node_cap=node_cap)


def test_enumerate_words_exactly_at_cap():
    assert len(enumerate_words(trivial_poset([PI, ETA, PHI]), 9, node_cap=29524)) == 29524
    assert len(enumerate_words(trivial_poset([PI]), 99, node_cap=100)) == 100
    assert enumerate_words(trivial_poset([]), 10**9) == [()]


def test_chron_window_of_length_one(chron):
    graph = build_word_poset(chron, 1)
    assert graph.words == ((), (PI,), (PHI,))
    assert graph.covers == ((0, 2), (1, 0))
    assert graph.components == ((0, 1, 2),)
    assert minimal_words(graph, graph.components[0]) == [1]


def test_trivial_window_splits_by_length(prod):
    graph = build_word_poset(prod, 2)
    assert graph.components == ((0,), (1, 2), (3, 4, 5, 6))
    for i, j in graph.covers:
        assert len(graph.words[i]) == len(graph.words[j])


def test_fixed_length_layer_contains_product_order(prod, chron, morph):
    for aug in (prod, chron, morph):
        graph = build_word_poset(aug, 3)
        for (i, v), (j, w) in itertools.product(enumerate(graph.words), repeat=2):
            if len(v) != len(w):
                continue
            if product_leq(aug.working, v, w):
                assert graph.leq[i, j]
            if len(v) == 1 or aug is not chron:
                assert bool(graph.leq[i, j]) == product_leq(aug.working, v, w)


def test_chron_orders_equal_length_words_beyond_the_product(chron):
    v, w = (PI, PHI, PI), (PHI, PI, PHI)
    assert not product_leq(chron.working, v, w)
    assert leq_induced(chron, v, w)
    assert leq_chronological(v, w)
    assert leq_bruteforce(chron, v, w)
    assert witness(chron, v, w) == AlignmentWitness((PI, PHI, PI, ETA), (ETA, PHI, PI, PHI))


def test_morph_window_is_connected(morph):
    graph = build_word_poset(morph, 3)
    assert len(graph.components) == 1
    assert minimal_words(graph, graph.components[0]) == [0]


def test_empty_working_alphabet():
    graph = build_word_poset(augment_raising(trivial_poset([]), ETA), 4)
    assert graph.words == ((),)
    assert graph.covers == ()
    assert graph.components == ((0,),)


def test_partition_components_by_bar_count():
    aug = augment_partition(trivial_poset([PHI]), ETA, PI)
    graph = build_word_poset(aug, 4)
    assert len(graph.components) == 5
    for comp in graph.components:
        bars = {graph.words[i].count(PI) for i in comp}
        assert len(bars) == 1
        assert [graph.words[i] for i in minimal_words(graph, comp)] == [(PI,) * bars.pop()]


@pytest.mark.parametrize("aug_name", ["chron", "morph", "prod"])
def test_covers_match_networkx_reduction(aug_name, request):
    aug = request.getfixturevalue(aug_name)
    graph = build_word_poset(aug, 3)
    g = nx.DiGraph()
    g.add_nodes_from(range(len(graph)))
    g.add_edges_from(
        (i, j) for i, j in itertools.product(range(len(graph)), repeat=2) if i != j and graph.leq[i, j]
    )
    assert set(nx.transitive_reduction(g).edges()) == set(graph.covers)

    closure = np.zeros_like(graph.leq)
    for i, j in graph.covers:
        closure[i, j] = True
    assert np.array_equal(transitive_closure(closure), graph.leq)


def test_transitive_reduction_small_tables():
    assert transitive_reduction(chain(["a", "b", "c"]).leq_table) == [(0, 1), (1, 2)]
    assert transitive_reduction(trivial_poset(["a", "b", "c"]).leq_table) == []
    with pytest.raises(NotAPoset):
        transitive_reduction(np.ones((2, 2), dtype=bool))


def test_union_find():
    sets = UnionFind(6)
    sets.union(4, 2)
    sets.union(5, 1)
    sets.union(2, 5)
    assert sets.find(4) == 1
    assert sets.components() == [[0], [1, 2, 4, 5], [3]]
    assert connected_components(3, []) == [[0], [1], [2]]
    assert connected_components(4, [(3, 1), (2, 0)]) == [[0, 2], [1, 3]]


def test_build_is_deterministic(chron):
    first, second = build_word_poset(chron, 3), build_word_poset(chron, 3)
    assert first == second
    assert first.leq.flags.writeable is False


def test_parallel_fill_matches_serial(chron):
    assert build_word_poset(chron, 3, workers=2) == build_word_poset(chron, 3, workers=1)


def test_leq_matches_comparator(chron):
    graph = build_word_poset(chron, 2)
    for (i, v), (j, w) in itertools.product(enumerate(graph.words), repeat=2):
        assert bool(graph.leq[i, j]) == leq_induced(chron, v, w)


def test_labels_and_frames(chron):
    assert word_separator([("a", "b")]) == ""
    assert word_separator([(PI, PHI)]) == "."
    assert render_word(()) == "ε"
    assert render_word((PI, PHI)) == "pi.phi"

    graph = build_word_poset(chron, 1)
    assert word_labels(graph) == ["ε", "pi", "phi"]
    frame = leq_frame(graph)
    assert bool(frame.loc["pi", "phi"]) and not bool(frame.loc["phi", "pi"])

    table = components_frame(graph)
    assert list(table.columns) == ["component", "size", "minimal", "words"]
    assert table.iloc[0].to_dict() == {"component": 0, "size": 3, "minimal": "pi", "words": "ε pi phi"}
