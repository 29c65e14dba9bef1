import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from errors import (
    CarrierMismatch,
    CycleDetected,
    DuplicateElement,
    InvalidLetter,
    LengthMismatch,
    NotAPoset,
    SizeLimit,
    UnknownLetter,
)
from poset_core import (
    PosetMap,
    chain,
    check_partial_order,
    covers,
    delete_element,
    dual,
    enumerate_maps,
    enumerate_posets,
    greatest,
    is_homomorphism,
    is_suborder,
    least,
    leq,
    poset_from_relations,
    product_leq,
    restrict,
    transitive_closure,
    trivial_poset,
)

from conftest import ETA, PHI, PI


def test_chain_is_closed():
    p = poset_from_relations([PI, ETA, PHI], [(PI, ETA), (ETA, PHI)])
    assert leq(p, PI, PHI)
    assert not leq(p, PHI, PI)
    check_partial_order(p.leq_table)


def test_trivial_poset_is_reflexive_only():
    p = poset_from_relations([PI, PHI], [])
    assert leq(p, PI, PI) and leq(p, PHI, PHI)
    assert not leq(p, PI, PHI) and not leq(p, PHI, PI)


def test_cycle_is_rejected():
    with pytest.raises(CycleDetected):
        poset_from_relations(["a", "b"], [("a", "b"), ("b", "a")])


def test_longer_cycle_is_rejected():
    with pytest.raises(CycleDetected):
        poset_from_relations(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")])


@pytest.mark.parametrize(
    "elements, pairs, error",
    [
        (["a", "a"], [], DuplicateElement),
        (["a"], [("a", "z")], UnknownLetter),
        (["a b"], [], InvalidLetter),
        (["a.b"], [], InvalidLetter),
        (["ε"], [], InvalidLetter),
        (["@"], [], InvalidLetter),
        ([""], [], InvalidLetter),
        ([f"x{i}" for i in range(65)], [], SizeLimit),
    ],
)
def test_bad_construction(elements, pairs, error):
    with pytest.raises(error):
        poset_from_relations(elements, pairs)


def test_leq_unknown_letter():
    with pytest.raises(UnknownLetter):
        leq(chain([PI, PHI]), PI, "zeta")


def test_covers(diamond):
    assert covers(chain([PI, ETA, PHI])) == [(PI, ETA), (ETA, PHI)]
    assert covers(trivial_poset([PI, PHI])) == []
    assert covers(diamond) == [("bot", "a"), ("bot", "b"), ("a", "top"), ("b", "top")]
    assert leq(diamond, "bot", "top")


def test_product_leq():
    p = chain([PI, ETA, PHI])
    assert product_leq(p, [PI, PI], [PHI, PHI])
    assert product_leq(p, [PI, ETA], [PI, ETA])
    assert product_leq(p, [], [])
    assert not product_leq(chain([PI, PHI]), [PI, PHI], [PHI, PI])
    with pytest.raises(LengthMismatch):
        product_leq(p, [PI], [PI, PHI])


def test_delete_element():
    p = delete_element(chain([PI, ETA, PHI]), ETA)
    assert p.elements == (PI, PHI)
    assert leq(p, PI, PHI)
    assert len(delete_element(trivial_poset(["e"]), "e")) == 0
    assert delete_element(trivial_poset([PI, PHI, ETA]), ETA) == trivial_poset([PI, PHI])
    with pytest.raises(UnknownLetter):
        delete_element(p, ETA)


def test_restrict_keeps_element_order():
    p = restrict(chain(["a", "b", "c"]), ["c", "a"])
    assert p.elements == ("a", "c")
    assert leq(p, "a", "c")


def test_homomorphisms():
    p = chain([PI, ETA, PHI])
    ident = PosetMap(p, p, {x: x for x in p})
    assert is_homomorphism(ident)
    two = chain(["0", "1"])
    assert is_homomorphism(PosetMap(p, two, {PI: "0", ETA: "0", PHI: "1"}))
    assert not is_homomorphism(PosetMap(chain([PI, PHI]), trivial_poset(["x", "y"]), {PI: "x", PHI: "y"}))
    with pytest.raises(UnknownLetter):
        PosetMap(p, two, {PI: "0"})


def test_map_word_drops_target_aux():
    p, q = chain(["a", "e", "b"]), chain(["A", "E"])
    m = PosetMap(p, q, {"a": "A", "e": "E", "b": "E"})
    assert m.apply_word(("a", "b", "a")) == ("A", "E", "A")
    assert m.apply_word(("a", "b", "a"), drop="E") == ("A", "A")


def test_enumerate_maps_counts():
    assert sum(1 for _ in enumerate_maps(trivial_poset(["a", "b"]), chain(["x", "y", "z"]))) == 9


def test_least_and_greatest(diamond):
    p = chain([PI, ETA, PHI])
    assert least(p) == PI and greatest(p) == PHI
    assert least(trivial_poset([PI, PHI])) is None
    assert greatest(trivial_poset([PI, PHI])) is None
    assert least(trivial_poset([])) is None
    assert (least(diamond), greatest(diamond)) == ("bot", "top")


def test_dual():
    p = chain([PI, ETA, PHI])
    assert dual(p).elements == p.elements
    assert covers(dual(p)) == [(ETA, PI), (PHI, ETA)]
    assert leq(dual(p), PHI, PI)
    assert dual(trivial_poset([PI, PHI])) == trivial_poset([PI, PHI])
    assert dual(dual(p)) == p


def test_is_suborder():
    assert is_suborder(trivial_poset([PI, PHI]), chain([PI, PHI]))
    assert not is_suborder(chain([PI, PHI]), trivial_poset([PI, PHI]))
    assert is_suborder(chain([PI, PHI]), chain([PI, PHI]))
    assert is_suborder(trivial_poset([PHI, PI]), chain([PI, PHI]))
    with pytest.raises(CarrierMismatch):
        is_suborder(chain([PI, PHI]), chain([PI, ETA]))


def test_enumerate_posets_counts():
    # labeled posets on 0..5 points
    assert [sum(1 for _ in enumerate_posets("abcde"[:n])) for n in range(6)] == [1, 1, 3, 19, 219, 4231]
    with pytest.raises(SizeLimit):
        next(enumerate_posets("abcdef"))


def test_five_letter_posets_are_distinct_and_round_trip():
    seen = set()
    for p in enumerate_posets(("a", "b", "c", "d", "e")):
        check_partial_order(p.leq_table)
        assert poset_from_relations(p.elements, covers(p)) == p
        seen.add(p)
    assert len(seen) == 4231


@pytest.mark.parametrize("p", list(enumerate_posets(("a", "b", "c", "d"))), ids=repr)
def test_covers_close_back_to_order(p):
    assert poset_from_relations(p.elements, covers(p)) == p
    assert {(y, x) for x, y in covers(p)} == set(covers(dual(p)))


def test_check_partial_order_rejects():
    with pytest.raises(NotAPoset):
        check_partial_order(np.zeros((2, 2), dtype=bool))
    with pytest.raises(NotAPoset):
        check_partial_order(np.ones((2, 2), dtype=bool))
    not_transitive = np.eye(3, dtype=bool)
    not_transitive[0, 1] = not_transitive[1, 2] = True
    with pytest.raises(NotAPoset):
        check_partial_order(not_transitive)


@given(st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5)), max_size=8))
def test_random_relations_close_to_a_poset_or_cycle(pairs):
    letters = [f"x{i}" for i in range(6)]
    named = [(letters[i], letters[j]) for i, j in pairs]
    try:
        p = poset_from_relations(letters, named)
    except CycleDetected:
        return
    check_partial_order(p.leq_table)
    assert np.array_equal(transitive_closure(p.leq_table), p.leq_table)
    for x, y in named:
        assert leq(p, x, y)


def test_product_leq_length_one_matches_leq():
    for p in enumerate_posets(("a", "b", "c")):
        for x, y in itertools.product(p.elements, repeat=2):
            assert product_leq(p, [x], [y]) == leq(p, x, y)
