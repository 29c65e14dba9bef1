"""Augmented alphabets: a poset plus the auxiliary letter whose deletion yields
the working alphabet the words are written in.

All constructors go through ``augment_custom`` except the principal
construction (any existing letter may be deleted) and the chronological join,
whose working order is the ordinal sum A < B rather than the input union.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from errors import (
    AugmentationDistorts,
    DegenerateBounds,
    LetterCollision,
    NoGreatest,
    NoLeast,
    UnknownLetter,
)
from poset_core import (
    Letter,
    Poset,
    check_letter,
    delete_element,
    dual,
    greatest,
    least,
    poset_from_relations,
    strict_pairs,
    trivial_poset,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Augmentation:
    poset: Poset
    aux: Letter
    working: Poset = field(init=False, repr=False)

    def __post_init__(self):
        self.poset.index(self.aux)
        object.__setattr__(self, "working", delete_element(self.poset, self.aux))


class ConeLabel(str, Enum):
    CONE_A = "cone-a"
    CONE_B = "cone-b"
    ORIGIN = "origin"
    ELSEWHERE = "elsewhere"


def _fresh(p: Poset, *letters: Letter) -> None:
    for x in letters:
        check_letter(x)
        if x in p:
            raise LetterCollision(f"Auxiliary letter {x!r} already belongs to {list(p.elements)}")
    if len(set(letters)) != len(letters):
        raise LetterCollision(f"Auxiliary letters must be distinct, got {list(letters)}")


def _in_order(p: Poset, letters: Iterable[Letter]) -> list:
    wanted = set(letters)
    for x in wanted:
        p.index(x)
    return [x for x in p.elements if x in wanted]


# ========== Constructors ==========
def principal(p: Poset, a: Letter) -> Augmentation:
    """Delete an existing letter ``a`` of ``p``; words are over the rest."""
    return Augmentation(p, a)


def augment_custom(
    p: Poset,
    e: Letter,
    below: Iterable[Letter] = (),
    above: Iterable[Letter] = (),
) -> Augmentation:
    """Add ``e`` above every letter of ``below`` and below every letter of ``above``.

    The closure may not relate two letters of ``p`` that ``p`` leaves
    incomparable; such choices raise AugmentationDistorts.
    """
    _fresh(p, e)
    below, above = _in_order(p, below), _in_order(p, above)
    pairs = strict_pairs(p) + [(x, e) for x in below] + [(e, y) for y in above]
    aug = Augmentation(poset_from_relations(p.elements + (e,), pairs), e)
    if aug.working != p:
        added = [(x, y) for x, y in strict_pairs(aug.working) if (x, y) not in set(strict_pairs(p))]
        raise AugmentationDistorts(
            f"Placing {e} above {below} and below {above} adds {added} to the alphabet order"
        )
    log.debug("Augmented %s with %s (below=%s, above=%s)", list(p.elements), e, below, above)
    return aug


def augment_raising(p: Poset, e: Letter) -> Augmentation:
    return augment_custom(p, e, above=p.elements)


def augment_trivial(p: Poset, e: Letter) -> Augmentation:
    return augment_custom(p, e)


def augment_morph(letters: Sequence[Letter], e: Letter) -> Augmentation:
    """Raising augmentation of the unordered set ``letters`` (subsequence order)."""
    return augment_raising(trivial_poset(letters), e)


def augment_span(p: Poset, e: Letter) -> Augmentation:
    """Put ``e`` strictly between the least and the greatest letter of ``p``."""
    bottom, top = least(p), greatest(p)
    if bottom is None:
        raise NoLeast(f"{p!r} has no least element")
    if top is None:
        raise NoGreatest(f"{p!r} has no greatest element")
    if bottom == top:
        raise DegenerateBounds(f"Least and greatest element coincide ({bottom}); {e} cannot sit between")
    return augment_custom(p, e, below=[bottom], above=[top])


def augment_partition(p: Poset, e: Letter, bar: Letter) -> Augmentation:
    """Partition poset: ``e`` below every letter of ``p``; ``bar`` joins the
    working alphabet unrelated to anything."""
    _fresh(p, e, bar)
    with_bar = poset_from_relations(p.elements + (bar,), strict_pairs(p))
    return augment_custom(with_bar, e, above=p.elements)


def join_chron(pA: Poset, pB: Poset, e: Letter) -> Augmentation:
    """Union of ``pA`` and ``pB`` complemented by A < e < B."""
    overlap = set(pA.elements) & set(pB.elements)
    if overlap:
        raise LetterCollision(f"Sides of a chronological join share letters {sorted(overlap)}")
    _fresh(pA, e)
    _fresh(pB, e)
    pairs = (
        strict_pairs(pA)
        + strict_pairs(pB)
        + [(a, e) for a in pA.elements]
        + [(e, b) for b in pB.elements]
    )
    return Augmentation(poset_from_relations(pA.elements + pB.elements + (e,), pairs), e)


def dual_augmentation(aug: Augmentation) -> Augmentation:
    return Augmentation(dual(aug.poset), aux=aug.aux)


# ========== Cones ==========
def classify_cone(word: Sequence[Letter], pA: Poset, pB: Poset) -> ConeLabel:
    """Place a word over A ∪ B: all-A, all-B, empty, or mixed."""
    overlap = set(pA.elements) & set(pB.elements)
    if overlap:
        raise LetterCollision(f"Cone sides share letters {sorted(overlap)}")
    sides = set()
    for x in word:
        if x in pA:
            sides.add("A")
        elif x in pB:
            sides.add("B")
        else:
            raise UnknownLetter(f"Letter {x!r} is in neither side")
    if not sides:
        return ConeLabel.ORIGIN
    if sides == {"A"}:
        return ConeLabel.CONE_A
    if sides == {"B"}:
        return ConeLabel.CONE_B
    return ConeLabel.ELSEWHERE
