"""Finite posets over named letters.

A Poset keeps its carrier as an ordered tuple of names and its order as a
read-only numpy boolean matrix, ``leq_table[i, j] == True`` iff
``elements[i] <= elements[j]``. The element order is the canonical iteration
and serialization order everywhere in the package.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Optional, Sequence

import numpy as np

from config import EPSILON_LABEL, EPSILON_TOKEN, MAX_POSET_SIZE, WORD_SEPARATOR
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

log = logging.getLogger(__name__)

Letter = str
Word = tuple  # tuple[Letter, ...]


def check_letter(name: Letter) -> Letter:
    if not isinstance(name, str) or not name:
        raise InvalidLetter(f"Letter names must be non-empty strings, got {name!r}")
    if any(ch.isspace() for ch in name) or WORD_SEPARATOR in name:
        raise InvalidLetter(f"Letter name {name!r} contains whitespace or '{WORD_SEPARATOR}'")
    if name in (EPSILON_LABEL, EPSILON_TOKEN):
        raise InvalidLetter(f"{name!r} is reserved for the empty word")
    return name


# --- Order tables ---
def _bool_square(table: np.ndarray) -> np.ndarray:
    # path counts are exact in float32 below 2**24 rows
    as_float = table.astype(np.float32)
    return (as_float @ as_float) > 0


def transitive_closure(table: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure (Warshall, one numpy row update per pivot)."""
    closed = np.array(table, dtype=bool, copy=True)
    np.fill_diagonal(closed, True)
    for k in range(len(closed)):
        closed |= np.outer(closed[:, k], closed[k, :])
    return closed


def check_partial_order(table: np.ndarray) -> None:
    """Raise NotAPoset unless ``table`` is reflexive, antisymmetric and transitive."""
    table = np.asarray(table, dtype=bool)
    if table.ndim != 2 or table.shape[0] != table.shape[1]:
        raise NotAPoset(f"Order table must be square, got shape {table.shape}")
    n = len(table)
    eye = np.eye(n, dtype=bool)
    if not table[eye].all():
        raise NotAPoset("Order table is not reflexive")
    if (table & table.T & ~eye).any():
        raise NotAPoset("Order table is not antisymmetric")
    if n and (_bool_square(table) & ~table).any():
        raise NotAPoset("Order table is not transitive")


def strict_covers(table: np.ndarray) -> np.ndarray:
    """Covering matrix: x < y with nothing strictly between (table must be a poset)."""
    table = np.asarray(table, dtype=bool)
    strict = table & ~np.eye(len(table), dtype=bool)
    if not len(table):
        return strict
    return strict & ~_bool_square(strict)


# ========== Poset ==========
@dataclass(frozen=True, eq=False)
class Poset:
    elements: tuple
    leq_table: np.ndarray = field(repr=False)

    def __post_init__(self):
        elements = tuple(self.elements)
        table = np.array(self.leq_table, dtype=bool, copy=True).reshape(len(elements), len(elements))
        table.setflags(write=False)
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "leq_table", table)
        object.__setattr__(self, "_positions", {x: i for i, x in enumerate(elements)})

    def index(self, x: Letter) -> int:
        try:
            return self._positions[x]
        except KeyError:
            raise UnknownLetter(f"Letter {x!r} is not in {list(self.elements)}") from None

    def __contains__(self, x) -> bool:
        return x in self._positions

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and np.array_equal(self.leq_table, other.leq_table)

    def __hash__(self) -> int:
        return hash((self.elements, self.leq_table.tobytes()))

    def __repr__(self) -> str:
        rel = ", ".join(f"{x}<{y}" for x, y in covers(self))
        return f"Poset({list(self.elements)}; {rel or 'trivial'})"


def poset_from_relations(elements: Sequence[Letter], pairs: Iterable[tuple]) -> Poset:
    """Close generator pairs ``(x, y)`` meaning x <= y into a poset on ``elements``."""
    elements = tuple(check_letter(x) for x in elements)
    seen = set()
    for x in elements:
        if x in seen:
            raise DuplicateElement(f"Letter {x!r} appears more than once")
        seen.add(x)
    if len(elements) > MAX_POSET_SIZE:
        raise SizeLimit(f"Posets are capped at {MAX_POSET_SIZE} elements, got {len(elements)}")

    positions = {x: i for i, x in enumerate(elements)}
    table = np.eye(len(elements), dtype=bool)
    for x, y in pairs:
        for letter in (x, y):
            if letter not in positions:
                raise UnknownLetter(f"Relation ({x}, {y}) mentions unknown letter {letter!r}")
        table[positions[x], positions[y]] = True

    closed = transitive_closure(table)
    both_ways = closed & closed.T & ~np.eye(len(elements), dtype=bool)
    if both_ways.any():
        i, j = np.argwhere(both_ways)[0]
        raise CycleDetected(f"Relations force {elements[i]} <= {elements[j]} <= {elements[i]}")
    log.debug("Closed %d generator pairs over %d letters", int(table.sum()) - len(elements), len(elements))
    return Poset(elements, closed)


def trivial_poset(elements: Sequence[Letter]) -> Poset:
    return poset_from_relations(elements, [])


def chain(elements: Sequence[Letter]) -> Poset:
    return poset_from_relations(elements, zip(elements, elements[1:]))


# --- Queries ---
def leq(p: Poset, x: Letter, y: Letter) -> bool:
    return bool(p.leq_table[p.index(x), p.index(y)])


def covers(p: Poset) -> list:
    """Covering pairs of ``p`` in element-list order."""
    return [(p.elements[i], p.elements[j]) for i, j in np.argwhere(strict_covers(p.leq_table))]


def strict_pairs(p: Poset) -> list:
    n = len(p)
    return [
        (p.elements[i], p.elements[j])
        for i in range(n)
        for j in range(n)
        if i != j and p.leq_table[i, j]
    ]


def product_leq(p: Poset, xs: Sequence[Letter], ys: Sequence[Letter]) -> bool:
    """Componentwise order of A^n."""
    if len(xs) != len(ys):
        raise LengthMismatch(f"Cannot compare tuples of length {len(xs)} and {len(ys)}")
    table = p.leq_table
    return all(table[p.index(x), p.index(y)] for x, y in zip(xs, ys))


def least(p: Poset) -> Optional[Letter]:
    for i, x in enumerate(p.elements):
        if p.leq_table[i, :].all():
            return x
    return None


def greatest(p: Poset) -> Optional[Letter]:
    for i, x in enumerate(p.elements):
        if p.leq_table[:, i].all():
            return x
    return None


# --- Derived posets ---
def delete_element(p: Poset, a: Letter) -> Poset:
    """Restriction of ``p`` to its carrier minus ``a``."""
    drop = p.index(a)
    keep = [i for i in range(len(p)) if i != drop]
    return Poset(tuple(p.elements[i] for i in keep), p.leq_table[np.ix_(keep, keep)])


def restrict(p: Poset, letters: Iterable[Letter]) -> Poset:
    """Induced subposet on ``letters``, kept in ``p``'s element order."""
    wanted = set(letters)
    for x in wanted:
        p.index(x)
    keep = [i for i, x in enumerate(p.elements) if x in wanted]
    return Poset(tuple(p.elements[i] for i in keep), p.leq_table[np.ix_(keep, keep)])


def dual(p: Poset) -> Poset:
    return Poset(p.elements, p.leq_table.T)


def is_suborder(p: Poset, q: Poset) -> bool:
    """True iff every relation of ``p`` also holds in ``q`` (same carrier)."""
    if set(p.elements) != set(q.elements) or len(p) != len(q):
        raise CarrierMismatch(f"Carriers differ: {list(p.elements)} vs {list(q.elements)}")
    order = [q.index(x) for x in p.elements]
    q_table = q.leq_table[np.ix_(order, order)]
    return not (p.leq_table & ~q_table).any()


def enumerate_posets(letters: Sequence[Letter]) -> Iterator[Poset]:
    """Every partial order on the labeled carrier ``letters`` (at most 5 letters).

    Each order on all but the last letter is grown by a down-set and a disjoint
    up-set for the last letter, with every down-set member below every up-set member.
    """
    letters = tuple(letters)
    n = len(letters)
    if n > 5:
        raise SizeLimit(f"Exhaustive poset enumeration is limited to 5 letters, got {n}")
    if n == 0:
        yield Poset((), np.zeros((0, 0), dtype=bool))
        return
    masks = [np.array(m, dtype=bool) for m in itertools.product((False, True), repeat=n - 1)]
    for p in enumerate_posets(letters[:-1]):
        table = p.leq_table
        downs = [m for m in masks if not (table[:, m].any(axis=1) & ~m).any()]
        ups = [m for m in masks if not (table[m, :].any(axis=0) & ~m).any()]
        for down in downs:
            for up in ups:
                if (down & up).any() or (np.outer(down, up) & ~table).any():
                    continue
                grown = np.eye(n, dtype=bool)
                grown[:-1, :-1] = table
                grown[:-1, -1] = down
                grown[-1, :-1] = up
                yield Poset(letters, grown)


# ========== Maps ==========
@dataclass(frozen=True)
class PosetMap:
    source: Poset
    target: Poset
    assignment: Mapping

    def __post_init__(self):
        for x in self.source.elements:
            if x not in self.assignment:
                raise UnknownLetter(f"Map is not defined on source letter {x!r}")
            self.target.index(self.assignment[x])

    def __call__(self, x: Letter) -> Letter:
        self.source.index(x)
        return self.assignment[x]

    def apply_word(self, word: Sequence[Letter], drop: Optional[Letter] = None) -> Word:
        """Letter-wise image of ``word``; occurrences of ``drop`` in the image are erased."""
        image = (self(x) for x in word)
        return tuple(y for y in image if y != drop)


def is_homomorphism(m: PosetMap) -> bool:
    src, dst = m.source, m.target
    for i, x in enumerate(src.elements):
        for j, y in enumerate(src.elements):
            if src.leq_table[i, j] and not leq(dst, m(x), m(y)):
                return False
    return True


def enumerate_maps(source: Poset, target: Poset) -> Iterator[PosetMap]:
    for images in itertools.product(target.elements, repeat=len(source)):
        yield PosetMap(source, target, dict(zip(source.elements, images)))
