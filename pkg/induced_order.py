"""Comparators for words over an augmented alphabet.

``leq_induced`` decides v <=_e w: equal-length e-extensions v', w' exist with
v'_i <= w'_i in the augmented poset for every column i. A witness never needs a
column (e, e) -- dropping such a column keeps every other comparison -- so the
search runs over alignments of v against w where each column either pairs two
letters, pairs e with a letter of w, or pairs a letter of v with e. That is an
O(|v|·|w|) reachability table over prefix pairs, the same shape as an edit
distance table.

``leq_bruteforce`` enumerates extensions literally and is the oracle the
alignment table is checked against.
"""
from __future__ import annotations

import itertools
import logging
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

import numpy as np

import config
from augmentation import Augmentation
from errors import AuxInWord, SizeLimit, UnknownLetter, WrongAlphabet
from poset_core import Letter, Poset, Word

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class AlignmentWitness:
    left: tuple
    right: tuple

    def __len__(self) -> int:
        return len(self.left)


def _positions(aug: Augmentation, word: Sequence[Letter]) -> list:
    """Indices of ``word``'s letters in the augmented poset."""
    out = []
    for x in word:
        if x == aug.aux:
            raise AuxInWord(f"Word {list(word)} contains the auxiliary letter {aug.aux!r}")
        if x not in aug.working:
            raise UnknownLetter(f"Letter {x!r} is not in the working alphabet {list(aug.working.elements)}")
        out.append(aug.poset.index(x))
    return out


# ========== Alignment table ==========
def _reach_table(aug: Augmentation, v: Sequence[Letter], w: Sequence[Letter]) -> list:
    vi, wi = _positions(aug, v), _positions(aug, w)
    table = aug.poset.leq_table.tolist()
    e = aug.poset.index(aug.aux)
    n, m = len(vi), len(wi)

    reach = [[False] * (m + 1) for _ in range(n + 1)]
    reach[0][0] = True
    for i in range(n + 1):
        for j in range(m + 1):
            if i == 0 and j == 0:
                continue
            if i and j and reach[i - 1][j - 1] and table[vi[i - 1]][wi[j - 1]]:
                reach[i][j] = True
            elif i and reach[i - 1][j] and table[vi[i - 1]][e]:
                reach[i][j] = True
            elif j and reach[i][j - 1] and table[e][wi[j - 1]]:
                reach[i][j] = True
    return reach


def leq_induced(aug: Augmentation, v: Sequence[Letter], w: Sequence[Letter]) -> bool:
    return _reach_table(aug, v, w)[len(v)][len(w)]


def witness(aug: Augmentation, v: Sequence[Letter], w: Sequence[Letter]) -> Optional[AlignmentWitness]:
    """A pair of aux-extensions certifying v <= w, or None.

    Traceback prefers the diagonal column, then e inserted into v, then e
    inserted into w.
    """
    reach = _reach_table(aug, v, w)
    i, j = len(v), len(w)
    if not reach[i][j]:
        return None

    p, e = aug.poset, aug.aux
    left, right = [], []
    while i or j:
        if i and j and reach[i - 1][j - 1] and p.leq_table[p.index(v[i - 1]), p.index(w[j - 1])]:
            left.append(v[i - 1])
            right.append(w[j - 1])
            i, j = i - 1, j - 1
        elif j and reach[i][j - 1] and p.leq_table[p.index(e), p.index(w[j - 1])]:
            left.append(e)
            right.append(w[j - 1])
            j -= 1
        else:
            left.append(v[i - 1])
            right.append(e)
            i -= 1
    return AlignmentWitness(tuple(reversed(left)), tuple(reversed(right)))


def strip_aux(word: Sequence[Letter], aux: Letter) -> Word:
    return tuple(x for x in word if x != aux)


# ========== Brute-force oracle ==========
def e_extensions(word: Sequence[Letter], aux: Letter, length: int) -> Iterator[Word]:
    """All words of ``length`` obtained by inserting ``aux`` into ``word``."""
    word = tuple(word)
    if length < len(word):
        return
    for slots in itertools.combinations(range(length), len(word)):
        ext = [aux] * length
        for slot, x in zip(slots, word):
            ext[slot] = x
        yield tuple(ext)


def leq_bruteforce(
    aug: Augmentation,
    v: Sequence[Letter],
    w: Sequence[Letter],
    cap: Optional[int] = None,
) -> bool:
    """Definition-level check over every extension pair up to length |v| + |w|."""
    cap = config.ORACLE_MAX_TOTAL_LEN if cap is None else cap
    _positions(aug, v)
    _positions(aug, w)
    total = len(v) + len(w)
    if total > cap:
        raise SizeLimit(f"Oracle is capped at |v| + |w| <= {cap}, got {total}")

    p = aug.poset
    for n in range(max(len(v), len(w)), total + 1):
        lefts = _extension_indices(p, v, aug.aux, n)
        rights = _extension_indices(p, w, aug.aux, n)
        # (left, right, column) -> column ordered
        columns = p.leq_table[lefts[:, None, :], rights[None, :, :]]
        if columns.all(axis=2).any():
            return True
    return False


def _extension_indices(p: Poset, word: Sequence[Letter], aux: Letter, length: int) -> np.ndarray:
    rows = [[p.index(x) for x in ext] for ext in e_extensions(word, aux, length)]
    return np.array(rows, dtype=np.intp).reshape(len(rows), length)


# ========== Reference orders ==========
def leq_morphological(v: Sequence[Letter], w: Sequence[Letter]) -> bool:
    """Subsequence test."""
    rest = iter(w)
    return all(x in rest for x in v)


def _check_chron(word: Sequence[Letter], past: Letter, future: Letter) -> None:
    stray = [x for x in word if x not in (past, future)]
    if stray:
        raise WrongAlphabet(f"Chronological order is defined over {{{past}, {future}}} only, got {stray}")


def leq_chronological(
    v: Sequence[Letter],
    w: Sequence[Letter],
    past: Letter = None,
    future: Letter = None,
) -> bool:
    """w is reachable from v by erasing ``past`` letters and inserting ``future`` letters."""
    past = past or config.CHRON_PAST
    future = future or config.CHRON_FUTURE
    _check_chron(v, past, future)
    _check_chron(w, past, future)

    n, m = len(v), len(w)
    reach = [[False] * (m + 1) for _ in range(n + 1)]
    reach[0][0] = True
    for i in range(n + 1):
        for j in range(m + 1):
            if i == 0 and j == 0:
                continue
            if i and j and reach[i - 1][j - 1] and v[i - 1] == w[j - 1]:
                reach[i][j] = True
            elif i and reach[i - 1][j] and v[i - 1] == past:
                reach[i][j] = True
            elif j and reach[i][j - 1] and w[j - 1] == future:
                reach[i][j] = True
    return reach[n][m]


# --- Single steps ---
def step_successors_morph(v: Sequence[Letter], alphabet: Poset) -> list:
    v = tuple(v)
    for x in v:
        alphabet.index(x)
    found = {}
    for pos in range(len(v) + 1):
        for x in alphabet.elements:
            found.setdefault(v[:pos] + (x,) + v[pos:], None)
    return list(found)


def step_successors_chron(v: Sequence[Letter], past: Letter = None, future: Letter = None) -> list:
    """Single erasures of ``past`` (by position), then single insertions of ``future``."""
    past = past or config.CHRON_PAST
    future = future or config.CHRON_FUTURE
    v = tuple(v)
    _check_chron(v, past, future)
    found = {}
    for pos, x in enumerate(v):
        if x == past:
            found.setdefault(v[:pos] + v[pos + 1:], None)
    for pos in range(len(v) + 1):
        found.setdefault(v[:pos] + (future,) + v[pos:], None)
    return list(found)


def chron_reachable(v: Sequence[Letter], buffer: int, past: Letter = None, future: Letter = None) -> set:
    """Words reachable from ``v`` by single steps without exceeding length ``buffer``."""
    start = tuple(v)
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for s in step_successors_chron(u, past, future):
            if len(s) <= buffer and s not in seen:
                seen.add(s)
                queue.append(s)
    return seen
