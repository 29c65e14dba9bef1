"""Finite windows of an induced word order: every word up to a length bound,
the order table between them, its Hasse diagram and connected pieces.

Covers are those of the window. A covering chain of the infinite poset that
runs through longer words shows up here as a longer edge.
"""
from __future__ import annotations

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np
import pandas as pd

import config
from augmentation import Augmentation
from errors import SizeLimit, ValidationError
from induced_order import leq_induced
from poset_core import Poset, Word, check_partial_order, strict_covers

log = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class WordPosetGraph:
    words: tuple
    leq: np.ndarray
    covers: tuple
    components: tuple

    def __post_init__(self):
        table = np.array(self.leq, dtype=bool, copy=True)
        table.setflags(write=False)
        object.__setattr__(self, "words", tuple(tuple(w) for w in self.words))
        object.__setattr__(self, "leq", table)
        object.__setattr__(self, "covers", tuple((int(i), int(j)) for i, j in self.covers))
        object.__setattr__(self, "components", tuple(tuple(int(i) for i in c) for c in self.components))

    def __eq__(self, other) -> bool:
        if not isinstance(other, WordPosetGraph):
            return NotImplemented
        return (
            self.words == other.words
            and self.covers == other.covers
            and self.components == other.components
            and np.array_equal(self.leq, other.leq)
        )

    def __len__(self) -> int:
        return len(self.words)

    def index(self, word: Sequence) -> int:
        return self.words.index(tuple(word))


# ========== Union-find ==========
class UnionFind:
    """Disjoint sets over 0..size-1 with path compression."""

    def __init__(self, size: int):
        self.parents = list(range(size))

    def find(self, elem: int) -> int:
        root = elem
        while root != self.parents[root]:
            root = self.parents[root]
        while elem != root:
            self.parents[elem], elem = root, self.parents[elem]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # smaller index stays root so roots are component minima
            self.parents[max(ra, rb)] = min(ra, rb)

    def components(self) -> list:
        groups = {}
        for i in range(len(self.parents)):
            groups.setdefault(self.find(i), []).append(i)
        return [groups[root] for root in sorted(groups)]


# ========== Operations ==========
def _window_size_exceeds(letters: int, max_len: int, node_cap: int) -> bool:
    """Whether 1 + letters + ... + letters**max_len > node_cap, without forming the sum."""
    if letters == 0:
        return node_cap < 1
    if letters == 1:
        return max_len + 1 > node_cap
    total, term = 0, 1
    for _ in range(max_len + 1):
        total += term
        if total > node_cap:
            return True
        term *= letters
    return False


def enumerate_words(alphabet: Poset, max_len: int, node_cap: Optional[int] = None) -> list:
    """Words of length 0..max_len, by length then by alphabet position."""
    node_cap = config.NODE_CAP if node_cap is None else node_cap
    if max_len < 0:
        raise ValidationError(f"max_len must be non-negative, got {max_len}")
    if _window_size_exceeds(len(alphabet), max_len, node_cap):
        raise SizeLimit(
            f"Words over {len(alphabet)} letters up to length {max_len} exceed the node cap of {node_cap}"
        )
    words = []
    for k in range(max_len + 1 if len(alphabet) else 1):
        words.extend(itertools.product(alphabet.elements, repeat=k))
    return words


def transitive_reduction(table: np.ndarray) -> list:
    """Cover edges (i, j), i < j in the order, row-major."""
    check_partial_order(table)
    return [(int(i), int(j)) for i, j in np.argwhere(strict_covers(table))]


def connected_components(size: int, edges: Iterable[tuple]) -> list:
    """Components of the undirected edge graph, ordered by their smallest index."""
    sets = UnionFind(size)
    for i, j in edges:
        sets.union(i, j)
    return sets.components()


# --- Order table ---
_worker_state = {}


def _init_worker(aug: Augmentation, words: list) -> None:
    _worker_state["aug"] = aug
    _worker_state["words"] = words


def _row(i: int) -> list:
    aug, words = _worker_state["aug"], _worker_state["words"]
    v = words[i]
    return [leq_induced(aug, v, w) for w in words]


def _fill_table(aug: Augmentation, words: list, workers: int) -> np.ndarray:
    n = len(words)
    if workers <= 1 or n < 2:
        rows = [[leq_induced(aug, v, w) for w in words] for v in words]
    else:
        chunk = max(1, n // (workers * 4))
        with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker, initargs=(aug, words)) as pool:
            rows = list(pool.map(_row, range(n), chunksize=chunk))
    return np.array(rows, dtype=bool).reshape(n, n)


def build_word_poset(
    aug: Augmentation,
    max_len: int,
    node_cap: Optional[int] = None,
    workers: Optional[int] = None,
) -> WordPosetGraph:
    workers = config.WORKERS if workers is None else workers
    words = enumerate_words(aug.working, max_len, node_cap)
    log.info("Comparing %d words pairwise (max_len=%d, workers=%d)", len(words), max_len, workers)
    table = _fill_table(aug, words, workers)
    covers = transitive_reduction(table)
    components = connected_components(len(words), covers)
    log.info("Window has %d cover edges in %d components", len(covers), len(components))
    return WordPosetGraph(words, table, covers, components)


# ========== Inspection ==========
def word_separator(words: Iterable[Word]) -> str:
    """'' when every letter is a single character, else the configured separator."""
    letters = {x for w in words for x in w}
    return "" if all(len(x) == 1 for x in letters) else config.WORD_SEPARATOR


def render_word(word: Word, sep: str = config.WORD_SEPARATOR) -> str:
    return sep.join(word) if word else config.EPSILON_LABEL


def word_labels(graph: WordPosetGraph) -> list:
    sep = word_separator(graph.words)
    return [render_word(w, sep) for w in graph.words]


def leq_frame(graph: WordPosetGraph) -> pd.DataFrame:
    labels = word_labels(graph)
    return pd.DataFrame(graph.leq, index=labels, columns=labels)


def minimal_words(graph: WordPosetGraph, component: Sequence[int]) -> list:
    members = list(component)
    return [
        i for i in members
        if not any(j != i and graph.leq[j, i] for j in members)
    ]


def components_frame(graph: WordPosetGraph) -> pd.DataFrame:
    labels = word_labels(graph)
    rows = []
    for k, comp in enumerate(graph.components):
        rows.append({
            "component": k,
            "size": len(comp),
            "minimal": " ".join(labels[i] for i in minimal_words(graph, comp)),
            "words": " ".join(labels[i] for i in comp),
        })
    return pd.DataFrame(rows, columns=["component", "size", "minimal", "words"])
