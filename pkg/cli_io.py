"""Alphabet spec files, DOT/JSON export and the command-line driver.

    python cli_io.py compare specs/chron.json pi @ --witness
    python cli_io.py hasse specs/chron.json --max-len 3 --format dot > chron.gv
    dot -Tpng -O chron.gv
"""
from __future__ import annotations

import argparse
import itertools
import json
import logging
import sys
from typing import Annotated, List, Literal, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd
import pydantic
from pydantic import BaseModel, ConfigDict, Field, model_validator

import config
from augmentation import (
    Augmentation,
    ConeLabel,
    augment_custom,
    augment_partition,
    augment_raising,
    augment_span,
    augment_trivial,
    classify_cone,
    join_chron,
    principal,
)
from errors import ParseError, ValidationError, WordOrderError
from induced_order import AlignmentWitness, leq_induced, witness
from poset_core import Poset, Word, poset_from_relations, restrict, transitive_closure
from word_poset import (
    WordPosetGraph,
    build_word_poset,
    components_frame,
    word_labels,
)

log = logging.getLogger(__name__)


# ========== Spec file schema ==========
class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


class CustomConstruction(_Strict):
    kind: Literal["custom"]
    aux: str
    below: List[str] = []
    above: List[str] = []


class RaisingConstruction(_Strict):
    kind: Literal["raising"]
    aux: str


class TrivialConstruction(_Strict):
    kind: Literal["trivial"]
    aux: str


class SpanConstruction(_Strict):
    kind: Literal["span"]
    aux: str


class PartitionConstruction(_Strict):
    kind: Literal["partition"]
    aux: str
    bar: str


class ChronJoinConstruction(_Strict):
    kind: Literal["chron-join"]
    aux: str
    b_side: List[str]


Construction = Annotated[
    Union[
        CustomConstruction,
        RaisingConstruction,
        TrivialConstruction,
        SpanConstruction,
        PartitionConstruction,
        ChronJoinConstruction,
    ],
    Field(discriminator="kind"),
]


class AlphabetSpec(_Strict):
    letters: List[str]
    relations: List[Tuple[str, str]] = []
    auxiliary: Optional[str] = None
    construction: Optional[Construction] = None

    @model_validator(mode="after")
    def _consistent(self):
        names = set(self.letters)
        if len(names) != len(self.letters):
            raise ValueError(f"duplicate letter names in {self.letters}")
        for x, y in self.relations:
            for name in (x, y):
                if name not in names:
                    raise ValueError(f"relation ({x}, {y}) mentions unknown letter {name!r}")

        c = self.construction
        if c is None:
            if self.auxiliary is not None and self.auxiliary not in names:
                raise ValueError(f"auxiliary {self.auxiliary!r} is not one of the letters")
            return self
        if self.auxiliary is not None and self.auxiliary != c.aux:
            raise ValueError(f"auxiliary {self.auxiliary!r} disagrees with construction aux {c.aux!r}")
        if c.aux in names:
            raise ValueError(f"construction aux {c.aux!r} must be a new letter")
        for name in getattr(c, "below", []) + getattr(c, "above", []) + getattr(c, "b_side", []):
            if name not in names:
                raise ValueError(f"construction mentions unknown letter {name!r}")
        if isinstance(c, PartitionConstruction) and c.bar in names | {c.aux}:
            raise ValueError(f"bar letter {c.bar!r} must be new and distinct from aux")
        if isinstance(c, ChronJoinConstruction):
            b_side = set(c.b_side)
            crossing = [(x, y) for x, y in self.relations if (x in b_side) != (y in b_side)]
            if crossing:
                raise ValueError(f"relations {crossing} cross the two sides of the join")
        return self


def parse_alphabet_spec(text: str) -> AlphabetSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"Malformed alphabet spec: {e}") from e
    try:
        return AlphabetSpec.model_validate(data)
    except pydantic.ValidationError as e:
        raise ValidationError(f"Invalid alphabet spec: {e}") from e


class SpecLoader:
    def __init__(self, path: str):
        self.path = path
        try:
            with open(path, encoding="utf-8") as f:
                self.spec = parse_alphabet_spec(f.read())
        except (OSError, UnicodeDecodeError) as e:
            raise ParseError(f"Failed to read alphabet spec {path}: {e}") from e

    def poset(self) -> Poset:
        """The letters and relations of the file, as a poset."""
        return spec_poset(self.spec)

    def augmentation(self) -> Augmentation:
        return spec_augmentation(self.spec)


def spec_poset(spec: AlphabetSpec) -> Poset:
    return poset_from_relations(spec.letters, spec.relations)


def spec_augmentation(spec: AlphabetSpec) -> Augmentation:
    base = spec_poset(spec)
    c = spec.construction
    if c is None:
        if spec.auxiliary is None:
            raise ValidationError("Spec names neither an auxiliary letter nor a construction")
        return principal(base, spec.auxiliary)
    if isinstance(c, CustomConstruction):
        return augment_custom(base, c.aux, c.below, c.above)
    if isinstance(c, RaisingConstruction):
        return augment_raising(base, c.aux)
    if isinstance(c, TrivialConstruction):
        return augment_trivial(base, c.aux)
    if isinstance(c, SpanConstruction):
        return augment_span(base, c.aux)
    if isinstance(c, PartitionConstruction):
        return augment_partition(base, c.aux, c.bar)
    b_side = set(c.b_side)
    pA = restrict(base, [x for x in base.elements if x not in b_side])
    pB = restrict(base, b_side)
    return join_chron(pA, pB, c.aux)


# ========== Words on the command line ==========
def parse_word(token: str, letters: Sequence[str]) -> Word:
    if token == config.EPSILON_TOKEN:
        return ()
    if config.WORD_SEPARATOR in token:
        return tuple(token.split(config.WORD_SEPARATOR))
    if token in letters:
        return (token,)
    if letters and all(len(x) == 1 for x in letters):
        return tuple(token)
    return (token,)


# ========== Export ==========
def _dot_id(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(graph: WordPosetGraph) -> str:
    labels = [_dot_id(x) for x in word_labels(graph)]
    lines = ["digraph wordposet {"]
    lines.extend(f"  {label};" for label in labels)
    lines.extend(f"  {labels[i]} -> {labels[j]};" for i, j in graph.covers)
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dumps(payload: dict) -> str:
    return json.dumps(payload, ensure_ascii=False, separators=(",", ":"))


def export_json(graph: WordPosetGraph) -> str:
    return _dumps({
        "words": [list(w) for w in graph.words],
        "covers": [[i, j] for i, j in graph.covers],
        "components": [list(c) for c in graph.components],
    })


def export_witness_json(wit: AlignmentWitness) -> str:
    return _dumps({"left": list(wit.left), "right": list(wit.right)})


def parse_graph_json(text: str) -> WordPosetGraph:
    """Inverse of export_json; the order table is the closure of the covers."""
    try:
        data = json.loads(text)
        words = [tuple(w) for w in data["words"]]
        covers = [(int(i), int(j)) for i, j in data["covers"]]
        components = [[int(i) for i in c] for c in data["components"]]
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
        raise ParseError(f"Malformed word-poset JSON: {e}") from e
    size = len(words)
    stray = [i for i in itertools.chain.from_iterable(covers + components) if not 0 <= i < size]
    if stray:
        raise ParseError(f"Word-poset JSON refers to word indices {stray} outside 0..{size - 1}")
    table = np.zeros((len(words), len(words)), dtype=bool)
    for i, j in covers:
        table[i, j] = True
    return WordPosetGraph(words, transitive_closure(table), covers, components)


# ========== CLI ==========
def _cone_name(label: ConeLabel, future: str) -> str:
    if label is ConeLabel.CONE_A:
        return "future" if future == "A" else "past"
    if label is ConeLabel.CONE_B:
        return "future" if future == "B" else "past"
    return label.value


def _cmd_compare(args) -> int:
    aug = SpecLoader(args.spec).augmentation()
    letters = aug.working.elements
    v, w = parse_word(args.v, letters), parse_word(args.w, letters)
    result = leq_induced(aug, v, w)
    print("true" if result else "false")
    if result and args.witness:
        print(export_witness_json(witness(aug, v, w)))
    return 0 if result else 1


def _cmd_hasse(args) -> int:
    graph = build_word_poset(SpecLoader(args.spec).augmentation(), args.max_len, workers=args.workers)
    if args.format == "dot":
        sys.stdout.write(export_dot(graph))
    else:
        print(export_json(graph))
    return 0


def _cmd_components(args) -> int:
    graph = build_word_poset(SpecLoader(args.spec).augmentation(), args.max_len, workers=args.workers)
    print(components_frame(graph).to_string(index=False))
    return 0


def _cmd_classify(args) -> int:
    pA, pB = SpecLoader(args.spec_a).poset(), SpecLoader(args.spec_b).poset()
    word = parse_word(args.w, pA.elements + pB.elements)
    print(_cone_name(classify_cone(word, pA, pB), args.future))
    return 0


def _cmd_selftest(args) -> int:
    import theorem_checks

    results = theorem_checks.run_all(max_len=args.max_len)
    frame = pd.DataFrame([r.as_row() for r in results])
    print(frame.to_string(index=False))
    failed = [r.name for r in results if not r.passed]
    if failed:
        print(f"❌ {len(failed)} suite(s) failed: {', '.join(failed)}", file=sys.stderr)
        return 1
    print(f"✅ all {len(results)} suites passed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wordorders", description="Induced partial orders on words.")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    parser.add_argument("--workers", type=int, default=None, help="processes for order tables")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compare", help="decide v <= w")
    p.add_argument("spec")
    p.add_argument("v")
    p.add_argument("w")
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("hasse", help="Hasse diagram of a word window")
    p.add_argument("spec")
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.set_defaults(func=_cmd_hasse)

    p = sub.add_parser("components", help="connected pieces of a word window")
    p.add_argument("spec")
    p.add_argument("--max-len", type=int, required=True)
    p.set_defaults(func=_cmd_components)

    p = sub.add_parser("classify", help="cone of a word under A < e < B")
    p.add_argument("spec_a")
    p.add_argument("spec_b")
    p.add_argument("w")
    p.add_argument("--future", choices=["A", "B"], default="A")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("selftest", help="run the property suites")
    p.add_argument("--max-len", type=int, default=None)
    p.set_defaults(func=_cmd_selftest)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format=config.LOG_FORMAT,
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except WordOrderError as e:
        log.debug("Domain error in %s", args.command, exc_info=True)
        print(f"❌ {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
