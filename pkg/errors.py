"""Exceptions raised by the word-order modules.

Everything derives from WordOrderError, itself a ValueError, so callers that
only care about "bad input" can catch ValueError.
"""


class WordOrderError(ValueError):
    pass


# --- Posets ---
class InvalidLetter(WordOrderError):
    pass


class DuplicateElement(WordOrderError):
    pass


class UnknownLetter(WordOrderError):
    pass


class CycleDetected(WordOrderError):
    pass


class LengthMismatch(WordOrderError):
    pass


class CarrierMismatch(WordOrderError):
    pass


class NotAPoset(WordOrderError):
    pass


# --- Augmentations ---
class LetterCollision(WordOrderError):
    pass


class AugmentationDistorts(WordOrderError):
    pass


class NoLeast(WordOrderError):
    pass


class NoGreatest(WordOrderError):
    pass


class DegenerateBounds(WordOrderError):
    pass


# --- Words and comparators ---
class AuxInWord(WordOrderError):
    pass


class WrongAlphabet(WordOrderError):
    pass


class SizeLimit(WordOrderError):
    pass


# --- Spec files ---
class ParseError(WordOrderError):
    pass


class ValidationError(WordOrderError):
    pass
