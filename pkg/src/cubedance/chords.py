"""Pitch classes, triads, and the 28-chord universe of the colored Cube Dance.

Conventions:

- pitch classes are integers 0..11 (C=0, Db=1, ..., B=11), arithmetic mod 12
- the universe has 28 chords: 12 major triads, 12 minor triads, and the 4
  augmented triad classes Caug={0,4,8}, Gaug={3,7,11}, Daug={2,6,10},
  Faug={1,5,9}; any pitch class of an augmented set names the same chord
- canonical index order: majors by root (0..11), minors by root (12..23),
  augmented Caug, Gaug, Daug, Faug (24..27); every matrix and permutation
  in this package is indexed this way
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

NUM_CHORDS = 28

# Flats for 1, 3, 8, 10 and a sharp for 6, matching the usual triad labels.
PITCH_NAMES = ("C", "Db", "D", "Eb", "E", "F", "F#", "G", "Ab", "A", "Bb", "B")

_LETTER_PCS = {"C": 0, "D": 2, "E": 4, "F": 5, "G": 7, "A": 9, "B": 11}
_ACCIDENTALS = {"#": 1, "♯": 1, "b": -1, "♭": -1}

_CHORD_RE = re.compile(r"^([A-G])([#♯b♭]?)(m|aug)?$")


class Kind(str, Enum):
    MAJOR = "major"
    MINOR = "minor"
    AUGMENTED = "augmented"


class Quadrant(str, Enum):
    """One of the four augmented regions, in the cyclic order C, G, D, F.

    ``next`` follows the direction in which U links the minor chords of a
    quadrant to the following augmented chord.
    """

    C = "C"
    G = "G"
    D = "D"
    F = "F"

    @property
    def aug_root(self) -> int:
        return _AUG_ROOTS[self.value]

    @property
    def pitch_classes(self) -> frozenset[int]:
        r = self.aug_root
        return frozenset({r % 12, (r + 4) % 12, (r + 8) % 12})

    @property
    def next(self) -> "Quadrant":
        order = QUADRANT_ORDER
        return order[(order.index(self) + 1) % 4]

    @property
    def prev(self) -> "Quadrant":
        order = QUADRANT_ORDER
        return order[(order.index(self) - 1) % 4]


QUADRANT_ORDER = (Quadrant.C, Quadrant.G, Quadrant.D, Quadrant.F)

_AUG_ROOTS = {"C": 0, "G": 7, "D": 2, "F": 5}
# pc % 4 identifies the whole-tone-spaced class a pitch class belongs to
_AUG_CLASS_BY_RESIDUE = {0: Quadrant.C, 1: Quadrant.F, 2: Quadrant.D, 3: Quadrant.G}


class ChordParseError(ValueError):
    """Raised when a chord name does not parse."""


@dataclass(frozen=True)
class Chord:
    kind: Kind
    root: int

    def __post_init__(self) -> None:
        if not 0 <= self.root < 12:
            raise ValueError(f"pitch class out of range: {self.root}")
        if self.kind is Kind.AUGMENTED and self.root not in _AUG_ROOTS.values():
            raise ValueError(
                f"augmented root must be canonical (0, 7, 2 or 5), got {self.root}"
            )

    @property
    def name(self) -> str:
        if self.kind is Kind.MAJOR:
            return PITCH_NAMES[self.root]
        if self.kind is Kind.MINOR:
            return PITCH_NAMES[self.root] + "m"
        return PITCH_NAMES[self.root] + "aug"

    def __str__(self) -> str:
        return self.name


def major(root: int) -> Chord:
    return Chord(Kind.MAJOR, root % 12)


def minor(root: int) -> Chord:
    return Chord(Kind.MINOR, root % 12)


def augmented(pc: int) -> Chord:
    """The augmented chord class containing pitch class ``pc``."""
    quadrant_of_pc = _AUG_CLASS_BY_RESIDUE[pc % 12 % 4]
    return Chord(Kind.AUGMENTED, quadrant_of_pc.aug_root)


def parse_chord(text: str) -> Chord:
    """Parse ``letter [accidental] [suffix]`` into a canonical chord.

    Suffix "" is major, "m" minor, "aug" augmented.  Enharmonics collapse
    ("Db" == "C#"), and any member pitch class of an augmented set names the
    class ("Eaug" -> "Caug").
    """
    token = text.strip()
    m = _CHORD_RE.match(token)
    if m is None:
        raise ChordParseError(f"not a chord name: {token!r}")
    letter, accidental, suffix = m.groups()
    pc = (_LETTER_PCS[letter] + (_ACCIDENTALS[accidental] if accidental else 0)) % 12
    if suffix == "m":
        return minor(pc)
    if suffix == "aug":
        return augmented(pc)
    return major(pc)


def format_chord(c: Chord) -> str:
    return c.name


def pitch_classes(c: Chord) -> frozenset[int]:
    r = c.root
    if c.kind is Kind.MAJOR:
        third = 4
    elif c.kind is Kind.MINOR:
        third = 3
    else:
        third = 4  # augmented: {r, r+4, r+8}
    if c.kind is Kind.AUGMENTED:
        return frozenset({r, (r + 4) % 12, (r + 8) % 12})
    return frozenset({r, (r + third) % 12, (r + 7) % 12})


def quadrant(c: Chord) -> Quadrant:
    """The augmented class a chord belongs to (itself, for augmented)."""
    return _AUG_CLASS_BY_RESIDUE[c.root % 4]


def transpose(c: Chord, k: int) -> Chord:
    """Shift by ``k`` semitones; augmented chords move between classes."""
    if c.kind is Kind.AUGMENTED:
        return augmented(c.root + k)
    return Chord(c.kind, (c.root + k) % 12)


@lru_cache(maxsize=1)
def enumerate_all() -> tuple[Chord, ...]:
    """All 28 chords in canonical index order."""
    chords = [major(r) for r in range(12)]
    chords += [minor(r) for r in range(12)]
    chords += [Chord(Kind.AUGMENTED, _AUG_ROOTS[q.value]) for q in QUADRANT_ORDER]
    return tuple(chords)


def chord_index(c: Chord) -> int:
    if c.kind is Kind.MAJOR:
        return c.root
    if c.kind is Kind.MINOR:
        return 12 + c.root
    return 24 + QUADRANT_ORDER.index(quadrant(c))


def chord_at(index: int) -> Chord:
    return enumerate_all()[index]


def aug_index(q: Quadrant) -> int:
    """Canonical chord index of a quadrant's augmented chord."""
    return 24 + QUADRANT_ORDER.index(q)
