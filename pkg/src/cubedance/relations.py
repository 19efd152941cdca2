"""Binary relations on the 28-chord universe and the monoid they generate.

A relation is a 28x28 boolean matrix stored as one bitmask per row
(bit q of rows[p] set iff chord p relates to chord q).  Words are read in
application order: "UP" means apply U first, then P, so the matrix of a
word is the left-to-right boolean product of its generator matrices.

Generators:

- P swaps each major triad with its parallel minor and fixes augmented
  chords.
- L swaps each major triad x with the minor triad on x+4 and fixes
  augmented chords.
- U links each augmented class T to the three majors with root in T and
  the three minors with root in T+1 (single-semitone displacements of T).
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .chords import (
    NUM_CHORDS,
    Chord,
    Kind,
    Quadrant,
    QUADRANT_ORDER,
    aug_index,
    chord_at,
    chord_index,
    enumerate_all,
    major,
    minor,
    quadrant,
)

GENERATOR_NAMES = ("U", "P", "L")  # declaration order; also the shortlex order

Rows = tuple[int, ...]


@dataclass(frozen=True)
class Relation:
    rows: Rows
    word: str | None = field(default=None, compare=False)

    def compose(self, other: "Relation") -> "Relation":
        """Relational product: x (self.other) y iff exists z, x self z and z other y."""
        out = []
        orows = other.rows
        for m in self.rows:
            acc = 0
            while m:
                low = m & -m
                acc |= orows[low.bit_length() - 1]
                m ^= low
            out.append(acc)
        word = None
        if self.word is not None and other.word is not None:
            word = self.word + other.word
        return Relation(tuple(out), word)

    def apply(self, c: Chord) -> frozenset[Chord]:
        m = self.rows[chord_index(c)]
        return frozenset(chord_at(q) for q in _bits(m))

    def apply_index(self, p: int) -> tuple[int, ...]:
        return tuple(_bits(self.rows[p]))

    def image_of(self, p: int) -> int:
        """The unique image of chord index ``p``; requires row popcount 1."""
        m = self.rows[p]
        if m == 0 or m & (m - 1):
            raise ValueError(f"row {p} is not functional")
        return m.bit_length() - 1

    @property
    def is_symmetric(self) -> bool:
        return self.rows == transpose_rows(self.rows)

    def pairs(self) -> Iterator[tuple[int, int]]:
        for p, m in enumerate(self.rows):
            for q in _bits(m):
                yield p, q

    def conjugate(self, nu: tuple[int, ...]) -> "Relation":
        """The relation nu . self . nu^-1, i.e. nu(p) ~ nu(q) iff p self q."""
        out = [0] * NUM_CHORDS
        for p, m in enumerate(self.rows):
            acc = 0
            for q in _bits(m):
                acc |= 1 << nu[q]
            out[nu[p]] = acc
        return Relation(tuple(out))

    @property
    def digest(self) -> str:
        packed = b"".join(m.to_bytes(4, "little") for m in self.rows)
        return hashlib.sha256(packed).hexdigest()[:12]

    def __repr__(self) -> str:
        label = self.word if self.word is not None else self.digest
        return f"Relation({label!r})"


def _bits(m: int) -> Iterator[int]:
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def transpose_rows(rows: Rows) -> Rows:
    out = [0] * NUM_CHORDS
    for p, m in enumerate(rows):
        for q in _bits(m):
            out[q] |= 1 << p
    return tuple(out)


def relation_from_pairs(pairs, word: str | None = None) -> Relation:
    rows = [0] * NUM_CHORDS
    for p, q in pairs:
        rows[p] |= 1 << q
    return Relation(tuple(rows), word)


def identity_relation() -> Relation:
    return Relation(tuple(1 << i for i in range(NUM_CHORDS)), "")


@lru_cache(maxsize=None)
def generator(name: str) -> Relation:
    """One of the three symmetric generator relations U, P, L."""
    if name not in GENERATOR_NAMES:
        raise ValueError(f"unknown generator {name!r}")
    pairs: list[tuple[int, int]] = []
    if name == "P":
        for r in range(12):
            pairs.append((chord_index(major(r)), chord_index(minor(r))))
        pairs += [(aug_index(q), aug_index(q)) for q in QUADRANT_ORDER]
    elif name == "L":
        for r in range(12):
            pairs.append((chord_index(major(r)), chord_index(minor((r + 4) % 12))))
        pairs += [(aug_index(q), aug_index(q)) for q in QUADRANT_ORDER]
    else:
        for q in QUADRANT_ORDER:
            t = aug_index(q)
            for pc in q.pitch_classes:
                pairs.append((t, chord_index(major(pc))))
                pairs.append((t, chord_index(minor((pc + 1) % 12))))
    sym = pairs + [(q, p) for p, q in pairs]
    return relation_from_pairs(sym, name)


def evaluate_word(word: str) -> Relation:
    """Matrix of a word over {U, P, L}; the empty word is the identity."""
    rel = identity_relation()
    for ch in word:
        rel = rel.compose(generator(ch))
    return Relation(rel.rows, word)


@dataclass(frozen=True, eq=False)  # identity hash keeps the cached methods cheap
class Monoid:
    """The closed set of relations generated by U, P, L.

    ``elements`` are in breadth-first discovery order (identity first, then
    U, P, L, ...), which makes ``words`` the shortlex representatives for
    the generator order U < P < L.
    """

    elements: tuple[Relation, ...]
    words: tuple[str, ...]
    cayley: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def identity_index(self) -> int:
        return 0

    def generator_index(self, name: str) -> int:
        return self.index_of(generator(name).rows)

    @lru_cache(maxsize=None)
    def _index_map(self) -> dict[Rows, int]:
        return {rel.rows: i for i, rel in enumerate(self.elements)}

    def index_of(self, rows: Rows) -> int:
        return self._index_map()[rows]

    def contains(self, rows: Rows) -> bool:
        return rows in self._index_map()

    def compose_indices(self, i: int, j: int) -> int:
        return self.cayley[i][j]

    @lru_cache(maxsize=1)
    def pl_subgroup_indices(self) -> tuple[int, ...]:
        """Indices of the subgroup generated by P and L (the invertible part)."""
        p, l = self.generator_index("P"), self.generator_index("L")
        seen = {self.identity_index}
        queue = deque(seen)
        while queue:
            i = queue.popleft()
            for g in (p, l):
                j = self.cayley[i][g]
                if j not in seen:
                    seen.add(j)
                    queue.append(j)
        return tuple(sorted(seen))

    def evaluate_word_index(self, word: str) -> int:
        i = self.identity_index
        for ch in word:
            i = self.cayley[i][self.generator_index(ch)]
        return i


def monoid_closure() -> Monoid:
    """Breadth-first closure of {e, U, P, L} under composition."""
    e = identity_relation()
    elements: list[Relation] = [e]
    index: dict[Rows, int] = {e.rows: 0}
    gens = [generator(n) for n in GENERATOR_NAMES]
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for g in gens:
            prod = elements[i].compose(g)
            if prod.rows not in index:
                index[prod.rows] = len(elements)
                elements.append(prod)
                queue.append(index[prod.rows])
    n = len(elements)
    cayley = tuple(
        tuple(index[elements[i].compose(elements[j]).rows] for j in range(n))
        for i in range(n)
    )
    words = tuple(el.word if el.word is not None else "" for el in elements)
    return Monoid(tuple(elements), words, cayley)


@lru_cache(maxsize=1)
def the_monoid() -> Monoid:
    """Process-wide cached closure (sub-millisecond to build, reused widely)."""
    return monoid_closure()


# ---------------------------------------------------------------------------
# presentation checks
# ---------------------------------------------------------------------------

# Defining identities of the monoid, as word pairs in application order.
PRESENTATION_RELATIONS: tuple[tuple[str, str, str], ...] = (
    ("P^2 = L^2 = e", "PP", ""),  # the L half is checked alongside, see below
    ("LPL = PLP", "LPL", "PLP"),
    ("U^3 = U", "UUU", "U"),
    ("UP = UL", "UP", "UL"),
    ("PU = LU", "PU", "LU"),
    ("U^2 P U^2 = P U^2 P U^2 P", "UUPUU", "PUUPUUP"),
    ("(UP)^2 U^2 = P (UP)^2 U^2 P", "UPUPUU", "PUPUPUUP"),
    ("U^2 (PU)^2 = P U^2 (PU)^2 P", "UUPUPU", "PUUPUPUP"),
)


@dataclass(frozen=True)
class PresentationCheck:
    label: str
    passed: bool


@dataclass(frozen=True)
class CheckReport:
    checks: tuple[PresentationCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        return [f"{'PASS' if c.passed else 'FAIL'}  {c.label}" for c in self.checks]


def _eval_with(word: str, mats: dict[str, Relation]) -> Rows:
    rel = identity_relation()
    for ch in word:
        rel = rel.compose(mats[ch])
    return rel.rows


def presentation_checks(u: Relation, p: Relation, l: Relation) -> CheckReport:
    """Evaluate the eight defining identities on arbitrary generator matrices."""
    mats = {"U": u, "P": p, "L": l}
    checks = []
    for label, lhs, rhs in PRESENTATION_RELATIONS:
        ok = _eval_with(lhs, mats) == _eval_with(rhs, mats)
        if label.startswith("P^2"):
            ok = ok and _eval_with("LL", mats) == _eval_with("", mats)
        checks.append(PresentationCheck(label, ok))
    return CheckReport(tuple(checks))


def presentation_violated(u: Relation, p: Relation, l: Relation) -> bool:
    """True if some defining identity fails; short-circuits on the first.

    Identities not involving the generator under scrutiny cannot fail when
    only that generator was perturbed, but re-checking them is cheap enough
    that no special-casing is done beyond the evaluation order (cheap pairs
    first).
    """
    mats = {"U": u, "P": p, "L": l}
    order = (
        ("PP", ""),
        ("LL", ""),
        ("PU", "LU"),
        ("UP", "UL"),
        ("UUU", "U"),
        ("LPL", "PLP"),
        ("UUPUU", "PUUPUUP"),
        ("UPUPUU", "PUPUPUUP"),
        ("UUPUPU", "PUUPUPUP"),
    )
    for lhs, rhs in order:
        if _eval_with(lhs, mats) != _eval_with(rhs, mats):
            return True
    return False


def verify_presentation(m: Monoid) -> CheckReport:
    """Check the defining identities as boolean-matrix equalities in ``m``."""
    return presentation_checks(
        m.elements[m.generator_index("U")],
        m.elements[m.generator_index("P")],
        m.elements[m.generator_index("L")],
    )


# ---------------------------------------------------------------------------
# graph export
# ---------------------------------------------------------------------------

# Node coordinates of the usual drawing of the colored Cube Dance: quadrant C
# on top, G right, D bottom, F left, augmented chords at the compass points.
LAYOUT: dict[str, tuple[float, float]] = {
    "C": (3, 4), "Cm": (4, 3), "Em": (3, 2), "E": (1, 2), "Abm": (2, 1), "Ab": (2, 3),
    "Fm": (-3, 4), "F": (-4, 3), "Db": (-3, 2), "Dbm": (-1, 2), "A": (-2, 1), "Am": (-2, 3),
    "Bb": (-3, -4), "Bbm": (-4, -3), "Dm": (-3, -2), "D": (-1, -2), "F#m": (-2, -1), "F#": (-2, -3),
    "Gm": (3, -4), "G": (4, -3), "Eb": (3, -2), "Ebm": (1, -2), "B": (2, -1), "Bm": (2, -3),
    "Caug": (0, 5), "Gaug": (5, 0), "Daug": (0, -5), "Faug": (-5, 0),
}

DOT_COLORS = {"U": "black", "P": "orange", "L": "green"}


def colored_edges() -> list[tuple[Chord, Chord, str]]:
    """Undirected colored edges, excluding the P/L self-loops on augmented chords."""
    edges = []
    for name in GENERATOR_NAMES:
        rel = generator(name)
        for p, q in rel.pairs():
            if p < q:
                edges.append((chord_at(p), chord_at(q), name))
    return edges


def augmented_loops() -> list[tuple[Chord, tuple[str, ...]]]:
    return [(chord_at(aug_index(q)), ("P", "L")) for q in QUADRANT_ORDER]


def graph_json() -> dict:
    nodes = [
        {
            "name": c.name,
            "kind": c.kind.value,
            "quadrant": quadrant(c).value,
            "index": i,
            "x": float(LAYOUT[c.name][0]),
            "y": float(LAYOUT[c.name][1]),
        }
        for i, c in enumerate(enumerate_all())
    ]
    edges = [
        {"source": a.name, "target": b.name, "color": color}
        for a, b, color in colored_edges()
    ]
    loops = [
        {"chord": c.name, "colors": list(colors)} for c, colors in augmented_loops()
    ]
    return {"nodes": nodes, "edges": edges, "loops": loops}


def graph_dot() -> str:
    lines = ["graph colored_cube_dance {", "  node [shape=ellipse];"]
    for c in enumerate_all():
        x, y = LAYOUT[c.name]
        lines.append(f'  "{c.name}" [pos="{x},{y}!"];')
    for a, b, color in colored_edges():
        style = ', style="dashed"' if color == "L" else ""
        lines.append(f'  "{a.name}" -- "{b.name}" [color="{DOT_COLORS[color]}"{style}];')
    for c, colors in augmented_loops():
        for color in colors:
            style = ', style="dashed"' if color == "L" else ""
            lines.append(
                f'  "{c.name}" -- "{c.name}" [color="{DOT_COLORS[color]}"{style}];'
            )
    lines.append("}")
    return "\n".join(lines) + "\n"
