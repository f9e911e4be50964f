"""Chord diagrams of closures and the parity schemes built on them.

When the closure of a word is a single circle, walking it (down each
strand, then from bottom endpoint j to top endpoint j) visits every
classical crossing twice; connecting the two visits gives the chord
diagram.  Virtual crossings are disregarded.  A crossing's Gaussian parity
is the number of chords linked with its chord, mod 2.

Two further schemes avoid the cyclicity requirement: the component scheme
marks a crossing odd when its strands lie in different parts of a fixed
partition, and the completed-closure scheme appends a virtual-only word
realizing a completing permutation before reading off Gaussian parities.

`check_parity_axioms` verifies, on a concrete (word, move) pair, the seven
compatibility conditions a parity must satisfy: spectator crossings keep
their parity, transported crossings keep theirs under commutations,
virtualization, and the triple slides, a cancelling pair has equal
parities, and a classical triple slide touches an even number of odd
crossings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .moves import Direction, MoveInstance, Relation, apply_move
from .words import (
    BraidWord,
    Permutation,
    PreconditionError,
    is_cyclic,
    permutation,
    strand_trace,
    virtual,
)


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class ChordDiagram:
    """A cyclic sequence over crossing identities, each appearing twice."""

    gauss_sequence: tuple[int, ...]
    chord_of: dict[int, tuple[int, int]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        chords: dict[int, list[int]] = {}
        for k, c in enumerate(self.gauss_sequence):
            chords.setdefault(c, []).append(k)
        for c, ends in chords.items():
            if len(ends) != 2:
                raise ValueError(f"crossing {c} appears {len(ends)} times in the gauss sequence")
        object.__setattr__(self, "chord_of", {c: (e[0], e[1]) for c, e in chords.items()})

    @property
    def crossings(self) -> tuple[int, ...]:
        return tuple(sorted(self.chord_of))


def linked(d: ChordDiagram, a: int, b: int) -> bool:
    """True iff chord b's endpoints separate chord a's on the core circle."""
    if a == b:
        raise ValueError("linkedness needs two distinct crossings")
    try:
        a1, a2 = d.chord_of[a]
        b1, b2 = d.chord_of[b]
    except KeyError as e:
        raise PreconditionError(f"unknown crossing {e.args[0]}") from e
    return (a1 < b1 < a2) != (a1 < b2 < a2)


def chord_diagram(word: BraidWord) -> ChordDiagram:
    """Chord diagram of the closure; crossings are identified by letter position."""
    p = permutation(word)
    cycles = p.cycles()
    if len(cycles) != 1:
        raise PreconditionError(
            f"closure has {len(cycles)} components; the chord diagram requires a cyclic permutation")
    trace = strand_trace(word)
    on_strand: list[list[int]] = [[] for _ in range(word.n + 1)]
    for t, x in enumerate(word.letters):
        if x > 0:
            a, b = trace[t]
            on_strand[a].append(t)
            on_strand[b].append(t)
    gauss: list[int] = []
    strand = 1
    for _ in range(word.n):
        gauss.extend(on_strand[strand])
        strand = p(strand)
    return ChordDiagram(tuple(gauss))


@dataclass(frozen=True)
class ParityAssignment:
    """One parity per classical letter position of a specific word."""

    scheme: str
    parities: dict[int, Parity] = field(compare=True)

    @property
    def positions(self) -> tuple[int, ...]:
        return tuple(sorted(self.parities))

    def parity_of(self, position: int) -> Parity:
        try:
            return self.parities[position]
        except KeyError:
            raise PreconditionError(f"position {position} carries no parity") from None

    def is_odd(self, position: int) -> bool:
        return self.parity_of(position) is Parity.ODD

    def odd_positions(self) -> tuple[int, ...]:
        return tuple(t for t in sorted(self.parities) if self.parities[t] is Parity.ODD)

    def even_positions(self) -> tuple[int, ...]:
        return tuple(t for t in sorted(self.parities) if self.parities[t] is Parity.EVEN)

    def all_odd(self) -> bool:
        return all(v is Parity.ODD for v in self.parities.values())


def permutation_braid(q: Permutation) -> BraidWord:
    """A virtual-only word realizing q, built by selection sort.

    The strand destined for the leftmost unfinished slot is walked there by
    adjacent virtual transpositions, which makes the representative
    deterministic.
    """
    arrangement = list(range(1, q.n + 1))
    inv = q.inverse()
    letters: list[int] = []
    for slot in range(1, q.n + 1):
        target = inv(slot)
        c = arrangement.index(target) + 1
        for pos in range(c - 1, slot - 1, -1):
            letters.append(virtual(pos))
            arrangement[pos - 1], arrangement[pos] = arrangement[pos], arrangement[pos - 1]
    return BraidWord(q.n, tuple(letters))


def _linking_parities(d: ChordDiagram) -> dict[int, Parity]:
    ids = list(d.chord_of)
    out = {}
    for a in ids:
        count = sum(1 for b in ids if b != a and linked(d, a, b))
        out[a] = Parity.ODD if count % 2 else Parity.EVEN
    return out


def gaussian_parity(word: BraidWord) -> ParityAssignment:
    """Parity by chord linking on the closure; needs a one-circle closure."""
    p = permutation(word)
    cycles = p.cycles()
    if len(cycles) != 1:
        raise PreconditionError(
            f"closure has {len(cycles)} components; Gaussian parity requires a cyclic permutation")
    return ParityAssignment("gaussian", _linking_parities(chord_diagram(word)))


def q_gaussian_parity(word: BraidWord, q: Permutation) -> ParityAssignment:
    """Gaussian parity of word extended by the virtual braid realizing q.

    The extension contributes no chords, so the assignment restricts to the
    word's own classical letters.
    """
    if word.n != q.n:
        raise PreconditionError(f"completion acts on {q.n} strands, word has {word.n}")
    composite = permutation(word).compose(q)
    cycles = composite.cycles()
    if len(cycles) != 1:
        raise PreconditionError(
            f"completed permutation has {len(cycles)} cycles; the completion must make it cyclic")
    extended = word * permutation_braid(q)
    parities = _linking_parities(chord_diagram(extended))
    assert set(parities) == {t for t, x in enumerate(word.letters) if x > 0}
    return ParityAssignment(f"qgaussian:Q={','.join(map(str, q.image))}", parities)


@dataclass(frozen=True, slots=True)
class StrandPartition:
    """A two-part split of the strand identities 1..n (either part may be empty)."""

    first: frozenset[int]
    second: frozenset[int]

    def __post_init__(self):
        if not isinstance(self.first, frozenset):
            object.__setattr__(self, "first", frozenset(self.first))
        if not isinstance(self.second, frozenset):
            object.__setattr__(self, "second", frozenset(self.second))
        if self.first & self.second:
            raise ValueError("partition parts must be disjoint")
        union = self.first | self.second
        if union != set(range(1, len(union) + 1)):
            raise ValueError("partition parts must cover 1..n exactly")

    @classmethod
    def from_first(cls, n: int, first) -> "StrandPartition":
        first = frozenset(first)
        if not first <= set(range(1, n + 1)):
            raise ValueError(f"part {sorted(first)} is not a subset of 1..{n}")
        return cls(first, frozenset(range(1, n + 1)) - first)

    @property
    def n(self) -> int:
        return len(self.first) + len(self.second)

    def crosses(self, a: int, b: int) -> bool:
        return (a in self.first) != (b in self.first)


def component_parity(word: BraidWord, partition: StrandPartition) -> ParityAssignment:
    """Odd iff a crossing's two strands lie in different partition parts."""
    if partition.n != word.n:
        raise PreconditionError(f"partition covers {partition.n} strands, word has {word.n}")
    trace = strand_trace(word)
    parities = {}
    for t, x in enumerate(word.letters):
        if x > 0:
            a, b = trace[t]
            parities[t] = Parity.ODD if partition.crosses(a, b) else Parity.EVEN
    first = ",".join(map(str, sorted(partition.first)))
    return ParityAssignment(f"component:N1={first}", parities)


@dataclass(frozen=True, slots=True)
class GaussianScheme:
    def designation(self) -> str:
        return "gaussian"

    def applicable(self, word: BraidWord) -> bool:
        return is_cyclic(permutation(word))

    def assignment(self, word: BraidWord) -> ParityAssignment:
        return gaussian_parity(word)


@dataclass(frozen=True, slots=True)
class ComponentScheme:
    partition: StrandPartition

    def designation(self) -> str:
        return f"component:N1={','.join(map(str, sorted(self.partition.first)))}"

    def applicable(self, word: BraidWord) -> bool:
        return word.n == self.partition.n

    def assignment(self, word: BraidWord) -> ParityAssignment:
        return component_parity(word, self.partition)


@dataclass(frozen=True, slots=True)
class QGaussianScheme:
    completion: Permutation

    def designation(self) -> str:
        return f"qgaussian:Q={','.join(map(str, self.completion.image))}"

    def applicable(self, word: BraidWord) -> bool:
        return word.n == self.completion.n and is_cyclic(permutation(word).compose(self.completion))

    def assignment(self, word: BraidWord) -> ParityAssignment:
        return q_gaussian_parity(word, self.completion)


ParityScheme = GaussianScheme | ComponentScheme | QGaussianScheme


def parse_scheme(text: str, n: int) -> ParityScheme:
    """Parse a scheme designation: `gaussian`, `component:N1=...`, `qgaussian:Q=...`."""
    s = text.strip()
    if s == "gaussian":
        return GaussianScheme()
    if s.startswith("component:N1="):
        body = s[len("component:N1="):]
        try:
            members = [int(tok) for tok in body.split(",") if tok != ""]
        except ValueError:
            raise PreconditionError(f"bad partition list in {text!r}") from None
        return ComponentScheme(StrandPartition.from_first(n, members))
    if s.startswith("qgaussian:Q="):
        body = s[len("qgaussian:Q="):]
        try:
            image = tuple(int(tok) for tok in body.split(",") if tok != "")
        except ValueError:
            raise PreconditionError(f"bad permutation image in {text!r}") from None
        if len(image) != n:
            raise PreconditionError(f"completion image has {len(image)} entries, expected {n}")
        return QGaussianScheme(Permutation(image))
    raise PreconditionError(f"unknown parity scheme {text!r}")


@dataclass(frozen=True, slots=True)
class AxiomReport:
    passed: bool
    violated: str | None = None
    detail: str = ""


def check_parity_axioms(scheme: ParityScheme, word: BraidWord, move: MoveInstance) -> AxiomReport:
    """Evaluate the seven parity axioms on (word, apply_move(word, move)).

    Returns a pass, or the first violated axiom by number (5 splits into
    its even-count part `5a` and the three pairings `5b`-`5d`).
    """
    if not scheme.applicable(word):
        raise PreconditionError(f"scheme {scheme.designation()!r} is not applicable to the word")
    result, corr = apply_move(word, move)
    if not scheme.applicable(result):
        raise PreconditionError("move application broke scheme applicability")
    p1 = scheme.assignment(word)
    p2 = scheme.assignment(result)

    window_lo = corr.window_start
    window_hi = corr.window_start + corr.source_window
    transport_axiom = {
        Relation.FAR_COMM_ZZ: "2",
        Relation.FAR_COMM_ZT: "3",
        Relation.FAR_COMM_TT: "1",
        Relation.VIRTUALIZATION: "7",
        Relation.SEMIVIRTUAL_R3: "6",
        Relation.VIRTUAL_R3: "1",
        Relation.VIRTUAL_R2: "1",
        Relation.CLASSICAL_R2: "1",
    }
    r3_pair_axiom = {(0, 2): "5b", (1, 1): "5c", (2, 0): "5d"}

    for s in p1.positions:
        r = corr.image_of(s)
        if r is None:
            continue
        if p1.parity_of(s) is p2.parity_of(r):
            continue
        if s < window_lo or s >= window_hi:
            axiom = "1"
        elif move.relation is Relation.CLASSICAL_R3:
            axiom = r3_pair_axiom[(s - window_lo, r - window_lo)]
        else:
            axiom = transport_axiom[move.relation]
        return AxiomReport(False, axiom,
                           f"letter {s} -> {r} changed parity under {move.relation.value}")

    if move.relation is Relation.CLASSICAL_R2:
        assignment = p1 if move.direction is Direction.LEFT_TO_RIGHT else p2
        a, b = corr.window_start, corr.window_start + 1
        if assignment.parity_of(a) is not assignment.parity_of(b):
            return AxiomReport(False, "4", f"cancelling pair at {a},{b} has mixed parities")

    if move.relation is Relation.CLASSICAL_R3:
        for assignment in (p1, p2):
            odd = sum(1 for k in range(3) if assignment.is_odd(window_lo + k))
            if odd % 2:
                return AxiomReport(False, "5a",
                                   f"triple slide touches {odd} odd crossings")

    return AxiomReport(True)
