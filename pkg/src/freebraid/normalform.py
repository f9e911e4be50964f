"""Bigon reduction, canonical codes, and the word-problem deciders.

Two classical crossings on the same strand pair with no classical crossing
between them on either strand form a bigon; deleting the pair preserves the
word's class under the move set F.  Iterated deletion terminates, and all
maximal reduction orders agree up to strong equivalence, so irreducible
forms plus the canonical code below decide F-equality.

Strong equivalence (all F moves except classical pair cancellation) is
decided by canonicalizing the crossing graph: virtual crossings are
invisible to it, so the data is just which crossings each strand meets, in
order, plus the endpoint permutation.  Crossings are labeled by first
encounter while scanning strand 1's sequence, then strand 2's, and so on,
which canonicalizes structure-preserving graph isomorphism in linear time.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import BraidWord, Permutation, PreconditionError, permutation, strand_trace


@dataclass(frozen=True, slots=True)
class Bigon:
    positions: tuple[int, int]
    strands: frozenset[int]


def _classical_strand_sequences(word: BraidWord) -> tuple[dict[int, tuple[int, int]], list[list[int]]]:
    """Per classical letter its strand pair; per strand its classical letters in order."""
    trace = strand_trace(word)
    pair_of = {}
    seqs: list[list[int]] = [[] for _ in range(word.n + 1)]  # 1-based
    for t, x in enumerate(word.letters):
        if x > 0:
            a, b = trace[t]
            pair_of[t] = (a, b)
            seqs[a].append(t)
            seqs[b].append(t)
    return pair_of, seqs


def find_bigons(word: BraidWord) -> tuple[Bigon, ...]:
    """All bigons, sorted by positions.  Virtual letters never block one."""
    pair_of, seqs = _classical_strand_sequences(word)
    index_on: list[dict[int, int]] = [{t: k for k, t in enumerate(seq)} for seq in seqs]
    found = set()
    for s in range(1, word.n + 1):
        seq = seqs[s]
        for k in range(len(seq) - 1):
            p, q = seq[k], seq[k + 1]
            if pair_of[p] != pair_of[q]:
                continue
            a, b = pair_of[p]
            other = b if s == a else a
            if index_on[other][q] == index_on[other][p] + 1:
                found.add((p, q))
    return tuple(Bigon((p, q), frozenset(pair_of[p])) for p, q in sorted(found))


def reduce_bigon(word: BraidWord, bigon: Bigon) -> BraidWord:
    """Delete the bigon's two letters; the classical count drops by two."""
    if bigon not in find_bigons(word):
        raise PreconditionError(f"stale bigon {bigon}: not present in the word")
    p, q = bigon.positions
    letters = word.letters
    return BraidWord(word.n, letters[:p] + letters[p + 1:q] + letters[q + 1:])


def irreducible_form(word: BraidWord) -> BraidWord:
    """Reduce leftmost bigons until none remain."""
    return irreducible_form_tracked(word)[0]


def irreducible_form_tracked(word: BraidWord) -> tuple[BraidWord, tuple[int, ...]]:
    """Irreducible form plus the surviving letters' positions in the input."""
    current = word
    kept = list(range(len(word.letters)))
    while True:
        bigons = find_bigons(current)
        if not bigons:
            return current, tuple(kept)
        p, q = bigons[0].positions
        letters = current.letters
        current = BraidWord(word.n, letters[:p] + letters[p + 1:q] + letters[q + 1:])
        del kept[q]
        del kept[p]


@dataclass(frozen=True, slots=True)
class CanonicalCode:
    """Canonical form of a word's crossing graph; equal codes decide strong equivalence."""

    n: int
    permutation: tuple[int, ...]
    crossing_count: int
    strand_sequences: tuple[tuple[int, ...], ...]

    def format(self) -> str:
        """Byte-stable serialization, one strand per line after the header."""
        head = (f"n={self.n}; perm={','.join(map(str, self.permutation))}; "
                f"m={self.crossing_count}")
        lines = [head]
        for k, seq in enumerate(self.strand_sequences, start=1):
            body = ",".join(map(str, seq))
            lines.append(f"s{k}: {body}" if body else f"s{k}:")
        return "\n".join(lines)


def canonical_code(word: BraidWord) -> CanonicalCode:
    _, seqs = _classical_strand_sequences(word)
    label: dict[int, int] = {}
    for s in range(1, word.n + 1):
        for t in seqs[s]:
            if t not in label:
                label[t] = len(label) + 1
    return CanonicalCode(
        n=word.n,
        permutation=permutation(word).image,
        crossing_count=len(label),
        strand_sequences=tuple(tuple(label[t] for t in seqs[s]) for s in range(1, word.n + 1)),
    )


def strongly_equal(w1: BraidWord, w2: BraidWord) -> bool:
    """Equality under all F moves except classical pair cancellation."""
    if w1.n != w2.n:
        raise PreconditionError(f"strand counts differ: {w1.n} vs {w2.n}")
    return canonical_code(w1) == canonical_code(w2)


def f_equal(w1: BraidWord, w2: BraidWord) -> bool:
    """Equality under the full move set F: compare irreducible forms."""
    if w1.n != w2.n:
        raise PreconditionError(f"strand counts differ: {w1.n} vs {w2.n}")
    return canonical_code(irreducible_form(w1)) == canonical_code(irreducible_form(w2))
