"""Braid words in classical and virtual generators.

A word on n strands is a finite sequence of letters, each crossing the two
strands at adjacent positions (i, i+1).  Letters are stored as signed
integers: +i is the classical crossing at position i, -i the virtual one.
Strands are identified by their top endpoint number throughout; "position"
means the slot a strand currently occupies as the word is read top to
bottom.  All indices on the public surface are 1-based.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

CLASSICAL = "classical"
VIRTUAL = "virtual"

TEXT = "text"
JSON = "json"


class ParseError(ValueError):
    """Malformed word text or JSON."""


class PreconditionError(ValueError):
    """An operation was called outside its domain (non-cyclic closure, mismatched strand counts, ...)."""


def classical(i: int) -> int:
    """The classical generator letter at position i."""
    return i


def virtual(i: int) -> int:
    """The virtual generator letter at position i."""
    return -i


def is_classical(letter: int) -> bool:
    return letter > 0


def is_virtual(letter: int) -> bool:
    return letter < 0


def letter_index(letter: int) -> int:
    return abs(letter)


def letter_kind(letter: int) -> str:
    return CLASSICAL if letter > 0 else VIRTUAL


@dataclass(frozen=True, slots=True)
class BraidWord:
    """An n-strand braid word.  The empty sequence is the identity braid."""

    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        if self.n < 1:
            raise ValueError(f"strand count must be >= 1, got {self.n}")
        for x in self.letters:
            if not isinstance(x, int) or x == 0 or not (1 <= abs(x) <= self.n - 1):
                raise ValueError(f"letter {x!r} is not valid on {self.n} strands")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.n != other.n:
            raise PreconditionError(f"cannot concatenate words on {self.n} and {other.n} strands")
        return BraidWord(self.n, self.letters + other.letters)

    @property
    def classical_positions(self) -> tuple[int, ...]:
        return tuple(t for t, x in enumerate(self.letters) if x > 0)

    @property
    def classical_count(self) -> int:
        return sum(1 for x in self.letters if x > 0)


@dataclass(frozen=True, slots=True)
class Permutation:
    """A bijection of {1,...,n}; image[k-1] holds the value at k."""

    image: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.image, tuple):
            object.__setattr__(self, "image", tuple(self.image))
        n = len(self.image)
        if sorted(self.image) != list(range(1, n + 1)):
            raise ValueError(f"{self.image!r} is not a bijection of 1..{n}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, k: int) -> int:
        return self.image[k - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """Apply self first, then other: (self.compose(other))(k) = other(self(k)).

        This matches stacking words top to bottom; see `permutation`.
        """
        if self.n != other.n:
            raise PreconditionError("cannot compose permutations of different sizes")
        return Permutation(tuple(other.image[v - 1] for v in self.image))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for k, v in enumerate(self.image, start=1):
            inv[v - 1] = k
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self.image, start=1))

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Cycle decomposition; each cycle starts at its least element, cycles sorted."""
        seen = [False] * self.n
        out = []
        for start in range(1, self.n + 1):
            if seen[start - 1]:
                continue
            cyc = []
            k = start
            while not seen[k - 1]:
                seen[k - 1] = True
                cyc.append(k)
                k = self.image[k - 1]
            out.append(tuple(cyc))
        return tuple(out)


# The trace of a word assigns each letter the (sorted) pair of strand
# identities meeting at it.
StrandTrace = tuple[tuple[int, int], ...]

_LETTER_RE = re.compile(r"([zt])(\d+)\Z")
_HEADER_RE = re.compile(r"\An=(\d+)\s*;")


def parse_word(text: str) -> BraidWord:
    """Parse a word from the text grammar or from its JSON form.

    Text: optional header ``n=<int>;`` followed by whitespace-separated
    letters ``z<i>`` (classical) and ``t<i>`` (virtual).  Without a header
    the strand count is the smallest one making the word valid.  JSON input
    is detected by a leading ``{``.
    """
    s = text.strip()
    if s.startswith("{"):
        return _parse_word_json(s)
    n_header = None
    m = _HEADER_RE.match(s)
    if m:
        n_header = int(m.group(1))
        if n_header < 1:
            raise ParseError(f"strand count must be >= 1, got {n_header}")
        s = s[m.end():]
    letters = []
    for tok in s.split():
        lm = _LETTER_RE.match(tok)
        if not lm:
            raise ParseError(f"unknown token {tok!r}")
        idx = int(lm.group(2))
        if idx < 1:
            raise ParseError(f"letter index must be positive in {tok!r}")
        letters.append(idx if lm.group(1) == "z" else -idx)
    if n_header is not None:
        n = n_header
        for x in letters:
            if abs(x) > n - 1:
                raise ParseError(f"letter index {abs(x)} out of range for n={n}")
    else:
        n = max((abs(x) for x in letters), default=0) + 1
    return BraidWord(n, tuple(letters))


def _parse_word_json(s: str) -> BraidWord:
    try:
        obj = json.loads(s)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON word: {e}") from e
    if not isinstance(obj, dict) or not isinstance(obj.get("n"), int):
        raise ParseError("JSON word must be an object with an integer field 'n'")
    raw = obj.get("letters", [])
    if not isinstance(raw, list):
        raise ParseError("JSON field 'letters' must be an array")
    n = obj["n"]
    if n < 1:
        raise ParseError(f"strand count must be >= 1, got {n}")
    letters = []
    for entry in raw:
        if not isinstance(entry, dict) or entry.get("kind") not in (CLASSICAL, VIRTUAL):
            raise ParseError(f"bad letter entry {entry!r}")
        idx = entry.get("i")
        if not isinstance(idx, int) or idx < 1:
            raise ParseError(f"bad letter index in {entry!r}")
        if idx > n - 1:
            raise ParseError(f"letter index {idx} out of range for n={n}")
        letters.append(idx if entry["kind"] == CLASSICAL else -idx)
    return BraidWord(n, tuple(letters))


def serialize(word: BraidWord, format: str = TEXT) -> str:
    """Serialize a word; `parse_word` inverts both formats."""
    if format == TEXT:
        parts = [f"n={word.n};"]
        parts += [("z" if x > 0 else "t") + str(abs(x)) for x in word.letters]
        return " ".join(parts)
    if format == JSON:
        return json.dumps({
            "n": word.n,
            "letters": [{"kind": letter_kind(x), "i": abs(x)} for x in word.letters],
        })
    raise ValueError(f"unknown format {format!r}")


def final_arrangement(word: BraidWord) -> tuple[int, ...]:
    """Strand identity at each bottom position after reading the whole word."""
    pos = list(range(1, word.n + 1))
    for x in word.letters:
        i = abs(x)
        pos[i - 1], pos[i] = pos[i], pos[i - 1]
    return tuple(pos)


def permutation(word: BraidWord) -> Permutation:
    """The endpoint map: top endpoint k goes to bottom position permutation(word)(k).

    Both classical and virtual letters transpose.  Concatenation satisfies
    permutation(w1 * w2) = permutation(w1).compose(permutation(w2)).
    """
    arr = final_arrangement(word)
    image = [0] * word.n
    for p, strand in enumerate(arr, start=1):
        image[strand - 1] = p
    return Permutation(tuple(image))


def is_cyclic(p: Permutation) -> bool:
    """True iff p is a single n-cycle."""
    return len(p.cycles()) == 1


def closure_components(word: BraidWord) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """Component count and cycles of the closure (bottom j joined to top j)."""
    cycles = permutation(word).cycles()
    return len(cycles), cycles


def strand_trace(word: BraidWord) -> StrandTrace:
    """For each letter, the sorted pair of strand identities meeting at it."""
    pos = list(range(1, word.n + 1))
    out = []
    for x in word.letters:
        i = abs(x)
        a, b = pos[i - 1], pos[i]
        out.append((a, b) if a < b else (b, a))
        pos[i - 1], pos[i] = b, a
    return tuple(out)
