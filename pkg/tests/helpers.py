"""Shared generators for randomized tests."""

from __future__ import annotations

import random

from freebraid import (
    BraidWord,
    ComponentScheme,
    GaussianScheme,
    Permutation,
    QGaussianScheme,
    StrandPartition,
    is_cyclic,
    permutation,
)


def random_word(rng: random.Random, n: int, length: int) -> BraidWord:
    if n < 2:
        return BraidWord(n)
    letters = tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length))
    return BraidWord(n, letters)


def random_cyclic_word(rng: random.Random, n: int, length: int, extra: int = 200) -> BraidWord:
    """Rejection-sample a word whose closure is a single circle.

    An n-cycle needs at least n-1 transpositions and the matching sign, so
    the requested length is bumped to the nearest feasible one.
    """
    length = max(length, n - 1)
    if (length - (n - 1)) % 2:
        length += 1
    for _ in range(extra * n):
        w = random_word(rng, n, length)
        if is_cyclic(permutation(w)):
            return w
    raise RuntimeError("failed to sample a cyclic word")


def random_cycle(rng: random.Random, n: int) -> Permutation:
    """A uniformly random n-cycle."""
    rest = list(range(2, n + 1))
    rng.shuffle(rest)
    order = [1] + rest
    image = [0] * n
    for k in range(n):
        image[order[k] - 1] = order[(k + 1) % n]
    return Permutation(tuple(image))


def random_partition(rng: random.Random, n: int) -> StrandPartition:
    first = frozenset(s for s in range(1, n + 1) if rng.random() < 0.5)
    return StrandPartition.from_first(n, first)


def completion_for(rng: random.Random, word: BraidWord) -> Permutation:
    """A permutation q making word's permutation composed with q cyclic."""
    p = permutation(word)
    c = random_cycle(rng, word.n)
    # want p.compose(q) == c, i.e. q = p^-1 then c
    return p.inverse().compose(c)


def random_scheme(rng: random.Random, word: BraidWord):
    kind = rng.choice(("gaussian", "component", "qgaussian"))
    if kind == "gaussian" and is_cyclic(permutation(word)):
        return GaussianScheme()
    if kind == "qgaussian" and word.n >= 1:
        return QGaussianScheme(completion_for(rng, word))
    return ComponentScheme(random_partition(rng, word.n))
