"""Free-group words.

A word is a tuple of nonzero ints: ``k`` is the k-th letter (1-based) and
``-k`` its inverse.
"""
from __future__ import annotations

from typing import Iterable, Sequence, Tuple

Word = Tuple[int, ...]


def free_reduce(word: Iterable[int]) -> Word:
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def inverse(word: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(word))


def multiply(*words: Sequence[int]) -> Word:
    out: list[int] = []
    for w in words:
        out.extend(w)
    return free_reduce(out)


def cyclic_reduce(word: Sequence[int]) -> Word:
    w = free_reduce(word)
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return w[i:j + 1]


def exponent_sums(word: Sequence[int], ngens: int) -> list[int]:
    sums = [0] * ngens
    for x in word:
        sums[abs(x) - 1] += 1 if x > 0 else -1
    return sums


def normalize_relator(word: Sequence[int]) -> Word:
    """Cyclically reduce, then pick ``r`` or ``r^-1``.

    Prefers the orientation with more positive letters; ties go to the
    lexicographically smaller one under ``1 < -1 < 2 < -2 < ...``.
    """
    w = cyclic_reduce(word)
    if not w:
        return w
    wi = inverse(w)

    def key(v: Word):
        return (-sum(1 for x in v if x > 0), [(abs(x), x < 0) for x in v])

    return min(w, wi, key=key)


def format_word(word: Sequence[int], names: Sequence[str], empty: str = "1") -> str:
    if not word:
        return empty
    parts = []
    i = 0
    while i < len(word):
        x = word[i]
        j = i
        while j < len(word) and word[j] == x:
            j += 1
        run = j - i
        name = names[abs(x) - 1]
        exp = run if x > 0 else -run
        parts.append(name if exp == 1 else f"{name}^{exp}")
        i = j
    return "*".join(parts)


def substitute(word: Sequence[int], images: dict[int, Word]) -> Word:
    """Replace letter ``k`` by ``images[k]`` (inverse letters by inverse images)."""
    out: list[int] = []
    for x in word:
        img = images.get(abs(x))
        if img is None:
            out.append(x)
        else:
            out.extend(img if x > 0 else inverse(img))
    return free_reduce(out)
