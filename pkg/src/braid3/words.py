"""
Positive words over the two generators of B3.

A word is a plain ``str`` over the alphabet ``{'1', '2'}``; ``"1121"`` is
σ1 σ1 σ2 σ1 and ``""`` is the identity.  The textual syntax used on the
command line writes the empty word as ``"e"``.

The only defining relation of the positive monoid is ``121 = 212``, so the
set of words representing a braid is the closure of one word under that
local rewrite.
"""

from __future__ import annotations

import re
from collections import deque

LETTERS = ("1", "2")
DELTA_WORD = "121"
EMPTY_TOKEN = "e"

DEFAULT_CAP = 200_000

_SWAP = str.maketrans("12", "21")
_WORD_RE = re.compile(r"^(e|[12]+)$")


class InvalidWord(ValueError):
    """Raised for text that is not a word over {1, 2}."""

    def __init__(self, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"invalid word {text!r}: bad character at index {position}")


class ClosureOverflow(RuntimeError):
    """A closure computation exceeded its size cap."""

    def __init__(self, what: str, cap: int):
        self.what = what
        self.cap = cap
        super().__init__(f"{what} exceeded closure cap of {cap} elements")


def check_word(w: str) -> str:
    """Return ``w`` unchanged if it is a word over {1, 2}, else raise InvalidWord."""
    if not isinstance(w, str):
        raise TypeError(f"word must be str, not {type(w).__name__}")
    for i, ch in enumerate(w):
        if ch != "1" and ch != "2":
            raise InvalidWord(w, i)
    return w


def parse_word(text: str) -> str:
    """
    Parse the textual word syntax ``^(e|[12]+)$``.

    >>> parse_word("1121")
    '1121'
    >>> parse_word("e")
    ''
    """
    if _WORD_RE.match(text):
        return "" if text == EMPTY_TOKEN else text
    bad = next((i for i, ch in enumerate(text) if ch not in "12"), 0)
    raise InvalidWord(text, bad)


def render_word(w: str) -> str:
    return w if w else EMPTY_TOKEN


def reflect_word(w: str) -> str:
    """Letterwise swap 1 <-> 2 (conjugation by Δ)."""
    return w.translate(_SWAP)


def other(letter: str) -> str:
    return "2" if letter == "1" else "1"


def rotate(w: str, k: int) -> str:
    """
    Move the first ``k`` letters of ``w`` to the end.

    >>> rotate("1122", 1)
    '1221'
    >>> rotate("1112", 3)
    '2111'
    """
    if not 0 <= k <= len(w):
        raise IndexError(f"rotation {k} out of range for word of length {len(w)}")
    return w[k:] + w[:k]


def rotations(w: str) -> list[str]:
    """All single-split rotations of ``w``, identity included."""
    return [w[k:] + w[:k] for k in range(max(len(w), 1))]


def relation_neighbors(w: str) -> set[str]:
    """Words obtained from ``w`` by rewriting one ``121`` <-> ``212`` occurrence."""
    out = set()
    for i in range(len(w) - 2):
        window = w[i:i + 3]
        if window == "121":
            out.add(w[:i] + "212" + w[i + 3:])
        elif window == "212":
            out.add(w[:i] + "121" + w[i + 3:])
    return out


def representatives(w: str, cap: int | None = DEFAULT_CAP) -> frozenset[str]:
    """
    Every positive word representing the same braid as ``w``.

    Breadth-first closure under :func:`relation_neighbors`.  Raises
    :class:`ClosureOverflow` once more than ``cap`` words have been seen.
    """
    check_word(w)
    seen = {w}
    queue = deque([w])
    while queue:
        u = queue.popleft()
        for v in relation_neighbors(u):
            if v not in seen:
                seen.add(v)
                if cap is not None and len(seen) > cap:
                    raise ClosureOverflow(f"representatives({render_word(w)})", cap)
                queue.append(v)
    return frozenset(seen)


def contains_delta_factor(w: str) -> bool:
    return "121" in w or "212" in w


def all_words(length: int):
    """Yield every word of the given length in lexicographic order."""
    if length == 0:
        yield ""
        return
    for n in range(2 ** length):
        yield format(n, f"0{length}b").translate(str.maketrans("01", "12"))
