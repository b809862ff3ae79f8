"""
Canonical values for positive 3-braids.

Every positive braid is ``Δ^m · P`` with ``m >= 0`` and ``P`` not divisible by
Δ.  A Δ-free braid has exactly one positive word, made of alternating
generator blocks whose interior exponents are all at least 2.  The pair
``(m, word of P)`` is therefore a canonical, hashable key, rendered as
``"D^m:tail"``.
"""

from __future__ import annotations

import dataclasses
import re
from typing import Iterator

from .words import (
    DEFAULT_CAP,
    DELTA_WORD,
    check_word,
    other,
    reflect_word,
    render_word,
    representatives,
)

_NF_RE = re.compile(r"^D\^(\d+):(e|[12]+)$")


class ShapeError(ValueError):
    """A word that should be Δ-free violates the alternating-block shape."""


@dataclasses.dataclass(frozen=True)
class NormalForm:
    infimum: int
    tail: str

    @property
    def word(self) -> str:
        """A positive word for the braid: Δ^m written as ``121`` blocks, then the tail."""
        return DELTA_WORD * self.infimum + self.tail

    @property
    def length(self) -> int:
        return 3 * self.infimum + len(self.tail)

    def __str__(self) -> str:
        return f"D^{self.infimum}:{render_word(self.tail)}"

    @classmethod
    def parse(cls, text: str) -> NormalForm:
        m = _NF_RE.match(text)
        if m is None:
            raise ValueError(f"not a rendered normal form: {text!r}")
        tail = "" if m.group(2) == "e" else m.group(2)
        block_form(tail)
        return cls(int(m.group(1)), tail)


IDENTITY = NormalForm(0, "")
DELTA = NormalForm(1, "")


class _Builder:
    """
    Right-multiplies a normal form letter by letter.

    The tail is kept "raw" together with a flip bit: the actual tail is the raw
    word, reflected when ``flip`` is set.  Pulling Δ out of ``P''·xyx`` turns
    ``Δ^m P'' Δ`` into ``Δ^(m+1) reflect(P'')``, which is just a flip.
    """

    __slots__ = ("m", "raw", "flip")

    def __init__(self, nf: NormalForm = IDENTITY):
        self.m = nf.infimum
        self.raw = list(nf.tail)
        self.flip = False

    def push(self, letter: str) -> None:
        raw = self.raw
        x = other(letter) if self.flip else letter
        if not raw or raw[-1] == x:
            raw.append(x)
        elif len(raw) >= 2 and raw[-2] == x:
            del raw[-2:]
            self.m += 1
            self.flip = not self.flip
        else:
            raw.append(x)

    def result(self) -> NormalForm:
        tail = "".join(self.raw)
        return NormalForm(self.m, reflect_word(tail) if self.flip else tail)


def normal_form(w: str) -> NormalForm:
    """
    Normal form of the braid represented by the positive word ``w``.

    >>> str(normal_form("1121"))
    'D^1:2'
    >>> str(normal_form("1122"))
    'D^0:1122'
    """
    check_word(w)
    b = _Builder()
    for ch in w:
        b.push(ch)
    return b.result()


def multiply(nf: NormalForm, w: str) -> NormalForm:
    """Normal form of ``nf · w``."""
    b = _Builder(nf)
    for ch in w:
        b.push(ch)
    return b.result()


def normal_form_via_closure(w: str, cap: int | None = DEFAULT_CAP) -> NormalForm:
    """
    Normal form by Δ extraction over the representative closure.

    Find a representative with a ``121``/``212`` factor, move that Δ to the
    front with ``x Δ = Δ reflect(x)``, strip it and repeat on the shorter
    remainder.  Slow, but independent of the block-shape reasoning behind
    :func:`normal_form`.
    """
    check_word(w)
    m = 0
    while True:
        reps = sorted(representatives(w, cap))
        for r in reps:
            i = _delta_index(r)
            if i >= 0:
                w = reflect_word(r[:i]) + r[i + 3:]
                m += 1
                break
        else:
            return NormalForm(m, reps[0])


def _delta_index(w: str) -> int:
    hits = [i for i in (w.find("121"), w.find("212")) if i >= 0]
    return min(hits) if hits else -1


def infimum(w: str) -> int:
    return normal_form(w).infimum


def reflect(x):
    """Reflection (conjugation by Δ) of a word or of a NormalForm."""
    if isinstance(x, NormalForm):
        return NormalForm(x.infimum, reflect_word(x.tail))
    return reflect_word(check_word(x))


def left_divide(nf: NormalForm, letter: str) -> NormalForm | None:
    """
    The quotient ``σ^-1 · nf`` for ``σ = letter``, or None if σ does not
    left-divide ``nf`` in the positive monoid.
    """
    if nf.infimum >= 1:
        # Δ = σ·σ'·σ, so σ^-1 Δ^m P = σ'σ · Δ^(m-1) P
        return normal_form(other(letter) + letter + DELTA_WORD * (nf.infimum - 1) + nf.tail)
    if nf.tail.startswith(letter):
        return NormalForm(0, nf.tail[1:])
    return None


def left_divisors_of_length(nf: NormalForm, n: int) -> set[str]:
    """All words ``c`` of length ``n`` with ``c`` left-dividing ``nf``."""
    out: set[str] = set()

    def walk(prefix: str, rest: NormalForm) -> None:
        if len(prefix) == n:
            out.add(prefix)
            return
        for letter in "12":
            q = left_divide(rest, letter)
            if q is not None:
                walk(prefix + letter, q)

    if n <= nf.length:
        walk("", nf)
    return out


@dataclasses.dataclass(frozen=True)
class BlockForm:
    """
    Run-length encoding σ_i^a1 σ_j^a2 σ_i^a3 ... of a Δ-free word.

    ``kind`` is ``"first"`` when the word ends on its starting generator
    (odd number of blocks), ``"second"`` when it ends on the other one, and
    ``"empty"`` for the identity.
    """

    start: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        if self.start not in (1, 2):
            raise ShapeError(f"start generator must be 1 or 2, got {self.start}")
        bad = shape_violation(self.exponents)
        if bad is not None:
            raise ShapeError(bad)

    @property
    def kind(self) -> str:
        if not self.exponents:
            return "empty"
        return "first" if len(self.exponents) % 2 == 1 else "second"

    def to_word(self) -> str:
        return to_word(self)


def shape_violation(exponents) -> str | None:
    """Describe why ``exponents`` is not a valid Δ-free block shape, or return None."""
    k = len(exponents)
    for pos, a in enumerate(exponents):
        if a < 1:
            return f"block {pos} has exponent {a} < 1"
        if 0 < pos < k - 1 and a < 2:
            return f"interior block {pos} has exponent {a} < 2"
    return None


def block_form(tail: str) -> BlockForm:
    """
    >>> block_form("1221")
    BlockForm(start=1, exponents=(1, 2, 1))
    """
    check_word(tail)
    if not tail:
        return BlockForm(1, ())
    exps = []
    prev = None
    for ch in tail:
        if ch == prev:
            exps[-1] += 1
        else:
            exps.append(1)
            prev = ch
    bad = shape_violation(exps)
    if bad is not None:
        raise ShapeError(f"{tail!r} is not Δ-free: {bad}")
    return BlockForm(int(tail[0]), tuple(exps))


def to_word(bf: BlockForm) -> str:
    letters = (str(bf.start), other(str(bf.start)))
    return "".join(letters[i % 2] * a for i, a in enumerate(bf.exponents))


def _block_shapes(n: int) -> Iterator[tuple[int, ...]]:
    # compositions of n with interior parts >= 2
    if n == 0:
        yield ()
        return
    yield (n,)
    for a in range(1, n):
        for rest in _trailing_blocks(n - a):
            yield (a,) + rest


def _trailing_blocks(r: int) -> Iterator[tuple[int, ...]]:
    yield (r,)
    for a in range(2, r):
        for rest in _trailing_blocks(r - a):
            yield (a,) + rest


def delta_free_tails(length: int) -> list[str]:
    """Every Δ-free word of the given length, sorted."""
    if length == 0:
        return [""]
    words = [
        to_word(BlockForm(start, exps))
        for start in (1, 2)
        for exps in _block_shapes(length)
    ]
    return sorted(words)


def all_normal_forms(length: int) -> list[NormalForm]:
    """Every positive 3-braid of the given word length, sorted by rendering."""
    out = [
        NormalForm(m, tail)
        for m in range(length // 3 + 1)
        for tail in delta_free_tails(length - 3 * m)
    ]
    return sorted(out, key=str)
