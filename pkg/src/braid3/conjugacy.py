"""
Cyclic-equivalence classes and positive conjugacy classes in B3.

Two routes to the positive conjugacy class ``[a] = cl(a) ∩ B3+``:

* the closed form: ``[a]`` is the union of the cyclic classes of ``a`` and of
  its reflection (:func:`class_report`, :func:`are_conjugate`);
* a brute-force oracle: close ``{a}`` under conjugation by the six simple
  braids, keeping only positive results (:func:`positive_conjugates_oracle`).

The oracle only uses word representatives and normal forms, never the
cyclic-class machinery, so agreement between the two is real evidence.
"""

from __future__ import annotations

import dataclasses
import enum
import functools
from collections import deque

from .normal_form import NormalForm, left_divide, multiply, normal_form, reflect
from .words import DEFAULT_CAP, ClosureOverflow, representatives, rotations


class Simple(enum.Enum):
    """The six left divisors of Δ in B3+, valued by their word."""

    E = ""
    S1 = "1"
    S2 = "2"
    S12 = "12"
    S21 = "21"
    DELTA = "121"

    @property
    def word(self) -> str:
        return self.value


def as_normal_form(x) -> NormalForm:
    return x if isinstance(x, NormalForm) else normal_form(x)


def class_representative(members) -> NormalForm:
    """Lexicographically least rendering; the canonical name of a class."""
    return min(members, key=str)


def sorted_members(members) -> list[NormalForm]:
    return sorted(members, key=str)


# Any member of a class maps to the whole class.
_cyclic_cache: dict[NormalForm, frozenset[NormalForm]] = {}


def clear_caches() -> None:
    _cyclic_cache.clear()
    conjugate_by_simple.cache_clear()


def _cyclic_moves(x: NormalForm):
    # single-letter cyclic move: a = σ·q  ->  q·σ
    for letter in "12":
        q = left_divide(x, letter)
        if q is not None:
            yield multiply(q, letter)


def cyclic_class(a, cap: int | None = DEFAULT_CAP) -> frozenset[NormalForm]:
    """
    The cyclic-equivalence class of ``a`` as a set of normal forms.

    Single-letter moves generate the relation: a rotation by ``k`` letters is
    ``k`` single rotations, and moving the first letter of some representative
    of ``a`` to the end is the same as left-dividing ``a`` by that letter and
    multiplying it back on the right.
    """
    a = as_normal_form(a)
    hit = _cyclic_cache.get(a)
    if hit is not None:
        return hit
    seen = {a}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        for y in _cyclic_moves(x):
            if y not in seen:
                seen.add(y)
                if cap is not None and len(seen) > cap:
                    raise ClosureOverflow(f"cyclic_class({a})", cap)
                queue.append(y)
    result = frozenset(seen)
    for member in result:
        _cyclic_cache.setdefault(member, result)
    return result


def cyclic_class_by_words(a, cap: int | None = DEFAULT_CAP) -> frozenset[NormalForm]:
    """
    Cyclic class computed straight from the definition: every split ``w1 w2``
    of every representative of every member, replaced by ``w2 w1``.

    Much slower than :func:`cyclic_class`; kept as an independent check.
    """
    a = as_normal_form(a)
    seen = {a}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        for w in representatives(x.word, cap):
            for r in rotations(w):
                y = normal_form(r)
                if y not in seen:
                    seen.add(y)
                    if cap is not None and len(seen) > cap:
                        raise ClosureOverflow(f"cyclic_class_by_words({a})", cap)
                    queue.append(y)
    return frozenset(seen)


def are_conjugate(a, b, cap: int | None = DEFAULT_CAP) -> bool:
    """Decide conjugacy in B3 of two positive braids."""
    a, b = as_normal_form(a), as_normal_form(b)
    if a.length != b.length:
        return False
    cls = cyclic_class(a, cap)
    if b in cls:
        return True
    if a.infimum >= 1:
        return False
    return reflect(b) in cls


@functools.lru_cache(maxsize=None)
def conjugate_by_simple(a: NormalForm, s: Simple, cap: int | None = DEFAULT_CAP) -> NormalForm | None:
    """
    ``s^-1 · a · s`` if it is a positive braid, else None.

    ``s^-1 a s`` is positive exactly when ``s`` left-divides ``a·s`` in B3+,
    i.e. when some representative of ``a·s`` begins with the word of ``s``.
    For Δ it is enough to look for ``121``: the representative set is closed
    under the relation, so a ``212`` prefix has a ``121`` twin.
    """
    a = as_normal_form(a)
    prefix = s.word
    for w in sorted(representatives(a.word + prefix, cap)):
        if w.startswith(prefix):
            return normal_form(w[len(prefix):])
    return None


def positive_conjugates_oracle(a, cap: int | None = DEFAULT_CAP) -> frozenset[NormalForm]:
    """Closure of ``{a}`` under positive conjugation by simple braids."""
    a = as_normal_form(a)
    seen = {a}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        for s in Simple:
            y = conjugate_by_simple(x, s, cap)
            if y is not None and y not in seen:
                seen.add(y)
                if cap is not None and len(seen) > cap:
                    raise ClosureOverflow(f"positive_conjugates_oracle({a})", cap)
                queue.append(y)
    return frozenset(seen)


@dataclasses.dataclass(frozen=True)
class ClassReport:
    conjugacy_class: frozenset[NormalForm]
    cyclic_classes: tuple[frozenset[NormalForm], ...]

    @property
    def coincides(self) -> bool:
        return len(self.cyclic_classes) == 1

    @property
    def representative(self) -> NormalForm:
        return class_representative(self.conjugacy_class)

    def to_dict(self) -> dict:
        return {
            "representative": str(self.representative),
            "size": len(self.conjugacy_class),
            "members": [str(x) for x in sorted_members(self.conjugacy_class)],
            "coincides": self.coincides,
            "cyclic_classes": [
                {
                    "representative": str(class_representative(c)),
                    "size": len(c),
                    "members": [str(x) for x in sorted_members(c)],
                }
                for c in self.cyclic_classes
            ],
        }


def class_report(a, cap: int | None = DEFAULT_CAP) -> ClassReport:
    """The positive conjugacy class of ``a`` split into cyclic classes."""
    a = as_normal_form(a)
    first = cyclic_class(a, cap)
    abar = reflect(a)
    if abar in first:
        parts = (first,)
    else:
        parts = (first, cyclic_class(abar, cap))
    parts = tuple(sorted(parts, key=lambda c: str(class_representative(c))))
    return ClassReport(frozenset().union(*parts), parts)
