"""
Braids of the form (c·c̄)^ℓ and when a conjugacy class is a single cyclic class.

A positive braid ``a`` is cyclically equivalent to its reflection unless all
three of the following hold: ``inf(a) = 0``; the word of ``a`` ends on its
starting generator, or on the other one with both end blocks of length at
least 2; and ``a`` is not ``(c·c̄)^ℓ`` for any positive word ``c``.
"""

from __future__ import annotations

import dataclasses
import functools

from .conjugacy import as_normal_form, cyclic_class
from .normal_form import (
    NormalForm,
    block_form,
    delta_free_tails,
    left_divisors_of_length,
    normal_form,
    reflect,
)
from .words import reflect_word


@dataclasses.dataclass(frozen=True)
class PalindromicPower:
    c: str
    ell: int
    minimal: bool

    @property
    def period(self) -> str:
        return self.c + reflect_word(self.c)

    @property
    def word(self) -> str:
        return self.period * self.ell

    def to_dict(self) -> dict:
        return {"c": self.c, "ell": self.ell, "minimal": self.minimal}


def ccbar_expressions(a) -> list[tuple[str, int]]:
    """
    Every ``(c, ℓ)`` with nonempty ``c`` and ``(c·c̄)^ℓ == a`` as braids,
    largest ℓ first, then by ``c``.

    A valid ``c`` must left-divide ``a``, so candidates are exactly the
    length-``|a|/2ℓ`` left divisors of ``a``.
    """
    a = as_normal_form(a)
    n = a.length
    if n == 0 or n % 2:
        return []
    half = n // 2
    out = []
    for ell in range(half, 0, -1):
        if half % ell:
            continue
        for c in sorted(left_divisors_of_length(a, half // ell)):
            if normal_form((c + reflect_word(c)) * ell) == a:
                out.append((c, ell))
    return out


@functools.lru_cache(maxsize=None)
def _is_minimal_period(c: str) -> bool:
    # c·c̄ is minimal iff it is not (d·d̄)^k for k >= 2
    return all(ell == 1 for _, ell in ccbar_expressions(normal_form(c + reflect_word(c))))


def find_ccbar_power(a) -> PalindromicPower | None:
    """
    A minimal expression ``a = (c·c̄)^ℓ``, or None.

    >>> find_ccbar_power("1122")
    PalindromicPower(c='11', ell=1, minimal=True)
    >>> find_ccbar_power("1111") is None
    True
    """
    hits = ccbar_expressions(a)
    if not hits:
        return None
    c, ell = hits[0]
    return PalindromicPower(c, ell, _is_minimal_period(c))


def shape_condition(a) -> bool:
    """
    True when ``a`` is Δ-free and its word either ends on the generator it
    starts with, or ends on the other generator with both end blocks >= 2.

    False for braids of positive infimum and for the identity.
    """
    a = as_normal_form(a)
    if a.infimum != 0 or not a.tail:
        return False
    bf = block_form(a.tail)
    if bf.kind == "first":
        return True
    return bf.exponents[0] >= 2 and bf.exponents[-1] >= 2


class CoincidenceVerdict:
    """
    Three-condition test for ``[a] == [a]_cyclic``.

    Conditions are evaluated lazily; :attr:`coincides` short-circuits before
    the (cc̄)^ℓ search whenever an earlier condition already fails.
    """

    def __init__(self, a: NormalForm):
        self.a = a

    @functools.cached_property
    def condition_1_inf_zero(self) -> bool:
        return self.a.infimum == 0

    @functools.cached_property
    def condition_2_shape(self) -> bool:
        return shape_condition(self.a)

    @functools.cached_property
    def ccbar_power(self) -> PalindromicPower | None:
        return find_ccbar_power(self.a)

    @functools.cached_property
    def condition_3_not_ccbar_power(self) -> bool:
        return self.ccbar_power is None

    @property
    def coincides(self) -> bool:
        return not (
            self.condition_1_inf_zero
            and self.condition_2_shape
            and self.condition_3_not_ccbar_power
        )

    def to_dict(self) -> dict:
        return {
            "coincides": self.coincides,
            "condition_1_inf_zero": self.condition_1_inf_zero,
            "condition_2_shape": self.condition_2_shape,
            "condition_3_not_ccbar_power": self.condition_3_not_ccbar_power,
        }

    def __repr__(self) -> str:
        return f"CoincidenceVerdict({self.a}, {self.to_dict()})"


def coincidence(a) -> CoincidenceVerdict:
    return CoincidenceVerdict(as_normal_form(a))


def lemma_instances(length: int):
    """Δ-free braids of the given length meeting the shape hypothesis with a ~ ā."""
    for tail in delta_free_tails(length):
        a = NormalForm(0, tail)
        if shape_condition(a) and reflect(a) in cyclic_class(a):
            yield a


def check_lemma_instance(a: NormalForm) -> tuple[int, list[dict]]:
    """
    Check both claims of the structure lemma for one braid.

    Returns the number of splits ``a = w1·w2`` with ``ā = w2·w1`` and a list
    of failures.  Words are compared letter by letter, which is sound because
    Δ-free braids have a single word.
    """
    failures = []
    pp = find_ccbar_power(a)
    if pp is None:
        return 0, [{"instance": str(a), "claim": "ccbar_power_exists"}]
    if not pp.minimal:
        failures.append({"instance": str(a), "claim": "minimal_expression", "c": pp.c, "ell": pp.ell})
    allowed = {pp.period * k + pp.c for k in range(pp.ell)}
    abar = reflect(a)
    w = a.tail
    splits = 0
    for k in range(len(w) + 1):
        w1, w2 = w[:k], w[k:]
        if normal_form(w2 + w1) != abar:
            continue
        splits += 1
        if w1 not in allowed:
            failures.append({
                "instance": str(a), "claim": "split_position",
                "w1": w1, "c": pp.c, "ell": pp.ell,
            })
    if splits == 0:
        failures.append({"instance": str(a), "claim": "single_cyclic_move"})
    return splits, failures


def _verify_length(n: int) -> tuple[int, int, list[dict]]:
    instances = splits = 0
    failures: list[dict] = []
    for a in lemma_instances(n):
        instances += 1
        s, f = check_lemma_instance(a)
        splits += s
        failures.extend(f)
    return instances, splits, failures


def verify_structure_lemma(max_len: int, jobs: int = 1) -> dict:
    """
    Exhaustively check the (c·c̄)^ℓ structure lemma for every braid of length
    up to ``max_len``: existence of the expression, and that every split
    turning ``a`` into ``ā`` cuts after ``(c·c̄)^k·c``.
    """
    lengths = range(1, max_len + 1)
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_verify_length, lengths))
    else:
        parts = [_verify_length(n) for n in lengths]
    return {
        "max_len": max_len,
        "instances_checked": sum(p[0] for p in parts),
        "splits_checked": sum(p[1] for p in parts),
        "failures": [f for p in parts for f in p[2]],
    }
