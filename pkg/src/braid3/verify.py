"""
Exhaustive verification suites.

Each suite checks one family of claims for every braid (or word) up to a
length bound and returns a report::

    {"suite": ..., "max_len": ..., "instances_checked": ..., "failures": [...]}

A suite passes iff ``failures`` is empty.
"""

from __future__ import annotations

from collections import defaultdict

from .conjugacy import (
    Simple,
    class_report,
    conjugate_by_simple,
    cyclic_class,
    positive_conjugates_oracle,
)
from .normal_form import (
    NormalForm,
    ShapeError,
    all_normal_forms,
    block_form,
    delta_free_tails,
    normal_form,
    normal_form_via_closure,
    reflect,
)
from .structure import ccbar_expressions, coincidence, verify_structure_lemma
from .words import DEFAULT_CAP, all_words, contains_delta_factor, reflect_word, representatives

DEFAULT_MAX_LEN = {
    "oracle": 10,
    "one-step": 10,
    "inf-ge-1": 12,
    "uniqueness": 14,
    "shape": 14,
    "prop": 10,
    "structure": 14,
}
SUITES = tuple(DEFAULT_MAX_LEN)


def _braids(max_len: int):
    for n in range(max_len + 1):
        yield from all_normal_forms(n)


def _report(suite: str, max_len: int, instances: int, failures: list, **extra) -> dict:
    out = {"suite": suite, "max_len": max_len, "instances_checked": instances}
    out.update(extra)
    out["failures"] = failures
    return out


def check_class_report(rep) -> list[str]:
    """Structural problems with a ClassReport (empty list when sound)."""
    problems = []
    parts = rep.cyclic_classes
    if not 1 <= len(parts) <= 2:
        problems.append(f"{len(parts)} cyclic classes")
    if frozenset().union(*parts) != rep.conjugacy_class:
        problems.append("cyclic classes do not cover the conjugacy class")
    if sum(len(p) for p in parts) != len(rep.conjugacy_class):
        problems.append("cyclic classes overlap")
    return problems


def suite_oracle(max_len: int, cap: int | None = DEFAULT_CAP) -> dict:
    """Closed-form conjugacy class against the simple-conjugation oracle."""
    failures = []
    count = 0
    for a in _braids(max_len):
        count += 1
        rep = class_report(a, cap)
        oracle = positive_conjugates_oracle(a, cap)
        if oracle != rep.conjugacy_class:
            failures.append({
                "instance": str(a),
                "oracle_only": sorted(str(x) for x in oracle - rep.conjugacy_class),
                "theorem_only": sorted(str(x) for x in rep.conjugacy_class - oracle),
            })
        for problem in check_class_report(rep):
            failures.append({"instance": str(a), "class_report": problem})
    return _report("oracle", max_len, count, failures)


def suite_one_step(max_len: int, cap: int | None = DEFAULT_CAP) -> dict:
    """Positive simple conjugates stay in [a]_cyclic ∪ [ā]_cyclic."""
    failures = []
    count = positive = 0
    for a in _braids(max_len):
        allowed = cyclic_class(a, cap) | cyclic_class(reflect(a), cap)
        for s in Simple:
            count += 1
            b = conjugate_by_simple(a, s, cap)
            if b is None:
                continue
            positive += 1
            if b not in allowed:
                failures.append({"instance": str(a), "simple": s.name, "conjugate": str(b)})
    return _report("one-step", max_len, count, failures, positive_conjugates=positive)


def suite_inf_ge_1(max_len: int, cap: int | None = DEFAULT_CAP) -> dict:
    failures = []
    count = 0
    for a in _braids(max_len):
        if a.infimum < 1:
            continue
        count += 1
        if reflect(a) not in cyclic_class(a, cap):
            failures.append({"instance": str(a)})
    return _report("inf-ge-1", max_len, count, failures)


def suite_uniqueness(max_len: int, cap: int | None = DEFAULT_CAP) -> dict:
    """
    Words versus normal forms, over every word up to ``max_len``:

    * two words share a normal form iff one is in the other's representative set;
    * the fast normal form equals the closure-based Δ extraction;
    * a Δ-free braid has exactly one word.
    """
    failures = []
    count = 0
    for n in range(max_len + 1):
        groups: dict[NormalForm, set[str]] = defaultdict(set)
        for w in all_words(n):
            count += 1
            groups[normal_form(w)].add(w)
        for nf, words in groups.items():
            reps = representatives(nf.word, cap)
            if reps != words:
                failures.append({"instance": str(nf), "claim": "representatives_match_normal_form"})
            # depends only on the representative set, so one word per group suffices
            if normal_form_via_closure(min(words), cap) != nf:
                failures.append({"instance": str(nf), "claim": "closure_normal_form"})
            if nf.infimum == 0 and len(reps) != 1:
                failures.append({"instance": str(nf), "claim": "unique_word", "words": len(reps)})
    return _report("uniqueness", max_len, count, failures)


def suite_shape(max_len: int, cap: int | None = DEFAULT_CAP) -> dict:
    """
    Δ-free words are exactly the alternating-block words with interior
    exponents >= 2.  Δ-freeness is decided by the representative closure.
    """
    failures = []
    count = 0
    for n in range(max_len + 1):
        free = set()
        for w in all_words(n):
            count += 1
            # w is one of its own representatives
            if contains_delta_factor(w):
                continue
            reps = representatives(w, cap)
            if any(contains_delta_factor(r) for r in reps):
                continue
            free.add(w)
            if len(reps) != 1:
                failures.append({"word": w, "claim": "unique_word"})
            try:
                bf = block_form(w)
            except ShapeError as exc:
                failures.append({"word": w, "claim": "shape_valid", "error": str(exc)})
                continue
            if bf.to_word() != w:
                failures.append({"word": w, "claim": "block_round_trip"})
        generated = set(delta_free_tails(n))
        for w in sorted(generated - free):
            failures.append({"word": w, "claim": "shape_word_is_delta_free"})
        for w in sorted(free - generated):
            failures.append({"word": w, "claim": "delta_free_word_has_shape"})
        for w in generated:
            if normal_form(w).infimum != 0:
                failures.append({"word": w, "claim": "shape_word_infimum_zero"})
    return _report("shape", max_len, count, failures)


def _brute_ccbar(a: NormalForm) -> set[tuple[str, int]]:
    n = a.length
    hits = set()
    if n == 0 or n % 2:
        return hits
    half = n // 2
    for ell in range(1, half + 1):
        if half % ell:
            continue
        for c in all_words(half // ell):
            if normal_form((c + reflect_word(c)) * ell) == a:
                hits.add((c, ell))
    return hits


def suite_prop(max_len: int, cap: int | None = DEFAULT_CAP) -> dict:
    """
    Three-condition verdict against the direct test ā ∈ [a]_cyclic, plus
    brute-force soundness and completeness of the (c·c̄)^ℓ search.
    """
    failures = []
    count = 0
    for a in _braids(max_len):
        count += 1
        direct = reflect(a) in cyclic_class(a, cap)
        verdict = coincidence(a)
        if verdict.coincides != direct or class_report(a, cap).coincides != direct:
            failures.append({"instance": str(a), "direct": direct, **verdict.to_dict()})
        found = set(ccbar_expressions(a))
        if found != _brute_ccbar(a):
            failures.append({"instance": str(a), "claim": "ccbar_search_complete"})
        minimal = [(c, ell) for c, ell in found if _is_minimal(c)]
        if len({(len(c), ell) for c, ell in minimal}) > 1:
            failures.append({"instance": str(a), "claim": "minimal_expression_unique"})
        if found and not direct:
            failures.append({"instance": str(a), "claim": "ccbar_power_implies_cyclic"})
    return _report("prop", max_len, count, failures)


def _is_minimal(c: str) -> bool:
    return all(ell == 1 for _, ell in ccbar_expressions(c + reflect_word(c)))


def suite_structure(max_len: int, cap: int | None = DEFAULT_CAP, jobs: int = 1) -> dict:
    report = verify_structure_lemma(max_len, jobs=jobs)
    return {"suite": "structure", **report}


RUNNERS = {
    "oracle": suite_oracle,
    "one-step": suite_one_step,
    "inf-ge-1": suite_inf_ge_1,
    "uniqueness": suite_uniqueness,
    "shape": suite_shape,
    "prop": suite_prop,
    "structure": suite_structure,
}


def run_suite(name: str, max_len: int | None = None, cap: int | None = DEFAULT_CAP, jobs: int = 1) -> list[dict]:
    """Run one suite, or every suite for ``name == "all"``."""
    names = SUITES if name == "all" else (name,)
    out = []
    for s in names:
        if s not in RUNNERS:
            raise KeyError(f"unknown suite {s!r}")
        n = DEFAULT_MAX_LEN[s] if max_len is None else max_len
        if s == "structure":
            out.append(suite_structure(n, cap, jobs=jobs))
        else:
            out.append(RUNNERS[s](n, cap))
    return out
