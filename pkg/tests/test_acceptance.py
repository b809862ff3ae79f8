"""
Exit criteria.  Each test records one PASS/FAIL line, printed in the
"acceptance criteria" section of the pytest summary.
"""

import json
import time

import pytest

from braid3 import cli
from braid3.conjugacy import (
    Simple,
    class_report,
    clear_caches,
    conjugate_by_simple,
    cyclic_class,
    positive_conjugates_oracle,
)
from braid3.normal_form import (
    ShapeError,
    all_normal_forms,
    block_form,
    delta_free_tails,
    normal_form,
    normal_form_via_closure,
    reflect,
)
from braid3.structure import coincidence
from braid3.words import all_words, contains_delta_factor, representatives
from acceptance_log import LINES as ACCEPTANCE_LINES

# Every ClassReport built while checking criteria 1-7 is collected for criterion 8.
REPORTS = []


def record(number, title, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
    if detail:
        line += f" ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)


def braids(max_len):
    for n in range(max_len + 1):
        yield from all_normal_forms(n)


def report(a):
    r = class_report(a)
    REPORTS.append(r)
    return r


def paper_set(*words):
    return {str(normal_form_via_closure(w)) for w in words}


def test_criterion_1_length_four_classes(capsys):
    clear_caches()
    start = time.perf_counter()
    code = cli.main(["enumerate", "4", "--format", "json", "--stable"])
    elapsed = time.perf_counter() - start
    table = json.loads(capsys.readouterr().out)["result"]
    # the three classes as listed in the paper's length-4 example
    expected = {
        frozenset(paper_set("1111", "2222")): 2,
        frozenset(paper_set("1122", "1221", "2211", "2112")): 1,
        frozenset(paper_set("1112", "1212", "2121", "2111", "2221", "1222")): 1,
    }
    got = {frozenset(c["members"]): len(c["cyclic_classes"]) for c in table["classes"]}
    for a in all_normal_forms(4):
        report(a)
    ok = (
        code == 0
        and got == expected
        and table["braid_count"] == 12
        and table["class_count"] == 3
        and sorted(c["size"] for c in table["classes"]) == [2, 4, 6]
        and elapsed < 1.0
    )
    record(1, "length-4 classes match the worked example", ok, f"{elapsed:.3f}s")
    assert got == expected
    assert table["braid_count"] == 12 and table["class_count"] == 3
    assert elapsed < 1.0


def test_criterion_2_theorem_matches_oracle():
    clear_caches()
    start = time.perf_counter()
    mismatches = []
    count = 0
    for a in braids(10):
        count += 1
        if positive_conjugates_oracle(a) != report(a).conjugacy_class:
            mismatches.append(str(a))
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 120
    record(2, "closed-form class equals simple-conjugation oracle, length <= 10", ok,
           f"{count} braids, {len(mismatches)} mismatches, {elapsed:.1f}s")
    assert mismatches == []
    assert elapsed < 120


@pytest.mark.parametrize("max_len, budget", [(14, 600), (18, 600)])
def test_criterion_3_structure_lemma(capsys, max_len, budget):
    start = time.perf_counter()
    code = cli.main(["verify", "--suite", "structure", "--max-len", str(max_len),
                     "--format", "json", "--stable"])
    elapsed = time.perf_counter() - start
    (rep,) = json.loads(capsys.readouterr().out)["result"]["suites"]
    ok = code == 0 and rep["failures"] == [] and rep["instances_checked"] > 0 \
        and rep["splits_checked"] >= rep["instances_checked"] and elapsed < budget
    record(3, f"structure lemma, length <= {max_len}", ok,
           f"{rep['instances_checked']} braids, {rep['splits_checked']} splits, {elapsed:.2f}s")
    assert code == 0
    assert rep["failures"] == []
    assert rep["instances_checked"] > 0
    # every instance has at least one split (a single cyclic move suffices)
    assert rep["splits_checked"] >= rep["instances_checked"]
    assert elapsed < budget


def test_criterion_4_one_step():
    failures = []
    positive = 0
    for a in braids(10):
        allowed = cyclic_class(a) | cyclic_class(reflect(a))
        for s in Simple:
            b = conjugate_by_simple(a, s)
            if b is None:
                continue
            positive += 1
            if b not in allowed:
                failures.append((str(a), s.name, str(b)))
    record(4, "positive simple conjugates lie in [a]_cyc ∪ [ā]_cyc, length <= 10",
           not failures, f"{positive} positive conjugates, {len(failures)} failures")
    assert failures == []


def test_criterion_5_positive_infimum():
    failures = []
    count = 0
    for a in braids(12):
        if a.infimum >= 1:
            count += 1
            if reflect(a) not in cyclic_class(a):
                failures.append(str(a))
    record(5, "inf >= 1 implies ā in [a]_cyc, length <= 12", not failures,
           f"{count} braids, {len(failures)} failures")
    assert count > 0
    assert failures == []


def test_criterion_6_delta_free_words():
    failures = []
    count = 0
    for n in range(15):
        free = set()
        for w in all_words(n):
            if normal_form(w).infimum != 0:
                continue
            count += 1
            free.add(w)
            if len(representatives(w)) != 1:
                failures.append((w, "not unique"))
            try:
                block_form(w)
            except ShapeError:
                failures.append((w, "shape"))
        for w in delta_free_tails(n):
            reps = representatives(w)
            if any(contains_delta_factor(r) for r in reps) or w not in free:
                failures.append((w, "shape-valid but not Δ-free"))
    record(6, "Δ-free braids have one word with valid block shape, and conversely, length <= 14",
           not failures, f"{count} words, {len(failures)} failures")
    assert failures == []


def test_criterion_7_proposition():
    failures = []
    count = 0
    for a in braids(10):
        count += 1
        direct = reflect(a) in cyclic_class(a)
        if coincidence(a).coincides != direct or report(a).coincides != direct:
            failures.append(str(a))
    record(7, "three-condition verdict equals ā ∈ [a]_cyc, length <= 10", not failures,
           f"{count} braids, {len(failures)} failures")
    assert failures == []


def test_criterion_8_at_most_two():
    # the reports gathered above, plus every class report up to length 12
    for a in braids(12):
        report(a)
    bad = [str(r.representative) for r in REPORTS if not 1 <= len(r.cyclic_classes) <= 2]
    record(8, "every class report has one or two cyclic classes", not bad,
           f"{len(REPORTS)} reports, {len(bad)} failures")
    assert bad == []
