import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from braid3.normal_form import (
    BlockForm,
    NormalForm,
    ShapeError,
    all_normal_forms,
    block_form,
    delta_free_tails,
    infimum,
    left_divide,
    left_divisors_of_length,
    multiply,
    normal_form,
    normal_form_via_closure,
    reflect,
    to_word,
)
from braid3.words import all_words, representatives
from burau import burau

words = st.text(alphabet="12", max_size=16)


@pytest.mark.parametrize("w, m, tail", [
    ("121", 1, ""),
    ("212", 1, ""),
    ("1121", 1, "2"),
    ("1212", 1, "2"),
    ("1122", 0, "1122"),
    ("", 0, ""),
    ("121121", 2, ""),
])
def test_normal_form_examples(w, m, tail):
    assert normal_form(w) == NormalForm(m, tail)
    assert normal_form_via_closure(w) == NormalForm(m, tail)


@pytest.mark.parametrize("w, expected", [("121", 1), ("1111", 0), ("121121", 2), ("2112", 0)])
def test_infimum(w, expected):
    assert infimum(w) == expected


def test_rendering_round_trip():
    for nf in all_normal_forms(7):
        assert NormalForm.parse(str(nf)) == nf
    assert str(NormalForm(2, "")) == "D^2:e"
    with pytest.raises(ShapeError):
        NormalForm.parse("D^0:121")


def test_normal_forms_match_closure_exhaustively():
    for n in range(11):
        for w in all_words(n):
            assert normal_form(w) == normal_form_via_closure(w), w


def test_normal_form_soundness_exhaustive():
    # u ~ w as words  <=>  equal normal forms, lengths <= 12
    for n in range(13):
        groups = {}
        for w in all_words(n):
            groups.setdefault(normal_form(w), set()).add(w)
        for nf, ws in groups.items():
            assert representatives(nf.word) == ws


def test_normal_form_agrees_with_burau():
    for n in range(10):
        by_matrix = {}
        for w in all_words(n):
            by_matrix.setdefault(burau(w), set()).add(normal_form(w))
        assert all(len(v) == 1 for v in by_matrix.values())
        assert len(by_matrix) == len(all_normal_forms(n))


@given(words)
def test_length_is_preserved(w):
    nf = normal_form(w)
    assert nf.length == len(w)
    assert normal_form(nf.word) == nf


@given(words)
def test_quasi_centrality(w):
    assert normal_form("121" + w) == normal_form(reflect(w) + "121")


@given(words, words)
def test_reflect_homomorphism(u, v):
    assert reflect(u + v) == reflect(u) + reflect(v)
    assert reflect(reflect(u)) == u
    nf = normal_form(u)
    assert reflect(nf) == normal_form(reflect(u))
    assert reflect(reflect(nf)) == nf


def test_reflect_examples():
    assert reflect("1") == "2"
    assert reflect("1122") == "2211"
    assert reflect(normal_form("121")) == NormalForm(1, "")


@given(words, words)
def test_multiply(u, v):
    assert multiply(normal_form(u), v) == normal_form(u + v)


def test_left_divide_against_representatives():
    for n in range(10):
        for a in all_normal_forms(n):
            reps = representatives(a.word)
            for letter in "12":
                q = left_divide(a, letter)
                starts = sorted(r for r in reps if r.startswith(letter))
                if starts:
                    assert q == normal_form(starts[0][1:])
                else:
                    assert q is None
            for k in range(n + 1):
                assert left_divisors_of_length(a, k) == {r[:k] for r in reps}


@pytest.mark.parametrize("w, start, exps", [
    ("1122", 1, (2, 2)),
    ("1221", 1, (1, 2, 1)),
    ("2", 2, (1,)),
    ("", 1, ()),
])
def test_block_form(w, start, exps):
    bf = block_form(w)
    assert bf == BlockForm(start, exps)
    assert to_word(bf) == w


def test_block_form_kinds():
    assert block_form("1221").kind == "first"
    assert block_form("1122").kind == "second"
    assert block_form("").kind == "empty"


def test_block_form_rejects_delta():
    # 11211 contains 121, so it is not Δ-free
    assert infimum("11211") == 1
    with pytest.raises(ShapeError):
        block_form("11211")
    with pytest.raises(ShapeError):
        BlockForm(1, (2, 1, 2))
    with pytest.raises(ShapeError):
        BlockForm(3, (1,))


def test_shape_totality():
    # exponent tuples satisfying the block constraints <-> Δ-free words
    for n in range(1, 13):
        shaped = set()
        for cuts in itertools.product((False, True), repeat=n - 1):
            points = [0] + [i + 1 for i, c in enumerate(cuts) if c] + [n]
            exps = tuple(b - a for a, b in zip(points, points[1:]))
            if any(a < 2 for a in exps[1:-1]):
                continue
            for start in (1, 2):
                shaped.add(to_word(BlockForm(start, exps)))
        free = {w for w in all_words(n) if len(representatives(w)) == 1 and "121" not in w and "212" not in w}
        assert shaped == free == set(delta_free_tails(n))


def test_length_four_count():
    # 10 Δ-free words plus Δσ1, Δσ2
    assert len(delta_free_tails(4)) == 10
    assert len(all_normal_forms(4)) == 12
