import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hbsurf.freegroup import (
    FreeWord,
    fold,
    folded_rank,
    is_injective,
    loop_word,
    loop_words,
    oracle_report,
    reduce_word,
    spell,
    surface_loops,
)

from helpers import collar_annulus, crossing_strip, handle_annulus, inball_annulus


def W(*letters):
    return FreeWord.make(letters)


A, B = ("D1", 1), ("D2", 1)
Ai, Bi = ("D1", -1), ("D2", -1)


def test_reduce_cancels():
    assert reduce_word([A, Ai, B]) == (B,)
    assert reduce_word([A, B, Bi, Ai]) == ()


def test_fold_free_basis():
    assert folded_rank([W(A), W(B)]) == 2


def test_fold_duplicate():
    assert folded_rank([W(A), W(A)]) == 1


def test_fold_ab_ba():
    # {ab, ba} generates a rank-2 subgroup; folded by hand as a fixture.
    assert folded_rank([W(A, B), W(B, A)]) == 2


def test_fold_even_kernel():
    # a^2, b^2, ab^{-1} generate the index-2 even-length kernel, rank 3.
    assert folded_rank([W(A, A), W(B, B), W(A, Bi)]) == 3


def test_fold_collapse():
    # Adding ab to the even kernel stays rank 3 (ab is already a member).
    assert folded_rank([W(A, A), W(B, B), W(A, Bi), W(A, B)]) == 3


def test_is_injective():
    assert is_injective([W(A), W(B)], 2)
    assert not is_injective([W(A), W(A)], 2)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.tuples(st.sampled_from(["D1", "D2"]),
                                   st.sampled_from([1, -1])), max_size=6), max_size=5),
       st.integers(0, 2**16))
def test_fold_confluence(raw_words, seed):
    words = [FreeWord.make(w) for w in raw_words]
    assert folded_rank(words) == folded_rank(words, order_seed=seed)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.tuples(st.sampled_from(["D1", "D2"]),
                                   st.sampled_from([1, -1])), max_size=6), max_size=5))
def test_fold_rank_bounds(raw_words):
    words = [FreeWord.make(w) for w in raw_words]
    r = folded_rank(words)
    assert 0 <= r <= min(len(words), 2) or r <= len(words)


def test_collar_annulus_loops_and_word():
    s = collar_annulus()
    loops = surface_loops(s)
    assert len(loops) == 1
    w = loop_word(loops[0], s)
    assert [g for g, _s in w.letters] == ["D1"]
    rep = oracle_report(s)
    assert rep.injective


def test_inball_annulus_not_injective():
    s = inball_annulus()
    rep = oracle_report(s)
    assert rep.rank_expected == 1
    assert rep.rank_folded == 0
    assert not rep.injective


def test_crossing_strip_loop_identity_free():
    s = crossing_strip()
    words = loop_words(s)
    assert len(words) == 1
    # The chain crosses D1 once and D2 once; loop word has both letters.
    assert sorted(g for g, _ in words[0].letters) == ["D1", "D2"]


def test_handle_annulus_word():
    s = handle_annulus()
    words = loop_words(s)
    assert len(words) == 1
    assert [g for g, _ in words[0].letters] == ["D1", "D1"]
    assert oracle_report(s).injective


def test_spell():
    w = W(A, Bi)
    assert spell(w, ["D1", "D2"]) == "a1 A2"
    assert spell(W(), ["D1", "D2"]) == "1"
