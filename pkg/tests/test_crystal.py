import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import small_lr
from goldens import T0, T0_REVERSAL, T0_ROW_WORD, T0_SIGMA0_WORD, T1
from lrsym.crystal import longest_word, reversal, reversal_general, sigma, sigma0, sigma_tableau, theta_rows
from lrsym.errors import NotLRError, NotYamanouchiError
from lrsym.jdt import evacuate, rectify
from lrsym.plactic import burge, dual_equivalent, knuth_equivalent
from lrsym.tableau import Tableau, is_dual_lr, rotate, yamanouchi_tableau
from lrsym.words import Word, is_yamanouchi, u_of

words = st.integers(2, 4).flatmap(
    lambda t: st.lists(st.integers(1, t), max_size=12).map(lambda xs: Word(tuple(xs), t)))
lr_tableaux = st.sampled_from(small_lr(8))


def test_sigma_examples():
    assert str(sigma(1, Word.parse("11", 2))) == "22"
    assert str(sigma(1, Word.parse("21"))) == "21"
    assert str(sigma(1, Word.parse("12"))) == "12"
    with pytest.raises(IndexError):
        sigma(2, Word.parse("12"))


def test_sigma0_worked_value():
    assert str(sigma0(Word.parse(T0_ROW_WORD))) == T0_SIGMA0_WORD


def test_longest_words():
    assert longest_word(3) == [1, 2, 1]
    assert longest_word(3, "alt") == [2, 1, 2]
    assert len(longest_word(4)) == 6 and len(longest_word(4, "alt")) == 6


@given(words)
def test_sigma_involution_and_q_symbol(w):
    q = burge(w).q
    for i in range(1, w.bound):
        v = sigma(i, w)
        assert sigma(i, v) == w
        assert burge(v).q == q
        wt = list(w.weight)
        wt[i - 1], wt[i] = wt[i], wt[i - 1]
        assert v.weight == tuple(wt)


@given(words)
def test_sigma0_reduced_word_independence(w):
    assert sigma0(w) == sigma0(w, longest_word(w.bound, "alt"))
    assert sigma0(w).weight == tuple(reversed(w.weight))


def test_reversal_of_the_running_example():
    T = Tableau.parse(T0)
    assert reversal(T) == Tableau.parse(T0_REVERSAL)
    assert reversal_general(T) == reversal(T)
    with pytest.raises(NotLRError):
        reversal(rotate(T))


@given(lr_tableaux)
def test_reversal_characterization(T):
    R = reversal(T)
    assert is_dual_lr(R)
    assert dual_equivalent(R, T)
    assert knuth_equivalent(R, rotate(yamanouchi_tableau(T.weight)))
    assert rectify(R) == evacuate(rectify(T))
    assert reversal_general(R) == T


def test_sigma_tableau_keeps_shape():
    T = Tableau.parse(T1)
    for i in (1, 2):
        S = sigma_tableau(i, T)
        assert S.shape == T.shape
        assert sigma_tableau(i, S) == T


def test_theta_rows():
    assert theta_rows(1, Word.parse("11", 2)) == [[], [1, 2]]
    w = Word.parse("1122131")
    rows = theta_rows(1, w)
    assert [len(r) for r in rows] == [2, 4, 1]
    with pytest.raises(NotYamanouchiError):
        theta_rows(1, Word.parse("21"))


def test_theta_rows_twice_restores_u():
    for n in range(1, 7):
        for letters in itertools.product(range(1, 4), repeat=n):
            if not is_yamanouchi(letters):
                continue
            w = Word(letters, 3)
            base = u_of(w)
            rows = [list(r) for r in base.rows] + [[]] * (3 - base.nrows)
            for i in (1, 2):
                v = sigma(i, w)
                back = [sorted(k for k, x in enumerate(sigma(i, v).letters, 1) if x == j + 1) for j in range(3)]
                assert back == rows
                assert sum(map(len, theta_rows(i, w))) == n
