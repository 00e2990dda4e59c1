import pytest

from kcv.chartable import bipartitions
from kcv.errors import UnsupportedType
from kcv.symbols import (symbol, c_invariant, d0_invariant, a_diamond,
                         is_diamond_special, is_preferred_extension,
                         sigma_word, involution_class_data,
                         closed_form_upsilon)


def test_symbol_rows():
    lam, mu = symbol((2, 1), (1,), m=3)
    assert lam == (0, 2, 4)
    assert mu == (0, 1, 3)


@pytest.mark.parametrize("n", range(1, 7))
def test_padding_invariance(n):
    for alpha, beta in bipartitions(n):
        base = max(len(alpha), len(beta), 1)
        for extra in (1, 2, 3):
            m = base + extra
            assert c_invariant(alpha, beta, m) == c_invariant(alpha, beta)
            assert d0_invariant(alpha, beta, m) == d0_invariant(alpha, beta)
            assert a_diamond(alpha, beta, m) == a_diamond(alpha, beta)
            assert is_diamond_special(alpha, beta, m) == \
                is_diamond_special(alpha, beta)
            if alpha != beta:
                assert is_preferred_extension(alpha, beta, m) == \
                    is_preferred_extension(alpha, beta)


def test_c_invariant_values():
    # entries of the lower row missing from the upper row; zero exactly
    # for the symmetric labels
    assert c_invariant((2,), ()) == 1
    assert c_invariant((1,), (1,)) == 0
    assert c_invariant((), (1, 1)) == 1
    assert c_invariant((2, 1), (2, 1)) == 0
    assert c_invariant((3,), (1,)) == 1


def test_diamond_special_examples():
    assert is_diamond_special((2,), ())
    assert is_diamond_special((1,), (1,))
    assert not is_diamond_special((), (2,))
    # equal bipartitions are always diamond special
    for n in range(1, 5):
        for alpha, beta in bipartitions(2 * n):
            if alpha == beta:
                assert is_diamond_special(alpha, beta)


def test_preferred_extension():
    assert is_preferred_extension((1,), (1, 1)) != \
        is_preferred_extension((1, 1), (1,))
    with pytest.raises(UnsupportedType):
        is_preferred_extension((1,), (1,))


def test_exactly_one_of_pair_preferred():
    for n in range(1, 7):
        for alpha, beta in bipartitions(n):
            if alpha == beta:
                continue
            assert is_preferred_extension(alpha, beta) != \
                is_preferred_extension(beta, alpha)


def test_sigma_word_basics():
    assert sigma_word(4, 0, 0) == []
    assert sigma_word(4, 1, 0) == [0]
    assert sigma_word(4, 2, 0) == [0, 1, 0, 1]
    assert sigma_word(4, 0, 2) == [1, 3]
    assert sigma_word(4, 1, 1) == [0, 2]
    with pytest.raises(ValueError):
        sigma_word(4, 3, 1)


def test_sigma_word_is_involution():
    from kcv.twisted import BnPair
    pair = BnPair(4)
    B = pair.B
    for l, j in involution_class_data(4):
        x = B.word_to_index(sigma_word(4, l, j))
        assert B.mult(x, x) == 0
        assert B.length[x] == len(sigma_word(4, l, j))


def test_involution_class_data_counts():
    assert involution_class_data(2) == [(0, 0), (0, 1), (1, 0), (2, 0)]
    assert len(involution_class_data(4)) == 9
    for l, j in involution_class_data(5):
        assert l + 2 * j <= 5


@pytest.mark.parametrize("n", range(1, 5))
def test_closed_form_labels_are_special(n):
    for (l, j) in involution_class_data(n):
        for (alpha, beta), mult in closed_form_upsilon(n, l, j).items():
            assert mult > 0
            assert sum(beta) == j
            assert is_diamond_special(alpha, beta)


def test_closed_form_identity_class():
    # only labels with d0 = 0 can meet the class of the identity
    assert closed_form_upsilon(3, 0, 0) == {((3,), ()): 1}
    assert closed_form_upsilon(5, 0, 0) == {((5,), ()): 1}
