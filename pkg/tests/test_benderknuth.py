import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bktableaux.benderknuth import (
    bk_a_pattern, bk_a_tableau, bk_b, bk_b_tableau, bk_c_pattern, bk_c_tableau, bk_c_tableau_trace,
    bk_c_trace, bk_first_pattern, lemma44_violations, rect_pattern,
)
from bktableaux.bijections import pattern_to_tableau, tableau_to_pattern
from bktableaux.combinatorics import (
    SIGNED, SIGNED_INF, TYPE_A, OrthogonalPattern, partitions_up_to, validate_king,
    weight_orthogonal, weight_pattern_bc, weight_tableau,
)
from bktableaux.enumeration import (
    enum_gt, enum_king, enum_king_tableaux, enum_orthogonal, enum_orthogonal_tableaux, enum_ssyt,
)
from bktableaux.errors import ValidityError
from goldens import (
    BKA_IN, BKA_OUT, BKA_TAB_IN, BKA_TAB_OUT, BKC_IN, BKC_OUT, BKC_TAB_IN, BKC_TAB_OUT,
    BKC_TAB_TRACE, BKC_TRACE, BRAID_IMAGE, BRAID_WITNESS, pat, tab,
)


def test_bk_a_pattern_golden():
    assert bk_a_pattern(pat(*BKA_IN), 3) == pat(*BKA_OUT)


def test_bk_a_pattern_constant_fixed():
    P = pat((2, 2, 2), (2, 2), (2,))
    assert bk_a_pattern(P, 1) == P and bk_a_pattern(P, 2) == P


def test_bk_a_pattern_errors():
    with pytest.raises(ValueError):
        bk_a_pattern(pat(*BKA_IN), 4)
    with pytest.raises(ValidityError):
        bk_a_pattern(pat((1, 0), (2,)), 1)


def test_bk_a_tableau_golden():
    assert bk_a_tableau(tab(TYPE_A, 4, BKA_TAB_IN), 3) == tab(TYPE_A, 4, BKA_TAB_OUT)


def test_bk_a_tableau_untouched_letters():
    T = tab(TYPE_A, 4, "1 1 2/2")
    assert bk_a_tableau(T, 3) == T


def test_bk_a_routes_agree():
    for n in (2, 3):
        for lam in partitions_up_to(6, n):
            for T in enum_ssyt(n, lam):
                for j in range(1, n):
                    assert tableau_to_pattern(bk_a_tableau(T, j)) == bk_a_pattern(tableau_to_pattern(T), j)


def test_bk_c_trace_golden():
    trace = bk_c_trace(pat(*BKC_IN), 2)
    assert trace[1:5] == [pat(*rows) for rows in BKC_TRACE]
    assert trace[5] == pat(*BKC_OUT)
    # only the obstruction (3, 4) survives the four toggles, with value 1
    assert lemma44_violations(trace[4], 2) == [] and trace[4].entry(3, 4) == 1


def test_rect_golden_and_identity():
    P4 = pat(*BKC_TRACE[3])
    assert rect_pattern(P4, 2) == pat(*BKC_OUT)
    assert rect_pattern(pat(*BKC_OUT), 2) == pat(*BKC_OUT)


def test_rect_rejects_other_violations():
    P = pat((1, 1, 1), (1, 1, 1), (1, 1, 1), (1, 1), (1,), (1,))
    assert lemma44_violations(P, 1) == [(3, 4)]
    with pytest.raises(ValidityError):
        rect_pattern(P, 1)


def test_bk_c_pattern_golden():
    assert bk_c_pattern(pat(*BKC_IN), 2) == pat(*BKC_OUT)
    assert bk_c_pattern(pat(*BKC_OUT), 2) == pat(*BKC_IN)


def test_bk_c_fixed_pattern():
    P = pat((1, 1, 1), (1, 1, 1), (1, 1), (1, 1), (1,), (1,))
    assert bk_c_pattern(P, 1) == P and bk_c_pattern(P, 2) == P


def test_bk_first():
    P = pat((1,), (1,))
    Q = bk_first_pattern(P)
    assert Q == pat((1,), (0,))
    assert weight_pattern_bc(P) == (1,) and weight_pattern_bc(Q) == (-1,)
    fixed = pat((2,), (1,))
    assert bk_first_pattern(fixed) == fixed
    assert bk_c_pattern(P, 0) == Q


def test_bk_first_exhaustive():
    for n in (1, 2):
        for lam in partitions_up_to(4, n):
            for P in enum_king(n, lam):
                Q = bk_first_pattern(P)
                assert validate_king(Q) and bk_first_pattern(Q) == P
                w, v = weight_pattern_bc(P), weight_pattern_bc(Q)
                assert v == (-w[0],) + w[1:]


def test_bk_c_tableau_golden():
    trace = bk_c_tableau_trace(tab(SIGNED, 3, BKC_TAB_IN), 2)
    assert trace[1:5] == [tab(SIGNED, 3, t) for t in BKC_TAB_TRACE]
    assert trace[5] == tab(SIGNED, 3, BKC_TAB_OUT)
    assert bk_c_tableau(tab(SIGNED, 3, BKC_TAB_IN), 2) == tab(SIGNED, 3, BKC_TAB_OUT)


def test_bk_c_tableau_untouched_letters():
    T = tab(SIGNED, 3, "1 1 1b")
    assert bk_c_tableau(T, 2) == T


def test_bk_c_routes_agree():
    for n in (2, 3):
        for lam in partitions_up_to(5, n):
            for T in enum_king_tableaux(n, lam):
                for j in range(n):
                    via_pattern = pattern_to_tableau(bk_c_pattern(tableau_to_pattern(T), j), SIGNED)
                    assert bk_c_tableau(T, j) == via_pattern


def test_bk_c_errors():
    with pytest.raises(ValueError):
        bk_c_pattern(pat(*BKC_IN), 3)
    with pytest.raises(ValidityError):
        bk_c_pattern(pat((1, 1), (1, 1), (1, 1), (1,)), 1)


def test_bk_b_empty_circles_matches_c():
    for lam in partitions_up_to(4, 2):
        for P in enum_king(2, lam):
            for j in (0, 1):
                out = bk_b(OrthogonalPattern(P, frozenset()), j)
                assert out.pattern == bk_c_pattern(P, j) and out.circled == frozenset()


def test_bk_b_first_generator():
    P = OrthogonalPattern(pat((2, 2), (2, 1), (2,), (1,)), frozenset({1}))
    Q = bk_b(P, 0)
    assert Q == OrthogonalPattern(bk_first_pattern(P.pattern), frozenset({1}))
    w, v = weight_orthogonal(P), weight_orthogonal(Q)
    assert v == (-w[0], w[1])


def test_bk_b_exhaustive_n2():
    for lam in partitions_up_to(4, 2):
        for P in enum_orthogonal(2, lam):
            for j in (0, 1):
                assert bk_b(bk_b(P, j), j) == P


def test_bk_b_tableau_routes():
    for lam in partitions_up_to(4, 2):
        for T in enum_orthogonal_tableaux(2, lam):
            for j in (0, 1):
                U = bk_b_tableau(T, j)
                assert U.kind == SIGNED_INF and U.shape == T.shape
                assert bk_b_tableau(U, j) == T


@pytest.mark.parametrize("n,size", [(2, 5), (3, 4)])
def test_small_involutions(n, size):
    for lam in partitions_up_to(size, n):
        for P in enum_gt(n, lam):
            for j in range(1, n):
                assert bk_a_pattern(bk_a_pattern(P, j), j) == P
        for P in enum_king(n, lam):
            for j in range(n):
                Q = bk_c_pattern(P, j)
                assert validate_king(Q) and bk_c_pattern(Q, j) == P


def test_braid_relation_fails():
    W = pat(*BRAID_WITNESS)
    x = W
    for _ in range(3):
        x = bk_c_pattern(bk_c_pattern(x, 2), 1)
    assert x == pat(*BRAID_IMAGE) and x != W


@st.composite
def king_patterns(draw):
    n = draw(st.integers(1, 3))
    lam = draw(st.sampled_from(partitions_up_to(4, n)))
    pool = list(enum_king(n, lam))
    return draw(st.sampled_from(pool))


@settings(max_examples=100, deadline=None)
@given(king_patterns(), st.data())
def test_bk_c_weight_equivariance_sampled(P, data):
    n = P.N // 2
    j = data.draw(st.integers(0, n - 1))
    w, v = weight_pattern_bc(P), weight_pattern_bc(bk_c_pattern(P, j))
    if j == 0:
        assert v == (-w[0],) + w[1:]
    else:
        swapped = list(w)
        swapped[j - 1], swapped[j] = w[j], w[j - 1]
        assert v == tuple(swapped)


def test_tableau_weight_swap_golden():
    T = tab(SIGNED, 3, BKC_TAB_IN)
    assert weight_tableau(T) == (1, 0, -1)
    assert weight_tableau(bk_c_tableau(T, 2)) == (1, -1, 0)
