import pytest

from bktableaux.combinatorics import (
    INF, SIGNED, SIGNED_INF, TYPE_A, GTPattern, OrthogonalPattern, Tableau, is_king_symplectic,
    is_partition, is_semistandard, is_sundaram_orthogonal, letter, letter_from_str, letter_to_str,
    one_cell_per_row_removals, partitions_of, partitions_up_to, shape_of_orthogonal, validate_gt,
    validate_king, validate_orthogonal, weight_orthogonal, weight_pattern_a, weight_pattern_bc,
    weight_tableau,
)
from bktableaux.enumeration import (
    enum_king, enum_king_tableaux, enum_orthogonal_tableaux, enum_ssyt,
)
from bktableaux.errors import ValidityError
from goldens import KING_332, PAIR_A, PAIR_C, SOT_332, SSYT_332, pat, tab


def test_partitions():
    assert is_partition((3, 1, 1, 0)) and not is_partition((1, 2))
    assert list(partitions_of(4, 2)) == [(4,), (3, 1), (2, 2)]
    assert len(partitions_up_to(5, 3)) == 1 + 1 + 2 + 3 + 4 + 5
    assert one_cell_per_row_removals((2, 1)) == [((2, 1), frozenset()), ((2, 0), frozenset({2})),
                                                 ((1, 1), frozenset({1})), ((1, 0), frozenset({1, 2}))]


def test_letters_roundtrip():
    assert letter(3) == 5 and letter(3, barred=True) == 6
    for s in ("1", "1b", "3", "3b", "inf"):
        assert letter_to_str(letter_from_str(s, SIGNED_INF), SIGNED_INF) == s
    assert letter_from_str("inf", SIGNED_INF) == INF
    with pytest.raises(ValidityError):
        letter_from_str("inf", SIGNED)


def test_tableau_rejects_bad_rows():
    with pytest.raises(ValidityError):
        Tableau(TYPE_A, 3, ((1,), (1, 2)))
    with pytest.raises(ValidityError):
        Tableau(TYPE_A, 3, ((4,),))
    with pytest.raises(ValidityError):
        Tableau(SIGNED, 1, ((INF,),))


def test_semistandard_examples():
    assert is_semistandard(tab(TYPE_A, 1, "1"))
    assert is_semistandard(tab(TYPE_A, 4, SSYT_332[0]))
    assert not is_semistandard(tab(TYPE_A, 1, "1/1"))


def test_king_examples():
    assert is_king_symplectic(tab(SIGNED, 3, KING_332[0]))
    assert is_king_symplectic(tab(SIGNED, 1, "1b"))
    assert not is_king_symplectic(tab(SIGNED, 2, "1/1b"))
    with pytest.raises(ValueError):
        is_king_symplectic(tab(TYPE_A, 2, "1"))


def test_orthogonal_examples():
    assert is_sundaram_orthogonal(tab(SIGNED_INF, 3, SOT_332[0]))
    assert is_sundaram_orthogonal(tab(SIGNED_INF, 1, "inf"))
    assert not is_sundaram_orthogonal(tab(SIGNED_INF, 1, "inf 1"))
    with pytest.raises(ValueError):
        is_sundaram_orthogonal(tab(SIGNED, 1, "1"))


@pytest.mark.parametrize("golden", [SSYT_332, SOT_332, KING_332])
def test_tableau_weights(golden):
    text, kind, n, w = golden
    assert weight_tableau(tab(kind, n, text)) == w


def test_weight_multiplicative_over_row_splits():
    for T in enum_king_tableaux(3, (2, 2, 1)):
        parts = [Tableau(SIGNED, 3, (row,)) for row in T.rows]
        total = [sum(ws) for ws in zip(*(weight_tableau(p) for p in parts))]
        assert tuple(total) == weight_tableau(T)


def _mutants(T, letters):
    for i, row in enumerate(T.rows):
        for j in range(len(row)):
            for a in letters:
                if a != row[j]:
                    rows = [list(r) for r in T.rows]
                    rows[i][j] = a
                    yield T.replace_rows(rows)


def test_mutation_flips_validators():
    # every single-cell change of an enumerated tableau either lands in the enumerated set or fails
    cases = [
        (enum_ssyt(3, (2, 1)), list(range(1, 4)), is_semistandard),
        (enum_king_tableaux(2, (2, 1)), list(range(1, 5)), is_king_symplectic),
        (enum_orthogonal_tableaux(2, (2, 1)), list(range(1, 5)) + [INF], is_sundaram_orthogonal),
    ]
    for stream, letters, pred in cases:
        valid = set(stream)
        assert valid and all(pred(T) for T in valid)
        flipped = 0
        for T in valid:
            for M in _mutants(T, letters):
                assert pred(M) == (M in valid)
                flipped += not pred(M)
        assert flipped > 0


def test_pattern_validators():
    assert validate_gt(pat(*PAIR_A[3]))
    assert validate_king(pat(*PAIR_C[3]))
    assert not validate_gt(GTPattern(((1, 0), (2,))))
    # interlacing holds but p_{2,2} breaks the King support
    P = pat((1, 1), (1, 1), (1, 1), (1,))
    assert validate_gt(P) and not validate_king(P)


def test_pattern_shape_checks():
    with pytest.raises(ValidityError):
        GTPattern(((1, 0), (1, 0)))


def test_pattern_weights():
    assert weight_pattern_a(pat(*PAIR_A[3])) == (2, 1, 2)
    assert weight_pattern_a(pat((5,))) == (5,)
    assert weight_pattern_a(pat((0, 0), (0,))) == (0, 0)
    assert weight_pattern_bc(pat((3, 2), (3, 1), (2,), (1,))) == (0, 1)
    assert weight_pattern_bc(pat((0, 0), (0,), (0,), (0,))) == (0, 0)
    assert weight_pattern_bc(pat((1,), (1,))) == (1,)


def test_orthogonal_shape():
    P = OrthogonalPattern(pat((2, 2), (2, 1), (2,), (1,)), frozenset({1}))
    assert shape_of_orthogonal(P) == (3, 2) and validate_orthogonal(P)
    assert weight_orthogonal(P) == weight_pattern_bc(P.pattern)
    assert shape_of_orthogonal(OrthogonalPattern(P.pattern, frozenset())) == (2, 2)
    bad = OrthogonalPattern(P.pattern, frozenset({2}))
    assert not validate_orthogonal(bad)
    with pytest.raises(ValidityError):
        shape_of_orthogonal(bad)


def test_king_support_bounds_row_lengths():
    for lam in partitions_up_to(5, 3):
        for P in enum_king(3, lam):
            for k in range(1, 4):
                assert sum(1 for v in P.row(2 * k) if v) <= k
                assert sum(1 for v in P.row(2 * k - 1) if v) <= k
