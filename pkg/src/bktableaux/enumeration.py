"""Exhaustive generation of patterns and tableaux, and their generating functions.

Patterns are produced row by row from the top, choosing each row in the
interlacing box below the previous one (lexicographic order), with King
support forcing zeros where required.  The tableau generators fill cells
directly and exist as an independent cross-check of the pattern streams.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Callable, Iterator, Sequence

from .combinatorics import (
    INF, SIGNED, SIGNED_INF, TYPE_A, GTPattern, OrthogonalPattern, Partition, Tableau,
    is_king_symplectic, is_sundaram_orthogonal, king_forced_zero,
    one_cell_per_row_removals, pad, partition_length, weight_orthogonal, weight_pattern_a,
    weight_pattern_bc, weight_tableau,
)
from .laurent import LaurentPolynomial


def _check_length(n: int, lam: Sequence[int]) -> None:
    if partition_length(lam) > n:
        raise ValueError(f"partition {tuple(lam)} has more than {n} nonzero parts")


def _patterns(top: tuple[int, ...], forced: Callable[[int, int], bool] | None) -> Iterator[GTPattern]:
    N = len(top)

    def rec(rows: list[tuple[int, ...]]) -> Iterator[GTPattern]:
        above = rows[-1]
        k = len(above) - 1
        if k == 0:
            yield GTPattern(tuple(rows))
            return
        ranges = []
        for i in range(k):
            lo, hi = above[i + 1], above[i]
            if forced is not None and forced(i + 1, k):
                if lo > 0:
                    return
                hi = 0
            ranges.append(range(lo, hi + 1))
        for row in product(*ranges):
            yield from rec(rows + [row])

    if N == 0:
        yield GTPattern(())
        return
    if forced is not None and any(v and forced(i, N) for i, v in enumerate(top, start=1)):
        return
    yield from rec([top])


def enum_gt(n: int, lam: Sequence[int]) -> Iterator[GTPattern]:
    _check_length(n, lam)
    return _patterns(pad(lam, n), None)


def enum_king(n: int, lam: Sequence[int]) -> Iterator[GTPattern]:
    _check_length(n, lam)
    return _patterns(pad(lam, 2 * n), king_forced_zero)


def enum_orthogonal(n: int, lam: Sequence[int]) -> Iterator[OrthogonalPattern]:
    _check_length(n, lam)
    for mu, circled in one_cell_per_row_removals(pad(lam, n)):
        for P in enum_king(n, mu):
            yield OrthogonalPattern(P, circled)


def _sum_weights(weights: Iterator[tuple[int, ...]], n: int) -> LaurentPolynomial:
    acc: dict[tuple[int, ...], int] = {}
    for w in weights:
        acc[w] = acc.get(w, 0) + 1
    return LaurentPolynomial(acc, n)


@lru_cache(maxsize=None)
def _schur(n: int, lam: Partition) -> LaurentPolynomial:
    return _sum_weights((weight_pattern_a(P) for P in enum_gt(n, lam)), n)


@lru_cache(maxsize=None)
def _symplectic(n: int, lam: Partition) -> LaurentPolynomial:
    return _sum_weights((weight_pattern_bc(P) for P in enum_king(n, lam)), n)


@lru_cache(maxsize=None)
def _orthogonal(n: int, lam: Partition) -> LaurentPolynomial:
    return _sum_weights((weight_orthogonal(P) for P in enum_orthogonal(n, lam)), n)


def schur(n: int, lam: Sequence[int]) -> LaurentPolynomial:
    _check_length(n, lam)
    return _schur(n, pad(lam, n))


def symplectic(n: int, lam: Sequence[int]) -> LaurentPolynomial:
    _check_length(n, lam)
    return _symplectic(n, pad(lam, n))


def orthogonal(n: int, lam: Sequence[int]) -> LaurentPolynomial:
    _check_length(n, lam)
    return _orthogonal(n, pad(lam, n))


# ---------------------------------------------------------------- tableau side

def _fillings(shape: Sequence[int], letters: Sequence, ok: Callable) -> Iterator[list[list]]:
    """Row-major fillings with rows weakly increasing and ``ok(rows, i, j, a)`` per cell."""
    cells = [(i, j) for i, length in enumerate(shape) for j in range(length)]
    rows: list[list] = [[] for _ in shape]

    def rec(t: int) -> Iterator[list[list]]:
        if t == len(cells):
            yield [list(r) for r in rows]
            return
        i, j = cells[t]
        for a in letters:
            if j > 0 and rows[i][j - 1] > a:
                continue
            if not ok(rows, i, j, a):
                continue
            rows[i].append(a)
            yield from rec(t + 1)
            rows[i].pop()

    yield from rec(0)


def _column_strict(rows, i, j, a) -> bool:
    return i == 0 or rows[i - 1][j] < a


def enum_ssyt(n: int, lam: Sequence[int]) -> Iterator[Tableau]:
    _check_length(n, lam)
    shape = tuple(p for p in lam if p)
    for rows in _fillings(shape, range(1, n + 1), _column_strict):
        yield Tableau(TYPE_A, n, tuple(map(tuple, rows)))


def enum_king_tableaux(n: int, lam: Sequence[int]) -> Iterator[Tableau]:
    _check_length(n, lam)
    shape = tuple(p for p in lam if p)

    def ok(rows, i, j, a):
        return a >= 2 * i + 1 and _column_strict(rows, i, j, a)

    for rows in _fillings(shape, range(1, 2 * n + 1), ok):
        T = Tableau(SIGNED, n, tuple(map(tuple, rows)))
        assert is_king_symplectic(T)
        yield T


def enum_orthogonal_tableaux(n: int, lam: Sequence[int]) -> Iterator[Tableau]:
    """Fill from the alphabet with infinity, then keep what the validity predicate accepts."""
    _check_length(n, lam)
    shape = tuple(p for p in lam if p)
    letters = list(range(1, 2 * n + 1)) + [INF]

    def ok(rows, i, j, a):
        if a == INF:
            return j == shape[i] - 1
        if a < 2 * i + 1:
            return False
        return i == 0 or rows[i - 1][j] < a

    for rows in _fillings(shape, letters, ok):
        T = Tableau(SIGNED_INF, n, tuple(map(tuple, rows)))
        if is_sundaram_orthogonal(T):
            yield T


def tableau_generating_function(tableaux: Iterator[Tableau], n: int) -> LaurentPolynomial:
    return _sum_weights((weight_tableau(T) for T in tableaux), n)
