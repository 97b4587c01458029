"""Weight-preserving conversions between tableaux and patterns."""
from __future__ import annotations

from typing import Sequence

from .combinatorics import (
    INF, SIGNED, SIGNED_INF, TYPE_A, GTPattern, OrthogonalPattern, Tableau,
    is_king_symplectic, is_partition, is_semistandard, is_sundaram_orthogonal, pad,
    validate_gt, validate_king,
)
from .errors import ValidityError


def tableau_to_pattern(T: Tableau) -> GTPattern:
    """p_{i,k} = number of letters <= k in row i of ``T``.

    Signed tableaux are read through the letter encoding, giving 2n rows.
    """
    if T.kind == SIGNED_INF:
        raise ValueError("co-restrict orthogonal tableaux before converting them")
    if not is_semistandard(T):
        raise ValidityError("tableau is not semistandard")
    m = T.alphabet_size
    if len(T.rows) > m:
        raise ValidityError(f"{len(T.rows)} rows cannot be filled from {m} letters")
    rows = []
    for k in range(m, 0, -1):
        rows.append(tuple(
            sum(1 for a in T.rows[i] if a <= k) if i < len(T.rows) else 0
            for i in range(k)
        ))
    return GTPattern(tuple(rows))


def pattern_to_tableau(P: GTPattern, kind: str = TYPE_A) -> Tableau:
    """Inverse of :func:`tableau_to_pattern`; row i gets letter k in columns p_{i,k-1}+1 .. p_{i,k}."""
    if not validate_gt(P):
        raise ValidityError("not a valid Gelfand-Tsetlin pattern")
    if kind == TYPE_A:
        n = P.N
    elif kind == SIGNED:
        if P.N % 2:
            raise ValidityError("signed tableaux need a pattern with an even number of rows")
        n = P.N // 2
    else:
        raise ValueError(f"cannot build a {kind} tableau from a bare pattern")
    rows = []
    for i in range(1, P.N + 1):
        row = []
        prev = 0
        for k in range(i, P.N + 1):
            cur = P.entry(i, k)
            row.extend([k] * (cur - prev))
            prev = cur
        rows.append(row)
    return Tableau(kind, n, tuple(tuple(r) for r in rows))


def sot_corestrict(T: Tableau) -> tuple[Tableau, frozenset[int]]:
    """Drop the infinity cells; return the King tableau and the rows that lost one."""
    if not is_sundaram_orthogonal(T):
        raise ValidityError("not a Sundaram orthogonal tableau")
    rows, lost = [], set()
    for i, row in enumerate(T.rows, start=1):
        if row and row[-1] == INF:
            rows.append(row[:-1])
            lost.add(i)
        else:
            rows.append(row)
    return Tableau(SIGNED, T.n, tuple(rows)), frozenset(lost)


def sot_extend(T: Tableau, lam: Sequence[int]) -> Tableau:
    """Append an infinity to each row i of the King tableau ``T`` with lam_i = mu_i + 1."""
    if not is_king_symplectic(T):
        raise ValidityError("not a King symplectic tableau")
    lam = tuple(lam)
    length = max(len(lam), len(T.rows))
    mu = pad(T.shape, length)
    lam = pad(lam, length)
    if not is_partition(lam) or any(l - m not in (0, 1) for l, m in zip(lam, mu)):
        raise ValidityError(f"{lam} is not {mu} plus at most one cell per row")
    rows = []
    for i in range(length):
        row = T.rows[i] if i < len(T.rows) else ()
        rows.append(row + (INF,) if lam[i] > mu[i] else row)
    return Tableau(SIGNED_INF, T.n, tuple(rows))


def sop_forget(P: OrthogonalPattern) -> GTPattern:
    return P.pattern


def sop_mark(P: GTPattern, lam: Sequence[int]) -> OrthogonalPattern:
    """Circle exactly the top-row entries i with lam_i = mu_i + 1."""
    if not validate_king(P):
        raise ValidityError("not a King pattern")
    n = P.N // 2
    mu = P.top[:n]
    lam = pad(lam, n)
    if not is_partition(lam) or any(l - m not in (0, 1) for l, m in zip(lam, mu)):
        raise ValidityError(f"{lam} is not {mu} plus at most one cell per row")
    return OrthogonalPattern(P, frozenset(i for i in range(1, n + 1) if lam[i - 1] > mu[i - 1]))
