"""Bender-Knuth involutions of types A, B and C on patterns and tableaux.

Type C generators are indexed by j in 0..n-1: j = 0 is (1 1bar), j >= 1 is
(j j+1)(jbar j+1bar).  Type B maps reuse the type C ones on the underlying
King pattern and put the circles back.
"""
from __future__ import annotations

from .combinatorics import (
    SIGNED, GTPattern, OrthogonalPattern, Tableau, is_king_symplectic, is_semistandard,
    king_forced_zero, validate_gt, validate_king, validate_orthogonal,
)
from .bijections import sot_corestrict, sot_extend
from .errors import ValidityError


def _toggle(rows: list[list[int]], j: int) -> None:
    """In-place BK^A_j on mutable rows (top first), no validation."""
    N = len(rows)
    up, cur = rows[N - j - 1], rows[N - j]
    down = rows[N - j + 1] if j > 1 else None
    new = []
    for i in range(j):  # 0-based i stands for entry i+1
        hi = up[i]
        if i >= 1:
            hi = min(hi, down[i - 1])
        lo = up[i + 1]
        if down is not None and i < j - 1:
            lo = max(lo, down[i])
        new.append(hi + lo - cur[i])
    rows[N - j] = new


def _mutable(P: GTPattern) -> list[list[int]]:
    return [list(r) for r in P.rows]


def _freeze(rows) -> GTPattern:
    return GTPattern(tuple(tuple(r) for r in rows))


def bk_a_pattern(P: GTPattern, j: int) -> GTPattern:
    """Toggle row j: p' = min(upper-left, lower-left) + max(upper-right, lower-right) - p.

    Absent neighbours are left out of the min and max.
    """
    if not 1 <= j < P.N:
        raise ValueError(f"j={j} out of range for a {P.N}-row pattern")
    if not validate_gt(P):
        raise ValidityError("not a valid Gelfand-Tsetlin pattern")
    rows = _mutable(P)
    _toggle(rows, j)
    return _freeze(rows)


def bk_a_tableau(T: Tableau, j: int) -> Tableau:
    """Swap the free j / j+1 counts in every row, leaving vertical {j, j+1} dominoes frozen."""
    if not 1 <= j < T.alphabet_size:
        raise ValueError(f"j={j} out of range for an alphabet of size {T.alphabet_size}")
    if not is_semistandard(T):
        raise ValidityError("tableau is not semistandard")
    rows = T.rows
    out = []
    for r, row in enumerate(rows):
        above = rows[r - 1] if r > 0 else ()
        below = rows[r + 1] if r + 1 < len(rows) else ()
        free_cols = []
        for c, a in enumerate(row):
            if a == j and not (c < len(below) and below[c] == j + 1):
                free_cols.append(c)
            elif a == j + 1 and not (c < len(above) and above[c] == j):
                free_cols.append(c)
        new = list(row)
        if free_cols:
            a = sum(1 for c in free_cols if row[c] == j)
            b = len(free_cols) - a
            for k, c in enumerate(free_cols):
                new[c] = j if k < b else j + 1
        out.append(new)
    return T.replace_rows(out)


def lemma44_violations(P: GTPattern, j: int) -> list[tuple[int, int]]:
    """King-forced positions other than (j+1, 2j) holding a nonzero entry."""
    return [(i, k) for k in range(1, P.N + 1) for i in range(1, k + 1)
            if king_forced_zero(i, k) and (i, k) != (j + 1, 2 * j) and P.entry(i, k) != 0]


def rect_pattern(P: GTPattern, j: int) -> GTPattern:
    """Subtract v = p_{j+1,2j} from p_{j+1,2j}, p_{j+1,2j+1}, p_{j,2j} and p_{j,2j-1}."""
    if P.N % 2 or not 1 <= j < P.N // 2:
        raise ValueError(f"j={j} out of range for a {P.N}-row pattern")
    bad = lemma44_violations(P, j)
    if bad:
        raise ValidityError(f"forced-zero positions {bad} are nonzero")
    rows = _mutable(P)
    N = P.N
    v = P.entry(j + 1, 2 * j)
    for i, k in ((j + 1, 2 * j), (j + 1, 2 * j + 1), (j, 2 * j), (j, 2 * j - 1)):
        rows[N - k][i - 1] -= v
    return _freeze(rows)


def bk_c_trace(P: GTPattern, j: int) -> list[GTPattern]:
    """[P0, P1, P2, P3, P4, P5]: the four type A toggles in application order, then rect."""
    if P.N % 2 or not 1 <= j < P.N // 2:
        raise ValueError(f"j={j} out of range for a {P.N}-row King pattern")
    if not validate_king(P):
        raise ValidityError("not a King symplectic pattern")
    trace = [P]
    rows = _mutable(P)
    for step in (2 * j, 2 * j - 1, 2 * j + 1, 2 * j):
        _toggle(rows, step)
        trace.append(_freeze(rows))
    trace.append(rect_pattern(trace[-1], j))
    return trace


def bk_first_pattern(P: GTPattern) -> GTPattern:
    """The (1 1bar) involution, which is BK^A_1 on the King pattern."""
    if not validate_king(P):
        raise ValidityError("not a King symplectic pattern")
    return bk_a_pattern(P, 1)


def bk_c_pattern(P: GTPattern, j: int) -> GTPattern:
    if j == 0:
        return bk_first_pattern(P)
    return bk_c_trace(P, j)[-1]


def bk_c_tableau_trace(T: Tableau, j: int) -> list[Tableau]:
    """[T0, .., T4, T5] for j >= 1: four type A steps, then tableau rect.

    Rect turns every {j, jbar} vertical domino between rows j and j+1 into a
    {j+1, j+1bar} domino and re-sorts both rows.
    """
    if T.kind != SIGNED:
        raise ValueError(f"King tableaux use the signed alphabet, got {T.kind}")
    if not 1 <= j < T.n:
        raise ValueError(f"j={j} out of range for n={T.n}")
    if not is_king_symplectic(T):
        raise ValidityError("not a King symplectic tableau")
    trace = [T]
    for step in (2 * j, 2 * j - 1, 2 * j + 1, 2 * j):
        trace.append(bk_a_tableau(trace[-1], step))
    rows = [list(r) for r in trace[-1].rows]
    if len(rows) > j:
        upper, lower = rows[j - 1], rows[j]
        for c in range(len(lower)):
            if upper[c] == 2 * j - 1 and lower[c] == 2 * j:
                upper[c], lower[c] = 2 * j + 1, 2 * j + 2
        upper.sort()
        lower.sort()
    trace.append(T.replace_rows(rows))
    return trace


def bk_c_tableau(T: Tableau, j: int) -> Tableau:
    """Type C involution on a King tableau; j = 0 is BK^A_1."""
    if j == 0:
        if T.kind != SIGNED or T.n < 1 or not is_king_symplectic(T):
            raise ValidityError("not a King symplectic tableau")
        return bk_a_tableau(T, 1)
    return bk_c_tableau_trace(T, j)[-1]


def bk_b(P: OrthogonalPattern, j: int) -> OrthogonalPattern:
    """Type B involution: forget circles, apply the type C map, restore the circles."""
    if not validate_orthogonal(P):
        raise ValidityError("not a valid orthogonal pattern")
    if not 0 <= j < P.n:
        raise ValueError(f"j={j} out of range for n={P.n}")
    out = OrthogonalPattern(bk_c_pattern(P.pattern, j), P.circled)
    if not validate_orthogonal(out):
        raise ValidityError("restored circles no longer give a partition shape")
    return out


def bk_b_tableau(T: Tableau, j: int) -> Tableau:
    """Type B involution on an orthogonal tableau, through its co-restriction."""
    king, _ = sot_corestrict(T)
    lam = tuple(len(r) for r in T.rows)
    return sot_extend(bk_c_tableau(king, j), lam)
