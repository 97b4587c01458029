"""Partitions, tableaux over the three alphabets, and Gelfand-Tsetlin style patterns.

Letters of the signed alphabet 1 < 1b < 2 < 2b < ... are stored through the
order-preserving encoding i -> 2i-1, ibar -> 2i, so King tableaux are ordinary
semistandard tableaux on 2n letters.  The infinity letter is ``INF``.

Patterns store full triangular rows, top row first: ``rows[0]`` is the row of
length N and ``rows[-1]`` has length 1.  Entry p_{i,k} (1-based, i <= k) is
``rows[N - k][i - 1]``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import ValidityError

Partition = tuple[int, ...]

INF = math.inf

TYPE_A = "typeA"
SIGNED = "signed"
SIGNED_INF = "signed_inf"
ALPHABET_KINDS = (TYPE_A, SIGNED, SIGNED_INF)


# ---------------------------------------------------------------- partitions

def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 0 for p in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


def partition_length(parts: Sequence[int]) -> int:
    return sum(1 for p in parts if p)


def pad(parts: Sequence[int], length: int) -> Partition:
    """Zero-pad (or strip trailing zeros) to exactly ``length`` parts."""
    parts = tuple(parts)
    if partition_length(parts) > length:
        raise ValueError(f"{parts} has more than {length} nonzero parts")
    parts = parts[:length] if len(parts) > length else parts
    return parts + (0,) * (length - len(parts))


def trim(parts: Sequence[int]) -> Partition:
    parts = list(parts)
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def partitions_of(size: int, max_parts: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``size`` with at most ``max_parts`` parts, reverse lex order."""
    if max_part is None:
        max_part = size
    if size == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(size, max_part), 0, -1):
        for rest in partitions_of(size - first, max_parts - 1, first):
            yield (first,) + rest


def partitions_up_to(max_size: int, max_parts: int) -> list[Partition]:
    return [lam for size in range(max_size + 1) for lam in partitions_of(size, max_parts)]


def one_cell_per_row_removals(lam: Sequence[int]) -> list[tuple[Partition, frozenset[int]]]:
    """Partitions mu with lam_i - mu_i in {0, 1}, paired with the rows that lost a cell.

    ``lam`` is taken at its given length; row indices are 1-based.
    """
    lam = tuple(lam)
    out = []
    for deltas in product((0, 1), repeat=len(lam)):
        mu = tuple(l - d for l, d in zip(lam, deltas))
        if is_partition(mu):
            out.append((mu, frozenset(i + 1 for i, d in enumerate(deltas) if d)))
    out.sort(key=lambda pair: pair[0], reverse=True)
    return out


# ---------------------------------------------------------------- letters

def letter(i: int, barred: bool = False) -> int:
    """Encode the signed letter i (or ibar) as an integer."""
    return 2 * i if barred else 2 * i - 1


def letter_to_str(a, kind: str) -> str:
    if a == INF:
        return "inf"
    if kind == TYPE_A:
        return str(a)
    i, barred = (a + 1) // 2, a % 2 == 0
    return f"{i}b" if barred else str(i)


def letter_from_str(s: str, kind: str):
    s = str(s).strip()
    if s == "inf":
        if kind != SIGNED_INF:
            raise ValidityError(f"letter 'inf' not allowed in a {kind} tableau")
        return INF
    if kind == TYPE_A:
        return int(s)
    if s.endswith("b"):
        return letter(int(s[:-1]), barred=True)
    return letter(int(s))


# ---------------------------------------------------------------- tableaux

@dataclass(frozen=True)
class Tableau:
    """A filling of a Young diagram, stored as left-justified rows.

    ``kind`` selects the alphabet: ``typeA`` uses 1..n, ``signed`` uses the
    encoded letters 1..2n, ``signed_inf`` additionally allows ``INF``.
    Trailing empty rows are dropped.
    """

    kind: str
    n: int
    rows: tuple[tuple, ...]

    def __post_init__(self):
        if self.kind not in ALPHABET_KINDS:
            raise ValueError(f"unknown alphabet kind {self.kind!r}")
        rows = [tuple(r) for r in self.rows]
        while rows and not rows[-1]:
            rows.pop()
        object.__setattr__(self, "rows", tuple(rows))
        if not is_partition(self.shape):
            raise ValidityError(f"row lengths {self.shape} do not form a partition")
        top = self.alphabet_size
        for row in rows:
            for a in row:
                if a == INF:
                    if self.kind != SIGNED_INF:
                        raise ValidityError(f"infinity not allowed in a {self.kind} tableau")
                elif not (isinstance(a, int) and 1 <= a <= top):
                    raise ValidityError(f"letter {a!r} outside the alphabet of size {top}")

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def alphabet_size(self) -> int:
        """Number of finite letters."""
        return self.n if self.kind == TYPE_A else 2 * self.n

    def cells(self) -> Iterator[tuple[int, int, object]]:
        """Yield (row, column, letter), 1-based."""
        for i, row in enumerate(self.rows, start=1):
            for j, a in enumerate(row, start=1):
                yield i, j, a

    def replace_rows(self, rows) -> Tableau:
        return Tableau(self.kind, self.n, tuple(tuple(r) for r in rows))


def is_semistandard(T: Tableau) -> bool:
    for row in T.rows:
        if any(a > b for a, b in zip(row, row[1:])):
            return False
    for upper, lower in zip(T.rows, T.rows[1:]):
        if any(a >= b for a, b in zip(upper, lower)):
            return False
    return True


def is_king_symplectic(T: Tableau) -> bool:
    """Semistandard in the signed alphabet with every row-i letter >= i."""
    if T.kind != SIGNED:
        raise ValueError(f"King tableaux use the signed alphabet, got {T.kind}")
    if not is_semistandard(T):
        return False
    return all(a >= letter(i) for i, _, a in T.cells())


def is_sundaram_orthogonal(T: Tableau) -> bool:
    if T.kind != SIGNED_INF:
        raise ValueError(f"orthogonal tableaux use the signed_inf alphabet, got {T.kind}")
    finite_rows = []
    for row in T.rows:
        if any(a == INF for a in row[:-1]):
            return False
        finite_rows.append(row[:-1] if row and row[-1] == INF else row)
    if not is_partition([len(r) for r in finite_rows]):
        return False
    return is_king_symplectic(Tableau(SIGNED, T.n, tuple(finite_rows)))


def weight_tableau(T: Tableau) -> tuple[int, ...]:
    exp = [0] * T.n
    for _, _, a in T.cells():
        if a == INF:
            continue
        if T.kind == TYPE_A:
            exp[a - 1] += 1
        elif a % 2:
            exp[(a + 1) // 2 - 1] += 1
        else:
            exp[a // 2 - 1] -= 1
    return tuple(exp)


# ---------------------------------------------------------------- patterns

@dataclass(frozen=True)
class GTPattern:
    """Triangular integer array, top row (length N) first."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        N = len(rows)
        for t, r in enumerate(rows):
            if len(r) != N - t:
                raise ValidityError(f"row {t} of a {N}-row pattern has length {len(r)}")

    @classmethod
    def padded(cls, rows: Iterable[Sequence[int]]) -> GTPattern:
        """Build from rows given top-first with trailing zeros optionally omitted."""
        rows = [tuple(r) for r in rows]
        N = len(rows)
        return cls(tuple(r + (0,) * (N - t - len(r)) for t, r in enumerate(rows)))

    @property
    def N(self) -> int:
        return len(self.rows)

    @property
    def top(self) -> tuple[int, ...]:
        return self.rows[0] if self.rows else ()

    def row(self, k: int) -> tuple[int, ...]:
        """Row k, the one of length k."""
        return self.rows[self.N - k]

    def entry(self, i: int, k: int) -> int:
        return self.rows[self.N - k][i - 1]

    def row_sums(self) -> list[int]:
        """[S_0, S_1, ..., S_N] with S_0 = 0."""
        return [0] + [sum(self.row(k)) for k in range(1, self.N + 1)]

    def half_rows(self) -> list[tuple[int, ...]]:
        """Rows with King-forced positions omitted (row k keeps ceil(k/2) entries)."""
        return [self.row(k)[: (k + 1) // 2] for k in range(self.N, 0, -1)]


def king_forced_zero(i: int, k: int) -> bool:
    """Positions that vanish in a King pattern: i > ceil(k/2)."""
    return 2 * i > k + 1


def validate_gt(P: GTPattern) -> bool:
    for r in P.rows:
        if any(v < 0 for v in r):
            return False
    for upper, lower in zip(P.rows, P.rows[1:]):
        for i, v in enumerate(lower):
            if not upper[i] >= v >= upper[i + 1]:
                return False
    return True


def validate_king(P: GTPattern) -> bool:
    if P.N % 2 or not validate_gt(P):
        return False
    return all(P.entry(i, k) == 0
               for k in range(1, P.N + 1) for i in range(1, k + 1) if king_forced_zero(i, k))


@dataclass(frozen=True)
class OrthogonalPattern:
    """A King pattern with some top-row entries circled (1-based row indices)."""

    pattern: GTPattern
    circled: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "circled", frozenset(int(i) for i in self.circled))

    @property
    def n(self) -> int:
        return self.pattern.N // 2


def _circled_shape(P: OrthogonalPattern) -> Partition:
    return tuple(v + (1 if i in P.circled else 0) for i, v in enumerate(P.pattern.top[: P.n], start=1))


def validate_orthogonal(P: OrthogonalPattern) -> bool:
    if not validate_king(P.pattern):
        return False
    if not P.circled <= set(range(1, P.n + 1)):
        return False
    return is_partition(_circled_shape(P))


def shape_of_orthogonal(P: OrthogonalPattern) -> Partition:
    lam = _circled_shape(P)
    if not is_partition(lam):
        raise ValidityError(f"circled top row gives {lam}, which is not a partition")
    return lam


def weight_pattern_a(P: GTPattern) -> tuple[int, ...]:
    S = P.row_sums()
    return tuple(S[k] - S[k - 1] for k in range(1, P.N + 1))


def weight_pattern_bc(P: GTPattern) -> tuple[int, ...]:
    if P.N % 2:
        raise ValidityError("type B/C patterns have an even number of rows")
    S = P.row_sums()
    return tuple(2 * S[2 * j - 1] - S[2 * j] - S[2 * j - 2] for j in range(1, P.N // 2 + 1))


def weight_orthogonal(P: OrthogonalPattern) -> tuple[int, ...]:
    return weight_pattern_bc(P.pattern)
