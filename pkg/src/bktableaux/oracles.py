"""Independent cross-checks: Weyl character alternants and detropicalized Bender-Knuth maps.

The detropicalized maps act on :class:`RationalPattern`, a triangular array
of positive ``Fraction`` values mirroring :class:`GTPattern`.  Positions that
are forced to vanish in a King pattern are stored as ``None`` (absent); an
absent neighbour is dropped from its sum, and an empty max-part is 1.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Sequence

from .combinatorics import GTPattern, king_forced_zero, pad, partition_length
from .errors import ValidityError
from .laurent import LaurentPolynomial, poly_divexact


def _perm_sign(p: Sequence[int]) -> int:
    sign, seen = 1, [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _alternant(exponents: Sequence[int], n: int) -> LaurentPolynomial:
    """det(x_j^{a_i} - x_j^{-a_i}) by Leibniz expansion."""
    total = LaurentPolynomial({}, n)
    for p in permutations(range(n)):
        term = LaurentPolynomial.constant(_perm_sign(p), n)
        for i, j in enumerate(p):
            a = exponents[i]
            term = term * (LaurentPolynomial.variable(j + 1, n, a)
                           - LaurentPolynomial.variable(j + 1, n, -a))
        total = total + term
    return total


def character_c(n: int, lam: Sequence[int]) -> LaurentPolynomial:
    """Sp(2n) character as a ratio of alternants."""
    if partition_length(lam) > n:
        raise ValueError(f"partition {tuple(lam)} too long for n={n}")
    lam = pad(lam, n)
    num = _alternant([lam[i] + n - i for i in range(n)], n)  # l_i + 1 with 0-based i
    den = _alternant([n - i for i in range(n)], n)
    return poly_divexact(num, den)


def character_b(n: int, lam: Sequence[int]) -> LaurentPolynomial:
    """SO(2n+1) character, computed in y_j with x_j = y_j^2 to keep exponents integral."""
    if partition_length(lam) > n:
        raise ValueError(f"partition {tuple(lam)} too long for n={n}")
    lam = pad(lam, n)
    num = _alternant([2 * (lam[i] + n - 1 - i) + 1 for i in range(n)], n)
    den = _alternant([2 * (n - 1 - i) + 1 for i in range(n)], n)
    q = poly_divexact(num, den)
    halved = {}
    for exp, c in q.terms.items():
        if any(e % 2 for e in exp):
            raise ValidityError(f"odd exponent {exp} in the type B quotient")
        halved[tuple(e // 2 for e in exp)] = c
    return LaurentPolynomial(halved, n)


# ---------------------------------------------------------------- detropicalization

@dataclass(frozen=True)
class RationalPattern:
    """Triangular array of positive rationals (or ``None`` where absent), top row first."""

    rows: tuple[tuple[Fraction | None, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(None if v is None else Fraction(v) for v in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        N = len(rows)
        for t, r in enumerate(rows):
            if len(r) != N - t:
                raise ValidityError(f"row {t} of a {N}-row pattern has length {len(r)}")
            if any(v is not None and v <= 0 for v in r):
                raise ValidityError("entries must be strictly positive")

    @property
    def N(self) -> int:
        return len(self.rows)

    def entry(self, i: int, k: int) -> Fraction | None:
        return self.rows[self.N - k][i - 1]

    @classmethod
    def king_shaped(cls, values: Sequence[Sequence], N: int) -> RationalPattern:
        """Fill the non-forced positions of an N-row pattern from half rows (top first)."""
        rows = []
        for t, half in enumerate(values):
            k = N - t
            width = (k + 1) // 2
            if len(half) != width:
                raise ValidityError(f"row {k} needs {width} values, got {len(half)}")
            rows.append(tuple(half) + (None,) * (k - width))
        return cls(tuple(rows))

    @classmethod
    def from_gt(cls, P: GTPattern, base: Fraction, king: bool = False) -> RationalPattern:
        """Embed an integer pattern as ``base ** p``; King-forced positions become absent."""
        N = P.N
        return cls(tuple(
            tuple(None if king and king_forced_zero(i, k) else Fraction(base) ** P.entry(i, k)
                  for i in range(1, k + 1))
            for k in range(N, 0, -1)
        ))


def random_king_rational(n: int, rng: random.Random, bound: int = 50) -> RationalPattern:
    """Positive rationals with numerators and denominators in 1..bound at every King position."""
    N = 2 * n
    values = [[Fraction(rng.randint(1, bound), rng.randint(1, bound)) for _ in range((k + 1) // 2)]
              for k in range(N, 0, -1)]
    return RationalPattern.king_shaped(values, N)


def _detrop_toggle(rows: list[list], j: int) -> None:
    N = len(rows)
    up, cur = rows[N - j - 1], rows[N - j]
    down = rows[N - j + 1] if j > 1 else None
    new = []
    for i in range(j):
        x = cur[i]
        if x is None:
            new.append(None)
            continue
        min_args = [up[i]]
        if i >= 1:
            min_args.append(down[i - 1])
        max_args = [up[i + 1]]
        if down is not None and i < j - 1:
            max_args.append(down[i])
        min_args = [v for v in min_args if v is not None]
        max_args = [v for v in max_args if v is not None]
        if not min_args:
            raise ValidityError(f"entry ({i + 1}, {j}) has no upper neighbour")
        top = sum(min_args)
        bottom = 1 / sum(1 / v for v in max_args) if max_args else Fraction(1)
        new.append(top * bottom / x)
    rows[N - j] = new


def detrop_bk_a(x: RationalPattern, j: int) -> RationalPattern:
    """Rational lift of BK^A_j: min becomes a sum, max a parallel sum, minus a division."""
    if not 1 <= j < x.N:
        raise ValueError(f"j={j} out of range for a {x.N}-row pattern")
    rows = [list(r) for r in x.rows]
    _detrop_toggle(rows, j)
    return RationalPattern(tuple(tuple(r) for r in rows))


def detrop_bk_c_trace(x: RationalPattern, j: int) -> list[RationalPattern]:
    if x.N % 2 or not 1 <= j < x.N // 2:
        raise ValueError(f"j={j} out of range for a {x.N}-row pattern")
    N = x.N
    rows = [list(r) for r in x.rows]
    # the obstruction slot (j+1, 2j) starts at the multiplicative unit
    rows[N - 2 * j][j] = Fraction(1)
    trace = [x]
    for step in (2 * j, 2 * j - 1, 2 * j + 1, 2 * j):
        _detrop_toggle(rows, step)
        trace.append(RationalPattern(tuple(tuple(r) for r in rows)))
    v = rows[N - 2 * j][j]
    for i, k in ((j + 1, 2 * j + 1), (j, 2 * j), (j, 2 * j - 1)):
        rows[N - k][i - 1] /= v
    rows[N - 2 * j][j] = None
    trace.append(RationalPattern(tuple(tuple(r) for r in rows)))
    return trace


def detrop_bk_c(x: RationalPattern, j: int) -> RationalPattern:
    """Rational lift of BK^C_j on a King-shaped pattern; rect divides by x_{j+1,2j}."""
    return detrop_bk_c_trace(x, j)[-1]
