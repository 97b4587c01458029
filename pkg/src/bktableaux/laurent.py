"""Exact Laurent polynomials in x_1..x_n and the signed-permutation action on them.

Polynomials are sparse maps from integer exponent vectors to nonzero integer
coefficients.  Exponent vectors are plain tuples, so the lexicographic order
used for leading terms is Python's tuple order.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import DimensionError, NotDivisibleError, NotInSpanError

Monomial = tuple[int, ...]


class LaurentPolynomial:
    """Immutable sparse Laurent polynomial with integer coefficients."""

    __slots__ = ("_terms", "_nvars", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = (),
                 nvars: int = 0):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, int] = {}
        for exp, coef in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise DimensionError(f"exponent {exp} does not have length {nvars}")
            acc[exp] = acc.get(exp, 0) + int(coef)
        self._terms = MappingProxyType({e: c for e, c in acc.items() if c != 0})
        self._nvars = nvars
        self._hash = None

    @classmethod
    def monomial(cls, exp: Iterable[int], coef: int = 1) -> LaurentPolynomial:
        exp = tuple(exp)
        return cls({exp: coef}, len(exp))

    @classmethod
    def constant(cls, c: int, nvars: int) -> LaurentPolynomial:
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def variable(cls, i: int, nvars: int, power: int = 1) -> LaurentPolynomial:
        """``x_i**power`` with ``i`` 1-based."""
        exp = [0] * nvars
        exp[i - 1] = power
        return cls({tuple(exp): 1}, nvars)

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return self._terms

    @property
    def nvars(self) -> int:
        return self._nvars

    def is_zero(self) -> bool:
        return not self._terms

    def leading_term(self) -> tuple[Monomial, int]:
        """Lex-greatest exponent vector and its coefficient."""
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        exp = max(self._terms)
        return exp, self._terms[exp]

    def mass(self) -> int:
        """Sum of coefficients, i.e. the value at x = (1, ..., 1)."""
        return sum(self._terms.values())

    def coefficient(self, exp: Iterable[int]) -> int:
        return self._terms.get(tuple(exp), 0)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self._terms.items())

    def _check(self, other: LaurentPolynomial) -> None:
        if self._nvars != other._nvars:
            raise DimensionError(f"nvars mismatch: {self._nvars} vs {other._nvars}")

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other, self._nvars)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._terms.items()}, self._nvars)

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other, self._nvars)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return poly_add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial({e: c * other for e, c in self._terms.items()}, self._nvars)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other, self._nvars)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._nvars == other._nvars and dict(self._terms) == dict(other._terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"LaurentPolynomial({format_poly(self)!r}, nvars={self._nvars})"

    def __str__(self):
        return format_poly(self)

    def to_json(self) -> dict:
        return {
            "nvars": self._nvars,
            "terms": [{"exp": list(e), "coef": c} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> LaurentPolynomial:
        nvars = int(data["nvars"])
        return cls(((tuple(t["exp"]), t["coef"]) for t in data["terms"]), nvars)


def poly_add(f: LaurentPolynomial, g: LaurentPolynomial) -> LaurentPolynomial:
    f._check(g)
    acc = dict(f.terms)
    for e, c in g.terms.items():
        acc[e] = acc.get(e, 0) + c
    return LaurentPolynomial(acc, f.nvars)


def poly_mul(f: LaurentPolynomial, g: LaurentPolynomial) -> LaurentPolynomial:
    f._check(g)
    acc: dict[Monomial, int] = {}
    for e1, c1 in f.terms.items():
        for e2, c2 in g.terms.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            acc[e] = acc.get(e, 0) + c1 * c2
    return LaurentPolynomial(acc, f.nvars)


def poly_divexact(f: LaurentPolynomial, g: LaurentPolynomial) -> LaurentPolynomial:
    """Return ``q`` with ``q * g == f``, or raise :class:`NotDivisibleError`.

    Leading terms are eliminated in lex order.  If ``g`` divides ``f`` then in
    every coordinate the quotient's exponents lie between
    ``min_i(f) - min_i(g)`` and ``max_i(f) - max_i(g)``; a quotient term
    outside that box means the division is inexact, which also bounds the loop.
    """
    f._check(g)
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return LaurentPolynomial({}, f.nvars)
    n = f.nvars
    lo = [min(e[i] for e in f.terms) - min(e[i] for e in g.terms) for i in range(n)]
    hi = [max(e[i] for e in f.terms) - max(e[i] for e in g.terms) for i in range(n)]
    g_exp, g_coef = g.leading_term()
    rem = dict(f.terms)
    quotient: dict[Monomial, int] = {}
    while rem:
        r_exp = max(rem)
        r_coef = rem[r_exp]
        q_exp = tuple(a - b for a, b in zip(r_exp, g_exp))
        if r_coef % g_coef or any(not lo[i] <= q_exp[i] <= hi[i] for i in range(n)):
            raise NotDivisibleError(
                f"inexact division: remainder term {r_coef}*x^{r_exp} not cancellable",
                remainder_term=(r_exp, r_coef),
            )
        q_coef = r_coef // g_coef
        quotient[q_exp] = q_coef
        for e, c in g.terms.items():
            key = tuple(a + b for a, b in zip(q_exp, e))
            v = rem.get(key, 0) - q_coef * c
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    return LaurentPolynomial(quotient, n)


@dataclass(frozen=True)
class SignedPermutation:
    """Element of the hyperoctahedral group acting on x_1..x_n.

    ``perm[i]`` is the (1-based) image of ``i + 1``; ``signs[i]`` flips
    ``x_{i+1}`` to its inverse before the permutation is applied.
    """

    perm: tuple[int, ...]
    signs: tuple[bool, ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(int(p) for p in self.perm))
        object.__setattr__(self, "signs", tuple(bool(s) for s in self.signs))
        n = len(self.perm)
        if sorted(self.perm) != list(range(1, n + 1)):
            raise ValueError(f"{self.perm} is not a permutation of 1..{n}")
        if len(self.signs) != n:
            raise ValueError("signs and perm have different lengths")

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> SignedPermutation:
        return cls(tuple(range(1, n + 1)), (False,) * n)

    @classmethod
    def sign_flip(cls, n: int) -> SignedPermutation:
        """The generator (1 1bar)."""
        return cls(tuple(range(1, n + 1)), (True,) + (False,) * (n - 1))

    @classmethod
    def adjacent_swap(cls, n: int, j: int) -> SignedPermutation:
        """The generator (j j+1)(jbar j+1bar), 1 <= j < n."""
        if not 1 <= j < n:
            raise ValueError(f"j={j} out of range for n={n}")
        perm = list(range(1, n + 1))
        perm[j - 1], perm[j] = perm[j], perm[j - 1]
        return cls(tuple(perm), (False,) * n)

    @classmethod
    def generators(cls, n: int) -> list[SignedPermutation]:
        """(1 1bar) first, then the adjacent swaps for j = 1..n-1."""
        if n == 0:
            return []
        return [cls.sign_flip(n)] + [cls.adjacent_swap(n, j) for j in range(1, n)]

    def act_on_exponent(self, alpha: Monomial) -> Monomial:
        out = [0] * self.n
        for i, (a, s) in enumerate(zip(alpha, self.signs)):
            out[self.perm[i] - 1] = -a if s else a
        return tuple(out)

    def __mul__(self, other: SignedPermutation) -> SignedPermutation:
        """Composite acting as ``self`` after ``other``."""
        if self.n != other.n:
            raise DimensionError("signed permutations of different sizes")
        perm = tuple(self.perm[p - 1] for p in other.perm)
        signs = tuple(s2 ^ self.signs[p - 1] for p, s2 in zip(other.perm, other.signs))
        return SignedPermutation(perm, signs)


def weyl_act(w: SignedPermutation, f: LaurentPolynomial) -> LaurentPolynomial:
    if w.n != f.nvars:
        raise DimensionError(f"group element on {w.n} letters, polynomial in {f.nvars}")
    return LaurentPolynomial({w.act_on_exponent(e): c for e, c in f.terms.items()}, f.nvars)


def is_w_invariant(f: LaurentPolynomial) -> bool:
    return all(weyl_act(g, f) == f for g in SignedPermutation.generators(f.nvars))


def is_symmetric(f: LaurentPolynomial) -> bool:
    """Invariance under all adjacent transpositions of the variables."""
    return all(weyl_act(SignedPermutation.adjacent_swap(f.nvars, j), f) == f
               for j in range(1, f.nvars))


def basis_expand(f: LaurentPolynomial, family: str, n: int) -> dict[tuple[int, ...], int]:
    """Write a W-invariant ``f`` as an integral combination of ``family`` polynomials.

    ``family`` is ``"symplectic"`` or ``"orthogonal"``.  The lex-leading
    exponent of an invariant polynomial is a partition ``lam``, and the basis
    element indexed by ``lam`` has leading term ``x^lam``, so subtracting it
    strictly lowers the leading term.
    """
    from .enumeration import orthogonal, symplectic

    basis = {"symplectic": symplectic, "orthogonal": orthogonal}.get(family)
    if basis is None:
        raise ValueError(f"unknown family {family!r}")
    if f.nvars != n:
        raise DimensionError(f"polynomial in {f.nvars} variables, expected {n}")
    if not is_w_invariant(f):
        raise NotInSpanError("polynomial is not invariant under the hyperoctahedral group")

    # Every leading exponent met is a partition with parts <= the largest
    # |exponent| of f, so the number of such partitions bounds the loop.
    bound = max((abs(a) for e in f.terms for a in e), default=0)
    budget = comb(bound + n, n) + 1

    coeffs: dict[tuple[int, ...], int] = {}
    rem = f
    for _ in range(budget):
        if rem.is_zero():
            return coeffs
        lam, c = rem.leading_term()
        if any(a < b for a, b in zip(lam, lam[1:])) or (lam and lam[-1] < 0):
            raise NotInSpanError(f"leading exponent {lam} is not a partition")
        coeffs[lam] = c
        rem = rem - basis(n, lam) * c
    raise NotInSpanError("iteration budget exhausted; input is not in the span")


def format_monomial(exp: Monomial) -> str:
    parts = []
    for i, e in enumerate(exp, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e:
            parts.append(f"x{i}^{e}")
    return "*".join(parts)


def format_poly(f: LaurentPolynomial) -> str:
    """Human-readable form, terms in decreasing lex order, e.g. ``x1 + 1 + x1^-1``."""
    if f.is_zero():
        return "0"
    out = []
    for k, (exp, c) in enumerate(sorted(f.terms.items(), reverse=True)):
        mono = format_monomial(exp)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if k == 0:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(out)

