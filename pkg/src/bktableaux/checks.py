"""Bounded exhaustive verification sweeps.

Each check walks every n' in 1..n and every partition lam with |lam| <= max_size
and at most n' parts.  It returns a :class:`Report`; ``counterexample`` is
the first failure found (JSON-ready) or ``None``.
"""
from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterator

from .benderknuth import (
    bk_a_pattern, bk_a_tableau, bk_b, bk_c_pattern, bk_c_tableau, bk_c_trace, lemma44_violations,
)
from .bijections import tableau_to_pattern
from .combinatorics import (
    OrthogonalPattern, Tableau, one_cell_per_row_removals, pad, partitions_up_to, validate_gt,
    validate_king, validate_orthogonal, weight_orthogonal, weight_pattern_a, weight_pattern_bc,
    weight_tableau,
)
from .enumeration import (
    enum_gt, enum_king, enum_king_tableaux, enum_orthogonal, enum_orthogonal_tableaux, enum_ssyt,
    orthogonal, schur, symplectic, tableau_generating_function,
)
from .formats import pattern_to_json, tableau_to_json
from .laurent import LaurentPolynomial, SignedPermutation, is_symmetric, is_w_invariant
from .oracles import character_b, character_c, detrop_bk_a, detrop_bk_c, random_king_rational

CHECKS = ("involution", "weight-action", "symmetry", "sum-identity", "character",
          "detrop", "lemma44", "locality")


@dataclass
class Report:
    check: str
    n: int
    max_size: int
    corpus_size: int = 0
    elapsed: float = 0.0
    counterexample: dict | None = None
    seed: int | None = None
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def to_json(self) -> dict:
        out = asdict(self)
        out["passed"] = self.passed
        return out


def _shapes(n: int, max_size: int) -> Iterator[tuple[int, tuple[int, ...]]]:
    for m in range(1, n + 1):
        for lam in partitions_up_to(max_size, m):
            yield m, lam


def _swap(n: int, j: int) -> SignedPermutation:
    return SignedPermutation.adjacent_swap(n, j)


def _bc_generator(n: int, j: int) -> SignedPermutation:
    return SignedPermutation.sign_flip(n) if j == 0 else SignedPermutation.adjacent_swap(n, j)


def _maps(n: int, max_size: int):
    """Yield (label, map, element, serialized element, weight fn, generator, is_valid)."""
    for m, lam in _shapes(n, max_size):
        for P in enum_gt(m, lam):
            for j in range(1, m):
                yield (f"bk_a_pattern(j={j})", lambda x, j=j: bk_a_pattern(x, j), P,
                       lambda x: pattern_to_json(x), weight_pattern_a, _swap(m, j), validate_gt)
        for T in enum_ssyt(m, lam):
            for j in range(1, m):
                yield (f"bk_a_tableau(j={j})", lambda x, j=j: bk_a_tableau(x, j), T,
                       tableau_to_json, weight_tableau, _swap(m, j), lambda x, T=T: x.shape == T.shape)
        for P in enum_king(m, lam):
            for j in range(m):
                yield (f"bk_c_pattern(j={j})", lambda x, j=j: bk_c_pattern(x, j), P,
                       lambda x: pattern_to_json(x, "king"), weight_pattern_bc,
                       _bc_generator(m, j), validate_king)
        for T in enum_king_tableaux(m, lam):
            for j in range(m):
                yield (f"bk_c_tableau(j={j})", lambda x, j=j: bk_c_tableau(x, j), T,
                       tableau_to_json, weight_tableau, _bc_generator(m, j),
                       lambda x, T=T: x.shape == T.shape)
        for P in enum_orthogonal(m, lam):
            for j in range(m):
                yield (f"bk_b(j={j})", lambda x, j=j: bk_b(x, j), P,
                       lambda x: pattern_to_json(x), weight_orthogonal, _bc_generator(m, j),
                       validate_orthogonal)


def _top(x):
    if isinstance(x, Tableau):
        return x.shape
    if isinstance(x, OrthogonalPattern):
        return x.pattern.top, x.circled
    return x.top


def _run(check: str, n: int, max_size: int, body: Callable[[Report], None],
         seed: int | None = None) -> Report:
    report = Report(check=check, n=n, max_size=max_size, seed=seed)
    start = time.perf_counter()
    body(report)
    report.elapsed = round(time.perf_counter() - start, 3)
    return report


def check_involution(n: int, max_size: int) -> Report:
    def body(r: Report):
        for label, M, x, ser, _, _, valid in _maps(n, max_size):
            r.corpus_size += 1
            y = M(x)
            if not valid(y) or M(y) != x or _top(y) != _top(x):
                r.counterexample = {"map": label, "input": ser(x), "image": ser(y),
                                    "image_of_image": ser(M(y)) if valid(y) else None}
                return
    return _run("involution", n, max_size, body)


def check_weight_action(n: int, max_size: int) -> Report:
    def body(r: Report):
        for label, M, x, ser, weight, g, _ in _maps(n, max_size):
            r.corpus_size += 1
            y = M(x)
            if weight(y) != g.act_on_exponent(weight(x)):
                r.counterexample = {"map": label, "input": ser(x), "image": ser(y),
                                    "weight_in": list(weight(x)), "weight_out": list(weight(y))}
                return
    return _run("weight-action", n, max_size, body)


def check_symmetry(n: int, max_size: int, schur_n: int | None = None,
                   schur_size: int | None = None) -> Report:
    """W(B_n)-invariance of sp and o; S_n-symmetry of Schur polynomials (own bounds allowed)."""
    schur_n = n if schur_n is None else schur_n
    schur_size = max_size if schur_size is None else schur_size

    def body(r: Report):
        for m, lam in _shapes(n, max_size):
            for name, fn in (("symplectic", symplectic), ("orthogonal", orthogonal)):
                r.corpus_size += 1
                if not is_w_invariant(fn(m, lam)):
                    r.counterexample = {"family": name, "n": m, "shape": list(lam)}
                    return
        for m, lam in _shapes(schur_n, schur_size):
            r.corpus_size += 1
            if not is_symmetric(schur(m, lam)):
                r.counterexample = {"family": "schur", "n": m, "shape": list(lam)}
                return
    return _run("symmetry", n, max_size, body)


def check_sum_identity(n: int, max_size: int) -> Report:
    """o_lam equals the sum of sp_mu over one-cell-per-row removals mu.

    o_lam is taken both from the pattern stream and from direct filling of
    orthogonal tableaux, which does not go through the co-restriction.
    """
    def body(r: Report):
        for m, lam in _shapes(n, max_size):
            r.corpus_size += 1
            total = LaurentPolynomial({}, m)
            for mu, _ in one_cell_per_row_removals(pad(lam, m)):
                total = total + symplectic(m, mu)
            direct = tableau_generating_function(enum_orthogonal_tableaux(m, lam), m)
            if total != orthogonal(m, lam) or total != direct:
                r.counterexample = {"n": m, "shape": list(lam)}
                return
    return _run("sum-identity", n, max_size, body)


def check_character(n: int, max_size: int) -> Report:
    def body(r: Report):
        for m, lam in _shapes(n, max_size):
            r.corpus_size += 1
            if character_c(m, lam) != symplectic(m, lam):
                r.counterexample = {"type": "C", "n": m, "shape": list(lam)}
                return
            if character_b(m, lam) != orthogonal(m, lam):
                r.counterexample = {"type": "B", "n": m, "shape": list(lam)}
                return
        for m in range(1, n + 1):
            r.corpus_size += 1
            if character_c(m, (1,)).mass() != 2 * m or character_b(m, (1,)).mass() != 2 * m + 1:
                r.counterexample = {"mass": m}
                return
    return _run("character", n, max_size, body)


def check_lemma44(n: int, max_size: int) -> Report:
    def body(r: Report):
        for m, lam in _shapes(n, max_size):
            for P in enum_king(m, lam):
                for j in range(1, m):
                    r.corpus_size += 1
                    P4 = bk_c_trace(P, j)[4]
                    bad = lemma44_violations(P4, j)
                    if bad:
                        r.counterexample = {"j": j, "input": pattern_to_json(P, "king"),
                                            "positions": bad}
                        return
    return _run("lemma44", n, max_size, body)


def check_locality(n: int, max_size: int) -> Report:
    def body(r: Report):
        for m, lam in _shapes(n, max_size):
            for P in enum_king(m, lam):
                for j in range(1, m):
                    r.corpus_size += 1
                    Q = bk_c_pattern(P, j)
                    allowed = {2 * j - 1, 2 * j, 2 * j + 1}
                    changed = [k for k in range(1, P.N + 1) if P.row(k) != Q.row(k)]
                    if not set(changed) <= allowed:
                        r.counterexample = {"j": j, "input": pattern_to_json(P, "king"),
                                            "changed_rows": changed}
                        return
    return _run("locality", n, max_size, body)


def check_detrop(n: int, samples: int = 100, seed: int = 0, bound: int = 50) -> Report:
    """(detrop_bk_c)^2 and (detrop_bk_a)^2 are the identity at random positive rational points."""
    def body(r: Report):
        rng = random.Random(seed)
        for m in range(2, n + 1):
            for _ in range(samples):
                x = random_king_rational(m, rng, bound)
                for j in range(1, m):
                    r.corpus_size += 1
                    if detrop_bk_c(detrop_bk_c(x, j), j) != x:
                        r.counterexample = {"map": f"detrop_bk_c(j={j})",
                                            "rows": [[None if v is None else str(v) for v in row]
                                                     for row in x.rows]}
                        return
                for j in range(1, 2 * m):
                    r.corpus_size += 1
                    if detrop_bk_a(detrop_bk_a(x, j), j) != x:
                        r.counterexample = {"map": f"detrop_bk_a(j={j})",
                                            "rows": [[None if v is None else str(v) for v in row]
                                                     for row in x.rows]}
                        return
    report = _run("detrop", n, 0, body, seed=seed)
    report.details = {"samples": samples, "bound": bound}
    return report


def check_bijections(n: int, max_size: int) -> Report:
    """Tableau-to-pattern maps are injective, land in the pattern streams and keep weights."""
    def body(r: Report):
        for m, lam in _shapes(n, max_size):
            for tabs, pats, wt in ((enum_ssyt, enum_gt, weight_pattern_a),
                                   (enum_king_tableaux, enum_king, weight_pattern_bc)):
                images = []
                for T in tabs(m, lam):
                    r.corpus_size += 1
                    P = tableau_to_pattern(T)
                    if wt(P) != weight_tableau(T):
                        r.counterexample = {"tableau": tableau_to_json(T)}
                        return
                    images.append(P)
                if sorted(p.rows for p in images) != sorted(p.rows for p in pats(m, lam)):
                    r.counterexample = {"n": m, "shape": list(lam), "family": tabs.__name__}
                    return
    return _run("bijections", n, max_size, body)


def run_check(check: str, n: int, max_size: int, seed: int = 0, samples: int = 100) -> Report:
    if check == "detrop":
        return check_detrop(n, samples=samples, seed=seed)
    table = {
        "involution": check_involution,
        "weight-action": check_weight_action,
        "symmetry": check_symmetry,
        "sum-identity": check_sum_identity,
        "character": check_character,
        "lemma44": check_lemma44,
        "locality": check_locality,
    }
    if check not in table:
        raise ValueError(f"unknown check {check!r}")
    return table[check](n, max_size)
