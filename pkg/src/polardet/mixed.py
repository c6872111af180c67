"""Polarized determinants (mixed discriminants) and the coefficients gamma.

``det(x_1 A_1 + ... + x_K A_K) = sum gamma(n_1..n_K) x_1^{n_1} ... x_K^{n_K}``.

Three independent routes compute the same numbers:

* :func:`gamma_binet_cauchy` sums ``|det(S_1|...|S_K)|^2`` over column choices
  of the factors ``M_k`` (needs ``A_k = M_k M_k*``);
* :func:`gamma_multilinear` expands the determinant column by column;
* :func:`gamma_from_mixed` rescales a mixed discriminant obtained by
  inclusion-exclusion over subsets.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, prod
from typing import Iterator, Sequence

from .config import max_evals
from .errors import BudgetExceeded, InvalidArgument, KernelError
from .exact import det_exact
from .gaussian import Number, _canon, abs2, field_div, format_number, parse_number
from .matrix import ExactMat, as_exact, weighted_sum


def compositions(n: int, K: int) -> list[tuple[int, ...]]:
    """All ``(n_1..n_K)`` with nonnegative parts summing to ``n``, sorted."""
    if K < 1:
        raise InvalidArgument("K must be >= 1")
    out = []
    for bars in itertools.combinations(range(n + K - 1), K - 1):
        parts, last = [], -1
        for b in bars:
            parts.append(b - last - 1)
            last = b
        parts.append(n + K - 2 - last)
        out.append(tuple(parts))
    return sorted(out)


def _check_idx(idx: Sequence[int], n: int, K: int) -> tuple[int, ...]:
    idx = tuple(int(v) for v in idx)
    if len(idx) != K:
        raise InvalidArgument(f"multi-index {idx} has {len(idx)} parts, expected {K}")
    if any(v < 0 for v in idx) or sum(idx) != n:
        raise InvalidArgument(f"multi-index {idx} must be nonnegative and sum to {n}")
    return idx


def _spend(cost: int, budget: int | None, what: str):
    cap = max_evals(budget)
    if cost > cap:
        raise BudgetExceeded(f"{what} needs {cost} determinant evaluations, budget is {cap}")


# Binet-Cauchy ---------------------------------------------------------------

def selection_count(Ms: Sequence[ExactMat], idx: Sequence[int]) -> int:
    return prod(comb(M.n_cols, k) for M, k in zip(Ms, idx))


def binet_cauchy_terms(
    Ms: Sequence[ExactMat], idx: Sequence[int], budget: int | None = None
) -> Iterator[tuple[tuple[tuple[int, ...], ...], Number]]:
    """Yield ``(selection, det(S_1|...|S_K))`` in lexicographic selection order.

    A selection is one strictly increasing column tuple per factor.  The
    order depends only on the factor shapes, so two families of equal shapes
    produce their terms pairwise aligned.
    """
    Ms = [as_exact(M) for M in Ms]
    if not Ms:
        raise InvalidArgument("need at least one factor")
    n = Ms[0].n_rows
    if any(M.n_rows != n for M in Ms):
        raise InvalidArgument(f"factors have different row counts {[M.n_rows for M in Ms]}")
    idx = _check_idx(idx, n, len(Ms))
    _spend(selection_count(Ms, idx), budget, "Binet-Cauchy expansion")
    per_block = [list(itertools.combinations(range(M.n_cols), k)) for M, k in zip(Ms, idx)]
    for sel in itertools.product(*per_block):
        rows = [[] for _ in range(n)]
        for M, cols in zip(Ms, sel):
            for i in range(n):
                r = M.rows[i]
                rows[i].extend(r[j] for j in cols)
        yield sel, det_exact(rows)


def gamma_binet_cauchy(Ms: Sequence[ExactMat], idx: Sequence[int], budget: int | None = None) -> int:
    """``gamma(idx)`` as a sum of squared moduli of block minors.

    An index exceeding a factor's column count leaves an empty sum, i.e. 0.
    """
    return _canon(sum((abs2(d) for _, d in binet_cauchy_terms(Ms, idx, budget)), 0))


# Column-multilinear expansion ------------------------------------------------

@dataclass
class GammaTable:
    n: int
    K: int
    entries: dict[tuple[int, ...], Number] = field(default_factory=dict)

    def __getitem__(self, idx) -> Number:
        idx = _check_idx(idx, self.n, self.K)
        return self.entries.get(idx, 0)

    def items(self):
        return sorted(self.entries.items())

    def evaluate(self, ts: Sequence[Number]) -> Number:
        """``sum gamma(idx) prod t_k^{n_k}``."""
        if len(ts) != self.K:
            raise InvalidArgument(f"need {self.K} values, got {len(ts)}")
        total = 0
        for idx, g in self.entries.items():
            total = total + g * prod((Fraction(t) ** k for t, k in zip(ts, idx)), start=1)
        return _canon(total)

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "K": self.K,
            "gamma": {",".join(map(str, idx)): format_number(v) for idx, v in self.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "GammaTable":
        n, K = int(obj["n"]), int(obj["K"])
        entries = {}
        for key, val in obj["gamma"].items():
            idx = _check_idx([int(v) for v in key.split(",")], n, K)
            entries[idx] = parse_number(val)
        return cls(n, K, entries)

    @classmethod
    def from_json(cls, text: str) -> "GammaTable":
        return cls.from_json_obj(json.loads(text))


def _square_family(As: Sequence) -> list[ExactMat]:
    As = [as_exact(A) for A in As]
    if not As:
        raise InvalidArgument("need at least one matrix")
    n = As[0].n_rows
    for A in As:
        if A.shape != (n, n):
            raise InvalidArgument(f"all matrices must be {n}x{n}, got {A.shape}")
    return As


def gamma_multilinear(As: Sequence[ExactMat], budget: int | None = None) -> GammaTable:
    """Full gamma table of ``det(sum x_k A_k)`` by expanding every column.

    Each of the ``K^n`` assignments of a family to each column contributes
    one determinant to the multi-index counting how often each family was used.
    """
    As = _square_family(As)
    n, K = As[0].n_rows, len(As)
    _spend(K**n, budget, "multilinear expansion")
    entries = {idx: 0 for idx in compositions(n, K)}
    cols = [[A.column(j) for j in range(n)] for A in As]
    for assign in itertools.product(range(K), repeat=n):
        counts = [0] * K
        for c in assign:
            counts[c] += 1
        columns = [cols[c][j] for j, c in enumerate(assign)]
        d = det_exact([list(r) for r in zip(*columns)])
        key = tuple(counts)
        entries[key] = entries[key] + d
    return GammaTable(n, K, {k: _canon(v) for k, v in entries.items()})


# Mixed discriminant ----------------------------------------------------------

def mixed_discriminant(As: Sequence[ExactMat], cross_check: bool = False, budget: int | None = None) -> Number:
    """``D_n(A_1, ..., A_n)`` by inclusion-exclusion over subsets.

    ``(1/n!) sum_T (-1)^(n-|T|) det(sum_{i in T} A_i)``.  With
    ``cross_check`` the result is compared against the all-ones coefficient
    of :func:`gamma_multilinear`.
    """
    As = _square_family(As)
    n = As[0].n_rows
    if len(As) != n:
        raise InvalidArgument(f"mixed discriminant of {n}x{n} matrices takes {n} arguments, got {len(As)}")
    _spend(2**n, budget, "mixed discriminant")
    total = 0
    for mask in range(1, 1 << n):
        members = [As[i] for i in range(n) if mask >> i & 1]
        d = det_exact(weighted_sum([1] * len(members), members))
        if (n - len(members)) % 2:
            total = total - d
        else:
            total = total + d
    value = field_div(total, factorial(n))
    if cross_check:
        other = field_div(gamma_multilinear(As, budget)[(1,) * n], factorial(n))
        if other != value:
            raise KernelError(f"mixed discriminant {value} disagrees with multilinear {other}")
    return value


def multinomial(idx: Sequence[int]) -> int:
    out = factorial(sum(idx))
    for k in idx:
        out //= factorial(k)
    return out


def gamma_from_mixed(As: Sequence[ExactMat], idx: Sequence[int], budget: int | None = None) -> Number:
    """``gamma(idx) = n!/(n_1!...n_K!) * D_n(A_1 repeated n_1 times, ...)``."""
    As = _square_family(As)
    n = As[0].n_rows
    idx = _check_idx(idx, n, len(As))
    slots = [A for A, k in zip(As, idx) for _ in range(k)]
    return _canon(multinomial(idx) * mixed_discriminant(slots, budget=budget))
