"""Dense exact matrices over the Gaussian rationals."""

from __future__ import annotations

import json
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidArgument
from .gaussian import Number, conj, from_pair, gauss, imag, real, to_complex, to_pair, _canon

HERMITIAN = "hermitian"
GRAM = "gram"


class ExactMat:
    """Immutable dense matrix of exact numbers.

    ``tag`` is ``None``, ``"hermitian"`` or ``"gram"``.  A gram tag also
    implies Hermitian and is only set by constructors that build ``M M*``.
    """

    __slots__ = ("rows", "tag", "source")

    def __init__(self, rows: Iterable[Iterable[Number]], tag: str | None = None, source=None):
        rows = tuple(tuple(_canon(x) for x in r) for r in rows)
        if rows and len({len(r) for r in rows}) != 1:
            raise InvalidArgument("ragged matrix rows")
        self.rows = rows
        self.tag = tag
        self.source = source

    # construction -------------------------------------------------------
    @classmethod
    def identity(cls, n: int) -> "ExactMat":
        return cls(
            ([1 if i == j else 0 for j in range(n)] for i in range(n)),
            tag=GRAM,
            source=("identity", n),
        )

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "ExactMat":
        m = n if m is None else m
        return cls(([0] * m for _ in range(n)), tag=GRAM if m == n else None)

    # shape --------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return self.shape[1]

    @property
    def is_square(self) -> bool:
        r, c = self.shape
        return r == c

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple[Number, ...]:
        return tuple(r[j] for r in self.rows)

    def select_columns(self, cols: Sequence[int]) -> list[list[Number]]:
        """Plain row lists of the submatrix on ``cols`` (no copy of the object)."""
        return [[r[j] for j in cols] for r in self.rows]

    # algebra ------------------------------------------------------------
    def H(self) -> "ExactMat":
        """Conjugate transpose."""
        r, c = self.shape
        return ExactMat([[conj(self.rows[i][j]) for i in range(r)] for j in range(c)])

    def __matmul__(self, other: "ExactMat") -> "ExactMat":
        if self.n_cols != other.n_rows:
            raise InvalidArgument(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.rows))
        return ExactMat([[sum((a * b for a, b in zip(row, col)), 0) for col in cols] for row in self.rows])

    def __add__(self, other: "ExactMat") -> "ExactMat":
        if self.shape != other.shape:
            raise InvalidArgument(f"shape mismatch {self.shape} + {other.shape}")
        tag = HERMITIAN if (self.is_hermitian_tagged and other.is_hermitian_tagged) else None
        return ExactMat(
            ([a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)), tag=tag
        )

    def scale(self, t: Number) -> "ExactMat":
        tag = HERMITIAN if (self.is_hermitian_tagged and imag(t) == 0) else None
        return ExactMat(([t * x for x in r] for r in self.rows), tag=tag)

    def trace(self) -> Number:
        return _canon(sum((self.rows[i][i] for i in range(min(self.shape))), 0))

    @property
    def is_hermitian_tagged(self) -> bool:
        return self.tag in (HERMITIAN, GRAM)

    def is_hermitian(self) -> bool:
        if not self.is_square:
            return False
        n = self.n_rows
        return all(self.rows[i][j] == conj(self.rows[j][i]) for i in range(n) for j in range(i, n))

    def is_real(self) -> bool:
        return all(imag(x) == 0 for r in self.rows for x in r)

    def __eq__(self, other):
        if not isinstance(other, ExactMat):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"{type(self).__name__}({[list(map(str, r)) for r in self.rows]})"

    def tolist(self) -> list[list[Number]]:
        return [list(r) for r in self.rows]

    def to_numpy(self) -> np.ndarray:
        if self.is_real():
            return np.array([[float(x) for x in r] for r in self.rows], dtype=float)
        return np.array([[to_complex(x) for x in r] for r in self.rows], dtype=complex)

    # exchange format ----------------------------------------------------
    def to_json_obj(self) -> list:
        return [[to_pair(x) for x in r] for r in self.rows]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj, tag: str | None = None) -> "ExactMat":
        if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
            raise InvalidArgument("matrix JSON must be an array of arrays")
        return cls(([from_pair(p) for p in r] for r in obj), tag=tag)

    @classmethod
    def from_json(cls, text: str, tag: str | None = None) -> "ExactMat":
        return cls.from_json_obj(json.loads(text), tag=tag)


def as_exact(M) -> ExactMat:
    if isinstance(M, ExactMat):
        return M
    return ExactMat(M)


def weighted_sum(ts: Sequence[Number], mats: Sequence[ExactMat]) -> ExactMat:
    """``sum_k t_k A_k`` kept exact."""
    if not mats or len(ts) != len(mats):
        raise InvalidArgument("need equally many weights and matrices (at least one)")
    out = mats[0].scale(ts[0])
    for t, A in zip(ts[1:], mats[1:]):
        out = out + A.scale(t)
    return out


__all__ = ["ExactMat", "HERMITIAN", "GRAM", "as_exact", "weighted_sum", "gauss", "real", "imag"]
