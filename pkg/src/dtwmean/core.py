"""Attribute spaces, local distances, monotone transforms and loss functions.

Time series are represented as plain tuples of attributes. An
:class:`AttributeSpace` normalizes and validates them: real attributes
become ``float``, vector attributes become tuples of ``float`` of a fixed
dimension, and symbolic attributes are kept as given but must belong to
the declared alphabet.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Hashable, Sequence

import numpy as np

from .exceptions import SpaceMismatchError

#: Default absolute tolerance for comparing Frechet values.
EPS = 1e-9

REAL = "real"
VECTOR = "vector"
SYMBOL = "symbol"


@dataclass(frozen=True)
class AttributeSpace:
    """Tagged attribute set: real scalars, real vectors of dimension ``dim``
    or symbols from a finite ``alphabet``."""

    kind: str = REAL
    dim: int = 1
    alphabet: tuple = ()

    def __post_init__(self):
        if self.kind not in (REAL, VECTOR, SYMBOL):
            raise ValueError(f"unknown attribute kind {self.kind!r}")
        if self.kind == VECTOR and self.dim < 1:
            raise ValueError("vector attributes need dim >= 1")
        if self.kind == SYMBOL:
            if not self.alphabet:
                raise ValueError("symbolic attribute space needs a non-empty alphabet")
            if len(set(self.alphabet)) != len(self.alphabet):
                raise ValueError("alphabet contains duplicate symbols")
        object.__setattr__(self, "alphabet", tuple(self.alphabet))

    @classmethod
    def real(cls) -> AttributeSpace:
        return cls(REAL)

    @classmethod
    def vector(cls, dim: int) -> AttributeSpace:
        return cls(VECTOR, dim=dim)

    @classmethod
    def symbols(cls, alphabet: Sequence[Hashable]) -> AttributeSpace:
        return cls(SYMBOL, alphabet=tuple(alphabet))

    @property
    def is_numeric(self) -> bool:
        return self.kind in (REAL, VECTOR)

    @property
    def width(self) -> int:
        """Number of real coordinates per attribute (0 for symbols)."""
        if self.kind == REAL:
            return 1
        if self.kind == VECTOR:
            return self.dim
        return 0

    def attribute(self, a: Any):
        """Return ``a`` normalized to this space, or raise SpaceMismatchError."""
        if self.kind == REAL:
            if isinstance(a, (str, bytes)) or np.ndim(a) != 0:
                raise SpaceMismatchError(f"expected a real scalar, got {a!r}")
            if not math.isfinite(float(a)):
                raise SpaceMismatchError(f"non-finite value {a!r}")
            return float(a)
        if self.kind == VECTOR:
            if isinstance(a, (str, bytes)) or np.ndim(a) != 1:
                raise SpaceMismatchError(f"expected a vector of dimension {self.dim}, got {a!r}")
            v = tuple(float(c) for c in a)
            if len(v) != self.dim:
                raise SpaceMismatchError(
                    f"dimension mismatch: expected {self.dim}, got {len(v)}")
            if not all(map(math.isfinite, v)):
                raise SpaceMismatchError(f"non-finite value in {a!r}")
            return v
        try:
            ok = a in self.alphabet
        except TypeError:
            ok = False
        if not ok:
            raise SpaceMismatchError(f"symbol {a!r} not in alphabet {self.alphabet!r}")
        return a

    def series(self, x: Sequence) -> tuple:
        """Normalize a time series; it must be non-empty."""
        if isinstance(x, (str, bytes)):
            x = tuple(x)
        elems = tuple(self.attribute(a) for a in x)
        if not elems:
            raise ValueError("a time series has length >= 1")
        return elems

    def as_array(self, x: Sequence) -> np.ndarray:
        """Numeric series as an array of shape (length, width)."""
        if not self.is_numeric:
            raise SpaceMismatchError("symbolic series have no array form")
        return np.asarray(x, dtype=float).reshape(len(x), self.width)

    def from_array(self, arr: np.ndarray) -> tuple:
        arr = np.asarray(arr, dtype=float)
        if self.kind == REAL:
            return tuple(float(v) for v in arr.reshape(-1))
        return tuple(tuple(float(c) for c in row) for row in arr.reshape(-1, self.dim))


def _sqdiff(a, b) -> float:
    if isinstance(a, tuple):
        return float(sum((u - v) ** 2 for u, v in zip(a, b)))
    return (a - b) ** 2


SQEUCLIDEAN = "sqeuclidean"
NORM = "norm"
TABLE = "table"
XOR_ZERO = "xor_zero"


@dataclass(frozen=True)
class LocalDistance:
    """Local distance ``d`` on attributes.

    ``sqeuclidean``
        ``||a - b||^2``
    ``norm``
        ``||a - b||_p`` (``p`` may be ``inf``)
    ``table``
        symmetric lookup matrix over ``alphabet`` with zero diagonal
    ``xor_zero``
        ``(a - b)^2`` if both non-zero, 1 if exactly one is zero, 0 if both are
    """

    kind: str = SQEUCLIDEAN
    p: float = 2.0
    alphabet: tuple = ()
    matrix: tuple = ()
    _index: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.kind not in (SQEUCLIDEAN, NORM, TABLE, XOR_ZERO):
            raise ValueError(f"unknown local distance {self.kind!r}")
        if self.kind == NORM and not self.p >= 1:
            raise ValueError("norm exponent must be >= 1")
        if self.kind == TABLE:
            alphabet = tuple(self.alphabet)
            mat = tuple(tuple(float(v) for v in row) for row in self.matrix)
            k = len(alphabet)
            if k == 0 or len(mat) != k or any(len(row) != k for row in mat):
                raise ValueError("distance table must be a square matrix matching the alphabet")
            for r in range(k):
                if mat[r][r] != 0.0:
                    raise ValueError("distance table needs a zero diagonal")
                for c in range(k):
                    if mat[r][c] < 0 or mat[r][c] != mat[c][r]:
                        raise ValueError("distance table must be symmetric and non-negative")
            object.__setattr__(self, "alphabet", alphabet)
            object.__setattr__(self, "matrix", mat)
            object.__setattr__(self, "_index", {s: r for r, s in enumerate(alphabet)})

    @classmethod
    def table_from(cls, alphabet: Sequence, matrix) -> LocalDistance:
        return cls(TABLE, alphabet=tuple(alphabet), matrix=tuple(map(tuple, matrix)))

    @classmethod
    def discrete(cls, alphabet: Sequence) -> LocalDistance:
        """0/1 mismatch table over ``alphabet``."""
        k = len(alphabet)
        return cls.table_from(alphabet, [[0.0 if r == c else 1.0 for c in range(k)] for r in range(k)])

    def __call__(self, a, b) -> float:
        if self.kind == SQEUCLIDEAN:
            return _sqdiff(a, b)
        if self.kind == NORM:
            diffs = [abs(u - v) for u, v in zip(a, b)] if isinstance(a, tuple) else [abs(a - b)]
            if math.isinf(self.p):
                return float(max(diffs))
            return float(sum(t ** self.p for t in diffs) ** (1.0 / self.p))
        if self.kind == TABLE:
            try:
                return self.matrix[self._index[a]][self._index[b]]
            except KeyError as exc:
                raise SpaceMismatchError(f"symbol {exc.args[0]!r} not in distance table") from None
        # xor_zero
        za, zb = a == 0.0, b == 0.0
        if za and zb:
            return 0.0
        if za or zb:
            return 1.0
        return (a - b) ** 2


IDENTITY = "identity"
SQRT = "sqrt"


@dataclass(frozen=True)
class MonotoneTransform:
    """Monotone map applied once to the minimal alignment cost."""

    kind: str = IDENTITY

    def __post_init__(self):
        if self.kind not in (IDENTITY, SQRT):
            raise ValueError(f"unknown transform {self.kind!r}")

    def __call__(self, c: float) -> float:
        if self.kind == SQRT:
            return math.sqrt(c)
        return c

    @property
    def exponent(self) -> float:
        """Power ``e`` with ``f(c) = c**e``."""
        return 0.5 if self.kind == SQRT else 1.0


@dataclass(frozen=True)
class DtwSpace:
    """Attribute space together with the local distance and the transform
    that define the DTW distance."""

    attributes: AttributeSpace
    local: LocalDistance = LocalDistance()
    transform: MonotoneTransform = MonotoneTransform()

    def __post_init__(self):
        kind, local = self.attributes.kind, self.local.kind
        if kind == SYMBOL and local != TABLE:
            raise ValueError("symbolic attributes require a table local distance")
        if kind != SYMBOL and local == TABLE:
            raise ValueError("table local distance requires symbolic attributes")
        if local == XOR_ZERO and kind != REAL:
            raise ValueError("the xor-zero local distance is defined on real scalars")
        if local == TABLE and set(self.attributes.alphabet) - set(self.local.alphabet):
            raise ValueError("distance table does not cover the alphabet")

    def distance(self, a, b) -> float:
        return self.local(self.attributes.attribute(a), self.attributes.attribute(b))

    def series(self, x: Sequence) -> tuple:
        return self.attributes.series(x)

    def cost_matrix(self, x: tuple, y: tuple) -> list:
        """Local distances ``d(x_i, y_j)`` as nested lists (0-based)."""
        if self.local.kind == SQEUCLIDEAN:
            a = self.attributes.as_array(x)
            b = self.attributes.as_array(y)
            return ((a[:, None, :] - b[None, :, :]) ** 2).sum(axis=2).tolist()
        d = self.local
        return [[d(u, v) for v in y] for u in x]


def euclidean_space(dim: int | None = None) -> DtwSpace:
    """Euclidean DTW: squared Euclidean local distance and square-root transform."""
    attrs = AttributeSpace.real() if dim is None else AttributeSpace.vector(dim)
    return DtwSpace(attrs, LocalDistance(SQEUCLIDEAN), MonotoneTransform(SQRT))


def xor_zero_space() -> DtwSpace:
    """Real line with the xor-zero local distance and identity transform."""
    return DtwSpace(AttributeSpace.real(), LocalDistance(XOR_ZERO), MonotoneTransform(IDENTITY))


def symbolic_space(alphabet: Sequence, matrix=None) -> DtwSpace:
    """Alphabet space with a table distance (0/1 mismatch if ``matrix`` is None)."""
    local = LocalDistance.discrete(alphabet) if matrix is None else LocalDistance.table_from(alphabet, matrix)
    return DtwSpace(AttributeSpace.symbols(alphabet), local, MonotoneTransform(IDENTITY))


@dataclass(frozen=True)
class LossFunction:
    """Power loss ``h(u) = w * u**p`` with ``p >= 1`` and ``w >= 0``."""

    w: float = 1.0
    p: float = 1.0

    def __post_init__(self):
        if not self.p >= 1:
            raise ValueError("loss exponent p must be >= 1")
        if not self.w >= 0:
            raise ValueError("loss weight w must be >= 0")

    def __call__(self, u: float) -> float:
        if u < 0:
            raise ValueError(f"loss argument must be non-negative, got {u}")
        return self.w * u ** self.p


def local_distance(space: DtwSpace, a, b) -> float:
    """``d(a, b)`` under ``space``; validates both attributes."""
    return space.distance(a, b)


def loss_apply(h: LossFunction, u: float) -> float:
    return h(u)
