"""Exact arithmetic for monomials and monomial ideals.

Monomials are exponent vectors over a fixed variable count; ideals are
stored as their unique minimal generating set in graded-lexicographic
order, so ideal equality is plain equality of the canonical generator
list.  All values are immutable and every operation is a pure function.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatchError, DomainError, MalformedInputError

# Exponents are kept far below int64 range so vectorized sums cannot wrap.
EXPONENT_LIMIT = 1 << 31


def _check_exponent(e) -> int:
    if isinstance(e, (bool, float)) or int(e) != e:
        raise MalformedInputError(f"exponent {e!r} is not an integer")
    e = int(e)
    if e < 0:
        raise MalformedInputError(f"exponent {e} is negative")
    if e >= EXPONENT_LIMIT:
        raise MalformedInputError(
            f"exponent {e} exceeds the supported limit {EXPONENT_LIMIT}"
        )
    return e


@dataclass(frozen=True)
class Monomial:
    """A monomial x1^e1 ... xd^ed stored as its exponent vector."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "exponents", tuple(_check_exponent(e) for e in self.exponents)
        )

    @property
    def nvars(self) -> int:
        return len(self.exponents)

    def degree(self) -> int:
        return sum(self.exponents)

    def divides(self, other: "Monomial") -> bool:
        if self.nvars != other.nvars:
            raise DimensionMismatchError(
                f"monomials over {self.nvars} and {other.nvars} variables"
            )
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def times(self, other: "Monomial") -> "Monomial":
        if self.nvars != other.nvars:
            raise DimensionMismatchError(
                f"monomials over {self.nvars} and {other.nvars} variables"
            )
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def lcm(self, other: "Monomial") -> "Monomial":
        if self.nvars != other.nvars:
            raise DimensionMismatchError(
                f"monomials over {self.nvars} and {other.nvars} variables"
            )
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def support(self) -> tuple[int, ...]:
        """0-based indexes of the variables that occur."""
        return tuple(i for i, e in enumerate(self.exponents) if e > 0)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)


def _grlex_key(exponents: Sequence[int]) -> tuple:
    return (sum(exponents), tuple(exponents))


def minimal_rows(arr: np.ndarray) -> np.ndarray:
    """Rows of ``arr`` that no other row divides (entrywise <=).

    Rows must be non-negative integers.  Returns the surviving rows as a
    new array sorted in graded-lexicographic order, duplicates removed.
    """
    if arr.ndim == 2 and arr.shape[1] == 0:
        return arr[:1]
    if arr.size == 0:
        return arr.reshape(0, arr.shape[1] if arr.ndim == 2 else 0)
    arr = np.unique(arr, axis=0)
    degrees = arr.sum(axis=1)
    order = np.lexsort(tuple(arr[:, i] for i in range(arr.shape[1] - 1, -1, -1)))
    order = order[np.argsort(degrees[order], kind="stable")]
    arr = arr[order]
    kept: list[np.ndarray] = []
    kept_arr: np.ndarray | None = None
    pending = 0
    for row in arr:
        if kept_arr is not None and bool(
            np.all(kept_arr <= row, axis=1).any()
        ):
            continue
        if pending and bool(
            np.all(np.asarray(kept[-pending:]) <= row, axis=1).any()
        ):
            continue
        kept.append(row)
        pending += 1
        # fold pending rows into the vectorized block periodically
        if pending >= 64:
            block = np.asarray(kept[-pending:])
            kept_arr = block if kept_arr is None else np.vstack([kept_arr, block])
            pending = 0
    return np.asarray(kept, dtype=arr.dtype).reshape(len(kept), arr.shape[1])


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its canonical minimal generating set.

    The zero ideal has an empty generator list; the unit ideal has the
    single all-zero generator.  Construct through :func:`normalize`
    unless the generators are already canonical.
    """

    nvars: int
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        if self.nvars < 0:
            raise MalformedInputError("variable count must be >= 0")
        for g in self.generators:
            if g.nvars != self.nvars:
                raise MalformedInputError(
                    f"generator has {g.nvars} exponents, expected {self.nvars}"
                )

    @cached_property
    def exponent_matrix(self) -> np.ndarray:
        """Generators as a read-only (mu x nvars) int64 array."""
        if not self.generators:
            mat = np.zeros((0, self.nvars), dtype=np.int64)
        else:
            mat = np.array([g.exponents for g in self.generators], dtype=np.int64)
        mat.setflags(write=False)
        return mat

    @property
    def num_generators(self) -> int:
        """Minimal number of generators (0 for the zero ideal)."""
        return len(self.generators)

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].degree() == 0

    def is_proper_nonzero(self) -> bool:
        return bool(self.generators) and not self.is_unit()

    def __contains__(self, monomial: Monomial) -> bool:
        return contains_monomial(self, monomial)


def _ideal_from_matrix(nvars: int, mat: np.ndarray) -> MonomialIdeal:
    gens = tuple(Monomial(tuple(int(e) for e in row)) for row in mat)
    return MonomialIdeal(nvars, gens)


def normalize(gens: Iterable[Monomial | Sequence[int]], nvars: int) -> MonomialIdeal:
    """Canonical minimal sorted generating set of the ideal generated by ``gens``.

    Idempotent and insensitive to input order.  Raises
    :class:`MalformedInputError` when a generator has the wrong length.
    """
    rows = []
    for g in gens:
        exps = g.exponents if isinstance(g, Monomial) else tuple(_check_exponent(e) for e in g)
        if len(exps) != nvars:
            raise MalformedInputError(
                f"generator has {len(exps)} exponents, expected {nvars}"
            )
        rows.append(exps)
    if not rows:
        return MonomialIdeal(nvars, ())
    mat = minimal_rows(np.array(rows, dtype=np.int64))
    return _ideal_from_matrix(nvars, mat)


def _require_same_nvars(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.nvars != J.nvars:
        raise DimensionMismatchError(
            f"ideals over {I.nvars} and {J.nvars} variables"
        )


def multiply(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Product ideal: minimal generators of I*J from all pairwise sums."""
    _require_same_nvars(I, J)
    if I.is_zero() or J.is_zero():
        return MonomialIdeal(I.nvars, ())
    a = I.exponent_matrix
    b = J.exponent_matrix
    sums = (a[:, None, :] + b[None, :, :]).reshape(-1, I.nvars)
    return _ideal_from_matrix(I.nvars, minimal_rows(sums))


def unit_ideal(nvars: int) -> MonomialIdeal:
    return MonomialIdeal(nvars, (Monomial((0,) * nvars),))


def zero_ideal(nvars: int) -> MonomialIdeal:
    return MonomialIdeal(nvars, ())


def power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    """n-th ordinary power, with I^0 the unit ideal."""
    if n < 0:
        raise DomainError("power exponent must be >= 0")
    result = unit_ideal(I.nvars)
    base = I
    k = n
    while k:
        if k & 1:
            result = multiply(result, base)
        k >>= 1
        if k:
            base = multiply(base, base)
    return result


def bracket_power(I: MonomialIdeal, m: int) -> MonomialIdeal:
    """Ideal generated by the m-th powers of the minimal generators."""
    if m < 1:
        raise DomainError("bracket power exponent must be >= 1")
    if I.is_zero():
        return I
    return _ideal_from_matrix(I.nvars, m * I.exponent_matrix)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Intersection ideal via entrywise maxima (lcm) of generator pairs."""
    _require_same_nvars(I, J)
    if I.is_zero() or J.is_zero():
        return MonomialIdeal(I.nvars, ())
    a = I.exponent_matrix
    b = J.exponent_matrix
    lcms = np.maximum(a[:, None, :], b[None, :, :]).reshape(-1, I.nvars)
    return _ideal_from_matrix(I.nvars, minimal_rows(lcms))


def contains_monomial(I: MonomialIdeal, a: Monomial) -> bool:
    """True iff some minimal generator divides ``a``."""
    if a.nvars != I.nvars:
        raise DimensionMismatchError(
            f"monomial over {a.nvars} variables, ideal over {I.nvars}"
        )
    if I.is_zero():
        return False
    vec = np.asarray(a.exponents, dtype=np.int64)
    return bool(np.all(I.exponent_matrix <= vec, axis=1).any())


def is_squarefree(I: MonomialIdeal) -> bool:
    return all(g.is_squarefree() for g in I.generators)


def alpha(I: MonomialIdeal) -> int:
    """Minimum total degree over the minimal generators (initial degree)."""
    if I.is_zero():
        raise DomainError("the zero ideal has no nonzero element")
    return min(g.degree() for g in I.generators)


def radical(I: MonomialIdeal) -> MonomialIdeal:
    """Square-free ideal with the same minimal primes."""
    if I.is_zero():
        return I
    return _ideal_from_matrix(I.nvars, minimal_rows(np.minimum(I.exponent_matrix, 1)))
