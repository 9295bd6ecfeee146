"""Minimal primes and symbolic powers of square-free monomial ideals.

The minimal primes of a square-free ideal are the minimal vertex covers
of the hypergraph spanned by the generator supports.  The n-th symbolic
power is the intersection of the n-th powers of those primes; membership
of a monomial is equivalent to having degree >= n on every cover.
"""
from __future__ import annotations

from itertools import combinations

import numpy as np

from .errors import DomainError
from .ideals import Monomial, MonomialIdeal, is_squarefree, minimal_rows


def _require_theorem_input(I: MonomialIdeal) -> None:
    if not is_squarefree(I):
        raise DomainError("operation requires a square-free ideal")
    if I.is_zero():
        raise DomainError("operation requires a nonzero ideal")
    if I.is_unit():
        raise DomainError("operation requires a proper ideal")


def minimal_primes(I: MonomialIdeal) -> tuple[tuple[int, ...], ...]:
    """Minimal primes of R/I as sorted tuples of 0-based variable indexes.

    Equivalently the minimal transversals of the generator supports,
    computed incrementally one edge at a time.
    """
    _require_theorem_input(I)
    edges = sorted({frozenset(g.support()) for g in I.generators}, key=sorted)
    covers: list[frozenset[int]] = [frozenset([v]) for v in sorted(edges[0])]
    for edge in edges[1:]:
        hit = [c for c in covers if c & edge]
        missed = [c for c in covers if not (c & edge)]
        candidates = set(hit)
        for c in missed:
            for v in edge:
                candidates.add(c | {v})
        covers = _minimal_sets(candidates)
    return tuple(sorted(tuple(sorted(c)) for c in covers))


def _minimal_sets(sets) -> list[frozenset[int]]:
    by_size = sorted(sets, key=lambda s: (len(s), sorted(s)))
    kept: list[frozenset[int]] = []
    for s in by_size:
        if not any(k <= s for k in kept):
            kept.append(s)
    return kept


def minimal_primes_bruteforce(I: MonomialIdeal) -> tuple[tuple[int, ...], ...]:
    """2^d enumeration oracle for :func:`minimal_primes` (small d only)."""
    _require_theorem_input(I)
    d = I.nvars
    edges = [set(g.support()) for g in I.generators]
    covers = []
    for r in range(d + 1):
        for subset in combinations(range(d), r):
            s = set(subset)
            if all(s & e for e in edges):
                covers.append(frozenset(s))
    return tuple(sorted(tuple(sorted(c)) for c in _minimal_sets(covers)))


def cover_degree(I: MonomialIdeal, a: Monomial) -> int:
    """Largest n with a in the n-th symbolic power (minimum cover degree)."""
    primes = minimal_primes(I)
    return min(sum(a.exponents[i] for i in S) for S in primes)


def _compositions(total: int, length: int):
    """All tuples of ``length`` non-negative ints summing to ``total``."""
    if length == 0:
        if total == 0:
            yield ()
        return
    if length == 1:
        yield (total,)
        return
    for bars in combinations(range(total + length - 1), length - 1):
        prev = -1
        out = []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(total + length - 2 - prev)
        yield tuple(out)


def _prime_power_rows(support: tuple[int, ...], n: int, nvars: int) -> np.ndarray:
    rows = []
    for comp in _compositions(n, len(support)):
        vec = [0] * nvars
        for idx, e in zip(support, comp):
            vec[idx] = e
        rows.append(vec)
    return np.array(rows, dtype=np.int64)


def _refine_with_prime(rows: np.ndarray, support: tuple[int, ...], n: int) -> np.ndarray:
    """Minimal generators of (rows) intersected with the prime power on ``support``.

    For a generator g short of degree n on the support, the minimal lcms
    with the prime power generators are exactly g plus the compositions
    of the deficit over the support.
    """
    sup = np.asarray(support, dtype=np.int64)
    deficits = n - rows[:, sup].sum(axis=1)
    out = [rows[deficits <= 0]]
    nvars = rows.shape[1]
    for row, deficit in zip(rows[deficits > 0], deficits[deficits > 0]):
        comps = np.array(list(_compositions(int(deficit), len(support))), dtype=np.int64)
        pads = np.zeros((len(comps), nvars), dtype=np.int64)
        pads[:, sup] = comps
        out.append(row[None, :] + pads)
    return minimal_rows(np.vstack(out))


def symbolic_power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    """n-th symbolic power: intersection of the n-th prime powers.

    Processes primes smallest support first; within each step only the
    lcms that can be minimal are generated (the deficit completions),
    which agrees with the generic pairwise-lcm intersection.
    """
    if n <= 0:
        raise DomainError("symbolic power index must be >= 1")
    primes = sorted(minimal_primes(I), key=lambda s: (len(s), s))
    rows = _prime_power_rows(primes[0], n, I.nvars)
    for support in primes[1:]:
        rows = _refine_with_prime(rows, support, n)
    mat = minimal_rows(rows)
    return MonomialIdeal(
        I.nvars, tuple(Monomial(tuple(int(e) for e in row)) for row in mat)
    )


def symbolic_membership(I: MonomialIdeal, a: Monomial, n: int) -> bool:
    """Cover-degree membership test: a in I^(n) iff cover_degree(I, a) >= n."""
    if n <= 0:
        raise DomainError("symbolic power index must be >= 1")
    return cover_degree(I, a) >= n
