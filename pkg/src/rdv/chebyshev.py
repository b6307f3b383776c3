"""Chebyshev-type constants of order n by exact multiset enumeration.

The order-n constant maximizes, over size-n multisets from H, the smallest
averaged kernel sum seen from L; the dual constant minimizes the largest
one.  Both are computed by a full scan of all multisets (combinations with
replacement), vectorized in chunks, with a hard cap on the enumeration
size.  Multiset witnesses are the lexicographically smallest optimizers.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import (
    DimensionMismatchError,
    EnumerationCapExceededError,
    KernelSpace,
    SubsetPair,
    TIE_TOL,
    ValueInterval,
)

DEFAULT_ENUM_CAP = 2_000_000
_CHUNK_CELLS = 4_000_000


@dataclass(frozen=True)
class ChebyshevWitness:
    """Optimal multiset (point indices, sorted) and the extremal point of L."""

    points: tuple[int, ...]
    extremal: int


@dataclass(frozen=True)
class ChebyshevTable:
    """Per-order constants: row n holds M_n, the dual constant, witnesses.

    Orders whose enumeration would exceed the cap are listed in ``skipped``
    rather than raising, so a table can accompany a report for any space.
    """

    n_values: tuple[int, ...]
    lower: tuple[float, ...]
    upper: tuple[float, ...]
    lower_witnesses: tuple[ChebyshevWitness, ...]
    upper_witnesses: tuple[ChebyshevWitness, ...]
    skipped: tuple[int, ...] = ()


def multiset_count(h: int, n: int) -> int:
    return math.comb(h + n - 1, n)


def _scan(space: KernelSpace, pair: SubsetPair, n: int, cap: Optional[int], dual: bool):
    if n < 1:
        raise DimensionMismatchError(f"multiset order must be at least 1, got {n}")
    pair.check_range(space.m)
    H, L = pair.H, pair.L
    limit = DEFAULT_ENUM_CAP if cap is None else int(cap)
    required = multiset_count(len(H), n)
    if required > limit:
        raise EnumerationCapExceededError(
            f"order {n} over {len(H)} points needs {required} multisets; cap is {limit}",
            cap=limit,
            required=required,
        )
    KH = space.kernel[np.ix_(L, H)]
    chunk_rows = max(1, _CHUNK_CELLS // (len(L) * n))
    best_val: float | None = None
    best_multiset: tuple[int, ...] | None = None
    combos = itertools.combinations_with_replacement(range(len(H)), n)
    while True:
        chunk = list(itertools.islice(combos, chunk_rows))
        if not chunk:
            break
        idx = np.asarray(chunk, dtype=np.intp)
        sums = KH[:, idx].sum(axis=2) / float(n)  # |L| x chunk
        inner = sums.max(axis=0) if dual else sums.min(axis=0)
        j = int(np.argmin(inner)) if dual else int(np.argmax(inner))
        val = float(inner[j])
        better = (best_val is None) or (val < best_val if dual else val > best_val)
        if better:
            best_val = val
            best_multiset = chunk[j]
    assert best_val is not None and best_multiset is not None
    sums = KH[:, np.asarray(best_multiset, dtype=np.intp)].sum(axis=1) / float(n)
    row = int(np.argmax(sums)) if dual else int(np.argmin(sums))
    witness = ChebyshevWitness(
        points=tuple(H[i] for i in best_multiset),
        extremal=L[row],
    )
    return best_val, witness


def chebyshev_n(space: KernelSpace, pair: SubsetPair, n: int,
                cap: Optional[int] = None) -> tuple[float, ChebyshevWitness]:
    """Order-n constant: best multiset of H for the worst (smallest) view from L."""
    return _scan(space, pair, n, cap, dual=False)


def dual_chebyshev_n(space: KernelSpace, pair: SubsetPair, n: int,
                     cap: Optional[int] = None) -> tuple[float, ChebyshevWitness]:
    """Dual order-n constant: best multiset of H for the largest view from L."""
    return _scan(space, pair, n, cap, dual=True)


def rendezvous_n(space: KernelSpace, pair: SubsetPair, n: int,
                 cap: Optional[int] = None) -> ValueInterval:
    """Order-n interval between the constant and its dual; may be empty."""
    lo, _ = chebyshev_n(space, pair, n, cap)
    hi, _ = dual_chebyshev_n(space, pair, n, cap)
    if lo > hi + TIE_TOL:
        return ValueInterval(lo, hi, empty=True)
    return ValueInterval(min(lo, hi), max(lo, hi))


def chebyshev_limit_bounds(space: KernelSpace, pair: SubsetPair, n_max: int,
                           cap: Optional[int] = None) -> tuple[float, float]:
    """Certified bracket from orders 1..n_max.

    Concatenating multisets makes ``n * M_n`` superadditive and the dual
    sequence subadditive, so the limits equal ``sup_n M_n`` and the dual
    ``inf_n``; the running max and min over a finite prefix are therefore
    valid lower and upper bounds for the respective limits.
    """
    lows = []
    highs = []
    for n in range(1, n_max + 1):
        lows.append(chebyshev_n(space, pair, n, cap)[0])
        highs.append(dual_chebyshev_n(space, pair, n, cap)[0])
    return max(lows), min(highs)


def chebyshev_table(space: KernelSpace, pair: SubsetPair, n_max: int,
                    cap: Optional[int] = None) -> ChebyshevTable:
    """Table of orders 1..n_max, skipping orders whose scan would blow the cap."""
    limit = DEFAULT_ENUM_CAP if cap is None else int(cap)
    ns, lows, highs, lw, uw, skipped = [], [], [], [], [], []
    for n in range(1, n_max + 1):
        if multiset_count(len(pair.H), n) > limit:
            skipped.append(n)
            continue
        lo, wl = chebyshev_n(space, pair, n, limit)
        hi, wu = dual_chebyshev_n(space, pair, n, limit)
        ns.append(n)
        lows.append(lo)
        highs.append(hi)
        lw.append(wl)
        uw.append(wu)
    return ChebyshevTable(
        n_values=tuple(ns),
        lower=tuple(lows),
        upper=tuple(highs),
        lower_witnesses=tuple(lw),
        upper_witnesses=tuple(uw),
        skipped=tuple(skipped),
    )
