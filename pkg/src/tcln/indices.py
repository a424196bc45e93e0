"""Citation index computations.

``compute_h_index`` returns the largest k such that at least k papers have
at least k citations each. The hot scan is served by a compiled extension
when available (see ``_hindex_fast.pyx``); a pure-Python implementation
with identical semantics is used otherwise. Set ``TCLN_PURE=1`` to force
the fallback.
"""

from __future__ import annotations

import os
from collections.abc import Iterable

__all__ = ["compute_h_index", "total_citations", "h_index_backend"]


def _validate(counts: Iterable[int]) -> list[int]:
    v = list(counts)
    for c in v:
        if c < 0:
            raise ValueError(f"negative citation count: {c}")
    return v


def _h_index_py(counts: list[int]) -> int:
    # Sort descending, then h is the last rank r with counts[r-1] >= r.
    h = 0
    for rank, c in enumerate(sorted(counts, reverse=True), start=1):
        if c < rank:
            break
        h = rank
    return h


if os.environ.get("TCLN_PURE"):
    _h_core = _h_index_py
    h_index_backend = "python"
else:
    try:
        from ._hindex_fast import h_index as _h_core

        h_index_backend = "cython"
    except ImportError:
        _h_core = _h_index_py
        h_index_backend = "python"


def compute_h_index(counts: Iterable[int]) -> int:
    """Largest k such that at least k entries of ``counts`` are >= k.

    A single uncited paper yields 0, and so does the empty vector: no k >= 1
    can be supported without a paper holding at least one citation.
    """
    return _h_core(_validate(counts))


def total_citations(counts: Iterable[int]) -> int:
    """Sum of per-paper citation counts."""
    return sum(_validate(counts))
