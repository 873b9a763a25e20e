"""Hot-kernel dispatch: compiled extension when built, pure Python otherwise.

The compiled backend is a straight 64-bit transcription of the pure one; the
dispatcher falls back to pure Python whenever an input could overflow it, so
results are identical either way.
"""

from __future__ import annotations

from ._pure import cylinder_counts as cylinder_counts_pure

try:
    from ._cyl import cylinder_counts as _cylinder_counts_compiled
except ImportError:
    _cylinder_counts_compiled = None

BACKEND = "compiled" if _cylinder_counts_compiled is not None else "pure"

_WORD_BITS = 62


def _fits_fast_path(depth: int, pa: int, qa: int, pb: int, qb: int) -> bool:
    biggest = max(pa, qa, pb, qb)
    return depth + biggest.bit_length() + 1 <= _WORD_BITS


def cylinder_counts(depth: int, pa: int, qa: int, pb: int, qb: int) -> tuple[int, int]:
    """(lower, upper) cylinder survival counts; see kernels._pure for the contract."""
    if _cylinder_counts_compiled is not None and _fits_fast_path(depth, pa, qa, pb, qb):
        return _cylinder_counts_compiled(depth, pa, qa, pb, qb)
    return cylinder_counts_pure(depth, pa, qa, pb, qb)
