import itertools
import random
from fractions import Fraction

import pytest

from dbhole import kernels
from dbhole.kernels import cylinder_counts, cylinder_counts_pure

F = Fraction


def reference_counts(depth, pa, qa, pb, qb):
    """Direct Fraction transcription of the contract, for small depth."""
    a, b = F(pa, qa), F(pb, qb)
    lower = upper = 0
    for bits in itertools.product((0, 1), repeat=depth):
        disjoint = True
        never_inside = True
        for k in range(depth):
            tail = bits[k:]
            lo = F(sum(t << (len(tail) - 1 - i) for i, t in enumerate(tail)), 1 << len(tail))
            hi = lo + F(1, 1 << len(tail))
            if not (hi <= a or lo >= b):
                disjoint = False
            if a < lo and hi < b:
                never_inside = False
        lower += disjoint
        upper += never_inside
    return lower, upper


@pytest.mark.parametrize("pa,qa,pb,qb", [
    (1, 3, 2, 3), (3, 10, 7, 10), (21, 50, 29, 50), (1, 2, 3, 4), (0, 1, 1, 4),
])
def test_pure_kernel_matches_reference(pa, qa, pb, qb):
    for depth in (4, 7):
        assert cylinder_counts_pure(depth, pa, qa, pb, qb) == \
            reference_counts(depth, pa, qa, pb, qb)


@pytest.mark.skipif(kernels.BACKEND != "compiled", reason="extension not built")
def test_compiled_kernel_matches_pure():
    rng = random.Random(8)
    for _ in range(50):
        qa, qb = rng.randrange(2, 65), rng.randrange(2, 65)
        pa, pb = rng.randrange(0, qa), rng.randrange(1, qb + 1)
        if F(pa, qa) >= F(pb, qb):
            continue
        for depth in (8, 12):
            assert kernels._cylinder_counts_compiled(depth, pa, qa, pb, qb) == \
                cylinder_counts_pure(depth, pa, qa, pb, qb)


def test_dispatcher_falls_back_for_big_inputs():
    huge = 10**30
    lo, up = cylinder_counts(4, 1, 3, huge - 1, huge)
    assert cylinder_counts_pure(4, 1, 3, huge - 1, huge) == (lo, up)


def test_fast_path_bound():
    assert kernels._fits_fast_path(14, 21, 50, 29, 50)
    assert not kernels._fits_fast_path(14, 1, 10**30, 1, 2)
