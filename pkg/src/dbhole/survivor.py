"""Classification and measurement of survivor sets.

classify() reads the structure of the live survivor automaton: no cycle
beyond the fixed point, finitely many isolated cycles, or a branching
strongly connected component.  The three outcomes are decided graph-
theoretically, never by comparing a float to zero.  Entropy is certified by
exact Collatz-Wielandt bounds on the Perron root of the live adjacency
matrix, cycles are enumerated independently of the automaton from primitive
necklaces, and is_trap() decides interval trapping from exact backward
preimage unions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .automaton import Hole, SurvivorAutomaton, build_automaton
from .rationals import BudgetExceededError
from . import kernels


class Kind(str, Enum):
    FIXED_ONLY = "FixedOnly"
    COUNTABLE_CYCLES = "CountableCycles"
    POSITIVE_ENTROPY = "PositiveEntropy"


_KIND_ORDER = {Kind.FIXED_ONLY: 0, Kind.COUNTABLE_CYCLES: 1, Kind.POSITIVE_ENTROPY: 2}


def kind_rank(kind: Kind) -> int:
    """FixedOnly < CountableCycles < PositiveEntropy."""
    return _KIND_ORDER[Kind(kind)]


@dataclass(frozen=True)
class Classification:
    """Outcome of classify().

    ``cycles`` lists the nontrivial surviving cycle codings (one per rotation
    class, written as the largest rotation starting with 0); the fixed point 0
    is tracked by ``zero_loop`` instead, and the formal all-ones loop, which
    codes no point of [0, 1), is never listed.  The entropy bracket is exact
    zero for the first two kinds and a certified positive interval for
    PositiveEntropy.
    """

    kind: Kind
    cycles: tuple[str, ...]
    zero_loop: bool
    entropy_lo: float
    entropy_hi: float

    @property
    def dimension(self) -> float:
        return (self.entropy_lo + self.entropy_hi) / (2 * math.log(2))


def _scc_decompose(auto: SurvivorAutomaton) -> list[list[int]]:
    """Tarjan on the live subgraph, iterative."""
    trans, live = auto.transitions, auto.live
    n = len(trans)
    index = [-1] * n
    low = [0] * n
    onstack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if not live[root] or index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            s, ptr = work[-1]
            if ptr == 0:
                index[s] = low[s] = counter
                counter += 1
                stack.append(s)
                onstack[s] = True
            succs = [t for t in trans[s] if t >= 0 and live[t]]
            pushed = False
            while ptr < len(succs):
                t = succs[ptr]
                ptr += 1
                if index[t] == -1:
                    work[-1] = (s, ptr)
                    work.append((t, 0))
                    pushed = True
                    break
                if onstack[t]:
                    low[s] = min(low[s], index[t])
            if pushed:
                continue
            work.pop()
            if low[s] == index[s]:
                comp = []
                while True:
                    t = stack.pop()
                    onstack[t] = False
                    comp.append(t)
                    if t == s:
                        break
                comps.append(comp)
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[s])
    return comps


def _zero_max_rotation(w: str) -> str:
    """Largest rotation beginning with 0: the coding of the largest cycle
    point below 1/2."""
    rots = [w[i:] + w[:i] for i in range(len(w))]
    zero_rots = [r for r in rots if r[0] == "0"]
    return max(zero_rots) if zero_rots else min(rots)


def _perron_bracket(rows: list[list[int]], rel_tol: Fraction,
                    max_iter: int = 200_000) -> tuple[Fraction, Fraction]:
    """Certified bracket for the Perron root of an irreducible 0/1/2 matrix.

    Power iteration on rows + I (primitive whenever the matrix is
    irreducible) with exact integer vectors; every Collatz-Wielandt ratio
    pair min_i (Mx)_i/x_i <= rho <= max_i (Mx)_i/x_i is a valid bound for
    any positive vector, so occasional rescaling costs nothing.
    """
    n = len(rows)
    mat = [list(r) for r in rows]
    for i in range(n):
        mat[i][i] += 1
    sparse = [[(j, c) for j, c in enumerate(row) if c] for row in mat]
    x = [1] * n
    best_lo = Fraction(0)
    best_hi: Fraction | None = None
    for _ in range(max_iter):
        y = [sum(c * x[j] for j, c in row) for row in sparse]
        lo = min(Fraction(y[i], x[i]) for i in range(n))
        hi = max(Fraction(y[i], x[i]) for i in range(n))
        if lo > best_lo:
            best_lo = lo
        if best_hi is None or hi < best_hi:
            best_hi = hi
        if best_hi - best_lo <= rel_tol * best_lo:
            return best_lo - 1, best_hi - 1
        x = y
        top = max(x)
        if top.bit_length() > 300:
            shift = top.bit_length() - 150
            x = [max(1, v >> shift) for v in x]
    raise BudgetExceededError(
        f"Perron bracket did not reach tolerance {rel_tol} in {max_iter} iterations",
        partial=(best_lo - 1, best_hi - 1 if best_hi is not None else None),
    )


def _scc_cycle_word(comp: list[int], trans, compset) -> str | None:
    """Edge labels around a single-cycle SCC, or None if it branches."""
    internal = {}
    for s in comp:
        succ = [(ch, trans[s][ch]) for ch in (0, 1) if trans[s][ch] in compset]
        if len(succ) > 1:
            return None
        if succ:
            internal[s] = succ[0]
    if not internal:
        return ""  # trivial SCC, no internal edge
    s = comp[0]
    word = []
    while True:
        ch, t = internal[s]
        word.append(str(ch))
        s = t
        if s == comp[0]:
            break
    return "".join(word)


def _live_analysis(auto: SurvivorAutomaton):
    """(branching?, list of simple-cycle words, per-branching-SCC node lists)."""
    comps = _scc_decompose(auto)
    cycle_words = []
    branching_comps = []
    for comp in comps:
        compset = set(comp)
        word = _scc_cycle_word(comp, auto.transitions, compset)
        if word is None:
            branching_comps.append(comp)
        elif word:
            cycle_words.append(word)
    return branching_comps, cycle_words


def entropy(auto: SurvivorAutomaton, tol: float = 1e-10) -> tuple[float, float]:
    """Certified bracket for the topological entropy of the live subgraph.

    Exactly (0.0, 0.0) when every strongly connected component is a single
    cycle; otherwise a bracket of width at most ``tol`` around log of the
    Perron root of the live adjacency matrix.
    """
    if not any(auto.live):
        raise ValueError("entropy undefined: automaton has no live states")
    branching, _ = _live_analysis(auto)
    if not branching:
        return (0.0, 0.0)
    rel = Fraction(tol).limit_denominator(10**15) / 4
    lam_lo, lam_hi = Fraction(1), Fraction(1)
    for comp in branching:
        compset = set(comp)
        idx = {s: i for i, s in enumerate(comp)}
        rows = [[0] * len(comp) for _ in comp]
        for s in comp:
            for ch in (0, 1):
                t = auto.transitions[s][ch]
                if t in compset:
                    rows[idx[s]][idx[t]] += 1
        lo, hi = _perron_bracket(rows, rel)
        lam_lo = max(lam_lo, lo)
        lam_hi = max(lam_hi, hi)
    pad = 1e-13
    h_lo = max(0.0, math.log(lam_lo.numerator / lam_lo.denominator) - pad)
    h_hi = math.log(lam_hi.numerator / lam_hi.denominator) + pad
    return (h_lo, h_hi)


def classify(hole: Hole, max_states: int = 1_000_000,
             entropy_tol: float = 1e-10) -> Classification:
    """Exact classification of the survivor set of an open hole."""
    auto = build_automaton(hole, max_states=max_states)
    branching, cycle_words = _live_analysis(auto)
    # the 0-loop state may sit inside a branching component (points can jump
    # across a hole with 2a >= b), so look for the self-loop itself
    zero_loop = any(live and auto.transitions[s][0] == s
                    for s, live in enumerate(auto.live))
    if branching:
        lo, hi = entropy(auto, tol=entropy_tol)
        return Classification(Kind.POSITIVE_ENTROPY, (), zero_loop, lo, hi)
    nontrivial = sorted(
        {_zero_max_rotation(w) for w in cycle_words if w not in ("0", "1")},
        key=lambda w: (len(w), w),
    )
    if nontrivial:
        return Classification(Kind.COUNTABLE_CYCLES, tuple(nontrivial), zero_loop, 0.0, 0.0)
    return Classification(Kind.FIXED_ONLY, (), zero_loop, 0.0, 0.0)


def enumerate_surviving_cycles(hole: Hole, max_len: int) -> list[str]:
    """All cycle codings of length <= max_len whose orbit avoids the open hole.

    One word per rotation class (largest rotation starting with 0), sorted by
    length then value.  The all-ones word is skipped: it codes the point 1,
    which is outside [0, 1).  Runtime grows like 2^max_len.
    """
    if max_len < 1:
        raise ValueError("max_len must be positive")
    out = []
    for length in range(1, max_len + 1):
        den = (1 << length) - 1
        for k in range(0, den):  # den == all-ones is excluded
            w = format(k, f"0{length}b")
            rots = [w[i:] + w[:i] for i in range(length)]
            if w != min(rots) or len(set(rots)) != length:
                continue
            if all(not (hole.a < Fraction(int(r, 2), den) < hole.b) for r in rots):
                out.append(_zero_max_rotation(w))
    return sorted(out, key=lambda w: (len(w), w))


def sigma_n_dimension(n: int, tol: float = 1e-11) -> float:
    """Hausdorff dimension of the set coded by "every 0 is followed by at
    least n ones": log2 of the Perron root of the (n+1)-state chain graph."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rows = [[0] * (n + 1) for _ in range(n + 1)]
    rows[0][0] = 1       # free state reads 1
    rows[0][n] = 1       # or reads 0 and owes n ones
    for k in range(1, n + 1):
        rows[k][k - 1] = 1
    lo, hi = _perron_bracket(rows, Fraction(tol).limit_denominator(10**15) / 4)
    mid = (math.log2(lo.numerator / lo.denominator)
           + math.log2(hi.numerator / hi.denominator)) / 2
    return mid


def sigma_n_matrix_word_count(n: int, length: int) -> int:
    """Number of admissible words of the given length (transfer-matrix count)."""
    vec = [0] * (n + 1)  # paths from the free state
    vec[0] = 1
    for _ in range(length):
        nxt = [0] * (n + 1)
        nxt[0] += vec[0]
        nxt[n] += vec[0]
        for k in range(1, n + 1):
            nxt[k - 1] += vec[k]
        vec = nxt
    return sum(vec)


def cylinder_counts(hole: Hole, depth: int) -> tuple[int, int]:
    """Exact dyadic-cylinder survival bracket at the given generation.

    lower: cylinders whose first ``depth`` images are disjoint from the open
    hole; upper: cylinders none of whose first ``depth`` images is contained
    in it.  The automaton's path count of the same length always lies between
    the two.
    """
    return kernels.cylinder_counts(depth, hole.a.numerator, hole.a.denominator,
                                   hole.b.numerator, hole.b.denominator)


@dataclass(frozen=True)
class TrapReport:
    """Outcome of is_trap: trapped is True, False or None (undecided)."""

    trapped: bool | None
    residual_measure: Fraction
    escape_witness: str | None


def _merge_intervals(ivs: list[tuple[Fraction, Fraction]]) -> list[tuple[Fraction, Fraction]]:
    ivs.sort()
    out = [ivs[0]]
    for lo, hi in ivs[1:]:
        if lo <= out[-1][1]:
            if hi > out[-1][1]:
                out[-1] = (out[-1][0], hi)
        else:
            out.append((lo, hi))
    return out


def _complement_gaps(union: list[tuple[Fraction, Fraction]]) -> list[tuple[Fraction, Fraction]]:
    """Open complement components of the union within (0, 1)."""
    gaps = []
    if union[0][0] > 0:
        gaps.append((Fraction(0), union[0][0]))
    for (_, h1), (l2, _) in zip(union, union[1:]):
        gaps.append((h1, l2))
    if union[-1][1] < 1:
        gaps.append((union[-1][1], Fraction(1)))
    return gaps


def _certify_trapped(gaps: list[tuple[Fraction, Fraction]]) -> bool:
    """True when no point of (0, 1) can stay inside the gaps forever.

    Builds the directed overlap graph of gap images under 2x mod 1.  End gaps
    at 0 and 1 lose their self-loop (doubling expels every interior point in
    finite time).  Any other forever-avoiding orbit would settle in one
    strongly connected component; if that component is a single cycle of
    gaps, each on one branch of the map, the composed affine return map is
    expanding with a rational fixed point, so the orbit can only persist at
    that fixed point -- certified impossible when the fixed point lies in no
    gap.
    """
    n = len(gaps)
    half = Fraction(1, 2)
    succ: list[list[int]] = [[] for _ in range(n)]
    branch: list[int | None] = [None] * n
    for i, (lo, hi) in enumerate(gaps):
        pieces = []
        if lo < half:
            pieces.append((2 * lo, 2 * min(hi, half), 0))
        if hi > half:
            pieces.append((2 * max(lo, half) - 1, 2 * hi - 1, 1))
        if len(pieces) == 1:
            branch[i] = pieces[0][2]
        for plo, phi, _ in pieces:
            for j, (glo, ghi) in enumerate(gaps):
                if plo < ghi and glo < phi:
                    succ[i].append(j)
    if n and gaps[0][0] == 0 and gaps[0][1] <= half:
        succ[0] = [j for j in succ[0] if j != 0]
    if n and gaps[-1][1] == 1 and gaps[-1][0] >= half:
        succ[-1] = [j for j in succ[-1] if j != n - 1]

    for comp in _graph_sccs(succ):
        compset = set(comp)
        internal = {s: [t for t in succ[s] if t in compset] for s in comp}
        if sum(len(v) for v in internal.values()) == 0:
            continue
        if any(len(v) != 1 for v in internal.values()):
            return False
        if any(branch[s] is None for s in comp):
            return False
        mul, add = 1, Fraction(0)
        s = comp[0]
        while True:
            mul *= 2
            add = 2 * add - branch[s]
            s = internal[s][0]
            if s == comp[0]:
                break
        fixed = -add / (mul - 1)
        if any(gaps[t][0] < fixed < gaps[t][1] for t in comp):
            return False
    return True


def _graph_sccs(succ: list[list[int]]) -> list[list[int]]:
    n = len(succ)
    index = [-1] * n
    low = [0] * n
    onstack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            s, ptr = work[-1]
            if ptr == 0:
                index[s] = low[s] = counter
                counter += 1
                stack.append(s)
                onstack[s] = True
            pushed = False
            while ptr < len(succ[s]):
                t = succ[s][ptr]
                ptr += 1
                if index[t] == -1:
                    work[-1] = (s, ptr)
                    work.append((t, 0))
                    pushed = True
                    break
                if onstack[t]:
                    low[s] = min(low[s], index[t])
            if pushed:
                continue
            work.pop()
            if low[s] == index[s]:
                comp = []
                while True:
                    t = stack.pop()
                    onstack[t] = False
                    comp.append(t)
                    if t == s:
                        break
                comps.append(comp)
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[s])
    return comps


def is_trap(c: Fraction, d: Fraction, depth: int = 24, tol=Fraction(1, 10**6),
            witness_max_len: int = 12, max_intervals: int = 20_000) -> TrapReport:
    """Is [c, d] a trap, i.e. do its backward images cover all of (0, 1)?

    Grows the union of preimages of [c, d] for ``depth`` rounds of exact
    interval arithmetic.  trapped=True requires both the residual measure to
    drop below ``tol`` and the expanding-gap certificate to hold, so a True
    answer is a proof.  trapped=False is reported with a witness: a cycle (or
    the eventually fixed coding 1(0) of the point 1/2) that avoids the closed
    interval.  Anything else is None.  The residual is the measure of (0, 1)
    not yet covered when the verdict was reached.
    """
    c, d = Fraction(c), Fraction(d)
    if not 0 < c < d < 1:
        raise ValueError(f"need 0 < c < d < 1, got [{c}, {d}]")
    tol = Fraction(tol)

    for length in range(1, witness_max_len + 1):
        den = (1 << length) - 1
        for k in range(1, den):
            w = format(k, f"0{length}b")
            rots = [w[i:] + w[:i] for i in range(length)]
            if w != min(rots) or len(set(rots)) != length:
                continue
            if all(not (c <= Fraction(int(r, 2), den) <= d) for r in rots):
                return TrapReport(False, Fraction(1) - (d - c), _zero_max_rotation(w))
    if not c <= Fraction(1, 2) <= d:
        # the orbit of 1/2 is {1/2, 0, 0, ...} and never meets [c, d]
        return TrapReport(False, Fraction(1) - (d - c), "1(0)")

    union = [(c, d)]
    residual = Fraction(1) - (d - c)
    for _ in range(depth):
        grown = list(union)
        for lo, hi in union:
            grown.append((lo / 2, hi / 2))
            grown.append(((lo + 1) / 2, (hi + 1) / 2))
        union = _merge_intervals(grown)
        if len(union) > max_intervals:
            break
        gaps = _complement_gaps(union)
        residual = sum((hi - lo for lo, hi in gaps), Fraction(0))
        if residual < tol and _certify_trapped(gaps):
            return TrapReport(True, residual, None)
    return TrapReport(None, residual, None)


def locate_entropy_transition(precision_bits: int,
                              lo: Fraction = Fraction(3, 8),
                              hi: Fraction = Fraction(7, 16),
                              max_states: int = 1_000_000) -> tuple[Fraction, Fraction]:
    """Dyadic bracket of width 2^-precision_bits around the symmetric-hole
    parameter where the survivor set first gains positive entropy.

    Bisection on a for holes (a, 1-a); the survivor set only grows with a, so
    the classification flips exactly once.
    """
    if precision_bits < 1:
        raise ValueError("precision_bits must be positive")
    lo, hi = Fraction(lo), Fraction(hi)

    def positive(a: Fraction) -> bool:
        cls = classify(Hole(a, 1 - a), max_states=max_states)
        return cls.kind is Kind.POSITIVE_ENTROPY

    if positive(lo) or not positive(hi):
        raise ValueError(f"seed bracket [{lo}, {hi}] does not straddle the transition")
    target = Fraction(1, 2 ** precision_bits)
    try:
        while hi - lo > target:
            mid = (lo + hi) / 2
            if positive(mid):
                hi = mid
            else:
                lo = mid
    except BudgetExceededError as exc:
        raise BudgetExceededError(
            f"state budget exceeded at bracket [{lo}, {hi}]", partial=(lo, hi)
        ) from exc
    return lo, hi
