"""Finite automaton recognizing survivor codings of a hole.

For an open hole (a, b) with rational endpoints, a 0-1 sequence w codes a
surviving orbit exactly when every tail sigma^k w has value outside (a, b).
Writing A for the lexicographically largest representation of a and B for the
lexicographically smallest representation of b, this is the condition

    for every k:   sigma^k w <= A   or   sigma^k w >= B

and it can be tracked with finitely many suffix-match states because A and B
are eventually periodic.  Each state records which prefixes of A, of B and of
their common prefix the recent suffixes of the input still tie with; a tie
that breaks upward past A while still below B pins the tail value strictly
inside the hole and kills the path.  Ties against A (resp. B) are conjunctive
constraints, so only the binding one -- the one whose remaining word is
lexicographically smallest (resp. largest) -- needs to be kept, which bounds
the state count by a polynomial in the expansion lengths.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rationals import BudgetExceededError, lex_max_expansion, lex_min_expansion
from .words import EvPeriodicWord


@dataclass(frozen=True)
class Hole:
    """Open interval (a, b) within [0, 1] with rational endpoints."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if not (0 <= self.a < self.b <= 1):
            raise ValueError(f"need 0 <= a < b <= 1, got ({self.a}, {self.b})")

    def mirror(self) -> "Hole":
        return Hole(1 - self.b, 1 - self.a)

    def __str__(self) -> str:
        return f"({self.a}, {self.b})"


class _Ray:
    """Indexable eventually periodic word with canonicalized shift offsets.

    Offsets i and i' are interchangeable when the shifted words agree, which
    for i >= preperiod happens modulo the period; ``canon`` folds an arbitrary
    offset into 0..n-1 and ``adv[i]`` is canon(i + 1).
    """

    __slots__ = ("m", "p", "n", "sym", "adv", "rank")

    def __init__(self, word: EvPeriodicWord):
        self.m, self.p = len(word.preperiod), len(word.period)
        self.n = self.m + self.p
        self.sym = [int(c) for c in word.preperiod + word.period]
        self.adv = [i + 1 if i + 1 < self.n else self.m for i in range(self.n)]
        # rank shifts lexicographically; shifts agreeing on m + 2p symbols agree
        span = self.m + 2 * self.p + 2
        keys = [word.prefix(i + span)[i:] for i in range(self.n)]
        order = sorted(range(self.n), key=lambda i: keys[i])
        self.rank = [0] * self.n
        for r, i in enumerate(order):
            self.rank[i] = r

    def canon(self, i: int) -> int:
        if i < self.n:
            return i
        return self.m + (i - self.m) % self.p


@dataclass
class SurvivorAutomaton:
    """Deterministic partial automaton over {0, 1}.

    ``transitions[s]`` is a pair (target on 0, target on 1) with -1 for a
    missing edge.  ``live[s]`` marks states with an infinite outgoing path;
    infinite paths from the start state are exactly the surviving codings.
    """

    transitions: list[tuple[int, int]]
    live: list[bool]
    start: int = 0
    hole: Hole | None = None
    left_word: EvPeriodicWord | None = None
    right_word: EvPeriodicWord | None = None

    @classmethod
    def from_transitions(cls, transitions, start: int = 0) -> "SurvivorAutomaton":
        trans = [tuple(t) for t in transitions]
        return cls(trans, _live_states(trans), start)

    @property
    def n_states(self) -> int:
        return len(self.transitions)

    def count_paths(self, length: int, live_only: bool = False) -> int:
        """Number of words of the given length labeling paths from the start.

        With ``live_only`` the path must end in a live state, i.e. the word is
        a prefix of an accepted infinite sequence.
        """
        vec = {self.start: 1}
        for _ in range(length):
            nxt: dict[int, int] = {}
            for s, c in vec.items():
                for t in self.transitions[s]:
                    if t >= 0:
                        nxt[t] = nxt.get(t, 0) + c
            vec = nxt
        if live_only:
            return sum(c for s, c in vec.items() if self.live[s])
        return sum(vec.values())

    def accepts(self, word: str) -> bool:
        """Is the finite word the label of a path from the start state?"""
        s = self.start
        for ch in word:
            s = self.transitions[s][int(ch)]
            if s < 0:
                return False
        return True

    def dump(self) -> str:
        """Deterministic text form: one "state symbol -> state" line per edge."""
        lines = [f"states: {self.n_states}", f"start: {self.start}"]
        lines.append("live: " + " ".join(str(s) for s in range(self.n_states) if self.live[s]))
        for s, (t0, t1) in enumerate(self.transitions):
            if t0 >= 0:
                lines.append(f"{s} 0 -> {t0}")
            if t1 >= 0:
                lines.append(f"{s} 1 -> {t1}")
        return "\n".join(lines) + "\n"


def _live_states(trans: list[tuple[int, int]]) -> list[bool]:
    """States admitting an infinite outgoing path (kill dead ends repeatedly)."""
    n = len(trans)
    preds: list[list[int]] = [[] for _ in range(n)]
    outdeg = [0] * n
    for s, (t0, t1) in enumerate(trans):
        for t in (t0, t1):
            if t >= 0:
                preds[t].append(s)
                outdeg[s] += 1
    alive = [d > 0 for d in outdeg]
    stack = [s for s in range(n) if not alive[s]]
    while stack:
        dead = stack.pop()
        for s in preds[dead]:
            if alive[s]:
                outdeg[s] -= sum(1 for t in trans[s] if t == dead)
                if outdeg[s] == 0:
                    alive[s] = False
                    stack.append(s)
    return alive


def build_automaton(hole: Hole, max_states: int = 1_000_000) -> SurvivorAutomaton:
    """Automaton whose infinite paths are exactly the survivor codings of the hole.

    A path dies at the first symbol that decides some tail strictly between
    the two endpoint expansions; boundary-valued tails survive, matching the
    openness of the hole.
    """
    if hole.a >= hole.b:
        raise ValueError(f"empty hole {hole}")
    wa = lex_max_expansion(hole.a)
    wb = lex_min_expansion(hole.b)
    A, B = _Ray(wa), _Ray(wb)

    # length of the common prefix of A and B; they differ since a < b,
    # and at the first difference A carries 0, B carries 1
    cstar = 0
    bound = A.n + B.n + max(A.n, B.n) + 4
    while cstar < bound and A.sym[A.canon(cstar)] == B.sym[B.canon(cstar)]:
        cstar += 1
    if cstar >= bound:
        raise ValueError(f"endpoint expansions of {hole} coincide")
    common = [A.sym[A.canon(i)] for i in range(cstar)]

    a_first = A.canon(cstar + 1)
    b_first = B.canon(cstar + 1)

    start = ((), -1, -1)  # (suffix ties with the common prefix, A tie, B tie)
    ids = {start: 0}
    trans: list[list[int]] = [[-1, -1]]
    queue = [start]
    head = 0
    while head < len(queue):
        state = queue[head]
        head += 1
        sid = ids[state]
        abt, amin, bmax = state
        for ch in (0, 1):
            a_cands = []
            b_cands = []
            new_ab = []
            for i in (0,) + abt:  # ascending, so new_ab stays sorted
                if i < cstar:
                    if ch == common[i]:
                        new_ab.append(i + 1)
                    # a mismatch inside the common prefix resolves the tie:
                    # below A or above B, satisfied either way
                elif ch == 0:
                    a_cands.append(a_first)
                else:
                    b_cands.append(b_first)
            if amin >= 0:
                na = A.sym[amin]
                if ch == na:
                    a_cands.append(A.adv[amin])
                elif ch > na:
                    continue  # tail now strictly inside the hole
            if bmax >= 0:
                nb = B.sym[bmax]
                if ch == nb:
                    b_cands.append(B.adv[bmax])
                elif ch < nb:
                    continue
            namin = min(a_cands, key=A.rank.__getitem__) if a_cands else -1
            nbmax = max(b_cands, key=B.rank.__getitem__) if b_cands else -1
            nstate = (tuple(new_ab), namin, nbmax)
            nid = ids.get(nstate)
            if nid is None:
                nid = len(trans)
                if nid >= max_states:
                    raise BudgetExceededError(
                        f"automaton for {hole} exceeds {max_states} states"
                    )
                ids[nstate] = nid
                trans.append([-1, -1])
                queue.append(nstate)
            trans[sid][ch] = nid
    tuples = [(t0, t1) for t0, t1 in trans]
    return SurvivorAutomaton(tuples, _live_states(tuples), 0, hole, wa, wb)
