"""Exact rational arithmetic for the doubling map.

Conversion between rationals in [0, 1] and eventually periodic binary
expansions, the map x -> 2x mod 1, and orbit computation with exact cycle
detection.  Everything here is integer/Fraction arithmetic; no floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .words import EvPeriodicWord


class BudgetExceededError(RuntimeError):
    """An iteration budget ran out before the computation finished.

    ``partial`` holds whatever was computed up to that point.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


def parse_fraction(text: str) -> Fraction:
    """Parse "p/q" (or a plain integer) into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed fraction {text!r}") from exc


def format_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def pi_value(w: EvPeriodicWord) -> Fraction:
    """Value sum_k w_k 2^{-k} of an eventually periodic binary word."""
    pre, per = w.preperiod, w.period
    m, p = len(pre), len(per)
    head = int(pre, 2) if pre else 0
    body = int(per, 2)
    return Fraction(head * ((1 << p) - 1) + body, (1 << m) * ((1 << p) - 1))


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _multiplicative_order_of_two(v: int) -> int:
    """Order of 2 modulo odd v >= 1."""
    if v == 1:
        return 1
    lam = 1
    for prime, k in _factorize(v).items():
        lam = math.lcm(lam, prime ** (k - 1) * (prime - 1))
    order = lam
    for prime in _factorize(lam):
        while order % prime == 0 and pow(2, order // prime, v) == 1:
            order //= prime
    return order


def binary_expansion(x: Fraction, form: str = "lower", allow_one: bool = False) -> EvPeriodicWord:
    """Binary expansion of a rational x in [0, 1).

    The "lower" form is the expansion that never ends in (1)^inf; it is the
    lexicographically largest representation of x.  The "upper" form differs
    only for dyadic x > 0, where it is the representation ending in (1)^inf
    (lexicographically smallest); its period "1" marks it as non-canonical.
    x = 1 is rejected unless ``allow_one`` asks for the formal word (1)^inf.

    The preperiod length is the 2-adic valuation of the denominator and the
    period length is the multiplicative order of 2 modulo its odd part, so no
    digit-by-digit division is needed.
    """
    if form not in ("lower", "upper"):
        raise ValueError(f"form must be 'lower' or 'upper', got {form!r}")
    x = Fraction(x)
    if x == 1:
        if allow_one:
            return EvPeriodicWord("", "1")
        raise ValueError("x = 1 has no expansion in [0,1); pass allow_one=True for (1)^inf")
    if not 0 <= x < 1:
        raise ValueError(f"x must lie in [0, 1), got {x}")
    p, q = x.numerator, x.denominator
    u = 0
    v = q
    while v % 2 == 0:
        v //= 2
        u += 1
    pre = format((p << u) // q, f"0{u}b") if u else ""
    if v == 1:
        if form == "upper" and x > 0:
            # pre ends with 1 since p is odd
            return EvPeriodicWord(pre[:-1] + "0", "1")
        return EvPeriodicWord(pre, "0")
    t = _multiplicative_order_of_two(v)
    body = (p % v) * ((1 << t) - 1) // v
    return EvPeriodicWord(pre, format(body, f"0{t}b"))


def lex_max_expansion(x: Fraction) -> EvPeriodicWord:
    """The lexicographically largest binary representation of x in [0, 1)."""
    return binary_expansion(x, "lower")


def lex_min_expansion(x: Fraction) -> EvPeriodicWord:
    """The lexicographically smallest binary representation of x in (0, 1]."""
    if x == 1:
        return EvPeriodicWord("", "1")
    return binary_expansion(x, "upper")


def doubling_map(x: Fraction) -> Fraction:
    """2x mod 1 on [0, 1)."""
    x = Fraction(x)
    if not 0 <= x < 1:
        raise ValueError(f"x must lie in [0, 1), got {x}")
    y = 2 * x
    return y - 1 if y >= 1 else y


@dataclass(frozen=True)
class OrbitResult:
    """Forward orbit of a rational split at the first repeated point."""

    transient: tuple[Fraction, ...]
    cycle: tuple[Fraction, ...]

    @property
    def cycle_length(self) -> int:
        return len(self.cycle)


def orbit(x: Fraction, max_steps: int = 100_000) -> OrbitResult:
    """Orbit of x under 2x mod 1 until the first exact repeat.

    Rational orbits always close; if no repeat shows up within ``max_steps``
    a BudgetExceededError carries the transient computed so far.
    """
    x = Fraction(x)
    seen: dict[Fraction, int] = {}
    points: list[Fraction] = []
    cur = x
    for _ in range(max_steps + 1):
        if cur in seen:
            k = seen[cur]
            return OrbitResult(tuple(points[:k]), tuple(points[k:]))
        seen[cur] = len(points)
        points.append(cur)
        cur = doubling_map(cur)
    raise BudgetExceededError(
        f"orbit of {x} did not close within {max_steps} steps", partial=tuple(points)
    )
