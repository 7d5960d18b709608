"""Classifier for small Seifert fibered spaces over the sphere.

Decides which necessary conditions a space with three exceptional fibers
satisfies for containing an incompressible Dyck's surface (the closed
non-orientable surface of Euler characteristic -1), and enumerates the
Euler-characteristic solutions of the pseudohorizontal case.  Verdicts are
one-directional: the tool never asserts that such a surface exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional


@dataclass(frozen=True)
class SfsDescriptor:
    """S^2(s1/t1, s2/t2, s3/t3); fiber orders are the |t_i|."""

    slopes: tuple[tuple[int, int], ...]  # (s_i, t_i), t_i >= 1, reduced

    def __post_init__(self) -> None:
        if len(self.slopes) != 3:
            raise ValueError("need exactly three filling slopes")
        for s, t in self.slopes:
            if t < 1:
                raise ValueError("slope denominators must be positive")
            if gcd(s, t) != 1:
                raise ValueError(f"slope {s}/{t} is not reduced")

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(abs(t) for _s, t in self.slopes)

    @property
    def exceptional_orders(self) -> tuple[int, ...]:
        return tuple(o for o in self.orders if o >= 2)

    @staticmethod
    def parse(text: str) -> "SfsDescriptor":
        """Parse a descriptor like '-1/2,1/6,2/7'."""
        slopes = []
        for part in text.split(","):
            part = part.strip()
            if "/" in part:
                num, den = part.split("/", 1)
                slopes.append((int(num), int(den)))
            else:
                slopes.append((int(part), 1))
        return SfsDescriptor(tuple(slopes))


@dataclass(frozen=True)
class HorizontalSolution:
    """A solution of -1 = -lam + lam/p1 + lam/p2 + r with r <= 0."""

    r: int
    p1: int
    p2: int
    lam: int

    def __post_init__(self) -> None:
        if self.r > 0 or self.p1 < 2 or self.p2 < 2 or self.lam < 2:
            raise ValueError("out of the governed ranges")
        if self.lam % self.p1 or self.lam % self.p2:
            raise ValueError("lam must be a common multiple of p1 and p2")
        if -self.lam + self.lam // self.p1 + self.lam // self.p2 + self.r != -1:
            raise ValueError("not a solution of the Euler equation")

    def to_dict(self) -> dict:
        return {"r": self.r, "p1": self.p1, "p2": self.p2, "lam": self.lam}


def enumerate_horizontal_solutions(
    p_max: int, lam_max: int
) -> tuple[HorizontalSolution, ...]:
    """All solutions with 2 <= p1 <= p2 <= p_max, 2 <= lam <= lam_max.

    r is determined by the other three, so the sweep is finite; r > 0 is
    rejected (r sums Euler characteristics of one-sided surfaces).
    """
    if p_max < 2 or lam_max < 2:
        raise ValueError("bounds must be >= 2")
    out = []
    for p1 in range(2, p_max + 1):
        for p2 in range(p1, p_max + 1):
            for lam in range(2, lam_max + 1):
                if lam % p1 or lam % p2:
                    continue
                r = -1 + lam - lam // p1 - lam // p2
                if r > 0:
                    continue
                out.append(HorizontalSolution(r, p1, p2, lam))
    return tuple(sorted(out, key=lambda s: (s.p1, s.p2, s.lam)))


@dataclass(frozen=True)
class CrosscapResult:
    verdict: str  # "two" | "not-two" | "mobius"
    k: int
    l: int


def crosscap_is_two(k: int, l: int) -> CrosscapResult:
    """Whether the one-sided surface with boundary the (2k,l)-curve has
    crosscap number two: after normalization, true iff k is even.

    Normalization: reduce l mod 2k, then replace l by min(l, 2k-l); the
    leftover case k = l is only possible at k = 1, the Mobius-band curve
    (crosscap number one), reported as a distinguished verdict.
    """
    if k <= 0:
        raise ValueError("k must be positive")
    l = l % (2 * k)
    l = min(l, 2 * k - l) if l else 0
    if gcd(2 * k, l) != 1:
        raise ValueError(f"({2*k},{l}) is not a primitive curve")
    if k == l:
        return CrosscapResult("mobius", k, l)
    return CrosscapResult("two" if k % 2 == 0 else "not-two", k, l)


@dataclass(frozen=True)
class Verdict:
    excluded: bool
    clauses: tuple[str, ...]

    def to_dict(self) -> dict:
        return {"excluded": self.excluded, "clauses": list(self.clauses)}


def classify_dyck(m: SfsDescriptor) -> Verdict:
    """Which of the necessary clauses (A)-(E) the space satisfies.

    (A) each slope has the form 2/p with p odd (tested on the slope, not
        just the order); (B) some order 2 and another a multiple of 4;
    (C) orders 2 and 3 both present; (D) two orders equal 2; (E) two
    orders equal 3.  No clause -> Excluded: the space cannot contain an
    incompressible Dyck's surface.
    """
    orders = m.exceptional_orders
    if len(orders) != 3:
        raise ValueError("classification needs three exceptional fibers")
    clauses = []
    if all(abs(s) == 2 and t % 2 == 1 for s, t in m.slopes):
        clauses.append("A")
    if any(o == 2 for o in orders) and any(
        o % 4 == 0 for o in orders if o != 2
    ):
        clauses.append("B")
    if any(o == 2 for o in orders) and any(o == 3 for o in orders):
        clauses.append("C")
    if sum(1 for o in orders if o == 2) >= 2:
        clauses.append("D")
    if sum(1 for o in orders if o == 3) >= 2:
        clauses.append("E")
    return Verdict(excluded=not clauses, clauses=tuple(clauses))
