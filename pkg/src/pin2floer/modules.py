"""
Graded modules over F[U] (step 2) and F[v] (step 4) that split as sums of towers.

A finite tower with bottom d and length n is supported in degrees
d, d + step, ..., d + step (n - 1).  An infinite tower has no top.  Modules
are stored sparsely as sorted multisets of (bottom, length) pairs with
exact rational bottoms.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import InvalidStep, InvalidTower

Number = Union[int, Fraction, str]

INFINITE = None


def grading(x: Number) -> Fraction:
    """Exact rational grading from an int, Fraction or ``"p/q"`` string."""
    if isinstance(x, float):
        raise TypeError("gradings must be exact, got float")
    return Fraction(x)


def fmt_grading(x: Fraction) -> str:
    """JSON form of a grading, always ``"p/q"``."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _pretty(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True, order=True)
class Tower:
    bottom: Fraction
    length: int | None = INFINITE

    def __post_init__(self):
        object.__setattr__(self, "bottom", grading(self.bottom))
        if self.length is not None and (int(self.length) != self.length or self.length < 1):
            raise InvalidTower(f"tower length must be a positive integer, got {self.length}")

    @property
    def infinite(self) -> bool:
        return self.length is None

    def top(self, step: int) -> Fraction | None:
        return None if self.length is None else self.bottom + step * (self.length - 1)

    def contains(self, d: Fraction, step: int) -> bool:
        k = (grading(d) - self.bottom) / step
        if k.denominator != 1 or k < 0:
            return False
        return self.length is None or k < self.length


@dataclass(frozen=True)
class GradedModule:
    """Direct sum of towers, in canonical sorted form.

    Attributes:
        step: 2 for F[U]-modules, 4 for F[v]-modules.
        finite: sorted (bottom, length) pairs with multiplicity.
        infinite: sorted bottoms of the infinite towers.
    """

    step: int
    finite: tuple[tuple[Fraction, int], ...] = ()
    infinite: tuple[Fraction, ...] = ()

    def __post_init__(self):
        if self.step not in (2, 4):
            raise InvalidStep(f"step must be 2 or 4, got {self.step}")
        fin = []
        for b, n in self.finite:
            if int(n) != n:
                raise InvalidTower(f"tower length must be an integer, got {n}")
            n = int(n)
            if n < 0:
                raise InvalidTower(f"negative tower length {n}")
            if n:
                fin.append((grading(b), n))
        object.__setattr__(self, "finite", tuple(sorted(fin)))
        object.__setattr__(self, "infinite", tuple(sorted(grading(b) for b in self.infinite)))
        bottoms = [b for b, _ in self.finite] + list(self.infinite)
        if bottoms and any((b - bottoms[0]).denominator != 1 for b in bottoms):
            raise InvalidTower("tower bottoms must differ by integers")

    @classmethod
    def zero(cls, step: int) -> "GradedModule":
        return cls(step)

    @classmethod
    def from_towers(cls, step: int, towers: Iterable[Tower]) -> "GradedModule":
        towers = list(towers)
        return cls(
            step,
            tuple((t.bottom, t.length) for t in towers if not t.infinite),
            tuple(t.bottom for t in towers if t.infinite),
        )

    @classmethod
    def tower(cls, step: int, bottom: Number, length: int | None = INFINITE, mult: int = 1) -> "GradedModule":
        if length is None:
            return cls(step, (), (grading(bottom),) * mult)
        return cls(step, ((grading(bottom), length),) * mult)

    def towers(self) -> list[Tower]:
        return [Tower(b, n) for b, n in self.finite] + [Tower(b) for b in self.infinite]

    def __add__(self, other: "GradedModule") -> "GradedModule":
        if not isinstance(other, GradedModule):
            return NotImplemented
        if other.step != self.step:
            raise InvalidStep("cannot add modules with different steps")
        return GradedModule(self.step, self.finite + other.finite, self.infinite + other.infinite)

    def __mul__(self, k: int) -> "GradedModule":
        return GradedModule(self.step, self.finite * k, self.infinite * k)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.finite or self.infinite)

    def is_zero(self) -> bool:
        return not self

    def counts(self) -> Counter:
        return Counter(self.finite)

    def min_degree(self) -> Fraction | None:
        bottoms = [b for b, _ in self.finite] + list(self.infinite)
        return min(bottoms) if bottoms else None

    def max_finite_degree(self) -> Fraction | None:
        tops = [b + self.step * (n - 1) for b, n in self.finite] + list(self.infinite)
        return max(tops) if tops else None

    def dims(self, lo: Number, hi: Number) -> dict[Fraction, int]:
        """Degreewise dimensions on the integer-spaced window [lo, hi]."""
        lo, hi = grading(lo), grading(hi)
        out = {}
        d = lo
        while d <= hi:
            out[d] = rank_at(self, d)
            d += 1
        return out

    def __str__(self) -> str:
        return pretty(self)

    def to_json(self) -> dict:
        return {
            "step": self.step,
            "towers": [{"bottom": fmt_grading(b), "len": n} for b, n in self.finite],
            "infinite": [{"bottom": fmt_grading(b)} for b in self.infinite],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "GradedModule":
        return cls(
            int(obj["step"]),
            tuple((grading(t["bottom"]), int(t["len"])) for t in obj.get("towers", ())),
            tuple(grading(t["bottom"]) for t in obj.get("infinite", ())),
        )


def shift(M: GradedModule, k: Number) -> GradedModule:
    """M[k]: every bottom decreases by k."""
    k = grading(k)
    return GradedModule(M.step, tuple((b - k, n) for b, n in M.finite), tuple(b - k for b in M.infinite))


def rank_at(M: GradedModule, d: Number) -> int:
    """F2-dimension of M in degree d."""
    d = grading(d)
    total = 0
    for b, n in M.finite:
        k = (d - b) / M.step
        if k.denominator == 1 and 0 <= k < n:
            total += 1
    for b in M.infinite:
        k = (d - b) / M.step
        if k.denominator == 1 and k >= 0:
            total += 1
    return total


def restrict_to_v(M: GradedModule) -> GradedModule:
    """Restriction along F[v] -> F[U], v = U^2.

    T_d(n) becomes V_d(floor((n+1)/2)) + V_{d+2}(floor(n/2)) and an infinite
    T_d becomes V_d + V_{d+2}.
    """
    if M.step != 2:
        raise InvalidStep("restriction needs a step-2 module")
    fin = []
    for b, n in M.finite:
        fin.append((b, (n + 1) // 2))
        fin.append((b + 2, n // 2))
    inf = [b for b in M.infinite] + [b + 2 for b in M.infinite]
    return GradedModule(4, tuple(fin), tuple(inf))


def pretty(M: GradedModule) -> str:
    """Human-readable sum such as ``T+_0 + T+_-1(1)``."""
    sym = "T+" if M.step == 2 else "V+"
    parts = [f"{sym}_{_pretty(b)}" for b in M.infinite]
    for (b, n), mult in sorted(Counter(M.finite).items()):
        s = f"{sym}_{_pretty(b)}({n})"
        parts.append(s if mult == 1 else f"{s}^{mult}")
    return " + ".join(parts) if parts else "0"
