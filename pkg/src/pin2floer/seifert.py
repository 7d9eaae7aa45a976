"""
Seifert front end: Seifert invariants -> tau function -> graded root -> HF+.

For a negative Seifert integral homology sphere with normalized invariants
(b; (b_1, a_1), ..., (b_k, a_k)), 0 < b_i < a_i, the tau function is

    tau(0) = 0,   tau(n+1) = tau(n) + 1 - b n - sum_i ceil(n b_i / a_i).

Its sublevel sets on the half line form the graded root of the orientation
reversal.  Elder-rule persistence of the sublevel sets gives HF+(-Y) up to
the grading constant -(K^2 + #vertices)/4 of the star-shaped plumbing, and
duality gives HF+(Y).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, prod
from typing import Sequence

from .errors import DivergentTau, NotCoprime, PositiveFibration, UnsupportedInput
from .modules import GradedModule
from .pipeline import HFDecomposition, extract_parameters


@dataclass(frozen=True)
class SeifertInvariants:
    b: int
    fibers: tuple[tuple[int, int], ...]

    def __post_init__(self):
        fibers = tuple((int(bi), int(ai)) for bi, ai in self.fibers)
        for bi, ai in fibers:
            if ai < 1:
                raise UnsupportedInput(f"fiber order {ai} must be positive")
            if gcd(bi, ai) != 1:
                raise NotCoprime(f"gcd({bi}, {ai}) != 1")
        object.__setattr__(self, "b", int(self.b))
        object.__setattr__(self, "fibers", fibers)

    @property
    def degree(self) -> Fraction:
        return self.b + sum((Fraction(bi, ai) for bi, ai in self.fibers), Fraction(0))

    @property
    def negative(self) -> bool:
        return self.degree < 0

    def normalized(self) -> "SeifertInvariants":
        """Same manifold with 0 < b_i < a_i and unit fibers folded into b."""
        b = self.b
        fibers = []
        for bi, ai in self.fibers:
            q, r = divmod(bi, ai)
            b += q
            if ai > 1:
                fibers.append((r, ai))
        return SeifertInvariants(b, tuple(fibers))

    def to_json(self) -> dict:
        return {"b": self.b, "fibers": [list(f) for f in self.fibers]}

    @classmethod
    def from_json(cls, obj: dict) -> "SeifertInvariants":
        return cls(int(obj["b"]), tuple(tuple(f) for f in obj["fibers"]))


def brieskorn_normalize(a: Sequence[int]) -> SeifertInvariants:
    """Seifert invariants of the negative Brieskorn sphere with fibers ``a``.

    b_i is the inverse residue of -(A/a_i) mod a_i with A the product; then
    b + sum b_i/a_i = -1/A.
    """
    a = [int(x) for x in a]
    if any(x < 1 for x in a):
        raise UnsupportedInput(f"fiber orders must be positive: {a}")
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            if gcd(a[i], a[j]) != 1:
                raise NotCoprime(f"{a[i]} and {a[j]} are not coprime")
    A = prod(a)
    fibers = []
    for ai in a:
        if ai == 1:
            continue
        fibers.append(((-pow(A // ai, -1, ai)) % ai, ai))
    b = Fraction(-1 - sum(bi * (A // ai) for bi, ai in fibers), A)
    assert b.denominator == 1
    return SeifertInvariants(int(b), tuple(fibers))


def _continued_fraction(a: int, w: int) -> list[int]:
    """a/w = k_1 - 1/(k_2 - 1/(...)) with every k_j >= 2."""
    ks = []
    while w:
        k = -(-a // w)
        ks.append(k)
        a, w = w, k * w - a
    return ks


def plumbing_legs(inv: SeifertInvariants) -> tuple[int, list[list[int]]]:
    """Central weight and leg weights of the star-shaped plumbing."""
    inv = inv.normalized()
    return inv.b, [[-k for k in _continued_fraction(ai, bi)] for bi, ai in inv.fibers]


def k_squared_plus_s(inv: SeifertInvariants) -> Fraction:
    """K^2 + #vertices for the canonical class of the plumbing.

    K solves the adjunction relations Q K = k with k_v = -w_v - 2; on a star
    the system is solved leg by leg from the leaves inward.
    """
    center, legs = plumbing_legs(inv)
    # each leg vertex x_t = p_t + q_t x_{t-1}, with x_0 the center
    solved = []
    acc_p, acc_q = Fraction(0), Fraction(0)
    for leg in legs:
        p, q = Fraction(0), Fraction(0)
        coeffs = []
        for w in reversed(leg):
            k = -w - 2
            denom = w + q
            if denom == 0:
                raise UnsupportedInput("degenerate plumbing form")
            p, q = (k - p) / denom, Fraction(-1) / denom
            coeffs.append((p, q))
        coeffs.reverse()
        solved.append((leg, coeffs))
        if coeffs:
            acc_p += coeffs[0][0]
            acc_q += coeffs[0][1]
    k0 = -center - 2
    denom = center + acc_q
    if denom == 0:
        raise UnsupportedInput("degenerate plumbing form")
    x0 = (k0 - acc_p) / denom
    ksq = k0 * x0
    nverts = 1
    for leg, coeffs in solved:
        prev = x0
        for w, (p, q) in zip(leg, coeffs):
            x = p + q * prev
            ksq += (-w - 2) * x
            prev = x
            nverts += 1
    return ksq + nverts


def _check_integral_negative(inv: SeifertInvariants) -> SeifertInvariants:
    inv = inv.normalized()
    e = inv.degree
    if e > 0:
        raise PositiveFibration(f"degree {e} is positive")
    if e == 0:
        raise UnsupportedInput("degree zero: not a rational homology sphere")
    orders = [ai for _, ai in inv.fibers]
    for i in range(len(orders)):
        for j in range(i + 1, len(orders)):
            if gcd(orders[i], orders[j]) != 1:
                raise UnsupportedInput("fiber orders are not pairwise coprime")
    if e * prod(orders) != -1:
        raise UnsupportedInput(f"degree {e} does not give an integral homology sphere")
    return inv


@dataclass
class TauFunction:
    """Lazily evaluated tau with memoized values.

    Attributes:
        inv: normalized Seifert invariants, or None for a tau given by values.
        horizon: index past which tau is strictly increasing.
        normalization: grading constant -(K^2 + s)/4 for HF+(-Y).
    """

    inv: SeifertInvariants | None
    horizon: int
    normalization: Fraction = Fraction(0)
    _values: list[int] = field(default_factory=lambda: [0], repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    @classmethod
    def from_values(cls, values: Sequence[int], normalization=0) -> "TauFunction":
        values = [int(v) for v in values]
        if not values or values[0] != 0:
            raise DivergentTau("tau must start at 0")
        t = cls(None, len(values) - 1, Fraction(normalization))
        t._values = values
        return t

    def delta(self, n: int) -> int:
        if self.inv is None:
            return self.value(n + 1) - self.value(n)
        b = self.inv.b
        return 1 - b * n - sum(-(-n * bi // ai) for bi, ai in self.inv.fibers)

    def value(self, n: int) -> int:
        vals = self._values
        if n < len(vals):
            return vals[n]
        if self.inv is None:
            raise DivergentTau(f"tau given by values only up to {len(vals) - 1}")
        with self._lock:
            while len(vals) <= n:
                k = len(vals) - 1
                vals.append(vals[-1] + self.delta(k))
        return vals[n]

    def values(self) -> list[int]:
        """tau(0..horizon)."""
        self.value(self.horizon)
        return self._values[: self.horizon + 1]


def tau_function(inv: SeifertInvariants, horizon: int | None = None) -> TauFunction:
    """Tau function of a negative Seifert integral homology sphere.

    Beyond (k-1) * prod(a_i) every increment is at least 1, so that is the
    default horizon.
    """
    inv = _check_integral_negative(inv)
    A = prod(ai for _, ai in inv.fibers) if inv.fibers else 1
    k = len(inv.fibers)
    if horizon is None:
        horizon = max(k - 1, 1) * A + 2
    return TauFunction(inv, horizon, -k_squared_plus_s(inv) / 4)


def extrema(values: Sequence[int]) -> tuple[list[int], list[int]]:
    """Local minimum and maximum values along a tau sequence.

    Plateaus are collapsed; the result alternates min, max, ..., min and
    ends at the last local minimum before tau increases for good.
    """
    seq = [values[0]]
    for v in values[1:]:
        if v != seq[-1]:
            seq.append(v)
    mins, maxs = [], []
    for i, v in enumerate(seq):
        left = seq[i - 1] if i else None
        right = seq[i + 1] if i + 1 < len(seq) else None
        if (left is None or left > v) and (right is None or right > v):
            mins.append(v)
        elif left is not None and right is not None and left < v > right:
            maxs.append(v)
    if len(seq) > 1 and seq[-1] < seq[-2]:
        raise DivergentTau("tau does not end increasing within the horizon")
    return mins, maxs


def persistence(values: Sequence[int]) -> tuple[int, list[tuple[int, int]]]:
    """Elder-rule 0-dimensional persistence of sublevel sets of a path.

    Returns the global minimum and the finite bars (birth, death).
    """
    mins, maxs = extrema(values)
    # merge adjacent basins in order of increasing separating maximum
    parent = list(range(len(mins)))
    low = list(mins)

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    bars = []
    for level, i in sorted((m, i) for i, m in enumerate(maxs)):
        a, b = find(i), find(i + 1)
        young, old = (a, b) if (low[a], a) > (low[b], b) else (b, a)
        if level > low[young]:
            bars.append((low[young], level))
        parent[young] = old
    return min(mins), sorted(bars)


def hf_minus(tau: TauFunction) -> GradedModule:
    """HF+ of the orientation reversal, read off the sublevel sets of tau."""
    c = tau.normalization
    m, bars = persistence(tau.values())
    return GradedModule(2, tuple((2 * b + c, e - b) for b, e in bars), (2 * m + c,))


def dualize(M: GradedModule) -> GradedModule:
    """HF+(Y) from HF+(-Y): bottom d of the tower goes to -d and T_e(m) to T_{-e-2m+1}(m)."""
    return GradedModule(2, tuple((-e - 2 * n + 1, n) for e, n in M.finite), tuple(-b for b in M.infinite))


def hf_from_tau(tau: TauFunction) -> tuple[HFDecomposition, GradedModule]:
    """Decomposition and full HF+(Y) module from a tau function."""
    full = dualize(hf_minus(tau))
    return extract_parameters(full), full


def d_invariant(tau: TauFunction) -> Fraction:
    m, _ = persistence(tau.values())
    return -(2 * m + tau.normalization)


@dataclass(frozen=True)
class GradedRoot:
    """Finite part of a graded root.

    Vertex ``v`` is the component of the sublevel set at level ``chi[v]``
    spanning the local minima ``span[v]`` (inclusive index range).  The
    infinite stem above the top vertex is implicit.
    """

    chi: tuple[int, ...]
    span: tuple[tuple[int, int], ...]
    parent: tuple[int | None, ...]
    iota: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.chi)

    def leaves(self) -> list[int]:
        has_child = {p for p in self.parent if p is not None}
        return [v for v in range(len(self)) if v not in has_child]


def graded_root(values: Sequence[int]) -> GradedRoot:
    """Graded root of a tau sequence, with the reflection involution."""
    mins, maxs = extrema(values)
    k = len(mins) - 1
    if mins != mins[::-1] or maxs != maxs[::-1]:
        raise UnsupportedInput("extremum sequence is not symmetric")
    top = max(maxs) if maxs else mins[0]
    chi, span, index = [], [], {}
    for level in range(min(mins), top + 1):
        start = 0
        for i in range(k + 1):
            closing = i == k or maxs[i] > level
            if closing:
                block = [t for t in range(start, i + 1) if mins[t] <= level]
                if block:
                    key = (level, block[0], block[-1])
                    index[key] = len(chi)
                    chi.append(level)
                    span.append((block[0], block[-1]))
                start = i + 1
    parent: list[int | None] = []
    for v, (lvl, (lo, hi)) in enumerate(zip(chi, span)):
        p = None
        for (l2, lo2, hi2), u in index.items():
            if l2 == lvl + 1 and lo2 <= lo and hi <= hi2:
                p = u
                break
        parent.append(p)
    iota = [index[(lvl, k - hi, k - lo)] for lvl, (lo, hi) in zip(chi, span)]
    return GradedRoot(tuple(chi), tuple(span), tuple(parent), tuple(iota))


def is_projective_type(root: GradedRoot) -> tuple[bool, int]:
    """Whether the lowest invariant vertex reaches a global minimum by descending.

    Returns the flag and chi(v) - chi(w) with w a global-minimum vertex.
    """
    invariant = [v for v in range(len(root)) if root.iota[v] == v]
    v = min(invariant, key=lambda u: root.chi[u])
    low = min(root.chi)
    children: dict[int, list[int]] = {}
    for u, p in enumerate(root.parent):
        if p is not None:
            children.setdefault(p, []).append(u)
    stack, reached = [v], False
    while stack:
        u = stack.pop()
        if root.chi[u] == low:
            reached = True
            break
        stack.extend(children.get(u, []))
    return reached, root.chi[v] - low


@dataclass(frozen=True)
class SeifertResult:
    inv: SeifertInvariants
    decomposition: HFDecomposition
    hf: GradedModule
    root: GradedRoot
    projective: bool
    delta_minus_beta: int


def analyze(inv: SeifertInvariants) -> SeifertResult:
    """Run the whole front end on one Seifert space."""
    tau = tau_function(inv)
    dec, full = hf_from_tau(tau)
    root = graded_root(tau.values())
    flag, gap = is_projective_type(root)
    return SeifertResult(tau.inv, dec, full, root, flag, gap)


def analyze_brieskorn(a: Sequence[int]) -> SeifertResult:
    return analyze(brieskorn_normalize(a))
