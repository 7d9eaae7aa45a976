"""
Cross-check of the closed-form pipeline against Borel homology of the
standard complex.

A case passes when the S1 and G Borel dimensions agree degreewise with
forward_s1 and compute_swfhg through the requested degree, and the
(alpha, beta, gamma) read off the fixed-point image agree with
compute_invariants.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import InputError, TruncationTooLow
from ..modules import GradedModule, rank_at
from ..pipeline import HFDecomposition, compute_invariants, compute_swfhg, forward_s1, validate
from . import borel
from .complex import build_standard

MAX_PAIRS = 3
MAX_LENGTH = 6
MAX_J_TOWERS = 3


def random_decomposition(rng: random.Random) -> HFDecomposition:
    """A valid decomposition with N <= 3, n_i <= 6, even s and at most 3 J towers."""
    s = 2 * rng.randint(-3, 3)
    N = rng.randint(0, MAX_PAIRS)
    while True:
        ds = sorted(rng.sample(range(-11, 2, 2), N))
        # choose the tops d_i + 2 n_i from the last pair backwards
        tops, ok = [], True
        for d in reversed(ds):
            lo = max(d + 2, tops[-1] + 2 if tops else 3)
            hi = d + 2 * MAX_LENGTH
            if lo > hi:
                ok = False
                break
            tops.append(rng.randrange(lo, hi + 1, 2))
        if ok:
            break
    pairs = tuple((d, (e - d) // 2) for d, e in zip(ds, reversed(tops)))
    validate(HFDecomposition(s, pairs))
    towers = tuple((rng.randrange(-9, 2, 2), rng.randint(1, 3)) for _ in range(rng.randint(0, MAX_J_TOWERS)))
    return HFDecomposition(s, pairs, GradedModule(2, towers))


def standard_complex(dec: HFDecomposition):
    validate(dec)
    return build_standard(dec.s, dec.pairs, dec.J.finite)


@dataclass
class CaseResult:
    dec: HFDecomposition
    ok: bool
    mismatches: list[str] = field(default_factory=list)
    dims_g: dict[Fraction, int] = field(default_factory=dict)

    def swfhg_window(self) -> str:
        return " ".join(f"{d}:{n}" for d, n in sorted(self.dims_g.items()) if n)


def _compare_dims(label: str, oracle: dict[Fraction, int], M: GradedModule, up_to: Fraction) -> list[str]:
    out = []
    for d, n in sorted(oracle.items()):
        want = rank_at(M, d)
        if n != want:
            out.append(f"{label} dim in degree {d}: oracle {n}, pipeline {want}")
    lo = min(oracle, default=None)
    bottom = M.min_degree()
    if lo is not None and bottom is not None and bottom < lo:
        out.append(f"{label}: pipeline has degree {bottom} below the complex")
    return out


def check_decomposition(dec: HFDecomposition, max_degree: int = 40, margin: int | None = None) -> CaseResult:
    """Compare oracle and pipeline on one decomposition through ``max_degree``."""
    Z = standard_complex(dec)
    up_to = Fraction(max_degree)
    mismatches = []
    try:
        s1 = borel.borel_dims(Z, borel.S1, up_to, margin)
        g = borel.borel_dims(Z, borel.G, up_to, margin)
        abc = borel.abc_profile(Z, margin=margin)
    except TruncationTooLow as exc:
        return CaseResult(dec, False, [f"truncation: {exc}"])
    mismatches += _compare_dims("S1", s1, forward_s1(dec), up_to)
    mismatches += _compare_dims("G", g, compute_swfhg(dec).base, up_to)
    inv = compute_invariants(dec)
    got = (abc.alpha, abc.beta, abc.gamma)
    want = (inv.alpha, inv.beta, inv.gamma)
    if got != want:
        mismatches.append(f"(alpha, beta, gamma): oracle {tuple(map(str, got))}, pipeline {tuple(map(str, want))}")
    return CaseResult(dec, not mismatches, mismatches, g)


def seeded_cases(cases: int, seed: int) -> list[HFDecomposition]:
    rng = random.Random(seed)
    return [random_decomposition(rng) for _ in range(cases)]
