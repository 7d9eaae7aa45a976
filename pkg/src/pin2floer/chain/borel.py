"""
Borel homology through free resolutions.

A semi-free right dg module P over the chain algebra (or its circle
subalgebra) resolving F is grown degree by degree: whenever the current
P has homology in degree d, a new generator of degree d+1 is added whose
boundary is a cycle representing the class.  Borel homology of a complex
Z is then the homology of P (x)_alg Z, whose basis is e_k (x) z and whose
differential is

    D(e_k (x) z) = sum_l e_l (x) a_lk z + e_k (x) Dz,    de_k = sum_l e_l a_lk.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .. import gf2
from ..errors import TruncationTooLow
from . import algebra as alg
from .complex import GChainComplex, act

G = "G"
S1 = "S1"

DEFAULT_MARGIN = 8


def truncation_margin() -> int:
    return int(os.environ.get("PIN2_TRUNC_MARGIN", DEFAULT_MARGIN))


def algebra_basis(group: str) -> tuple[int, ...]:
    if group == G:
        return tuple(range(alg.NBASIS))
    if group == S1:
        return alg.S1_BASIS
    raise ValueError(f"unknown group {group!r}")


@dataclass(frozen=True)
class Resolution:
    """Generators ``e_k`` with degrees and boundaries ``{l: a_lk}``."""

    group: str
    degrees: tuple[int, ...]
    boundaries: tuple[tuple[tuple[int, int], ...], ...]
    up_to: int

    def ranks(self) -> list[int]:
        """Number of generators in each degree 0..up_to."""
        out = [0] * (self.up_to + 1)
        for d in self.degrees:
            out[d] += 1
        return out

    def truncate(self, up_to: int) -> "Resolution":
        keep = sum(1 for d in self.degrees if d <= up_to)
        return Resolution(self.group, self.degrees[:keep], self.boundaries[:keep], up_to)


def _right_mul(vec: int, h: int) -> int:
    """Right multiply a vector over the basis e_k g (index 8k+g) by basis h."""
    out = 0
    for i in gf2.bits(vec):
        k, g = divmod(i, alg.NBASIS)
        p = alg.PRODUCT[g][h]
        if p is not None:
            out ^= 1 << (k * alg.NBASIS + p)
    return out


class _Growing:
    def __init__(self, group: str):
        self.group = group
        self.basis = algebra_basis(group)
        self.degrees: list[int] = []
        self.bvec: list[int] = []  # boundary of e_k as a vector over e_l g

    def add(self, deg: int, bvec: int) -> None:
        self.degrees.append(deg)
        self.bvec.append(bvec)

    def cells(self, d: int) -> list[int]:
        """Basis indices 8k+g of P in degree d."""
        out = []
        for k, dk in enumerate(self.degrees):
            e = d - dk
            if e in (0, 1):
                out.extend(k * alg.NBASIS + g for g in self.basis if alg.basis_degree(g) == e)
        return out

    def boundary(self, i: int) -> int:
        k, g = divmod(i, alg.NBASIS)
        out = _right_mul(self.bvec[k], g)
        for h in alg.terms(alg.BOUNDARY[g]):
            out ^= 1 << (k * alg.NBASIS + h)
        return out


def _build(group: str, up_to: int) -> Resolution:
    P = _Growing(group)
    P.add(0, 0)
    for d in range(up_to):
        cells = P.cells(d)
        if d == 0:
            cols = [1] * len(cells)
        else:
            pos = {c: t for t, c in enumerate(P.cells(d - 1))}
            cols = []
            for c in cells:
                v = 0
                for b in gf2.bits(P.boundary(c)):
                    v |= 1 << pos[b]
                cols.append(v)
        cycles = []
        for w in gf2.kernel(cols):
            v = 0
            for t in gf2.bits(w):
                v |= 1 << cells[t]
            cycles.append(v)
        ech = gf2.Echelon(P.boundary(c) for c in P.cells(d + 1))
        for z in cycles:
            if ech.contains(z):
                continue
            P.add(d + 1, z)
            for h in P.basis:
                if alg.basis_degree(h) == 0:
                    ech.add(_right_mul(z, h))
    bnds = []
    for v in P.bvec:
        coeff: dict[int, int] = {}
        for i in gf2.bits(v):
            k, g = divmod(i, alg.NBASIS)
            coeff[k] = coeff.get(k, 0) ^ (1 << g)
        bnds.append(tuple(sorted(coeff.items())))
    return Resolution(group, tuple(P.degrees), tuple(bnds), up_to)


@lru_cache(maxsize=None)
def _cached(group: str, up_to: int) -> Resolution:
    return _build(group, up_to)


def resolution_of_F(group: str, up_to: int) -> Resolution:
    """Free resolution of F with generators through degree ``up_to``.

    Builds are cached in blocks of 16 degrees and truncated on return, so
    every caller sees the same generators.
    """
    if up_to < 0:
        raise ValueError("up_to must be nonnegative")
    block = -(-(up_to + 1) // 16) * 16
    return _cached(group, block).truncate(up_to)


def resolution_homology(res: Resolution) -> list[int]:
    """Dimensions of H_d(P) for d = 0..up_to-1 (the last degree is not closed)."""
    P = _Growing(res.group)
    for deg, bnd in zip(res.degrees, res.boundaries):
        v = 0
        for k, a in bnd:
            for g in alg.terms(a):
                v |= 1 << (k * alg.NBASIS + g)
        P.add(deg, v)
    out = []
    for d in range(res.up_to):
        cells = P.cells(d)
        prev = {c: t for t, c in enumerate(P.cells(d - 1))} if d else {}
        cols = []
        for c in cells:
            v = 0
            for b in gf2.bits(P.boundary(c)):
                v |= 1 << prev[b]
            cols.append(v)
        ker = len(cells) - gf2.rank(cols)
        img = gf2.rank(P.boundary(c) for c in P.cells(d + 1))
        out.append(ker - img)
    return out


class _Total:
    """The complex P (x) Z in a window of raw degrees."""

    def __init__(self, Z: GChainComplex, res: Resolution):
        self.Z = Z
        self.res = res
        basis = algebra_basis(res.group)
        self.by_deg: dict[int, list[int]] = {}
        for i, deg in enumerate(Z.degrees):
            self.by_deg.setdefault(deg, []).append(i)
        self.local = {}
        for deg, idx in self.by_deg.items():
            for t, i in enumerate(idx):
                self.local[i] = t
        self.ops = [{g: act(Z, g, 1 << i) for g in basis} for i in range(Z.dim)]
        self._layout: dict[int, tuple[dict[int, int], int]] = {}

    def layout(self, d: int) -> tuple[dict[int, int], int]:
        """Offsets of the blocks e_k (x) Z_{d - deg e_k} and total size."""
        hit = self._layout.get(d)
        if hit is None:
            off, size = {}, 0
            for k, dk in enumerate(self.res.degrees):
                blk = self.by_deg.get(d - dk)
                if blk:
                    off[k] = size
                    size += len(blk)
            hit = self._layout[d] = (off, size)
        return hit

    def _place(self, d: int, k: int, zvec: int) -> int:
        off = self.layout(d)[0][k]
        out = 0
        for i in gf2.bits(zvec):
            out |= 1 << (off + self.local[i])
        return out

    def columns(self, d: int, restrict: int | None = None) -> list[int]:
        """Images of the basis of degree d in degree d-1, in layout order.

        With ``restrict`` (a mask over Z) only columns e_k (x) z with z in
        the mask are produced.
        """
        off, _ = self.layout(d)
        cols = []
        Z = self.Z
        for k, dk in enumerate(self.res.degrees):
            if k not in off:
                continue
            bnd = self.res.boundaries[k]
            for i in self.by_deg[d - dk]:
                if restrict is not None and not restrict >> i & 1:
                    continue
                v = self._place(d - 1, k, Z.D[i]) if Z.D[i] else 0
                ops = self.ops[i]
                for l, a in bnd:
                    zv = 0
                    for g in alg.terms(a):
                        zv ^= ops[g]
                    if zv:
                        v ^= self._place(d - 1, l, zv)
                cols.append(v)
        return cols

    def subspace(self, d: int, mask: int) -> list[int]:
        """Layout vectors e_k (x) z for z in ``mask`` in degree d."""
        off, _ = self.layout(d)
        out = []
        for k, dk in enumerate(self.res.degrees):
            if k not in off:
                continue
            for i in self.by_deg[d - dk]:
                if mask >> i & 1:
                    out.append(1 << (off[k] + self.local[i]))
        return out


@dataclass(frozen=True)
class BorelProfile:
    """Raw-degree Borel dimensions and fixed-part image ranks."""

    group: str
    lo: int
    dims: tuple[int, ...]
    image: tuple[int, ...]
    shift: Fraction

    def raw_degrees(self) -> range:
        return range(self.lo, self.lo + len(self.dims))

    def dims_by_degree(self) -> dict[Fraction, int]:
        return {Fraction(r) - self.shift: n for r, n in zip(self.raw_degrees(), self.dims)}


def _profile(Z: GChainComplex, group: str, raw_hi: int, margin: int) -> BorelProfile:
    if margin < 4:
        raise TruncationTooLow(f"margin {margin} is too small to check 4-periodicity")
    lo = min(Z.degrees) if Z.dim else 0
    top = raw_hi + margin
    res = resolution_of_F(group, max(0, top - lo + 1))
    T = _Total(Z, res)
    dims, image = [], []
    cols_next = T.columns(lo)
    for d in range(lo, top + 1):
        cols_d = cols_next
        cols_next = T.columns(d + 1)
        size = T.layout(d)[1]
        bech = gf2.Echelon(cols_next)
        rb = len(bech)
        dims.append(size - gf2.rank(cols_d) - rb)
        if Z.fixed:
            sub = T.subspace(d, Z.fixed)
            sub_cols = T.columns(d, restrict=Z.fixed)
            cycles = []
            for w in gf2.kernel(sub_cols):
                v = 0
                for t in gf2.bits(w):
                    v ^= sub[t]
                cycles.append(v)
            image.append(sum(1 for z in cycles if bech.add(z)))
        else:
            image.append(0)
    prof = BorelProfile(group, lo, tuple(dims), tuple(image), Z.degree_shift)
    start = raw_hi - lo
    tail = image[start:]
    if any(tail[t] != tail[t + 4] for t in range(len(tail) - 4)):
        raise TruncationTooLow(
            f"{group} image profile not periodic on raw degrees [{raw_hi}, {top}]: {tail}"
        )
    return prof


def borel_profile(Z: GChainComplex, group: str, up_to, margin: int | None = None) -> BorelProfile:
    """Borel dimensions and fixed-part image through reported degree ``up_to``.

    The resolution is built ``margin`` degrees further and the image
    profile must be 4-periodic on that window, otherwise TruncationTooLow.
    """
    margin = truncation_margin() if margin is None else margin
    raw_hi = Fraction(up_to) + Z.degree_shift
    raw_hi = int(raw_hi // 1)
    raw_hi = max(raw_hi, max(Z.degrees, default=0))
    return _profile(Z, group, raw_hi, margin)


def borel_dims(Z: GChainComplex, group: str, up_to, margin: int | None = None) -> dict[Fraction, int]:
    """Degreewise Borel homology dimensions, keyed by reported degree <= up_to."""
    prof = borel_profile(Z, group, up_to, margin)
    return {deg: n for deg, n in prof.dims_by_degree().items() if deg <= up_to}


def fixed_level(Z: GChainComplex) -> int:
    """Degree of the reduced homology of the fixed subcomplex."""
    idx = Z.fixed_indices()
    if not idx:
        raise ValueError("complex has empty fixed part")
    pos = {i: t for t, i in enumerate(idx)}
    by_deg: dict[int, list[int]] = {}
    for i in idx:
        by_deg.setdefault(Z.degrees[i], []).append(i)
    levels = []
    for deg, cells in by_deg.items():
        cols = []
        for i in cells:
            v = 0
            for b in gf2.bits(Z.D[i]):
                v |= 1 << pos[b]
            cols.append(v)
        ker = len(cells) - gf2.rank(cols)
        img = gf2.rank(
            sum(1 << pos[b] for b in gf2.bits(Z.D[i])) for i in by_deg.get(deg + 1, [])
        )
        if ker - img:
            levels.append((deg, ker - img))
    if len(levels) != 1 or levels[0][1] != 1:
        raise ValueError(f"fixed part is not a homology sphere: {levels}")
    return levels[0][0]


@dataclass(frozen=True)
class ABCProfile:
    a: int
    b: int
    c: int
    alpha: Fraction
    beta: Fraction
    gamma: Fraction


def abc_profile(Z: GChainComplex, up_to=None, margin: int | None = None) -> ABCProfile:
    """(a, b, c) from the image of the fixed part, then (alpha, beta, gamma).

    ``up_to`` is a raw degree bound for the search window; the default is
    four past the top degree of Z, where the image is already periodic.
    """
    level = fixed_level(Z)
    hi = max(Z.degrees) + 4 if up_to is None else int(up_to)
    hi = max(hi, level + 4)
    margin = truncation_margin() if margin is None else margin
    prof = _profile(Z, G, hi, margin)
    found = {}
    for r, rank in zip(prof.raw_degrees(), prof.image):
        res = (r - level) % 4
        if rank and res in (0, 1, 2) and res not in found:
            found[res] = r
    if len(found) < 3:
        raise TruncationTooLow(f"no image found in some residue class up to raw degree {hi + margin}")
    a, b, c = found[0], found[1] - 1, found[2] - 2
    corr = Fraction(Z.m, 2) + 2 * Fraction(Z.n)
    return ABCProfile(a, b, c, Fraction(a, 2) - corr, Fraction(b, 2) - corr, Fraction(c, 2) - corr)
