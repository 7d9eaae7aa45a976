"""
Finite chain complexes over the Pin(2) chain algebra.

A complex is stored as a plain F2 complex: a graded basis and three
operators given by column images, ``J`` (degree 0), ``S`` (degree +1) and
``D`` (degree -1).  Module linearity is then a set of matrix identities
that ``check_relations`` verifies.  Free summands additionally carry a
record of their eight translates ``g * x`` so that products can be formed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .. import gf2
from ..errors import InputError, RelationError
from . import algebra as alg

Rep = str  # "R_TILDE" or "H"
R_TILDE = "R_TILDE"
H = "H"


@dataclass(frozen=True)
class GChainComplex:
    """Graded F2 basis with j, s and differential operators.

    Attributes:
        names: basis labels, used by the debug dump.
        degrees: integer degree of each basis element.
        J, S, D: column images of the three operators.
        fixed: bit mask of the basis elements forming the fixed subcomplex.
        free: one 8-tuple of basis indices per free generator, giving the
            translate ``g * x`` at position ``g`` of the algebra basis.
        m, n: desuspension counts for the real and quaternionic
            representations; reported degrees are raw degrees minus
            ``m + 4n``.
    """

    names: tuple[str, ...]
    degrees: tuple[int, ...]
    J: tuple[int, ...]
    S: tuple[int, ...]
    D: tuple[int, ...]
    fixed: int = 0
    free: tuple[tuple[int, ...], ...] = ()
    m: int = 0
    n: Fraction = field(default_factory=Fraction)

    @property
    def dim(self) -> int:
        return len(self.degrees)

    @property
    def degree_shift(self) -> Fraction:
        return Fraction(self.m) + 4 * Fraction(self.n)

    def fixed_indices(self) -> list[int]:
        return list(gf2.bits(self.fixed))

    def check_relations(self) -> list[str]:
        """Return the names of violated relations (empty when all hold)."""
        n = self.dim
        ident = [1 << i for i in range(n)]
        J, S, D = self.J, self.S, self.D
        J2 = gf2.compose(J, J)
        J3 = gf2.compose(J, J2)
        bad = []
        if gf2.compose(J2, J2) != ident:
            bad.append("J^4 = 1")
        if any(gf2.compose(S, S)):
            bad.append("S^2 = 0")
        if gf2.compose(S, J) != gf2.compose(J3, S):
            bad.append("SJ = J^3 S")
        if any(gf2.compose(D, D)):
            bad.append("D^2 = 0")
        if gf2.compose(D, J) != gf2.compose(J, D):
            bad.append("DJ = JD")
        lhs = gf2.compose(D, S)
        rhs = [a ^ b ^ c for a, b, c in zip(gf2.compose(S, D), ident, J2)]
        if lhs != rhs:
            bad.append("DS = SD + 1 + J^2")
        for i in self.fixed_indices():
            if S[i]:
                bad.append("S = 0 on fixed part")
                break
            if J2[i] != 1 << i:
                bad.append("J^2 = 1 on fixed part")
                break
            if D[i] & ~self.fixed or J[i] & ~self.fixed:
                bad.append("fixed part is a subcomplex")
                break
        for i in range(n):
            for op, step in ((J, 0), (S, 1), (D, -1)):
                for k in gf2.bits(op[i]):
                    if self.degrees[k] != self.degrees[i] + step:
                        bad.append("operator degrees")
                        break
        return sorted(set(bad))

    def assert_relations(self) -> None:
        bad = self.check_relations()
        if bad:
            raise RelationError(", ".join(bad))

    def dump(self) -> str:
        """Plain-text listing of the basis and operator images."""

        def vec(v: int) -> str:
            return " + ".join(self.names[k] for k in gf2.bits(v)) or "0"

        lines = [f"# dim {self.dim}, m={self.m}, n={self.n}"]
        for i, (name, deg) in enumerate(zip(self.names, self.degrees)):
            tag = " fixed" if self.fixed >> i & 1 else ""
            lines.append(f"{name} [{deg}]{tag}: J={vec(self.J[i])}; S={vec(self.S[i])}; D={vec(self.D[i])}")
        return "\n".join(lines)


def act(Z: GChainComplex, g: int, v: int) -> int:
    """Left action of the basis element ``g`` of the algebra on ``v``."""
    if alg.spow(g):
        v = gf2.apply(Z.S, v)
    for _ in range(alg.jpow(g)):
        v = gf2.apply(Z.J, v)
    return v


def act_element(Z: GChainComplex, a: int, v: int) -> int:
    out = 0
    for g in alg.terms(a):
        out ^= act(Z, g, v)
    return out


class _Builder:
    """Assemble a complex cell by cell."""

    def __init__(self):
        self.names: list[str] = []
        self.degrees: list[int] = []
        self.J: list[int] = []
        self.S: list[int] = []
        self.D: list[int] = []
        self.fixed = 0
        self.free: list[tuple[int, ...]] = []

    def _new(self, name: str, deg: int) -> int:
        i = len(self.names)
        self.names.append(name)
        self.degrees.append(deg)
        self.J.append(1 << i)
        self.S.append(0)
        self.D.append(0)
        return i

    def add_fixed(self, name: str, deg: int, boundary: int = 0) -> int:
        i = self._new(name, deg)
        self.D[i] = boundary
        self.fixed |= 1 << i
        return i

    def _jpow(self, v: int, a: int) -> int:
        for _ in range(a % 4):
            v = gf2.apply(self.J, v)
        return v

    def add_free(self, name: str, deg: int, boundary: int = 0) -> tuple[int, ...]:
        """Add a free generator whose boundary lives in the current basis."""
        idx = tuple(
            self._new(name if g == 0 else f"{alg.basis_name(g)}.{name}", deg + alg.basis_degree(g))
            for g in range(alg.NBASIS)
        )
        for g in range(alg.NBASIS):
            self.J[idx[g]] = 1 << idx[alg.PRODUCT[alg.index(1, 0)][g]]
            p = alg.PRODUCT[alg.index(0, 1)][g]
            self.S[idx[g]] = 0 if p is None else 1 << idx[p]
        ds = (1 << idx[0]) ^ (1 << idx[2]) ^ gf2.apply(self.S, boundary)
        for a in range(4):
            self.D[idx[alg.index(a, 0)]] = self._jpow(boundary, a)
            self.D[idx[alg.index(a, 1)]] = self._jpow(ds, a)
        self.free.append(idx)
        return idx

    def build(self, m: int = 0, n: Fraction | int = 0) -> GChainComplex:
        return GChainComplex(
            names=tuple(self.names),
            degrees=tuple(self.degrees),
            J=tuple(self.J),
            S=tuple(self.S),
            D=tuple(self.D),
            fixed=self.fixed,
            free=tuple(self.free),
            m=m,
            n=Fraction(n),
        )


def _s_one_plus_j2(x: Sequence[int]) -> int:
    """Mask of s(1 + j^2) x for a free generator record ``x``."""
    return (1 << x[alg.index(0, 1)]) ^ (1 << x[alg.index(2, 1)])


def _add_strand(b: _Builder, label: str, d: int, length: int, f_red: int | None) -> None:
    prev = None
    for t in range(length):
        k = d + 2 * t
        bd = 0 if prev is None else _s_one_plus_j2(prev)
        if k == 1 and f_red is not None:
            bd ^= 1 << f_red
        prev = b.add_free(f"x{label}_{k}", k, bd)


def build_standard(s_param, pairs: Iterable[tuple[int, int]], J_towers: Iterable[tuple[int, int]] = ()) -> GChainComplex:
    """Standard complex of a decomposition.

    The reducible generator ``f`` sits in degree 0.  Each pair (d, n) adds
    free generators x_d, x_{d+2}, ..., x_{d+2n-2} with boundary
    s(1+j^2) x_{k-2}, and x_1 additionally hits ``f``.  Towers of the
    j-invariant summand are added as unattached strands of the same shape,
    with relative bottoms.  Reported degrees are raised by ``s_param``.
    """
    pairs = [(int(d), int(n)) for d, n in pairs]
    for d, n in pairs:
        if d % 2 == 0 or d > 1 or n < 1 or d + 2 * n < 3:
            raise InputError(f"pair {(d, n)} cannot be attached to the reducible")
    b = _Builder()
    f = b.add_fixed("f", 0)
    for i, (d, n) in enumerate(pairs, 1):
        _add_strand(b, str(i), d, n, f)
    for i, (e, m) in enumerate(J_towers, 1):
        _add_strand(b, f"J{i}", int(e), int(m), None)
    return b.build(0, -Fraction(s_param) / 4)


def strand(d: int, n: int) -> GChainComplex:
    """The free complex on x_d, ..., x_{d+2n-2} with no reducible."""
    b = _Builder()
    _add_strand(b, "", d, n, None)
    return b.build()


def reducible() -> GChainComplex:
    """The complex of the two-point space: one fixed generator in degree 0."""
    b = _Builder()
    b.add_fixed("f", 0)
    return b.build()


def free_generator(deg: int = 0) -> GChainComplex:
    b = _Builder()
    b.add_free("x", deg)
    return b.build()


def sphere_model(rep: Rep) -> GChainComplex:
    """Reduced cellular chains of the one-point compactification of a representation."""
    b = _Builder()
    if rep == R_TILDE:
        c0 = b.add_fixed("c0", 0)
        c1 = b.add_fixed("c1", 1, 1 << c0)
        jc1 = b.add_fixed("jc1", 1, 1 << c0)
        b.J[c1], b.J[jc1] = 1 << jc1, 1 << c1
    elif rep == H:
        r0 = b.add_fixed("r0", 0)
        y1 = b.add_free("y1", 1, 1 << r0)
        one_plus_j = lambda x: (1 << x[0]) ^ (1 << x[alg.index(1, 0)])
        y2 = b.add_free("y2", 2, one_plus_j(y1))
        b.add_free("y3", 3, (1 << y1[alg.index(0, 1)]) ^ one_plus_j(y2))
    else:
        raise InputError(f"unknown representation {rep!r}")
    return b.build()


def _free_lookup(Z: GChainComplex) -> dict[int, tuple[int, int]]:
    """Map each free basis index to (record number, algebra basis index)."""
    out = {}
    for r, idx in enumerate(Z.free):
        for g, i in enumerate(idx):
            out[i] = (r, g)
    covered = Z.fixed
    for i in out:
        covered |= 1 << i
    if covered != (1 << Z.dim) - 1:
        raise InputError("complex is not a fixed part plus free cells")
    return out


def smash(Z1: GChainComplex, Z2: GChainComplex) -> GChainComplex:
    """Chains of the smash product, basis ``u (x) v``.

    On ``fixed (x) Z2`` the action is the diagonal one,
    j(u (x) v) = ju (x) jv and s(u (x) v) = u (x) sv.  On a free cell
    G x D^k of the first factor the product is untwisted to
    G x (D^k x X2) with the group acting on the first coordinate only, so
    that the result is again an honest module.  Boundary terms whose
    attaching coefficient moves along an s-cell pick up the shear
    correction (j^{k+2} x') (x) (j^{k+2} s) v.
    """
    n2 = Z2.dim
    look1 = _free_lookup(Z1)
    look2 = _free_lookup(Z2)
    dim = Z1.dim * n2

    def pair(u: int, v: int) -> int:
        return u * n2 + v

    def tensor(a: int, b: int) -> int:
        out = 0
        for u in gf2.bits(a):
            for v in gf2.bits(b):
                out ^= 1 << pair(u, v)
        return out

    def j_inv_pow(v: int, k: int) -> int:
        return act(Z2, alg.index(-k, 0), v)

    names, degrees = [], []
    Jc, Sc, Dc = [0] * dim, [0] * dim, [0] * dim
    for u in range(Z1.dim):
        for v in range(n2):
            names.append(f"{Z1.names[u]}*{Z2.names[v]}")
            degrees.append(Z1.degrees[u] + Z2.degrees[v])

    j_idx, s_idx = alg.index(1, 0), alg.index(0, 1)
    for u in range(Z1.dim):
        fixed_u = Z1.fixed >> u & 1
        for v in range(n2):
            i = pair(u, v)
            if fixed_u:
                Jc[i] = tensor(Z1.J[u], Z2.J[v])
                Sc[i] = tensor(1 << u, Z2.S[v])
            else:
                r, g = look1[u]
                rec = Z1.free[r]
                Jc[i] = 1 << pair(rec[alg.PRODUCT[j_idx][g]], v)
                p = alg.PRODUCT[s_idx][g]
                Sc[i] = 0 if p is None else 1 << pair(rec[p], v)

    def jpow(w: int, a: int) -> int:
        for _ in range(a % 4):
            w = gf2.apply(Jc, w)
        return w

    for u in range(Z1.dim):
        if Z1.fixed >> u & 1:
            for v in range(n2):
                Dc[pair(u, v)] = tensor(Z1.D[u], 1 << v) ^ tensor(1 << u, Z2.D[v])
    for rec in Z1.free:
        x = rec[0]
        bd = Z1.D[x]
        for v in range(n2):
            w = tensor(bd & Z1.fixed, 1 << v) ^ tensor(1 << x, Z2.D[v])
            for b in gf2.bits(bd & ~Z1.fixed):
                r2, g = look1[b]
                tgt = Z1.free[r2]
                k = alg.jpow(g)
                w ^= tensor(1 << b, j_inv_pow(1 << v, k))
                if alg.spow(g):
                    sv = act(Z2, alg.index(k + 2, 1), 1 << v)
                    w ^= tensor(1 << tgt[alg.index(k + 2, 0)], sv)
            base = pair(x, v)
            ds = (1 << base) ^ (1 << pair(rec[alg.index(2, 0)], v)) ^ gf2.apply(Sc, w)
            for a in range(4):
                Dc[pair(rec[alg.index(a, 0)], v)] = jpow(w, a)
                Dc[pair(rec[alg.index(a, 1)], v)] = jpow(ds, a)

    free = []
    for rec in Z1.free:
        for v in range(n2):
            free.append(tuple(pair(u, v) for u in rec))
    for c in gf2.bits(Z1.fixed):
        orbit = [c]
        for _ in range(3):
            nxt = Z1.J[orbit[-1]]
            if nxt & (nxt - 1):
                raise InputError("j must permute the fixed basis")
            orbit.append(nxt.bit_length() - 1)
        for rec in Z2.free:
            free.append(tuple(pair(orbit[alg.jpow(g)], rec[g]) for g in range(alg.NBASIS)))

    fixed = 0
    for u in gf2.bits(Z1.fixed):
        for v in gf2.bits(Z2.fixed):
            fixed |= 1 << pair(u, v)
    return GChainComplex(
        names=tuple(names),
        degrees=tuple(degrees),
        J=tuple(Jc),
        S=tuple(Sc),
        D=tuple(Dc),
        fixed=fixed,
        free=tuple(free),
        m=Z1.m + Z2.m,
        n=Z1.n + Z2.n,
    )


def suspend(Z: GChainComplex, rep: Rep) -> GChainComplex:
    """Suspension by the real or quaternionic representation."""
    return smash(sphere_model(rep), Z)


def is_j_split(Z: GChainComplex) -> bool:
    """Whether Z has a single reducible f and a j-swapped splitting of the rest.

    Each free cell is split into {1, j^2, s, j^2 s} x and its j-translate;
    a flip bit per cell is solved by parity union-find so that both
    halves are closed under the differential modulo the fixed part.
    """
    fixed = Z.fixed_indices()
    if len(fixed) != 1:
        return False
    f = fixed[0]
    if Z.J[f] != 1 << f or Z.S[f] or Z.D[f]:
        return False
    try:
        look = _free_lookup(Z)
    except InputError:
        return False
    parent = list(range(len(Z.free)))
    parity = [0] * len(Z.free)

    def find(r: int) -> tuple[int, int]:
        p = 0
        while parent[r] != r:
            p ^= parity[r]
            r = parent[r]
        return r, p

    for r, rec in enumerate(Z.free):
        for g, i in enumerate(rec):
            for b in gf2.bits(Z.D[i] & ~Z.fixed):
                r2, g2 = look[b]
                want = (alg.jpow(g) ^ alg.jpow(g2)) & 1
                ra, pa = find(r)
                rb, pb = find(r2)
                if ra == rb:
                    if pa ^ pb != want:
                        return False
                else:
                    parent[ra] = rb
                    parity[ra] = pa ^ pb ^ want
    return True
