"""
From a Heegaard Floer decomposition to Pin(2)-equivariant Floer homology.

A decomposition (s, [(d_i, n_i)], J) describes

    HF+ = T_{s+d_1+2n_1-1} + sum_i T_{s+d_i}((d_{i+1}+2n_{i+1}-d_i)/2)
          + sum_i T_{s+d_i}(n_i) + J^2[-s]

with the sentinel d_{N+1} = 1, n_{N+1} = 0.  Everything else here is a
closed-form function of these parameters.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DNotAtMostOne,
    EvenD,
    InputError,
    LengthViolation,
    MonotonicityViolation,
    MultipleInfiniteTowers,
    NotJSplitForm,
)
from .modules import GradedModule, Tower, fmt_grading, grading, restrict_to_v, shift

SENTINEL = (1, 0)


@dataclass(frozen=True)
class HFDecomposition:
    """Parameters of a j-split Heegaard Floer module.

    ``J`` is a step-2 module with bottoms relative to ``s``.
    """

    s: Fraction
    pairs: tuple[tuple[int, int], ...] = ()
    J: GradedModule = field(default_factory=lambda: GradedModule(2))

    def __post_init__(self):
        object.__setattr__(self, "s", grading(self.s))
        pairs = []
        for p in self.pairs:
            d, n = p
            if int(d) != d or int(n) != n:
                raise InputError(f"pair {p} must have integer entries")
            pairs.append((int(d), int(n)))
        object.__setattr__(self, "pairs", tuple(pairs))

    @property
    def N(self) -> int:
        return len(self.pairs)

    def with_sentinel(self) -> list[tuple[int, int]]:
        return list(self.pairs) + [SENTINEL]

    def head(self) -> tuple[int, int]:
        """(d_1, n_1), or the sentinel when N = 0."""
        return self.pairs[0] if self.pairs else SENTINEL

    def to_json(self) -> dict:
        out = {"s": fmt_grading(self.s), "pairs": [list(p) for p in self.pairs]}
        if self.J:
            out["J"] = self.J.to_json()
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "HFDecomposition":
        J = obj.get("J")
        if J is None:
            J = GradedModule(2)
        elif isinstance(J, dict):
            J = GradedModule.from_json(J)
        else:
            J = GradedModule(2, tuple((grading(b), int(n)) for b, n in J))
        if "s" not in obj:
            raise InputError("decomposition needs an 's' entry")
        return cls(grading(obj["s"]), tuple(tuple(p) for p in obj.get("pairs", ())), J)


def validate(dec: HFDecomposition) -> HFDecomposition:
    """Check the chain conditions; raise on the first violation."""
    if dec.J.step != 2 or dec.J.infinite:
        raise NotJSplitForm("J must be a finite step-2 module")
    prev = None
    for i, (d, n) in enumerate(dec.pairs, 1):
        if d % 2 == 0:
            raise EvenD(f"d_{i} = {d} is even")
        if n < 1:
            raise LengthViolation(f"n_{i} = {n} is not positive")
        if prev is not None:
            pd, pn = prev
            if d <= pd:
                raise MonotonicityViolation(f"d_{i} = {d} does not exceed d_{i - 1} = {pd}")
            if d + 2 * n >= pd + 2 * pn:
                raise MonotonicityViolation(f"d_{i}+2n_{i} = {d + 2 * n} does not drop below {pd + 2 * pn}")
        if d > 1:
            raise DNotAtMostOne(f"d_{i} = {d} exceeds 1")
        prev = (d, n)
    if prev is not None and prev[0] + 2 * prev[1] < 3:
        raise LengthViolation(f"d_N+2n_N = {prev[0] + 2 * prev[1]} is below 3")
    return dec


def forward_s1(dec: HFDecomposition) -> GradedModule:
    """The S1-equivariant (Heegaard Floer) module of a decomposition."""
    validate(dec)
    s = dec.s
    d1, n1 = dec.head()
    fin = []
    ext = dec.with_sentinel()
    for (d, n), (dn, nn) in zip(ext, ext[1:]):
        fin.append((s + d, (dn + 2 * nn - d) // 2))
        fin.append((s + d, n))
    M = GradedModule(2, tuple(fin), (s + d1 + 2 * n1 - 1,))
    return M + shift(dec.J, -s) * 2


def connected_homology(dec: HFDecomposition) -> GradedModule:
    """Connected Floer homology: the summands attached to the reducible."""
    validate(dec)
    return _connected(dec)


def _connected(dec: HFDecomposition) -> GradedModule:
    s = dec.s
    ext = dec.with_sentinel()
    fin = []
    for (d, n), (dn, nn) in zip(ext, ext[1:]):
        fin.append((s + d, (dn + 2 * nn - d) // 2))
        fin.append((s + d, n))
    return GradedModule(2, tuple(fin))


def extract_parameters(M: GradedModule) -> HFDecomposition:
    """Invert forward_s1 on its image.

    Finite summands of odd multiplicity sit exactly at the bottoms s + d_i.
    At each such bottom the longer one has length n_i and the shorter one
    (d_{i+1}+2n_{i+1}-d_i)/2; at the top bottom a missing shorter one means
    d_N = 1.  That fixes s, the remaining summands halve into J, and the
    infinite tower must sit at s + d_1 + 2n_1 - 1.
    """
    if M.step != 2:
        raise NotJSplitForm("expected a step-2 module")
    if len(M.infinite) != 1:
        raise MultipleInfiniteTowers(f"expected one infinite tower, found {len(M.infinite)}")
    top = M.infinite[0]
    counts = Counter(M.finite)
    odd: dict[Fraction, list[int]] = {}
    for (b, n), c in counts.items():
        if c % 2:
            odd.setdefault(b, []).append(n)
    bottoms = sorted(odd)
    if not bottoms:
        s = top
    else:
        last = sorted(odd[bottoms[-1]])
        if len(last) == 2:
            s = bottoms[-1] + 2 * last[0] - 1
        elif len(last) == 1:
            s = bottoms[-1] - 1
        else:
            raise NotJSplitForm(f"{len(last)} odd classes at bottom {bottoms[-1]}")
    pairs = []
    for D in bottoms:
        d = D - s
        if d.denominator != 1:
            raise NotJSplitForm(f"bottom {D} is not an integer offset from s = {s}")
        lens = sorted(odd[D])
        if len(lens) not in (1, 2):
            raise NotJSplitForm(f"{len(lens)} odd classes at bottom {D}")
        pairs.append((int(d), lens[-1], lens[0] if len(lens) == 2 else 0))
    for i, (d, n, short) in enumerate(pairs):
        dn, nn = (pairs[i + 1][0], pairs[i + 1][1]) if i + 1 < len(pairs) else SENTINEL
        if 2 * short != dn + 2 * nn - d:
            raise NotJSplitForm(f"short summand at bottom {s + d} has length {short}, expected {(dn + 2 * nn - d) / 2}")
    dec_pairs = tuple((d, n) for d, n, _ in pairs)
    try:
        rest = HFDecomposition(s, dec_pairs)
        validate(rest)
    except InputError as exc:
        raise NotJSplitForm(f"chain conditions fail: {exc}") from exc
    d1, n1 = rest.head()
    if top != s + d1 + 2 * n1 - 1:
        raise NotJSplitForm(f"infinite tower at {top}, expected {s + d1 + 2 * n1 - 1}")
    for key in _connected(rest).finite:
        counts[key] -= 1
    J = []
    for (b, n), c in sorted(counts.items()):
        if c < 0 or c % 2:
            raise NotJSplitForm(f"summand T_{b}({n}) does not pair up")
        J.extend([(b - s, n)] * (c // 2))
    return HFDecomposition(s, dec_pairs, GradedModule(2, tuple(J)))


def _succeq(p: tuple[int, int], q: tuple[int, int]) -> bool:
    return p[0] >= q[0] and p[0] + 4 * p[1] >= q[0] + 4 * q[1]


@dataclass(frozen=True)
class JPairs:
    """The pair bookkeeping behind the G-equivariant answer."""

    J0: tuple[tuple[int, int], ...]
    Jmax: tuple[tuple[int, int], ...]
    m: tuple[tuple[tuple[int, int], int], ...]
    J_rep: GradedModule

    def multiplicity(self, pair: tuple[int, int]) -> int:
        return dict(self.m).get(pair, 0)

    def j1pp(self) -> GradedModule:
        """Sum of V_a(b) over the maximal pairs."""
        return GradedModule(4, tuple(self.Jmax))


def build_jpairs(dec: HFDecomposition) -> JPairs:
    validate(dec)
    J0 = []
    for d, n in dec.pairs:
        if d % 4 == 1:
            J0.append((d, (n + 1) // 2))
        else:
            J0.append((d + 2, n // 2))
    distinct = sorted(set(J0))
    Jmax = [p for p in distinct if not any(q != p and _succeq(q, p) for q in distinct)]
    Jmax.sort(key=lambda p: (-(p[0] + 4 * p[1]), p[0]))
    counts = Counter(J0)
    m = tuple((p, counts[p] - (1 if p in Jmax else 0)) for p in distinct)
    rep = GradedModule(4, tuple((a, b) for (a, b), k in m for _ in range(k)))
    return JPairs(tuple(J0), tuple(Jmax), m, rep)


class ArrowKind(str, Enum):
    TOWER_ISO = "TOWER_ISO"
    ISO_ABOVE = "ISO_ABOVE"
    GENERATOR_HIT = "GENERATOR_HIT"
    ZERO = "ZERO"


class Role(str, Enum):
    COKER_A = "coker_a"
    COKER_1 = "coker_1"
    COKER_2 = "coker_2"
    KERNEL_CHAIN = "kernel_chain"
    J_REP = "j_rep"
    RES_J = "res_j"
    UNPAIRED = "unpaired"


@dataclass(frozen=True)
class QArrow:
    """q on a tower.

    ISO_ABOVE carries ``threshold``, the lowest target degree hit: q is an
    isomorphism from source degrees >= threshold + 1 and zero below.
    GENERATOR_HIT sends the bottom generator of the source to the element
    one degree lower in the target.
    """

    source: int
    target: int | None
    kind: ArrowKind
    threshold: Fraction | None = None

    def to_json(self) -> dict:
        out = {"source": self.source, "target": self.target, "kind": self.kind.value}
        if self.threshold is not None:
            out["threshold"] = fmt_grading(self.threshold)
        return out


@dataclass(frozen=True)
class QVModule:
    """An F[v]-module of towers with the q-action described tower by tower."""

    towers: tuple[tuple[Tower, Role], ...]
    q_arrows: tuple[QArrow, ...]

    @property
    def base(self) -> GradedModule:
        return GradedModule.from_towers(4, (t for t, _ in self.towers))

    def q_image(self, arrow: QArrow, degree: Fraction) -> Fraction | None:
        """Degree of q(x) for x in the source tower in ``degree``, or None if q(x)=0."""
        src = self.towers[arrow.source][0]
        if not src.contains(degree, 4) or arrow.target is None:
            return None
        tgt = self.towers[arrow.target][0]
        out = degree - 1
        if arrow.kind == ArrowKind.ZERO:
            return None
        if arrow.kind == ArrowKind.ISO_ABOVE and out < arrow.threshold:
            return None
        if arrow.kind == ArrowKind.GENERATOR_HIT and degree != src.bottom:
            return None
        return out if tgt.contains(out, 4) else None

    def q_cubed_vanishes(self, window: int = 64) -> bool:
        """Check q^3 = 0 on every tower element up to ``window`` above its bottom."""
        by_source: dict[int, list[QArrow]] = {}
        for a in self.q_arrows:
            by_source.setdefault(a.source, []).append(a)

        def step(tid: int, deg: Fraction) -> list[tuple[int, Fraction]]:
            out = []
            for a in by_source.get(tid, []):
                d = self.q_image(a, deg)
                if d is not None:
                    out.append((a.target, d))
            return out

        for tid, (t, _) in enumerate(self.towers):
            levels = t.length if t.length is not None else window
            for k in range(levels):
                front = [(tid, t.bottom + 4 * k)]
                for _ in range(3):
                    front = [x for tid2, d in front for x in step(tid2, d)]
                if front:
                    return False
        return True

    def to_json(self) -> dict:
        return {
            "base": self.base.to_json(),
            "towers": [
                {
                    "id": i,
                    "role": role.value,
                    "bottom": fmt_grading(t.bottom),
                    "len": t.length,
                }
                for i, (t, role) in enumerate(self.towers)
            ],
            "q_arrows": [a.to_json() for a in self.q_arrows],
        }


def coker_bottom(dec: HFDecomposition) -> int:
    d1, n1 = dec.head()
    return 4 * ((d1 + 2 * n1 + 1) // 4)


def compute_swfhg(dec: HFDecomposition) -> QVModule:
    """Pin(2)-equivariant Floer homology with its q-action."""
    validate(dec)
    s = dec.s
    jp = build_jpairs(dec)
    towers: list[tuple[Tower, Role]] = []

    def add(bottom, length, role) -> int | None:
        if length is not None and length <= 0:
            return None
        towers.append((Tower(s + bottom, length), role))
        return len(towers) - 1

    top = coker_bottom(dec)
    ia = add(top, None, Role.COKER_A)
    i1 = add(1, None, Role.COKER_1)
    i2 = add(2, None, Role.COKER_2)
    arrows = [
        QArrow(i2, i1, ArrowKind.TOWER_ISO),
        QArrow(i1, ia, ArrowKind.ISO_ABOVE, s + top),
    ]
    chain = list(jp.Jmax) + [SENTINEL]
    for (a, b), (an, bn) in zip(chain, chain[1:]):
        k = add(a, (an + 4 * bn - a) // 4, Role.KERNEL_CHAIN)
        if k is not None:
            arrows.append(QArrow(k, None, ArrowKind.ZERO))
    for b, n in jp.J_rep.finite:
        arrows.append(QArrow(add(b, n, Role.J_REP), None, ArrowKind.ZERO))
    for b, n in restrict_to_v(dec.J).finite:
        arrows.append(QArrow(add(b, n, Role.RES_J), None, ArrowKind.ZERO))
    coker = {ia: top, i1: 1, i2: 2}
    for d, n in dec.pairs:
        if d % 4 == 1:
            k = add(d + 2, n // 2, Role.UNPAIRED)
            gen = d + 2
        else:
            k = add(d, (n + 1) // 2, Role.UNPAIRED)
            gen = d
        if k is None:
            continue
        target = next(
            (tid for tid, bot in coker.items() if towers[tid][0].contains(s + gen - 1, 4)),
            None,
        )
        if target is None:
            arrows.append(QArrow(k, None, ArrowKind.ZERO))
        else:
            arrows.append(QArrow(k, target, ArrowKind.GENERATOR_HIT))
    return QVModule(tuple(towers), tuple(arrows))


@dataclass(frozen=True)
class ManolescuInvariants:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction
    mu_bar: Fraction

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta", "mu_bar"):
            object.__setattr__(self, name, grading(getattr(self, name)))

    def abgd(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.alpha, self.beta, self.gamma, self.delta)

    def to_json(self) -> dict:
        return {k: fmt_grading(getattr(self, k)) for k in ("alpha", "beta", "gamma", "delta", "mu_bar")}


def compute_invariants(dec: HFDecomposition) -> ManolescuInvariants:
    validate(dec)
    s = dec.s
    d1, n1 = dec.head()
    half = s / 2
    return ManolescuInvariants(
        alpha=half + 2 * ((d1 + 2 * n1 + 1) // 4),
        beta=half,
        gamma=half,
        delta=(s + d1 + 2 * n1 - 1) / 2,
        mu_bar=-half,
    )


@dataclass(frozen=True)
class LocalClass:
    """Chain local equivalence class C(s, {d_i}, {n_i})."""

    s: Fraction
    pairs: tuple[tuple[int, int], ...]

    def to_json(self) -> dict:
        return {"s": fmt_grading(self.s), "pairs": [list(p) for p in self.pairs]}

    def __str__(self) -> str:
        ds = ",".join(str(d) for d, _ in self.pairs)
        ns = ",".join(str(n) for _, n in self.pairs)
        s = self.s
        s = str(s.numerator) if s.denominator == 1 else str(s)
        return f"C({s},{{{ds}}},{{{ns}}})"


def local_class(dec: HFDecomposition) -> LocalClass:
    validate(dec)
    return LocalClass(dec.s, dec.pairs)


def is_projective_module(dec: HFDecomposition) -> bool:
    """Connected part is empty or a single tower starting at s + 1."""
    return dec.N == 0 or (dec.N == 1 and dec.pairs[0][0] == 1)


class Verdict(str, Enum):
    OBSTRUCTED = "OBSTRUCTED"
    NO_OBSTRUCTION = "NO_OBSTRUCTION"


@dataclass(frozen=True)
class Comparison:
    verdict: Verdict
    differences: tuple[str, ...]

    def to_json(self) -> dict:
        return {"verdict": self.verdict.value, "differences": list(self.differences)}


def compare(dec1: HFDecomposition, dec2: HFDecomposition) -> Comparison:
    """Homology cobordism obstruction from the local classes."""
    c1, c2 = local_class(dec1), local_class(dec2)
    diffs = []
    if c1.s != c2.s:
        diffs.append("s")
    if [d for d, _ in c1.pairs] != [d for d, _ in c2.pairs]:
        diffs.append("d")
    if [n for _, n in c1.pairs] != [n for _, n in c2.pairs]:
        diffs.append("n")
    if connected_homology(dec1) != connected_homology(dec2):
        diffs.append("hf_conn")
    verdict = Verdict.OBSTRUCTED if diffs else Verdict.NO_OBSTRUCTION
    return Comparison(verdict, tuple(diffs))


class Consistency(str, Enum):
    NEG_OK = "NEG_OK"
    POS_OK = "POS_OK"
    BOTH = "BOTH"
    NEITHER = "NEITHER"


def seifert_consistency(inv: ManolescuInvariants | Sequence) -> Consistency:
    """Which Seifert fibration signs the invariants are compatible with.

    Accepts invariants or a tuple (alpha, beta, gamma, delta).
    """
    if isinstance(inv, ManolescuInvariants):
        a, b, g, d = inv.abgd()
    else:
        a, b, g, d = (grading(x) for x in inv)
    same = (d - b) % 2 == 0
    neg = b == g and a == (d if same else d + 1)
    pos = a == b and g == (d if same else d - 1)
    if neg and pos:
        return Consistency.BOTH
    if neg:
        return Consistency.NEG_OK
    if pos:
        return Consistency.POS_OK
    return Consistency.NEITHER
