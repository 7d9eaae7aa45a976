"""
Pipeline reports and their table emitters.

A report is a plain JSON-ready dict.  The markdown and csv emitters are
pure functions of reports, laid out as (Y, SWFH^G, alpha, beta, gamma,
delta) rows.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .errors import InputError, NotCoprime
from .modules import Tower, grading, pretty
from .pipeline import (
    ArrowKind,
    HFDecomposition,
    compute_invariants,
    compute_swfhg,
    connected_homology,
    is_projective_module,
    local_class,
    validate,
)
from .seifert import SeifertInvariants, analyze, analyze_brieskorn, brieskorn_normalize

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Source:
    """One input: a Brieskorn triple, Seifert invariants or a decomposition."""

    kind: str
    value: object

    @property
    def label(self) -> str:
        if self.kind == "brieskorn":
            return "Σ(" + ",".join(str(a) for a in self.value) + ")"
        if self.kind == "seifert":
            inv = self.value
            fibers = ", ".join(f"({b},{a})" for b, a in inv.fibers)
            return f"Y({inv.b}; {fibers})"
        dec = self.value
        return f"HF(s={_num(dec.s)}; {list(dec.pairs)})"

    def to_json(self) -> dict:
        if self.kind == "brieskorn":
            return {"brieskorn": list(self.value)}
        if self.kind == "seifert":
            return {"seifert": self.value.to_json()}
        return {"hf": self.value.to_json()}


def _num(x) -> str:
    x = grading(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _load_json(text: str) -> object:
    """Inline JSON, or the contents of the file it names."""
    text = text.strip()
    if not text.startswith(("{", "[")):
        path = Path(text)
        if not path.is_file():
            raise InputError(f"{text!r} is neither JSON nor a readable file")
        text = path.read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from None


def parse_triple(text: str) -> tuple[int, ...]:
    try:
        a = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None
    if len(a) < 3:
        raise InputError(f"a Brieskorn sphere needs at least three fibers, got {text!r}")
    return a


def source_from_seifert_json(obj: object) -> Source:
    if not isinstance(obj, dict):
        raise InputError("Seifert input must be a JSON object")
    if "brieskorn" in obj:
        return Source("brieskorn", tuple(int(a) for a in obj["brieskorn"]))
    if "seifert" in obj:
        try:
            return Source("seifert", SeifertInvariants.from_json(obj["seifert"]))
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed Seifert invariants: {exc}") from None
    raise InputError("Seifert input needs a 'brieskorn' or 'seifert' key")


def source_from_hf(text: str) -> Source:
    obj = _load_json(text)
    if not isinstance(obj, dict):
        raise InputError("decomposition must be a JSON object")
    try:
        dec = HFDecomposition.from_json(obj)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"malformed decomposition: {exc}") from None
    return Source("hf", validate(dec))


def build_report(src: Source) -> dict:
    """Full pipeline report for one input."""
    full = None
    if src.kind == "hf":
        dec = src.value
        projective = is_projective_module(dec)
    else:
        res = analyze_brieskorn(src.value) if src.kind == "brieskorn" else analyze(src.value)
        dec, full, projective = res.decomposition, res.hf, res.projective
    Q = compute_swfhg(dec)
    report = {
        "input": src.to_json(),
        "label": src.label,
        "decomposition": dec.to_json(),
        "swfhg": Q.to_json(),
        "swfhg_text": pretty(Q.base),
        "q_notes": q_notes(Q),
        "invariants": compute_invariants(dec).to_json(),
        "hf_conn": connected_homology(dec).to_json(),
        "local_class": {**local_class(dec).to_json(), "text": str(local_class(dec))},
        "projective_type": bool(projective),
    }
    if full is not None:
        report["hf"] = full.to_json()
    return report


def q_notes(Q) -> list[str]:
    """Human-readable descriptions of the q-arrows into infinite towers from finite ones."""
    notes = []
    for a in Q.q_arrows:
        if a.kind != ArrowKind.GENERATOR_HIT:
            continue
        src, tgt = Q.towers[a.source][0], Q.towers[a.target][0]
        notes.append(f"q sends {_tower(src)} to {_tower(tgt)}")
    return notes


def _tower(t: Tower) -> str:
    s = f"V+_{_num(t.bottom)}"
    return s if t.infinite else f"{s}({t.length})"


# table emitters

COLUMNS = ("Y", "SWFH^G", "alpha", "beta", "gamma", "delta")


def table_row(report: dict) -> list[str]:
    inv = report["invariants"]
    text = report["swfhg_text"].replace(" + ", " ⊕ ")
    if report.get("q_notes"):
        text += " [" + "; ".join(report["q_notes"]) + "]"
    return [report["label"], text] + [_num(inv[k]) for k in ("alpha", "beta", "gamma", "delta")]


def to_markdown(reports: Sequence[dict]) -> str:
    head = ["Y", "SWFH^G", "α", "β", "γ", "δ"]
    lines = ["| " + " | ".join(head) + " |", "|" + "---|" * len(head)]
    for r in reports:
        lines.append("| " + " | ".join(table_row(r)) + " |")
    return "\n".join(lines) + "\n"


def to_csv(reports: Sequence[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for r in reports:
        w.writerow(table_row(r))
    return buf.getvalue()


def to_json(reports: dict | Sequence[dict]) -> str:
    return json.dumps(reports, indent=2, ensure_ascii=False) + "\n"


# family patterns

_LINEAR = re.compile(r"^\s*(-?\d*)\s*k\s*(?:([+-])\s*(\d+))?\s*$")


@dataclass(frozen=True)
class FamilyPattern:
    """Brieskorn triple whose last entry is ``slope*k + offset``."""

    fixed: tuple[int, ...]
    slope: int
    offset: int

    @classmethod
    def parse(cls, text: str) -> "FamilyPattern":
        parts = [p.strip() for p in text.split(",")]
        if len(parts) < 3:
            raise InputError(f"pattern needs at least three entries, got {text!r}")
        try:
            fixed = tuple(int(p) for p in parts[:-1])
        except ValueError:
            raise InputError(f"only the last entry may depend on k: {text!r}") from None
        m = _LINEAR.match(parts[-1].replace("−", "-"))
        if not m:
            raise InputError(f"last entry must look like 20k+11, got {parts[-1]!r}")
        slope = m.group(1)
        slope = 1 if slope in ("", None) else (-1 if slope == "-" else int(slope))
        offset = int(m.group(3) or 0) * (-1 if m.group(2) == "-" else 1)
        return cls(fixed, slope, offset)

    def triple(self, k: int) -> tuple[int, ...]:
        return self.fixed + (self.slope * k + self.offset,)

    def __str__(self) -> str:
        sign = "-" if self.offset < 0 else "+"
        last = f"{self.slope}k{sign}{abs(self.offset)}" if self.offset else f"{self.slope}k"
        return ",".join(str(a) for a in self.fixed) + "," + last


def parse_k_range(text: str) -> range:
    m = re.fullmatch(r"\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*", text)
    if m:
        return range(int(m.group(1)), int(m.group(2)) + 1)
    try:
        k = int(text)
    except ValueError:
        raise InputError(f"k-range must look like lo..hi, got {text!r}") from None
    return range(k, k + 1)


def _family_row(pattern: FamilyPattern, k: int) -> dict | None:
    a = pattern.triple(k)
    try:
        brieskorn_normalize(a)
    except NotCoprime as exc:
        log.warning("skipping k=%d, %s: %s", k, a, exc)
        return None
    report = build_report(Source("brieskorn", a))
    report["k"] = k
    return report


def family_reports(pattern: FamilyPattern, ks: Iterable[int], workers: int | None = None) -> list[dict]:
    """Reports for each k in order; rows that are not coprime are skipped."""
    ks = list(ks)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        rows = list(pool.map(lambda k: _family_row(pattern, k), ks))
    return [r for r in rows if r is not None]


__all__ = [
    "Source",
    "FamilyPattern",
    "build_report",
    "family_reports",
    "parse_k_range",
    "parse_triple",
    "source_from_hf",
    "source_from_seifert_json",
    "to_csv",
    "to_json",
    "to_markdown",
]
