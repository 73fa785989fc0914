"""Empirical scanner for e_q(w; h(n)) / ln n over ranges of n.

Produces a deterministic series with a running maximum, for comparison
against the theoretical lower-bound target gamma(w) / (l ln q).
Natural logarithms everywhere: the target is a scale-invariant ratio of
logs, and fixing ln keeps reports comparable across bases.
"""

from __future__ import annotations

import io
import json
import math
from dataclasses import dataclass
from typing import Optional

from . import words
from .poly_witness import REPORT_FORMAT, IntPoly
from .words import Word

__all__ = [
    "FunctionSpec",
    "ScanPoint",
    "ratio_target",
    "scan",
    "emit",
]


@dataclass(frozen=True)
class FunctionSpec:
    """Either a polynomial h(n) = f(n) or an exponential h(n) = m^n."""

    kind: str                       # "poly" | "exp"
    poly: Optional[IntPoly] = None
    m: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind == "poly":
            if self.poly is None or self.poly.degree < 1:
                raise ValueError("poly spec needs a polynomial of degree >= 1")
        elif self.kind == "exp":
            if self.m is None or self.m < 2:
                raise ValueError("exp spec needs m >= 2")
        else:
            raise ValueError(f"unknown spec kind {self.kind!r}")

    @classmethod
    def parse(cls, text: str) -> "FunctionSpec":
        """Parse "poly:c0,c1,...,cd" or "exp:m"."""
        kind, _, rest = text.partition(":")
        if kind == "poly":
            return cls("poly", poly=IntPoly.parse(rest))
        if kind == "exp":
            return cls("exp", m=int(rest))
        raise ValueError(f"unknown spec {text!r}")

    def __call__(self, n: int) -> int:
        if self.kind == "poly":
            assert self.poly is not None
            return self.poly(n)
        assert self.m is not None
        return self.m ** n

    def text(self) -> str:
        if self.kind == "poly":
            assert self.poly is not None
            return f"poly:{self.poly.text()}"
        return f"exp:{self.m}"


@dataclass(frozen=True)
class ScanPoint:
    n: int
    count: int
    ratio: float
    running_max: float


def ratio_target(w: Word, q: int) -> float:
    """The Theorem-style target gamma(w) / (l ln q)."""
    return words.gamma(w) / (w.length * math.log(q))


def _ratio(count: int, n: int) -> float:
    if n >= 2:
        return count / math.log(n)
    # ln 1 = 0: keep the point but make the degenerate ratio explicit
    return math.inf if count > 0 else 0.0


def scan(
    spec: FunctionSpec,
    q: int,
    w: Word,
    start: int,
    stop: int,
    stride: int = 1,
    digit_budget: int = 10 ** 7,
) -> tuple[list[ScanPoint], dict]:
    """Scan n in [start, stop] with the given stride.

    Exponential specs are capped so m^n never exceeds the digit budget;
    the applied cap is recorded in the returned metadata.
    """
    if stride < 1:
        raise ValueError("stride must be >= 1")
    if start < 1:
        raise ValueError("scan starts at n >= 1")
    meta = {
        "spec": spec.text(),
        "base": q,
        "word": w.text(),
        "gamma": words.gamma(w),
        "target": ratio_target(w, q),
    }
    if spec.kind == "exp":
        assert spec.m is not None
        cap = int(digit_budget * math.log(q) / math.log(spec.m))
        if stop > cap:
            meta["cap"] = cap
            stop = cap
    series: list[ScanPoint] = []
    running = -math.inf
    for n in range(start, stop + 1, stride):
        value = spec(n)
        if value < 0:
            raise ValueError(f"h({n}) = {value} < 0")
        count = words.count_in_integer(w, value, q)
        ratio = _ratio(count, n)
        running = max(running, ratio)
        series.append(ScanPoint(n, count, ratio, running))
    return series, meta


def emit(
    series: list[ScanPoint],
    fmt: str = "csv",
    metadata: Optional[dict] = None,
) -> str:
    """Serialize a scan series as CSV (default) or a structured document."""
    if fmt == "csv":
        out = io.StringIO()
        out.write(f"# format: {REPORT_FORMAT}\n")
        for key, value in (metadata or {}).items():
            out.write(f"# {key}: {value}\n")
        out.write("n,count,ratio,running_max\n")
        for pt in series:
            out.write(
                f"{pt.n},{pt.count},{pt.ratio!r},{pt.running_max!r}\n"
            )
        return out.getvalue()
    if fmt == "structured":
        doc = {
            "format": REPORT_FORMAT,
            "metadata": metadata or {},
            "series": [
                {
                    "n": str(pt.n),
                    "count": str(pt.count),
                    "ratio": pt.ratio,
                    "running_max": pt.running_max,
                }
                for pt in series
            ],
        }
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def parse_csv(text: str) -> list[ScanPoint]:
    """Round-trip parser for the CSV emitted above."""
    series = []
    for line in text.splitlines():
        if not line or line.startswith("#") or line.startswith("n,"):
            continue
        n, count, ratio, running = line.split(",")
        series.append(
            ScanPoint(int(n), int(count), float(ratio), float(running))
        )
    return series
