"""Batch regeneration of decomposition statistics across n.

Produces the per-n class sizes, the full membership grid, interval ("band")
counts around n/3, n/2 and 2n/3, the even-winning-opening witnesses, and the
large-prime sanity check.  Interval membership always compares exact
integers (3k > n, 2k < n, ...), never floats: ties at divisibility-rich n
are exactly where rounding would bite.

Band counts are reported, not asserted; the observations they speak to are
conjectural.
"""

from __future__ import annotations

import csv
import json
import os
from dataclasses import dataclass
from functools import lru_cache

from .decomposition import Decomposition, decompose
from .divgraph import is_prime
from .game import graph_for

# Reference lines drawn through the membership grid: k = n/3, n/2, 2n/3.
THRESHOLD_LINES = ((1, 3), (1, 2), (2, 3))


@lru_cache(maxsize=None)
def decomposition_for(n: int) -> Decomposition:
    """Shared per-n decomposition cache; sweeps and services hit the same work."""
    return decompose(graph_for(n))


@dataclass(frozen=True)
class SweepRow:
    n: int
    d_size: int
    a_size: int
    c_size: int


@dataclass(frozen=True)
class MembershipCell:
    n: int
    k: int
    klass: str  # "D" | "A" | "C"


@dataclass(frozen=True)
class BandRow:
    n: int
    a_lo_count: int  # |A| with 3k <= n
    a_mid_count: int  # |A| with n < 3k and 2k < n
    d_mid_count: int  # |D| with 2k >= n and 3k <= 2n
    d_mid_span: int  # integers k in [n/2, 2n/3]
    prime_classes: tuple[tuple[int, str], ...]  # primes p with 2p > n, p <= n


@dataclass(frozen=True)
class BandSummary:
    n_max: int
    mid_band_violations: tuple[tuple[int, int], ...]  # (n, k) with k in A and n/3 < k < n/2

    @property
    def mid_band_empty(self) -> bool:
        return not self.mid_band_violations


def sweep_decompositions(n_max: int) -> list[SweepRow]:
    rows = []
    for n in range(1, n_max + 1):
        dec = decomposition_for(n)
        rows.append(SweepRow(n=n, d_size=len(dec.d_set), a_size=len(dec.a_set), c_size=len(dec.c_set)))
    return rows


def membership_grid(n_max: int) -> list[MembershipCell]:
    cells = []
    for n in range(1, n_max + 1):
        dec = decomposition_for(n)
        by_vertex = {}
        for v in dec.d_set:
            by_vertex[v] = "D"
        for v in dec.a_set:
            by_vertex[v] = "A"
        for v in dec.c_set:
            by_vertex[v] = "C"
        for k in range(1, n + 1):
            cells.append(MembershipCell(n=n, k=k, klass=by_vertex[k]))
    return cells


def upper_half_primes(n: int) -> list[int]:
    """Primes p with n/2 < p <= n; two of them make the large-prime opening work."""
    return [p for p in range(1, n + 1) if 2 * p > n and is_prime(p)]


def band_report(n_max: int) -> tuple[list[BandRow], BandSummary]:
    rows = []
    violations = []
    for n in range(1, n_max + 1):
        dec = decomposition_for(n)
        a = dec.a_set
        d = dec.d_set
        a_lo = sum(1 for k in a if 3 * k <= n)
        a_mid = sum(1 for k in a if 3 * k > n and 2 * k < n)
        for k in a:
            if 3 * k > n and 2 * k < n:
                violations.append((n, k))
        d_mid = sum(1 for k in d if 2 * k >= n and 3 * k <= 2 * n)
        span = sum(1 for k in range(1, n + 1) if 2 * k >= n and 3 * k <= 2 * n)
        klass = {v: "D" for v in d}
        klass.update({v: "A" for v in a})
        primes = tuple((p, klass.get(p, "C")) for p in upper_half_primes(n))
        rows.append(
            BandRow(
                n=n,
                a_lo_count=a_lo,
                a_mid_count=a_mid,
                d_mid_count=d_mid,
                d_mid_span=span,
                prime_classes=primes,
            )
        )
    return rows, BandSummary(n_max=n_max, mid_band_violations=tuple(violations))


def lemoine_check(n_from: int, n_to: int) -> list[tuple[int, int | None]]:
    """Per-n smallest even winning opening, or None when no even number is in D."""
    if not 1 <= n_from <= n_to:
        raise ValueError(f"bad range [{n_from}, {n_to}]")
    out = []
    for n in range(n_from, n_to + 1):
        evens = [v for v in decomposition_for(n).d_set if v % 2 == 0]
        out.append((n, evens[0] if evens else None))
    return out


def large_prime_check(n_max: int) -> list[tuple[int, int]]:
    """(n, p) pairs violating: with >= 2 primes in (n/2, n], each lies in D(G_n)."""
    violations = []
    for n in range(3, n_max + 1):
        primes = upper_half_primes(n)
        if len(primes) < 2:
            continue
        d = set(decomposition_for(n).d_set)
        for p in primes:
            if p not in d:
                violations.append((n, p))
    return violations


def one_in_a_threshold(n_max: int) -> int | None:
    """Smallest n0 with vertex 1 in A(G_n) for every n0 <= n <= n_max, or None."""
    threshold = None
    for n in range(n_max, 0, -1):
        if decomposition_for(n).label_of(1) != "A":
            break
        threshold = n
    return threshold


def _prime_class_field(prime_classes: tuple[tuple[int, str], ...]) -> str:
    return ";".join(f"{p}={c}" for p, c in prime_classes)


def write_sweep_csv(rows: list[SweepRow], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as f:
        out = csv.writer(f, lineterminator="\n")
        out.writerow(["n", "d_size", "a_size", "c_size"])
        for r in rows:
            out.writerow([r.n, r.d_size, r.a_size, r.c_size])


def write_membership_csv(cells: list[MembershipCell], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as f:
        out = csv.writer(f, lineterminator="\n")
        out.writerow(["n", "k", "class"])
        for c in cells:
            out.writerow([c.n, c.k, c.klass])


def write_bands_csv(rows: list[BandRow], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as f:
        out = csv.writer(f, lineterminator="\n")
        out.writerow(
            [
                "n",
                "a_lo_count",
                "a_mid_count",
                "d_mid_density_num",
                "d_mid_density_den",
                "primes_upper_half_class",
            ]
        )
        for r in rows:
            out.writerow(
                [r.n, r.a_lo_count, r.a_mid_count, r.d_mid_count, r.d_mid_span,
                 _prime_class_field(r.prime_classes)]
            )


def write_lemoine_csv(rows: list[tuple[int, int | None]], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as f:
        out = csv.writer(f, lineterminator="\n")
        out.writerow(["n", "even_witness"])
        for n, witness in rows:
            out.writerow([n, "" if witness is None else witness])


@dataclass(frozen=True)
class AnalysisRun:
    n_max: int
    paths: tuple[str, ...]
    band_summary: BandSummary


def run_full_analysis(n_max: int, out_dir: str) -> AnalysisRun:
    """Emit sweep.csv, membership.csv, bands.csv and lemoine.csv under out_dir."""
    os.makedirs(out_dir, exist_ok=True)
    sweep_path = os.path.join(out_dir, "sweep.csv")
    membership_path = os.path.join(out_dir, "membership.csv")
    bands_path = os.path.join(out_dir, "bands.csv")
    lemoine_path = os.path.join(out_dir, "lemoine.csv")

    write_sweep_csv(sweep_decompositions(n_max), sweep_path)
    write_membership_csv(membership_grid(n_max), membership_path)
    band_rows, summary = band_report(n_max)
    write_bands_csv(band_rows, bands_path)
    write_lemoine_csv(lemoine_check(1, n_max), lemoine_path)

    # Sidecar metadata for the membership grid: the reference lines drawn at
    # k = n/3, n/2 and 2n/3, plus the band-observation status.
    meta_path = os.path.join(out_dir, "membership.meta.json")
    with open(meta_path, "w", encoding="utf-8") as f:
        json.dump(
            {
                "n_max": n_max,
                "threshold_lines": [f"{p}/{q}" for p, q in THRESHOLD_LINES],
                "mid_band_empty": summary.mid_band_empty,
                "mid_band_violations": [list(v) for v in summary.mid_band_violations],
            },
            f,
        )
        f.write("\n")

    return AnalysisRun(
        n_max=n_max,
        paths=(sweep_path, membership_path, bands_path, lemoine_path),
        band_summary=summary,
    )
