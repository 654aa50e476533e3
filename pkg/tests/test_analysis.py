from __future__ import annotations

import csv
import json
import random

import pytest

from junipergreen.analysis import (
    THRESHOLD_LINES,
    band_report,
    decomposition_for,
    lemoine_check,
    large_prime_check,
    membership_grid,
    one_in_a_threshold,
    run_full_analysis,
    sweep_decompositions,
    upper_half_primes,
)
from junipergreen.decomposition import decompose_naive
from junipergreen.game import graph_for

N_SWEEP = 120  # module-level exercises; the acceptance suite runs the full 300


def test_sweep_rows_fixture_values():
    rows = {r.n: r for r in sweep_decompositions(16)}
    assert (rows[16].d_size, rows[16].a_size, rows[16].c_size) == (9, 5, 2)
    assert (rows[2].d_size, rows[2].a_size, rows[2].c_size) == (0, 0, 2)
    assert (rows[5].d_size, rows[5].a_size, rows[5].c_size) == (2, 1, 2)


def test_sweep_rows_sum_to_n():
    for r in sweep_decompositions(N_SWEEP):
        assert r.d_size + r.a_size + r.c_size == r.n


def test_membership_grid_shape_and_cells():
    cells = membership_grid(16)
    assert len(cells) == 16 * 17 // 2
    by_key = {(c.n, c.k): c.klass for c in cells}
    assert by_key[(16, 7)] == "C"
    assert by_key[(16, 12)] == "A"
    assert by_key[(1, 1)] == "D"


def test_membership_at_100_has_58_62_in_d():
    cells = {(c.n, c.k): c.klass for c in membership_grid(100) if c.n == 100}
    assert cells[(100, 58)] == "D"
    assert cells[(100, 62)] == "D"


def test_membership_cells_agree_with_naive_on_samples():
    rng = random.Random(17)
    cells = membership_grid(200)
    by_n: dict[int, dict[int, str]] = {}
    for c in cells:
        by_n.setdefault(c.n, {})[c.k] = c.klass
    for n in rng.sample(range(1, 201), 20):
        dec = decompose_naive(graph_for(n))
        for k in range(1, n + 1):
            assert by_n[n][k] == dec.label_of(k)


def test_threshold_metadata_lines():
    assert THRESHOLD_LINES == ((1, 3), (1, 2), (2, 3))


# ---------------------------------------------------------------- bands


def test_band_counts_g16():
    rows, _ = band_report(16)
    r16 = rows[15]
    # A(G_16) = {1,2,3,5,12}: 1,2,3,5 are <= 16/3, none lies in (16/3, 8).
    assert r16.a_lo_count == 4
    assert r16.a_mid_count == 0
    assert dict(r16.prime_classes) == {11: "D", 13: "D"}


def test_band_counts_g5():
    rows, _ = band_report(5)
    r5 = rows[4]
    assert r5.a_mid_count == 0  # A = {1}, not in (5/3, 2.5)
    assert dict(r5.prime_classes) == {3: "D", 5: "D"}


def test_band_interval_arithmetic_is_exact():
    rows, _ = band_report(36)
    r = rows[35]  # n=36: boundaries 12, 18, 24 all integral
    dec = decomposition_for(36)
    assert r.a_lo_count == sum(1 for k in dec.a_set if 3 * k <= 36)
    assert r.a_mid_count == sum(1 for k in dec.a_set if 36 < 3 * k and 2 * k < 36)
    assert r.d_mid_span == sum(1 for k in range(1, 37) if 2 * k >= 36 and 3 * k <= 72)


def test_band_summary_reports_not_asserts():
    rows, summary = band_report(N_SWEEP)
    assert summary.n_max == N_SWEEP
    # The summary must carry exactly the violations present in the rows.
    from_rows = [
        (r.n, k)
        for r in rows
        for k in decomposition_for(r.n).a_set
        if 3 * k > r.n and 2 * k < r.n
    ]
    assert list(summary.mid_band_violations) == from_rows
    assert summary.mid_band_empty == (not from_rows)


def test_upper_half_primes_includes_n_itself():
    assert upper_half_primes(5) == [3, 5]
    assert upper_half_primes(16) == [11, 13]
    assert upper_half_primes(13) == [7, 11, 13]


# ---------------------------------------------------------------- lemoine / primes


def test_lemoine_examples():
    rows = dict(lemoine_check(1, 130))
    assert rows[4] is None
    assert rows[100] is not None and rows[100] % 2 == 0
    d100 = set(decomposition_for(100).d_set)
    assert rows[100] in d100
    # 58 and 62 both qualify as even witnesses at n=100.
    assert {58, 62} <= d100
    for n in range(120, 131):
        assert rows[n] is not None


def test_lemoine_rejects_bad_range():
    with pytest.raises(ValueError):
        lemoine_check(10, 5)


def test_large_prime_check_clean_to_sweep_limit():
    assert large_prime_check(N_SWEEP) == []


def test_one_in_a_threshold():
    # 1 is D at n=1, C at n=2; it stabilizes in A from some small n onwards.
    assert decomposition_for(1).label_of(1) == "D"
    assert decomposition_for(2).label_of(1) == "C"
    assert decomposition_for(16).label_of(1) == "A"
    threshold = one_in_a_threshold(N_SWEEP)
    assert threshold is not None
    for n in range(threshold, N_SWEEP + 1):
        assert decomposition_for(n).label_of(1) == "A"
    if threshold > 1:
        assert decomposition_for(threshold - 1).label_of(1) != "A"


# ---------------------------------------------------------------- file output


def test_run_full_analysis_files(tmp_path):
    run = run_full_analysis(40, str(tmp_path))
    names = [p.rsplit("/", 1)[-1] for p in run.paths]
    assert names == ["sweep.csv", "membership.csv", "bands.csv", "lemoine.csv"]

    sweep = (tmp_path / "sweep.csv").read_text()
    assert sweep.startswith("n,d_size,a_size,c_size\n")
    assert sweep.endswith("\n")
    with open(tmp_path / "sweep.csv") as f:
        rows = list(csv.DictReader(f))
    assert len(rows) == 40
    assert [int(r["n"]) for r in rows] == list(range(1, 41))
    r16 = rows[15]
    assert (r16["d_size"], r16["a_size"], r16["c_size"]) == ("9", "5", "2")

    membership = (tmp_path / "membership.csv").read_text().splitlines()
    assert membership[0] == "n,k,class"
    assert len(membership) == 1 + 40 * 41 // 2
    keys = [tuple(map(int, line.split(",")[:2])) for line in membership[1:]]
    assert keys == sorted(keys)

    bands = (tmp_path / "bands.csv").read_text().splitlines()
    assert bands[0] == "n,a_lo_count,a_mid_count,d_mid_density_num,d_mid_density_den,primes_upper_half_class"
    row16 = bands[16].split(",")
    assert row16[0] == "16" and row16[2] == "0"
    assert row16[5] == "11=D;13=D"

    lemoine = (tmp_path / "lemoine.csv").read_text().splitlines()
    assert lemoine[0] == "n,even_witness"
    assert lemoine[4] == "4,"  # no witness at n=4

    meta = json.loads((tmp_path / "membership.meta.json").read_text())
    assert meta["threshold_lines"] == ["1/3", "1/2", "2/3"]
    assert "mid_band_empty" in meta
