import json
import math
import os
from pathlib import Path

import pytest

import qnc

DATA_DIR = Path(os.environ.get("QNC_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))
ZEROS = DATA_DIR / "zeta_zeros_100.txt"


def test_pairing_values():
    assert qnc.qnc(2, 3) == pytest.approx(0.0022048198443960716, rel=1e-15)
    assert qnc.qnc(3, 2) == -qnc.qnc(2, 3)
    assert qnc.qnc(7, 7) == 0.0
    assert qnc.qnc("2", "5", as_string=True).startswith("0.0017207689901581044149")
    assert abs(qnc.qnc(5, 11)) <= qnc.qnc_bound(5, 11)


def test_series_and_errors():
    f = qnc.eval_F(2, 3)
    assert f["terms_used"] >= 1
    assert float(f["truncation_error"]) <= 1e-40 * float(f["value"])
    with pytest.raises(ValueError):
        qnc.eval_F(1, 3)
    with pytest.raises(ValueError):
        qnc.qnc("abc", 3)


def test_matrix_and_aggregates():
    m = qnc.build_matrix(10)
    assert m.n == 10
    assert m.primes[:4] == [2, 3, 5, 7]
    rows = m.to_list()
    assert all(rows[i][i] == 0.0 for i in range(10))
    assert all(rows[i][j] == -rows[j][i] for i in range(10) for j in range(10))
    total = sum(abs(v) for row in rows for v in row)
    assert qnc.entry_abs_sum(m) == pytest.approx(total, rel=1e-13)
    assert qnc.hs_norm_sq(m) > 0.0
    assert 0.0 < m.tail_bound < 0.5613
    assert not m.tail_divergent
    assert qnc.build_matrix(6, "modified").tail_divergent
    with pytest.raises(RuntimeError):
        qnc.build_matrix(0)
    with pytest.raises(ValueError):
        qnc.build_matrix(4, "weighted")


def test_weighted_variant():
    chi = qnc.CharacterTable(5, {1: 1, 2: 1j, 4: -1, 3: -1j})
    m = qnc.build_matrix(6, "weighted", chi)
    z = m.entry(0, 1)
    assert z.real == pytest.approx(0.0, abs=1e-30)
    assert z.imag == pytest.approx(qnc.qnc(2, 3), rel=1e-14)
    with pytest.raises(ValueError):
        qnc.CharacterTable(5, {1: 1, 2: 0.5})


def test_spectrum_and_determinants():
    m = qnc.build_matrix(8)
    s = qnc.singular_values(m)
    lam = s.lambdas
    assert len(lam) == 8
    assert lam == sorted(lam, reverse=True)
    assert s.pairing_defect < 1e-8
    assert sum(lam) <= qnc.entry_abs_sum(m)
    w = 10.0
    expected = math.prod(1 + w * w * lam[2 * k] * lam[2 * k + 1] for k in range(4))
    assert qnc.det_from_spectrum(s, w).real == pytest.approx(expected, rel=1e-12)
    assert qnc.det2_from_spectrum(s, w).real == pytest.approx(expected, rel=1e-12)
    coeffs = qnc.det_series_coeffs(m)
    assert len(coeffs) == 9
    series = sum(c * w**k for k, c in enumerate(coeffs))
    assert series.real == pytest.approx(expected, rel=1e-12)


def test_zeros_and_report():
    table = qnc.load_zeros(str(ZEROS))
    assert len(table) == 100
    assert 14.0 < table.ordinates[0] < 15.0
    assert qnc.reciprocal_partial_sum(table, 100) == pytest.approx(1.03117, rel=2e-5)
    assert qnc.count_estimate(100.0) == pytest.approx(29.0, abs=0.05)
    with pytest.raises(ValueError):
        qnc.count_estimate(10.0)

    m = qnc.build_matrix(20)
    report = qnc.contradiction_report(qnc.singular_values(m), m, table)
    assert report.crossover_k == 1
    doc = json.loads(report.to_json())
    assert set(doc) >= {"trace_norm_bound", "partial_sums", "crossover_k", "n", "zeros_used"}
    assert doc["n"] == 20
