import hashlib
import pathlib

import pytest

import fppcert

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


def test_equations_match_shipped_file():
    text = fppcert.equations_text()
    assert len(text.splitlines()) == 84
    assert text == (DATA / "fpp84.eqs").read_text()
    digest = hashlib.sha256(text.encode()).hexdigest()
    assert digest == fppcert.dataset_sha256()
    assert (DATA / "fpp84.eqs.sha256").read_text().split()[0] == digest
    assert fppcert.dataset_sha256(conjugate=True) != digest


def test_field_helpers():
    assert fppcert.find_sqrt_minus7(263) == 16
    assert fppcert.find_sqrt_minus7(5) is None
    assert fppcert.seventh_root_exponent(263) == 75
    with pytest.raises(fppcert.FppError):
        fppcert.seventh_root_exponent(29)


def test_fast_checks_pass():
    report = fppcert.run_checks("lattice")
    assert report["meta"]["overall"] == "pass"
    assert report["meta"]["sqrt_minus7"] == 16
    [rec] = report["checks"]
    assert rec["id"] == "lattice_search"
    assert set(rec) == {"id", "status", "observed", "expected", "ms"}

    report = fppcert.run_checks(["sextic_identities", "z_transport"], samples=30, threads=2)
    assert [c["status"] for c in report["checks"]] == ["pass", "pass"]


def test_configuration_error():
    with pytest.raises(fppcert.ConfigError):
        fppcert.run_checks("all", prime=5)


def test_sampling_is_seeded():
    a = fppcert.sample_points(samples=10)
    assert a == fppcert.sample_points(samples=10)
    assert a != fppcert.sample_points(samples=10, seed=7)
    assert all(len(p) == 4 and all(0 <= v < 263 for v in p) for p in a)


def test_lattice_target():
    g = fppcert.gram_matrix(2, [0, 1, 0, 0, 1, 1])
    assert len(g) == 24 and fppcert.integer_rank(g) == 19
    rows = fppcert.lattice_csv().splitlines()
    assert len(rows) == 73
