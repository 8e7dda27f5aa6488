import pytest

from etaheat.verify import SUITES, VerifyOptions, run_suites


@pytest.mark.parametrize("suite", ["specfun", "barnes", "residues", "theorems", "symmetry", "shift"])
def test_suite_passes(suite):
    results = run_suites([suite], VerifyOptions())
    assert results
    assert all(r.passed for r in results), [r.as_dict() for r in results if not r.passed]


def test_clifford_suite_small():
    results = run_suites(["clifford"], VerifyOptions(n_trace=100, n_identity=6))
    assert all(r.passed for r in results)


@pytest.mark.parametrize("m", [4, 6])
def test_spectral_suite(m):
    results = run_suites(["spectral"], VerifyOptions(m=m))
    assert all(r.passed for r in results), [r.as_dict() for r in results]


def test_suite_names():
    assert set(SUITES) == {"clifford", "specfun", "barnes", "residues", "theorems", "spectral", "symmetry", "shift"}
