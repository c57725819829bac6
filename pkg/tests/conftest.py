import sys
from pathlib import Path

import numpy as np
import pytest

from bicomplex import BicomplexMatrix, BicomplexVector

DATA = Path(__file__).parent / "data"


def random_complex(rng, *shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_bc_matrix(rng, rows, cols=None):
    cols = rows if cols is None else cols
    return BicomplexMatrix(random_complex(rng, rows, cols), random_complex(rng, rows, cols))


def random_bc_vector(rng, n):
    return BicomplexVector(random_complex(rng, n), random_complex(rng, n))


def well_conditioned(rng, n):
    """Random bicomplex matrix whose components have condition number below ~10."""
    comps = []
    for _ in range(2):
        q1, _ = np.linalg.qr(random_complex(rng, n, n))
        q2, _ = np.linalg.qr(random_complex(rng, n, n))
        comps.append(q1 @ np.diag(rng.uniform(0.5, 4.0, n)) @ q2)
    return BicomplexMatrix(*comps)


def hermitian_with_negative(rng, n):
    """*-Hermitian matrix where one component carries one eigenvalue in [-2, -0.1]."""
    comps = []
    bad = rng.integers(2)
    for idx in range(2):
        q, _ = np.linalg.qr(random_complex(rng, n, n))
        w = rng.uniform(0, 3, n)
        if idx == bad:
            w[rng.integers(n)] = -rng.uniform(0.1, 2)
        comps.append(q @ np.diag(w) @ q.conj().T)
    return BicomplexMatrix(*comps)


@pytest.fixture
def rng():
    return np.random.default_rng(20240518)


@pytest.fixture
def data_dir():
    return DATA


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is not None and module.RESULTS:
        RESULTS = module.RESULTS
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
