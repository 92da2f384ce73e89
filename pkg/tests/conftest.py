import math

import numpy as np
import pytest

from minpolydiag import _pykernels

try:
    from minpolydiag import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = [pytest.param(_pykernels, id="python")]
if _ckernels is not None:
    BACKENDS.append(pytest.param(_ckernels, id="cython"))


@pytest.fixture(params=BACKENDS)
def kernels(request):
    return request.param


def angle(u, v) -> float:
    """Angle between complex vectors, insensitive to phase."""
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    c = abs(np.vdot(u, v)) / (np.linalg.norm(u) * np.linalg.norm(v))
    return math.acos(min(1.0, c))


@pytest.fixture
def rng():
    return np.random.default_rng(20261015)


ACCEPTANCE_RESULTS: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key}: {detail}")
