import time

import numpy as np
import pytest
from hypothesis import settings, strategies as st

from bispinor.potentials import PotentialConfig

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

coupling = st.floats(-2.0, 2.0, allow_nan=False, allow_infinity=False)
vector = st.tuples(coupling, coupling, coupling).map(np.array)


@st.composite
def configs(draw, electric=True):
    return PotentialConfig(
        m=draw(coupling), phi_S=draw(coupling), mu=draw(coupling),
        A0=draw(coupling), Avec=draw(vector), q=draw(coupling),
        Wvec=draw(vector), kappa=draw(coupling), chi=draw(coupling),
        Bvec=draw(vector), Evec=draw(vector) if electric else np.zeros(3),
        pvec=draw(vector),
    )


def random_config(rng, electric=True):
    u = lambda n=1: rng.uniform(-2.0, 2.0, size=n)  # noqa: E731
    return PotentialConfig(
        m=u()[0], phi_S=u()[0], mu=u()[0], A0=u()[0], Avec=u(3), q=u()[0],
        Wvec=u(3), kappa=u()[0], chi=u()[0], Bvec=u(3),
        Evec=u(3) if electric else np.zeros(3), pvec=u(3),
    )


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


# -- acceptance summary ------------------------------------------------------

ACCEPTANCE = {}
_START = time.perf_counter()


def record(criterion, label, ok, detail=""):
    ACCEPTANCE.setdefault(criterion, []).append((label, bool(ok), detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for crit in sorted(ACCEPTANCE):
        checks = ACCEPTANCE[crit]
        failed = [c for c in checks if not c[1]]
        status = "PASS" if not failed else "FAIL"
        tr.write_line(f"criterion {crit:2d}: {status} ({len(checks) - len(failed)}/{len(checks)} checks)")
        for label, ok, detail in checks:
            if not ok:
                tr.write_line(f"    failed: {label}: {detail}")
    tr.write_line(f"session wall time: {time.perf_counter() - _START:.1f} s")
