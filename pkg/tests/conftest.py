import math

import pytest
from hypothesis import strategies as st

from latsort import (
    DivisibilityLattice,
    PowersetLattice,
    TotalOrderLattice,
    canonical_m3,
    canonical_n5,
)
from latsort.latfile import load_fixture

DIV = DivisibilityLattice()
ORDER = TotalOrderLattice()
POW16 = PowersetLattice(16)

# element strategies for the infinite lattice families
div_elements = st.integers(min_value=0, max_value=1000)
div_positive = st.integers(min_value=1, max_value=1000)
order_elements = st.integers(min_value=-(2**63), max_value=2**63 - 1)
pow_elements = st.integers(min_value=0, max_value=2**16 - 1)

FAMILIES = {
    "div": (DIV, div_positive),
    "order": (ORDER, st.integers(min_value=-1000, max_value=1000)),
    "powerset16": (POW16, pow_elements),
}


def bitmask_sort(meet, join, x):
    """Reference sort over subsets enumerated as bitmasks, independent of k_subsets."""
    n = len(x)
    by_size = {}
    for mask in range(1, 2**n):
        members = [x[i] for i in range(n) if mask >> i & 1]
        j = members[0]
        for v in members[1:]:
            j = join(j, v)
        k = len(members)
        by_size[k] = j if k not in by_size else meet(by_size[k], j)
    return [by_size[k] for k in range(1, n + 1)]


def gcd_lcm_sort(x):
    return bitmask_sort(math.gcd, math.lcm, x)


@pytest.fixture
def n5():
    return canonical_n5()


@pytest.fixture
def m3():
    return canonical_m3()


@pytest.fixture(params=["n5", "m3", "chain5", "bool3", "div60"])
def fixture_lattice(request):
    return load_fixture(request.param)


ACCEPTANCE_RESULTS = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        doc = report.user_properties and dict(report.user_properties).get("criterion")
        if doc:
            status = "PASS" if report.passed else "FAIL"
            ACCEPTANCE_RESULTS.append(f"{status}  {doc}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)
