from __future__ import annotations

import os
import random
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

import oracles  # noqa: E402
from tropcrit.matroid import from_bases, graphic  # noqa: E402
from tropcrit.partitions import SetPartition  # noqa: E402

settings.register_profile(
    "repo",
    derandomize=True,
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "repo"))


# -- strategies ---------------------------------------------------------------

@st.composite
def linear_matroids(draw, min_size=1, max_size=6, max_rows=3):
    """Column matroids of small integer matrices (loops and parallels included)."""
    size = draw(st.integers(min_size, max_size))
    rows = draw(st.integers(1, max_rows))
    cols = draw(
        st.lists(
            st.lists(st.integers(-2, 2), min_size=rows, max_size=rows),
            min_size=size,
            max_size=size,
        )
    )
    return from_bases(size - 1, oracles.linear_matroid_bases(cols))


@st.composite
def graphic_matroids(draw, max_vertices=5, max_edges=7):
    nv = draw(st.integers(1, max_vertices))
    edges = draw(
        st.lists(
            st.tuples(st.integers(0, nv - 1), st.integers(0, nv - 1)),
            min_size=1,
            max_size=max_edges,
        )
    )
    return graphic(nv, edges)


matroids = st.one_of(linear_matroids(), graphic_matroids())


@st.composite
def set_partitions(draw, ground):
    ground = sorted(ground)
    labels = draw(st.lists(st.integers(0, len(ground) - 1), min_size=len(ground), max_size=len(ground)))
    blocks: dict[int, set[int]] = {}
    for e, lab in zip(ground, labels):
        blocks.setdefault(lab, set()).add(e)
    return SetPartition(blocks.values())


def random_tree_pair(rng, n):
    """A random arboreal pair (lambda on 0..n, mu on 1..n).

    Grows a bipartite tree one vertex at a time, each new vertex hanging off a
    random vertex of the other side, then labels the n edges by a random
    permutation of 1..n. Left vertex 0 carries the element 0.
    """
    sides = [0]  # 0 = left, 1 = right
    ends = []
    for _ in range(n):
        side = rng.randrange(2)
        if side == 0 and 1 not in sides:
            side = 1
        anchor = rng.choice([v for v, s in enumerate(sides) if s != side])
        sides.append(side)
        ends.append((anchor, len(sides) - 1))
    labels = list(range(1, n + 1))
    rng.shuffle(labels)
    blocks: dict[int, set[int]] = {0: {0}}
    for lab, (a, b) in zip(labels, ends):
        blocks.setdefault(a, set()).add(lab)
        blocks.setdefault(b, set()).add(lab)
    lam = SetPartition(blocks[v] for v, s in enumerate(sides) if s == 0)
    mu = SetPartition(blocks[v] for v, s in enumerate(sides) if s == 1)
    return lam, mu


@st.composite
def tree_pairs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return (n,) + random_tree_pair(random.Random(seed), n)


# -- acceptance summary ---------------------------------------------------------

ACCEPTANCE = {
    "test_ac01_symbolic_tree_solution": "AC1  symbolic signed-path solution of the 10-vertex tree pair",
    "test_ac02_numeric_tree_solution": "AC2  numeric solution with w = powers of ten",
    "test_ac03_point_count_equals_beta": "AC3  fast count = oracle count = beta on the corpus, every e",
    "test_ac04_point_sets_and_flags": "AC4  oracle point set = fast point set, flags from beta-nbc bases",
    "test_ac05_arboreal_property_suite": "AC5  tree / cycle / disconnected property suite, n = 3..8",
    "test_ac06_bergman_membership_agreement": "AC6  circuit criterion = flag-cone membership, shift invariant",
    "test_ac07_flat_coflat_union": "AC7  |F u G| != |E| - 1 for all flat/coflat pairs",
    "test_ac08_order_invariance": "AC8  #beta-nbc bases stable under 10 relabelings",
    "test_ac09_chamberwise_classes": "AC9  continuity (|E| <= 5) and t_e divisibility (|E| <= 6)",
    "test_ac10_rapid_growth_inequalities": "AC10 sign-pattern inequalities strict for n <= 6",
}

_outcomes: dict[str, str] = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.split("::")[-1]
    if "test_acceptance.py" not in report.nodeid or name not in ACCEPTANCE:
        return
    if report.when == "call" or report.outcome != "passed":
        if report.outcome == "passed":
            _outcomes.setdefault(name, "PASS")
        else:
            _outcomes[name] = "FAIL" if report.outcome == "failed" else report.outcome.upper()


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for name, label in ACCEPTANCE.items():
        if name in _outcomes:
            terminalreporter.write_line(f"{_outcomes[name]:<5} {label}")


@pytest.fixture
def u24():
    from tropcrit.matroid import uniform

    return uniform(2, 4)


@pytest.fixture
def triangle():
    return graphic(3, [(0, 1), (1, 2), (0, 2)])
