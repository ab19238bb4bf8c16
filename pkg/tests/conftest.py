"""Shared fixtures, independent oracles, and random-context generators.

The oracles here deliberately avoid the code paths they check:
``brute_force_concepts`` closes every object subset of the power set, and
``label_relevance`` recomputes relevance by enumerating the lattice of
the reduced context instead of filtering survivors.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

import fcarel
from fcarel import FormalContext

settings.register_profile(
    "fcarel",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("fcarel")


# -- fixtures --------------------------------------------------------------


@pytest.fixture(scope="session")
def water4() -> FormalContext:
    return fcarel.water4()


@pytest.fixture(scope="session")
def water6() -> FormalContext:
    return fcarel.water6()


@pytest.fixture(scope="session")
def greedy_trap() -> FormalContext:
    return fcarel.greedy_trap()


# -- generators ------------------------------------------------------------


def random_context(n_obj: int, n_attr: int, density: float, seed: int) -> FormalContext:
    rng = np.random.default_rng(seed)
    mat = rng.random((n_obj, n_attr)) < density
    return FormalContext(
        [f"g{i}" for i in range(n_obj)],
        [f"m{j}" for j in range(n_attr)],
        mat,
    )


# -- oracles ---------------------------------------------------------------


def brute_force_concepts(ctx: FormalContext) -> set[tuple[frozenset, frozenset]]:
    """Close every object subset; |G| must stay small (2^|G| subsets)."""
    found = set()
    for bits in range(1 << ctx.n_objects):
        subset = [g for g in range(ctx.n_objects) if bits >> g & 1]
        intent = ctx.derive("objects", subset)
        extent = ctx.derive("attributes", intent)
        found.add((extent, intent))
    return found


def label_relevance(ctx: FormalContext, attrs) -> Fraction:
    """Relevance via an independent route: enumerate the lattice of the
    context with ``attrs`` removed and compare total extent masses."""
    total = fcarel.enumerate_concepts(ctx).extent_sum
    remaining = fcarel.enumerate_concepts(ctx.subcontext_remove(attrs)).extent_sum
    return Fraction(total - remaining, total)


# -- acceptance reporting ----------------------------------------------------

_ACCEPTANCE_RESULTS: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if "test_acceptance" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call":
        status = "PASS" if report.passed else "FAIL"
        _ACCEPTANCE_RESULTS.append((name, status))
    elif report.when == "setup" and report.skipped:
        _ACCEPTANCE_RESULTS.append((name, "SKIP"))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, status in _ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{status}  {name}")
