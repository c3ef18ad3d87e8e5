from fractions import Fraction

import pytest

from qualbelief import Frame, SetFunction, from_ranking

# Subset ids on a two-element frame.
EMPTY, T1, T2, BOTH = 0, 1, 2, 3


def frac(s):
    return Fraction(s)


@pytest.fixture
def frame2():
    return Frame(["theta1", "theta2"])


@pytest.fixture
def frame3():
    return Frame.of_size(3)


@pytest.fixture
def worked_p(frame2):
    return SetFunction(frame2, [0, "2/5", "3/5", 1])


@pytest.fixture
def worked_bel(frame2):
    return SetFunction(frame2, [0, "1/5", "1/2", 1])


@pytest.fixture
def worked_f(frame2):
    return SetFunction(frame2, [0, "3/5", "7/10", 1])


@pytest.fixture
def vacuous(frame2):
    return SetFunction(frame2, [0, 0, 0, 1])


@pytest.fixture
def example_relation(frame2):
    """frame > {theta2} > {theta1} > empty."""
    return from_ranking(frame2, [[EMPTY], [T1], [T2], [BOTH]])


@pytest.fixture
def trivial_relation(frame2):
    return from_ranking(frame2, [[EMPTY, T1, T2, BOTH]])


@pytest.fixture
def uniform_relation(frame2):
    return from_ranking(frame2, [[EMPTY], [T1, T2], [BOTH]])


@pytest.fixture
def frame_at_bottom(frame2):
    """frame < empty < {theta1} < {theta2}: breaks dominance."""
    return from_ranking(frame2, [[BOTH], [EMPTY], [T1], [T2]])


def scipy_lp(system):
    """(status, optimal value) of a LinearSystem from scipy's floating-point solver."""
    optimize = pytest.importorskip("scipy.optimize")
    a_ub, b_ub, a_eq, b_eq = [], [], [], []
    for c in system.constraints:
        row = [float(x) for x in c.coefficients]
        if c.sense == "=":
            a_eq.append(row)
            b_eq.append(float(c.rhs))
        elif c.sense == "<=":
            a_ub.append(row)
            b_ub.append(float(c.rhs))
        else:
            a_ub.append([-x for x in row])
            b_ub.append(-float(c.rhs))
    out = optimize.linprog(
        [-float(x) for x in system.objective],
        A_ub=a_ub or None,
        b_ub=b_ub or None,
        A_eq=a_eq or None,
        b_eq=b_eq or None,
        bounds=[(0, None)] * len(system.variables),
    )
    status = {0: "optimal", 2: "infeasible", 3: "unbounded"}[out.status]
    return status, (-out.fun if out.status == 0 else None)


# One line per acceptance criterion, printed after the run.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
