import itertools
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from powerlab.lp import INFEASIBLE, OPTIMAL, UNBOUNDED, linprog


def test_textbook_maximisation():
    # max 3x + 5y st x <= 4, 2y <= 12, 3x + 2y <= 18  ->  (2, 6), value 36
    res = linprog([-3, -5], [[1, 0], [0, 2], [3, 2]], [4, 12, 18])
    assert res.status == OPTIMAL
    assert res.x == (2, 6) and res.objective == -36


def test_infeasible():
    res = linprog([1, 1], [[1, 1]], [-1])
    assert res.status == INFEASIBLE


def test_unbounded():
    res = linprog([-1, 0], [[0, 1]], [1])
    assert res.status == UNBOUNDED


def test_free_variable_goes_negative():
    # min t st t >= -3 (i.e. -t <= 3), t free
    res = linprog([1], [[-1]], [3], free=[0])
    assert res.x == (-3,)


def test_equalities_with_redundant_rows():
    res = linprog([1, 2, 0], A_eq=[[1, 1, 1], [2, 2, 2]], b_eq=[1, 2])
    assert res.status == OPTIMAL and res.objective == 0
    assert sum(res.x) == 1


def test_exact_thirds():
    res = linprog([-1, -1, -1], A_eq=[[3, 0, 0], [0, 3, 0], [0, 0, 3]], b_eq=[1, 1, 1])
    assert res.x == (Fraction(1, 3),) * 3


def _vertex_optimum(c, A, b):
    """Best objective over all basic solutions of A x <= b, x >= 0 (2 variables)."""
    rows = [list(r) for r in A] + [[-1, 0], [0, -1]]
    rhs = list(b) + [0, 0]
    best = None
    for (r1, b1), (r2, b2) in itertools.combinations(zip(rows, rhs), 2):
        det = r1[0] * r2[1] - r1[1] * r2[0]
        if det == 0:
            continue
        x = Fraction(b1 * r2[1] - r1[1] * b2, det)
        y = Fraction(r1[0] * b2 - b1 * r2[0], det)
        if all(r[0] * x + r[1] * y <= bb for r, bb in zip(rows, rhs)):
            val = c[0] * x + c[1] * y
            best = val if best is None else min(best, val)
    return best


@settings(max_examples=80, deadline=None)
@given(
    st.lists(st.integers(-5, 5), min_size=2, max_size=2),
    st.lists(st.tuples(st.integers(0, 6), st.integers(0, 6), st.integers(1, 20)), min_size=1, max_size=4),
)
def test_bounded_two_variable_programs_match_vertex_enumeration(c, cons):
    # the box x, y <= 10 keeps every instance bounded and feasible at the origin
    A = [[a, b] for a, b, _ in cons] + [[1, 0], [0, 1]]
    b = [r for _, _, r in cons] + [10, 10]
    res = linprog(c, A, b)
    assert res.status == OPTIMAL
    assert res.objective == _vertex_optimum(c, A, b)
