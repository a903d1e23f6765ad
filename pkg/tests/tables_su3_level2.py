"""Frozen reference tables for the A2 theory at level two.

Hand-checked coupling tables, recoupling values and exchange phases for the
six-label theory 1, 3, 3b, 6, 6b, 8.  Coupling entries are keyed by source
states and target state; a state is a (weight, inner) pair where the inner
index separates the two (0,0) states of the adjoint (index 0 is the state
written with a plus in the tables, index 1 the minus one).  Cells absent
from a table are exact zeros.
"""

from __future__ import annotations

W = {
    "1": (0, 0),
    "3": (1, 0),
    "3b": (0, 1),
    "6": (2, 0),
    "6b": (0, 2),
    "8": (1, 1),
}


def _s(w, inner=0):
    return (w, inner)


def cg_tables(Q):
    """All coupling tables, keyed (j1, j2, j) by label name.

    Each value is a list of (state1, state2, target_state, value).
    """
    q, n, rt = Q.q, Q.n, Q.rt
    one = Q.one
    r2 = rt(n(2))
    r3 = rt(n(3))
    r4 = rt(n(4))
    r24 = rt(n(2) * n(4))
    r23 = rt(n(2) * n(3))
    s4p1 = rt(n(4) + 1)
    t = {}

    t[("3", "3", "3b")] = [
        (_s((1, 0)), _s((-1, 1)), _s((0, 1)), q(1, 4) / r2),
        (_s((-1, 1)), _s((1, 0)), _s((0, 1)), -q(-1, 4) / r2),
        (_s((1, 0)), _s((0, -1)), _s((1, -1)), q(1, 4) / r2),
        (_s((0, -1)), _s((1, 0)), _s((1, -1)), -q(-1, 4) / r2),
        (_s((-1, 1)), _s((0, -1)), _s((-1, 0)), q(1, 4) / r2),
        (_s((0, -1)), _s((-1, 1)), _s((-1, 0)), -q(-1, 4) / r2),
    ]

    t[("3", "3", "6")] = [
        (_s((1, 0)), _s((1, 0)), _s((2, 0)), one),
        (_s((1, 0)), _s((-1, 1)), _s((0, 1)), q(-1, 4) / r2),
        (_s((-1, 1)), _s((1, 0)), _s((0, 1)), q(1, 4) / r2),
        (_s((-1, 1)), _s((-1, 1)), _s((-2, 2)), one),
        (_s((1, 0)), _s((0, -1)), _s((1, -1)), q(-1, 4) / r2),
        (_s((0, -1)), _s((1, 0)), _s((1, -1)), q(1, 4) / r2),
        (_s((-1, 1)), _s((0, -1)), _s((-1, 0)), q(-1, 4) / r2),
        (_s((0, -1)), _s((-1, 1)), _s((-1, 0)), q(1, 4) / r2),
        (_s((0, -1)), _s((0, -1)), _s((0, -2)), one),
    ]

    t[("3", "3b", "1")] = [
        (_s((1, 0)), _s((-1, 0)), _s((0, 0)), q(1, 2) / r3),
        (_s((-1, 1)), _s((1, -1)), _s((0, 0)), -1 / r3),
        (_s((0, -1)), _s((0, 1)), _s((0, 0)), q(-1, 2) / r3),
    ]

    t[("3", "3b", "8")] = [
        (_s((1, 0)), _s((0, 1)), _s((1, 1)), one),
        (_s((1, 0)), _s((1, -1)), _s((2, -1)), one),
        (_s((1, 0)), _s((-1, 0)), _s((0, 0), 0), q(-1, 4) / rt(2 * (n(2) + 1))),
        (_s((1, 0)), _s((-1, 0)), _s((0, 0), 1), q(-1, 4) / rt(2 * (n(2) - 1))),
        (_s((-1, 1)), _s((0, 1)), _s((-1, 2)), one),
        (_s((-1, 1)), _s((1, -1)), _s((0, 0), 0), (q(1, 4) + q(-1, 4)) / rt(2 * (n(2) + 1))),
        (_s((-1, 1)), _s((1, -1)), _s((0, 0), 1), (q(1, 4) - q(-1, 4)) / rt(2 * (n(2) - 1))),
        (_s((-1, 1)), _s((-1, 0)), _s((-2, 1)), one),
        (_s((0, -1)), _s((0, 1)), _s((0, 0), 0), q(1, 4) / rt(2 * (n(2) + 1))),
        (_s((0, -1)), _s((0, 1)), _s((0, 0), 1), -q(1, 4) / rt(2 * (n(2) - 1))),
        (_s((0, -1)), _s((1, -1)), _s((1, -2)), one),
        (_s((0, -1)), _s((-1, 0)), _s((-1, -1)), one),
    ]

    t[("3", "6", "8")] = [
        (_s((1, 0)), _s((0, 1)), _s((1, 1)), q(1, 2) / r3),
        (_s((1, 0)), _s((-2, 2)), _s((-1, 2)), q(1, 4) * rt(n(2) / n(3))),
        (_s((1, 0)), _s((1, -1)), _s((2, -1)), q(1, 2) / r3),
        (_s((1, 0)), _s((-1, 0)), _s((0, 0), 0), q(1, 4) * rt((n(2) + 1) / (2 * n(3)))),
        (_s((1, 0)), _s((-1, 0)), _s((0, 0), 1), -q(1, 4) * rt((n(2) - 1) / (2 * n(3)))),
        (_s((1, 0)), _s((0, -2)), _s((1, -2)), q(1, 4) * rt(n(2) / n(3))),
        (_s((-1, 1)), _s((2, 0)), _s((1, 1)), -q(-1, 4) * rt(n(2) / n(3))),
        (_s((-1, 1)), _s((0, 1)), _s((-1, 2)), -q(-1, 2) / r3),
        (_s((-1, 1)), _s((1, -1)), _s((0, 0), 0), (q(3, 4) - q(-3, 4)) / rt(2 * (n(2) + 1) * n(3))),
        (_s((-1, 1)), _s((1, -1)), _s((0, 0), 1), (q(3, 4) + q(-3, 4)) / rt(2 * (n(2) - 1) * n(3))),
        (_s((-1, 1)), _s((-1, 0)), _s((-2, 1)), q(1, 2) / r3),
        (_s((-1, 1)), _s((0, -2)), _s((-1, -1)), q(1, 4) * rt(n(2) / n(3))),
        (_s((0, -1)), _s((2, 0)), _s((2, -1)), -q(-1, 4) * rt(n(2) / n(3))),
        (_s((0, -1)), _s((0, 1)), _s((0, 0), 0), -q(-1, 4) * rt((n(2) + 1) / (2 * n(3)))),
        (_s((0, -1)), _s((0, 1)), _s((0, 0), 1), -q(-1, 4) * rt((n(2) - 1) / (2 * n(3)))),
        (_s((0, -1)), _s((-2, 2)), _s((-2, 1)), -q(-1, 4) * rt(n(2) / n(3))),
        (_s((0, -1)), _s((1, -1)), _s((1, -2)), -q(-1, 2) / r3),
        (_s((0, -1)), _s((-1, 0)), _s((-1, -1)), -q(-1, 2) / r3),
    ]

    t[("3", "6b", "3b")] = [
        (_s((1, 0)), _s((-1, 1)), _s((0, 1)), q(3, 4) / r4),
        (_s((1, 0)), _s((0, -1)), _s((1, -1)), q(3, 4) / r4),
        (_s((1, 0)), _s((-2, 0)), _s((-1, 0)), q(1, 2) * rt(n(2) / n(4))),
        (_s((-1, 1)), _s((1, 0)), _s((0, 1)), -q(1, 4) / r4),
        (_s((-1, 1)), _s((2, -2)), _s((1, -1)), -rt(n(2) / n(4))),
        (_s((-1, 1)), _s((0, -1)), _s((-1, 0)), -q(-1, 4) / r4),
        (_s((0, -1)), _s((0, 2)), _s((0, 1)), q(-1, 2) * rt(n(2) / n(4))),
        (_s((0, -1)), _s((1, 0)), _s((1, -1)), q(-3, 4) / r4),
        (_s((0, -1)), _s((-1, 1)), _s((-1, 0)), q(-3, 4) / r4),
    ]

    t[("3", "8", "3")] = [
        (_s((1, 0)), _s((0, 0), 0), _s((1, 0)), q(3, 4) * rt(n(2) - 1) / rt(2 * n(2) * n(4))),
        (_s((1, 0)), _s((0, 0), 1), _s((1, 0)), q(3, 4) * rt(n(2) + 1) / rt(2 * n(2) * n(4))),
        (_s((1, 0)), _s((-2, 1)), _s((-1, 1)), q(1, 2) * r3 / r24),
        (_s((1, 0)), _s((-1, -1)), _s((0, -1)), q(1, 2) * r3 / r24),
        (_s((-1, 1)), _s((2, -1)), _s((1, 0)), -r3 / r24),
        (_s((-1, 1)), _s((0, 0), 0), _s((-1, 1)), (-q(1, 4) - q(-1, 4)) * rt(n(2) - 1) / rt(2 * n(2) * n(4))),
        (_s((-1, 1)), _s((0, 0), 1), _s((-1, 1)), (q(1, 4) - q(-1, 4)) * rt(n(2) + 1) / rt(2 * n(2) * n(4))),
        (_s((-1, 1)), _s((1, -2)), _s((0, -1)), -r3 / r24),
        (_s((0, -1)), _s((1, 1)), _s((1, 0)), q(-1, 2) * r3 / r24),
        (_s((0, -1)), _s((-1, 2)), _s((-1, 1)), q(-1, 2) * r3 / r24),
        (_s((0, -1)), _s((0, 0), 0), _s((0, -1)), q(-3, 4) * rt(n(2) - 1) / rt(2 * n(2) * n(4))),
        (_s((0, -1)), _s((0, 0), 1), _s((0, -1)), -q(-3, 4) * rt(n(2) + 1) / rt(2 * n(2) * n(4))),
    ]

    t[("3", "8", "6b")] = [
        (_s((1, 0)), _s((-1, 2)), _s((0, 2)), q(1, 4) / r2),
        (_s((1, 0)), _s((0, 0), 0), _s((1, 0)), q(1, 4) * rt(n(2) + 1) / (rt(2) * n(2))),
        (_s((1, 0)), _s((0, 0), 1), _s((1, 0)), -q(1, 4) * rt(n(2) - 1) / (rt(2) * n(2))),
        (_s((1, 0)), _s((-2, 1)), _s((-1, 1)), 1 / n(2)),
        (_s((1, 0)), _s((1, -2)), _s((2, -2)), q(1, 4) / r2),
        (_s((1, 0)), _s((-1, -1)), _s((0, -1)), 1 / n(2)),
        (_s((-1, 1)), _s((1, 1)), _s((0, 2)), -q(-1, 4) / r2),
        (_s((-1, 1)), _s((2, -1)), _s((1, 0)), -q(-1, 2) / n(2)),
        (_s((-1, 1)), _s((0, 0), 0), _s((-1, 1)), (q(1, 4) - q(-1, 4)) * rt(n(2) + 1) / (rt(2) * n(2))),
        (_s((-1, 1)), _s((0, 0), 1), _s((-1, 1)), (-q(1, 4) - q(-1, 4)) * rt(n(2) - 1) / (rt(2) * n(2))),
        (_s((-1, 1)), _s((1, -2)), _s((0, -1)), q(1, 2) / n(2)),
        (_s((-1, 1)), _s((-1, -1)), _s((-2, 0)), q(1, 4) / r2),
        (_s((0, -1)), _s((1, 1)), _s((1, 0)), -1 / n(2)),
        (_s((0, -1)), _s((-1, 2)), _s((-1, 1)), -1 / n(2)),
        (_s((0, -1)), _s((2, -1)), _s((2, -2)), -q(-1, 4) / r2),
        (_s((0, -1)), _s((0, 0), 0), _s((0, -1)), -q(-1, 4) * rt(n(2) + 1) / (rt(2) * n(2))),
        (_s((0, -1)), _s((0, 0), 1), _s((0, -1)), -q(-1, 4) * rt(n(2) - 1) / (rt(2) * n(2))),
        (_s((0, -1)), _s((-2, 1)), _s((-2, 0)), -q(-1, 4) / r2),
    ]

    t[("6", "6", "6b")] = [
        (_s((2, 0)), _s((-2, 2)), _s((0, 2)), q(1, 2) / r3),
        (_s((2, 0)), _s((-1, 0)), _s((1, 0)), q(1, 2) / r3),
        (_s((2, 0)), _s((0, -2)), _s((2, -2)), q(1, 2) / r3),
        (_s((0, 1)), _s((0, 1)), _s((0, 2)), -1 / r3),
        (_s((0, 1)), _s((1, -1)), _s((1, 0)), -q(-1, 4) / r23),
        (_s((0, 1)), _s((-1, 0)), _s((-1, 1)), q(3, 4) / r23),
        (_s((0, 1)), _s((0, -2)), _s((0, -1)), q(1, 2) / r3),
        (_s((-2, 2)), _s((2, 0)), _s((0, 2)), q(-1, 2) / r3),
        (_s((-2, 2)), _s((1, -1)), _s((-1, 1)), -1 / r3),
        (_s((-2, 2)), _s((0, -2)), _s((-2, 0)), q(1, 2) / r3),
        (_s((1, -1)), _s((0, 1)), _s((1, 0)), -q(1, 4) / r23),
        (_s((1, -1)), _s((-2, 2)), _s((-1, 1)), -1 / r3),
        (_s((1, -1)), _s((1, -1)), _s((2, -2)), -1 / r3),
        (_s((1, -1)), _s((-1, 0)), _s((0, -1)), -q(-1, 4) / r23),
        (_s((-1, 0)), _s((2, 0)), _s((1, 0)), q(-1, 2) / r3),
        (_s((-1, 0)), _s((0, 1)), _s((-1, 1)), q(-3, 4) / r23),
        (_s((-1, 0)), _s((1, -1)), _s((0, -1)), -q(1, 4) / r23),
        (_s((-1, 0)), _s((-1, 0)), _s((-2, 0)), -1 / r3),
        (_s((0, -2)), _s((2, 0)), _s((2, -2)), q(-1, 2) / r3),
        (_s((0, -2)), _s((0, 1)), _s((0, -1)), q(-1, 2) / r3),
        (_s((0, -2)), _s((-2, 2)), _s((-2, 0)), q(-1, 2) / r3),
    ]

    t[("6", "6b", "1")] = [
        (_s((2, 0)), _s((-2, 0)), _s((0, 0)), q(1) / rt(n(5) + 1)),
        (_s((0, 1)), _s((0, -1)), _s((0, 0)), -q(1, 2) / rt(n(5) + 1)),
        (_s((-2, 2)), _s((2, -2)), _s((0, 0)), 1 / rt(n(5) + 1)),
        (_s((1, -1)), _s((-1, 1)), _s((0, 0)), 1 / rt(n(5) + 1)),
        (_s((-1, 0)), _s((1, 0)), _s((0, 0)), -q(-1, 2) / rt(n(5) + 1)),
        (_s((0, -2)), _s((0, 2)), _s((0, 0)), q(-1) / rt(n(5) + 1)),
    ]

    t[("6", "8", "3b")] = [
        (_s((2, 0)), _s((-2, 1)), _s((0, 1)), q(3, 4) / r4),
        (_s((2, 0)), _s((-1, -1)), _s((1, -1)), q(3, 4) / r4),
        (_s((0, 1)), _s((0, 0), 0), _s((0, 1)), -q(1, 4) * rt(n(2) + 1) / rt(2 * n(2) * n(4))),
        (_s((0, 1)), _s((0, 0), 1), _s((0, 1)), -q(1, 4) * rt(n(2) - 1) / rt(2 * n(2) * n(4))),
        (_s((0, 1)), _s((1, -2)), _s((1, -1)), -1 / r24),
        (_s((0, 1)), _s((-1, -1)), _s((-1, 0)), q(1) / r24),
        (_s((-2, 2)), _s((2, -1)), _s((0, 1)), q(-1, 4) / r4),
        (_s((-2, 2)), _s((1, -2)), _s((-1, 0)), -q(1, 4) / r4),
        (_s((1, -1)), _s((-1, 2)), _s((0, 1)), q(-1, 2) / r24),
        (_s((1, -1)), _s((0, 0), 0), _s((1, -1)), (-q(1, 4) + q(-1, 4)) * rt(n(2) + 1) / rt(2 * n(2) * n(4))),
        (_s((1, -1)), _s((0, 0), 1), _s((1, -1)), (-q(1, 4) - q(-1, 4)) * rt(n(2) - 1) / rt(2 * n(2) * n(4))),
        (_s((1, -1)), _s((-2, 1)), _s((-1, 0)), -q(1, 2) / r24),
        (_s((-1, 0)), _s((1, 1)), _s((0, 1)), -q(-1) / r24),
        (_s((-1, 0)), _s((2, -1)), _s((1, -1)), 1 / r24),
        (_s((-1, 0)), _s((0, 0), 0), _s((-1, 0)), q(-1, 4) * rt(n(2) + 1) / rt(2 * n(2) * n(4))),
        (_s((-1, 0)), _s((0, 0), 1), _s((-1, 0)), -q(-1, 4) * rt(n(2) - 1) / rt(2 * n(2) * n(4))),
        (_s((0, -2)), _s((1, 1)), _s((1, -1)), -q(-3, 4) / r4),
        (_s((0, -2)), _s((-1, 2)), _s((-1, 0)), -q(-3, 4) / r4),
    ]

    eight_away = [
        (_s((1, 1)), _s((0, 0), 0), _s((1, 1)), q(3, 4) / s4p1),
        (_s((1, 1)), _s((0, 0), 1), _s((1, 1)), 0 * one),
        (_s((1, 1)), _s((-2, 1)), _s((-1, 2)), q(1, 2) * rt(n(2) + 1) / rt(2 * (n(4) + 1))),
        (_s((1, 1)), _s((1, -2)), _s((2, -1)), q(1, 2) * rt(n(2) + 1) / rt(2 * (n(4) + 1))),
        (_s((-1, 2)), _s((2, -1)), _s((1, 1)), -rt(n(2) + 1) / rt(2 * (n(4) + 1))),
        (_s((-1, 2)), _s((0, 0), 0), _s((-1, 2)), (-q(-1, 4) - q(1, 4) + q(3, 4)) / (2 * s4p1)),
        (_s((-1, 2)), _s((0, 0), 1), _s((-1, 2)), -q(1, 4) * r3 / (2 * s4p1)),
        (_s((-1, 2)), _s((-1, -1)), _s((-2, 1)), q(1, 2) * rt(n(2) + 1) / rt(2 * (n(4) + 1))),
        (_s((2, -1)), _s((-1, 2)), _s((1, 1)), -rt(n(2) + 1) / rt(2 * (n(4) + 1))),
        (_s((2, -1)), _s((0, 0), 0), _s((2, -1)), (-q(-1, 4) - q(1, 4) + q(3, 4)) / (2 * s4p1)),
        (_s((2, -1)), _s((0, 0), 1), _s((2, -1)), q(1, 4) * r3 / (2 * s4p1)),
        (_s((2, -1)), _s((-1, -1)), _s((1, -2)), q(1, 2) * rt(n(2) + 1) / rt(2 * (n(4) + 1))),
        (_s((0, 0), 0), _s((1, 1)), _s((1, 1)), q(-3, 4) / s4p1),
        (_s((0, 0), 0), _s((-1, 2)), _s((-1, 2)), (-q(-1, 4) - q(1, 4) + q(-3, 4)) / (2 * s4p1)),
        (_s((0, 0), 0), _s((2, -1)), _s((2, -1)), (-q(-1, 4) - q(1, 4) + q(-3, 4)) / (2 * s4p1)),
        (_s((0, 0), 0), _s((-2, 1)), _s((-2, 1)), (-q(-1, 4) - q(1, 4) + q(3, 4)) / (2 * s4p1)),
        (_s((0, 0), 0), _s((1, -2)), _s((1, -2)), (-q(-1, 4) - q(1, 4) + q(3, 4)) / (2 * s4p1)),
        (_s((0, 0), 0), _s((-1, -1)), _s((-1, -1)), q(3, 4) / s4p1),
        (_s((0, 0), 1), _s((1, 1)), _s((1, 1)), 0 * one),
        (_s((0, 0), 1), _s((-1, 2)), _s((-1, 2)), -q(-1, 4) * r3 / (2 * s4p1)),
        (_s((0, 0), 1), _s((2, -1)), _s((2, -1)), q(-1, 4) * r3 / (2 * s4p1)),
        (_s((0, 0), 1), _s((-2, 1)), _s((-2, 1)), q(1, 4) * r3 / (2 * s4p1)),
        (_s((0, 0), 1), _s((1, -2)), _s((1, -2)), -q(1, 4) * r3 / (2 * s4p1)),
        (_s((0, 0), 1), _s((-1, -1)), _s((-1, -1)), 0 * one),
        (_s((-2, 1)), _s((1, 1)), _s((-1, 2)), q(-1, 2) * rt(n(2) + 1) / rt(2 * (n(4) + 1))),
        (_s((-2, 1)), _s((0, 0), 0), _s((-2, 1)), (-q(-1, 4) - q(1, 4) + q(-3, 4)) / (2 * s4p1)),
        (_s((-2, 1)), _s((0, 0), 1), _s((-2, 1)), q(-1, 4) * r3 / (2 * s4p1)),
        (_s((-2, 1)), _s((1, -2)), _s((-1, -1)), -rt(n(2) + 1) / rt(2 * (n(4) + 1))),
        (_s((1, -2)), _s((1, 1)), _s((2, -1)), q(-1, 2) * rt(n(2) + 1) / rt(2 * (n(4) + 1))),
        (_s((1, -2)), _s((0, 0), 0), _s((1, -2)), (-q(-1, 4) - q(1, 4) + q(-3, 4)) / (2 * s4p1)),
        (_s((1, -2)), _s((0, 0), 1), _s((1, -2)), -q(-1, 4) * r3 / (2 * s4p1)),
        (_s((1, -2)), _s((-2, 1)), _s((-1, -1)), -rt(n(2) + 1) / rt(2 * (n(4) + 1))),
        (_s((-1, -1)), _s((-1, 2)), _s((-2, 1)), q(-1, 2) * rt(n(2) + 1) / rt(2 * (n(4) + 1))),
        (_s((-1, -1)), _s((2, -1)), _s((1, -2)), q(-1, 2) * rt(n(2) + 1) / rt(2 * (n(4) + 1))),
        (_s((-1, -1)), _s((0, 0), 0), _s((-1, -1)), q(-3, 4) / s4p1),
        (_s((-1, -1)), _s((0, 0), 1), _s((-1, -1)), 0 * one),
    ]
    eight_plus = [
        (_s((1, 1)), _s((-1, -1)), _s((0, 0), 0), q(1, 4) / s4p1),
        (_s((-1, 2)), _s((1, -2)), _s((0, 0), 0), (-q(-1, 4) + q(1, 4) + q(3, 4)) / (2 * s4p1)),
        (_s((2, -1)), _s((-2, 1)), _s((0, 0), 0), (-q(-1, 4) + q(1, 4) + q(3, 4)) / (2 * s4p1)),
        (_s((0, 0), 0), _s((0, 0), 0), _s((0, 0), 0), (-2 * (q(-1, 4) + q(1, 4)) + q(3, 4) + q(-3, 4)) / (2 * s4p1)),
        (_s((0, 0), 0), _s((0, 0), 1), _s((0, 0), 0), 0 * one),
        (_s((0, 0), 1), _s((0, 0), 0), _s((0, 0), 0), 0 * one),
        (_s((0, 0), 1), _s((0, 0), 1), _s((0, 0), 0), (q(3, 4) + q(-3, 4)) / (2 * s4p1)),
        (_s((-2, 1)), _s((2, -1)), _s((0, 0), 0), (q(-1, 4) - q(1, 4) + q(-3, 4)) / (2 * s4p1)),
        (_s((1, -2)), _s((-1, 2)), _s((0, 0), 0), (q(-1, 4) - q(1, 4) + q(-3, 4)) / (2 * s4p1)),
        (_s((-1, -1)), _s((1, 1)), _s((0, 0), 0), q(-1, 4) / s4p1),
    ]
    eight_minus = [
        (_s((1, 1)), _s((-1, -1)), _s((0, 0), 1), 0 * one),
        (_s((-1, 2)), _s((1, -2)), _s((0, 0), 1), q(1, 4) * r3 / (2 * s4p1)),
        (_s((2, -1)), _s((-2, 1)), _s((0, 0), 1), -q(1, 4) * r3 / (2 * s4p1)),
        (_s((0, 0), 0), _s((0, 0), 0), _s((0, 0), 1), 0 * one),
        (_s((0, 0), 0), _s((0, 0), 1), _s((0, 0), 1), (q(3, 4) + q(-3, 4)) / (2 * s4p1)),
        (_s((0, 0), 1), _s((0, 0), 0), _s((0, 0), 1), (q(3, 4) + q(-3, 4)) / (2 * s4p1)),
        (_s((0, 0), 1), _s((0, 0), 1), _s((0, 0), 1), 0 * one),
        (_s((-2, 1)), _s((2, -1)), _s((0, 0), 1), -q(-1, 4) * r3 / (2 * s4p1)),
        (_s((1, -2)), _s((-1, 2)), _s((0, 0), 1), q(-1, 4) * r3 / (2 * s4p1)),
        (_s((-1, -1)), _s((1, 1)), _s((0, 0), 1), 0 * one),
    ]
    t[("8", "8", "8")] = eight_away + eight_plus + eight_minus

    t[("8", "8", "1")] = [
        (_s((1, 1)), _s((-1, -1)), _s((0, 0)), q(1) / r24),
        (_s((-1, 2)), _s((1, -2)), _s((0, 0)), -q(1, 2) / r24),
        (_s((2, -1)), _s((-2, 1)), _s((0, 0)), -q(1, 2) / r24),
        (_s((0, 0), 0), _s((0, 0), 0), _s((0, 0)), 1 / r24),
        (_s((0, 0), 0), _s((0, 0), 1), _s((0, 0)), 0 * one),
        (_s((0, 0), 1), _s((0, 0), 0), _s((0, 0)), 0 * one),
        (_s((0, 0), 1), _s((0, 0), 1), _s((0, 0)), 1 / r24),
        (_s((-2, 1)), _s((2, -1)), _s((0, 0)), -q(-1, 2) / r24),
        (_s((1, -2)), _s((-1, 2)), _s((0, 0)), -q(-1, 2) / r24),
        (_s((-1, -1)), _s((1, 1)), _s((0, 0)), q(-1) / r24),
    ]

    return t


# swap/negation/conjugation sign exponents per fusion channel
S_EXPONENTS = {
    ("3", "3", "3b"): (1, 1, 0),
    ("3", "3", "6"): (0, 0, 0),
    ("3", "3b", "1"): (0, 0, 0),
    ("3", "3b", "8"): (0, 0, 0),
    ("3", "6", "8"): (1, 1, 0),
    ("3", "6b", "3b"): (0, 0, 0),
    ("3", "8", "3"): (0, 0, 0),
    ("3", "8", "6b"): (1, 1, 0),
    ("6", "6", "6b"): (0, 0, 0),
    ("6", "6b", "1"): (0, 0, 0),
    ("6", "8", "3b"): (1, 1, 0),
    ("8", "8", "1"): (0, 0, 0),
    ("8", "8", "8"): (0, 0, 0),
}


def f_singlet_families(Q):
    """Grouped 1x1 recoupling values: list of (value, [(j1, j2, j3, j), ...])."""
    q, n, rt = Q.q, Q.n, Q.rt
    return [
        (Q.one, [
            ("3", "3", "3b", "6b"), ("3", "3", "6", "3"), ("3", "3", "6", "6b"),
            ("3", "3b", "3", "6b"), ("3", "3b", "3b", "6"), ("3", "3b", "6", "3b"),
            ("3", "3b", "6b", "3"), ("3", "6", "3", "3"), ("3", "6", "3", "6b"),
            ("3", "6", "3b", "3b"), ("3", "6", "6", "3b"), ("3", "6b", "3b", "3"),
            ("6", "3", "3", "3"), ("6", "3", "3", "6b"), ("6", "3", "3b", "3b"),
            ("6", "3", "6", "3b"), ("6", "3b", "3", "3b"), ("6", "6", "3", "3b"),
        ]),
        (-n(3) / (n(2) * rt(n(5) + 1)), [
            ("3", "3", "6b", "8"), ("3", "3", "8", "6"), ("3", "6b", "6b", "8"),
            ("3", "6b", "8", "3b"), ("3", "8", "6b", "3b"), ("3", "8", "6b", "6"),
            ("6", "3b", "3b", "8"), ("6", "3b", "8", "6b"), ("6", "6", "3b", "8"),
            ("6", "6", "8", "3"), ("6", "8", "3b", "3"), ("6", "8", "3b", "6b"),
            ("8", "3", "3", "6"), ("8", "3", "6b", "6"), ("8", "3b", "3b", "6b"),
            ("8", "3b", "6", "6b"), ("8", "6", "3b", "3"), ("8", "6", "6", "3"),
            ("8", "6b", "3", "3b"), ("8", "6b", "6b", "3b"),
        ]),
        (1 / rt(n(5) + 1), [
            ("3", "3b", "6", "6"), ("3", "6b", "6", "3"), ("6", "3b", "3", "6"),
            ("6", "6", "6b", "6"), ("6", "6b", "3", "3"), ("6", "6b", "6b", "6b"),
        ]),
        (-1 / rt(n(5) + 1), [
            ("3", "6", "3b", "6"), ("3", "6b", "3b", "6b"),
            ("6", "3", "6b", "3"), ("6", "3b", "6b", "3b"),
        ]),
        (-n(2) / n(3), [
            ("3", "3b", "6b", "6b"), ("3", "6", "6b", "3"),
            ("6", "3", "3b", "6"), ("6", "6b", "3b", "3b"),
        ]),
        (-(1 / (rt(2) * n(2))) * rt((n(2) + n(3)) / (n(3) - 1)), [
            ("3", "6", "8", "8"), ("3", "8", "8", "6b"), ("6", "3", "8", "8"),
            ("6", "8", "8", "3b"), ("8", "3", "6", "8"), ("8", "3b", "6b", "8"),
            ("8", "6", "3", "8"), ("8", "6b", "3b", "8"), ("8", "8", "3", "6b"),
            ("8", "8", "3b", "6"), ("8", "8", "6", "3b"), ("8", "8", "6b", "3"),
        ]),
        (1 / n(4), [
            ("3", "6b", "3", "8"), ("3", "6b", "8", "6"), ("3", "8", "3", "6"),
            ("6", "3b", "6", "8"), ("6", "3b", "8", "3"), ("6", "8", "6", "3"),
            ("8", "3", "6b", "3b"), ("8", "3b", "6", "3"), ("8", "6", "3b", "6b"),
            ("8", "6b", "3", "6"),
        ]),
        (-1 / n(4), [
            ("6", "6b", "8", "8"), ("6", "8", "8", "6"), ("8", "6", "6b", "8"),
            ("8", "6b", "6", "8"), ("8", "8", "6", "6"), ("8", "8", "6b", "6b"),
        ]),
        (n(3) / (n(3) + n(5)), [
            ("3", "8", "6", "8"), ("6", "8", "3", "8"), ("6", "8", "6b", "8"),
            ("8", "3", "8", "6b"), ("8", "3b", "8", "6"), ("8", "6", "8", "3b"),
            ("8", "6", "8", "6"), ("8", "6b", "8", "3"), ("8", "6b", "8", "6b"),
        ]),
        (1 / (n(5) + 1), [
            ("6", "6b", "6", "6"),
        ]),
    ]


def f_blocks(Q):
    """All 2x2 recoupling matrices: list of (matrix, [(j1, j2, j3, j), ...]).

    Rows and columns are ordered by the canonical label order
    1, 3, 3b, 6, 6b, 8.
    """
    q, n, rt = Q.q, Q.n, Q.rt
    m1 = [
        [-1 / rt(n(3)), (n(3) - 1) / rt(n(5) + 1)],
        [(n(3) - 1) / rt(n(5) + 1), 1 / rt(n(3))],
    ]
    m2 = [
        [1 / n(3), n(2) * rt(n(3) - 1) / n(3)],
        [n(2) * rt(n(3) - 1) / n(3), -1 / n(3)],
    ]
    m3 = [
        [1 / rt(n(3) + n(5)), -1 / n(2)],
        [(n(4) + 1) / (rt(2) * n(2) * rt(n(5) + n(4) + 1)), rt(n(2) + n(3)) / (rt(2) * n(2))],
    ]
    m4 = [
        [m3[0][0], m3[1][0]],
        [m3[0][1], m3[1][1]],
    ]
    m5 = [
        [-1 / n(2), rt(n(3)) / n(2)],
        [rt(n(3)) / n(2), 1 / n(2)],
    ]
    m6 = [
        [-1 / (n(3) + n(5)), -(n(3) / n(2) ** 2) * rt(n(3) / (n(5) + 1))],
        [-(n(3) / n(2) ** 2) * rt(n(3) / (n(5) + 1)), n(3) / n(2) ** 2],
    ]
    m7 = [
        [1 / (n(3) + n(5)), 1 / rt(n(3) + n(5))],
        [1 / rt(n(3) + n(5)), (n(3) - n(2) - 4) / (2 * (n(2) + n(3)))],
    ]
    return [
        (m1, [("3", "3b", "3b", "3b"), ("3", "3", "3b", "3")]),
        (m2, [("3", "3b", "3", "3")]),
        (m3, [("3", "3b", "8", "8"), ("8", "8", "3b", "3b"), ("8", "8", "3", "3")]),
        (m4, [("3", "8", "8", "3"), ("8", "3b", "3", "8"), ("8", "3", "3b", "8")]),
        (m5, [("3", "3", "3", "8"), ("3", "3", "8", "3b"), ("3", "8", "3", "3b"),
              ("8", "3b", "3b", "3"), ("8", "3", "3", "3b")]),
        (m6, [("3", "8", "3b", "8"), ("8", "3b", "8", "3b"), ("8", "3", "8", "3")]),
        (m7, [("8", "8", "8", "8")]),
    ]


def r_values(Q):
    """Exchange phases keyed (j1, j2, j) by label name.

    Every phase here satisfies the ribbon identity
    (R^{ab}_c)^2 = theta_c / (theta_a theta_b) with the twists
    theta_3 = q^{4/3}, theta_6 = q^{10/3}, theta_8 = q^3.  That identity
    fixes the exponent signs of the (3,6;8) and (8,8;8) entries, which are
    sometimes quoted conjugated.
    """
    q = Q.q
    return {
        ("3", "3b", "1"): q(-4, 3),
        ("6", "6b", "1"): q(-10, 3),
        ("8", "8", "1"): q(-3),
        ("3b", "3b", "3"): -q(-2, 3),
        ("3b", "6", "3"): q(-5, 3),
        ("3", "8", "3"): q(-3, 2),
        ("6b", "8", "3"): -q(-5, 2),
        ("3", "3", "6"): q(1, 3),
        ("3b", "8", "6"): -q(-1, 2),
        ("6b", "6b", "6"): q(-5, 3),
        ("3", "3b", "8"): q(1, 6),
        ("3", "6", "8"): -q(-5, 6),
        ("8", "8", "8"): q(-3, 2),
    }
