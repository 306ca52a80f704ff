#!/usr/bin/env python3
"""Reference solve for the shared SVM test instances.

Reads the JSON emitted by tests/dump_solver_cases on stdin and prints, for each
case, the optimal value of

    ||w||^2 + c_pos * sum_{y=+1} max(0, 1 - (w.phi + b))
            + c_neg * sum_{y=-1} max(0, 1 + w.phi + b)

with the bias unregularized, solved by cvxpy. The printed values are frozen
into tests/solver_reference.hpp.

Usage:  ./dump_solver_cases | python3 tests/oracle/reference_solver.py
"""

import json
import sys

import cvxpy as cp
import numpy as np


def solve(case):
    phi = np.array(case["phi"], dtype=float)
    y = np.array(case["labels"], dtype=float)
    n, d = phi.shape
    w = cp.Variable(d)
    b = cp.Variable()
    margins = cp.multiply(y, phi @ w + b)
    obj = cp.sum_squares(w)
    cost = np.where(y > 0, case["c_pos"], case["c_neg"])
    obj = obj + cp.sum(cp.multiply(cost, cp.pos(1 - margins)))
    prob = cp.Problem(cp.Minimize(obj))
    prob.solve(solver=cp.CLARABEL)
    if prob.status not in ("optimal", "optimal_inaccurate"):
        raise RuntimeError(f"solver status {prob.status}")
    return prob.value


def main():
    cases = json.load(sys.stdin)
    values = [solve(c) for c in cases]
    for i, v in enumerate(values):
        print(f"    {v:.12g},  // case {i}")


if __name__ == "__main__":
    main()
