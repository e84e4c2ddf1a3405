#!/usr/bin/env python3
"""Solve hyperturan LP exports with scipy's MILP solver.

Usage: solve_ilp.py FILE.lp [FILE.lp ...]
Prints "<file> <optimum>" per input. Exits 77 when scipy is unavailable.
"""
import re
import sys

try:
    import numpy as np
    from scipy.optimize import Bounds, LinearConstraint, milp
except ImportError:
    sys.exit(77)


def parse_lp(path):
    variables = set()
    rows = []
    section = None
    with open(path) as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("\\"):
                continue
            low = line.lower()
            if low in ("maximize", "subject to", "binary", "end"):
                section = low
                continue
            if section == "maximize":
                variables.update(re.findall(r"x(\d+)", line))
            elif section == "subject to":
                lhs, rhs = line.split(":", 1)[1].split("<=")
                rows.append(([int(v) for v in re.findall(r"x(\d+)", lhs)], float(rhs)))
    return sorted(int(v) for v in variables), rows


def solve(path):
    variables, rows = parse_lp(path)
    index = {v: i for i, v in enumerate(variables)}
    m = len(variables)
    if not rows:
        return m
    a = np.zeros((len(rows), m))
    for r, (vs, _) in enumerate(rows):
        for v in vs:
            a[r, index[v]] = 1.0
    ub = np.array([rhs for _, rhs in rows])
    res = milp(
        c=-np.ones(m),
        constraints=LinearConstraint(a, -np.inf, ub),
        integrality=np.ones(m),
        bounds=Bounds(0, 1),
    )
    if not res.success:
        raise SystemExit(f"{path}: solver failed: {res.message}")
    return int(round(-res.fun))


def main(argv):
    if len(argv) < 2:
        print(__doc__, file=sys.stderr)
        return 1
    for path in argv[1:]:
        print(path, solve(path))
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
