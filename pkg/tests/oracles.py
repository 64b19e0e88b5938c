"""Reference computations that share no code with detcert.

Slow on purpose: cofactor expansion, textbook Gauss-Jordan over Fractions,
2^n cube-vertex enumeration, LP-based segment lengths.
"""

from fractions import Fraction
from itertools import product


def cofactor_det(rows):
    rows = [list(r) for r in rows]
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = 0
    for c in range(n):
        if rows[0][c] == 0:
            continue
        minor = [r[:c] + r[c + 1:] for r in rows[1:]]
        total += (-1) ** c * rows[0][c] * cofactor_det(minor)
    return total


def gauss_jordan_inverse(rows):
    n = len(rows)
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
         for i, r in enumerate(rows)]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [r[n:] for r in a]


def bordered(m):
    n = len(m)
    return [list(r) + [1] for r in m] + [[0] * n + [1]]


def lambdas(inv, x):
    point = list(x) + [1]
    n1 = len(inv)
    return [sum(inv[i][j] * point[i] for i in range(n1)) for j in range(n1)]


def xi_by_enumeration(node_rows):
    """Cube-vertex formula evaluated over all 2^n vertices."""
    inv = gauss_jordan_inverse(node_rows)
    n = len(node_rows) - 1
    worst = None
    for v in product((0, 1), repeat=n):
        m = max(-l for l in lambdas(inv, v))
        worst = m if worst is None else max(worst, m)
    if worst <= 0:
        return Fraction(1)
    return (n + 1) * worst + 1


def row_abs_sums_naive(m):
    inv = gauss_jordan_inverse(bordered(m))
    return [sum(abs(x) for x in inv[i]) for i in range(len(m))]


def axial_diameter_lp(vertices, axis):
    """Longest segment in conv(vertices) parallel to e_axis, by linear programming.

    Variables are two barycentric vectors mu, nu >= 0 summing to 1 each and a
    length t; maximise t subject to sum (nu_j - mu_j) x^(j) = t e_axis.
    """
    import numpy as np
    from scipy.optimize import linprog

    X = np.array([[float(c) for c in v] for v in vertices])
    k, n = X.shape
    # x = [mu (k), nu (k), t]
    c = np.zeros(2 * k + 1)
    c[-1] = -1.0
    A_eq = []
    b_eq = []
    for d in range(n):
        row = np.concatenate([-X[:, d], X[:, d], [-(1.0 if d == axis else 0.0)]])
        A_eq.append(row)
        b_eq.append(0.0)
    A_eq.append(np.concatenate([np.ones(k), np.zeros(k), [0.0]]))
    b_eq.append(1.0)
    A_eq.append(np.concatenate([np.zeros(k), np.ones(k), [0.0]]))
    b_eq.append(1.0)
    bounds = [(0, None)] * (2 * k) + [(None, None)]
    res = linprog(c, A_eq=np.array(A_eq), b_eq=b_eq, bounds=bounds, method="highs")
    assert res.status == 0
    return -res.fun


def all_01(n):
    for bits in product((0, 1), repeat=n * n):
        yield [list(bits[r * n:(r + 1) * n]) for r in range(n)]


def all_pm1(n):
    for bits in product((1, -1), repeat=n * n):
        yield [list(bits[r * n:(r + 1) * n]) for r in range(n)]


def brute_max_abs_det(matrices):
    return max(abs(cofactor_det(m)) for m in matrices)
