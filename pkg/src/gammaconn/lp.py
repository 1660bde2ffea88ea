"""Linear-programming cross-checks for the connectivity invariant.

A small dense two-phase simplex (Bland's rule, hence deterministic and
cycle-free) drives two oracles: the per-vertex minimax program whose minimum
over pinned vertices reproduces the invariant, and a sign-pattern
enumeration for the l1 edge-variation analogue on tiny graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product

import math
import numpy as np

from .errors import (
    DisconnectedGraph,
    GammaConnError,
    IterationCap,
    TooLarge,
    TooSmall,
    VertexOutOfRange,
)
from .graph import Graph, is_connected

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

LESS_EQ = "<="
EQUAL = "="
GREATER_EQ = ">="

_FEAS_TOL = 1e-8


@dataclass(frozen=True)
class LinearProgram:
    """Minimization LP: objective @ x subject to row constraints and box bounds."""

    num_vars: int
    objective: tuple[float, ...]
    constraints: tuple[tuple[tuple[float, ...], str, float], ...]
    bounds: tuple[tuple[float, float], ...]

    def __post_init__(self):
        if len(self.objective) != self.num_vars:
            raise ValueError("objective length != num_vars")
        if len(self.bounds) != self.num_vars:
            raise ValueError("bounds length != num_vars")
        for coeffs, rel, _ in self.constraints:
            if len(coeffs) != self.num_vars:
                raise ValueError("constraint coefficient length != num_vars")
            if rel not in (LESS_EQ, EQUAL, GREATER_EQ):
                raise ValueError(f"unknown relation {rel!r}")
        for lo, hi in self.bounds:
            if lo > hi:
                raise ValueError(f"lower bound {lo} exceeds upper bound {hi}")


@dataclass(frozen=True)
class LPSolution:
    status: str
    objective: float | None
    assignment: np.ndarray | None
    iterations: int


def _pivot(tableau, basis, row, col):
    tableau[row] /= tableau[row, col]
    column = tableau[:, col].copy()
    column[row] = 0.0
    tableau -= np.outer(column, tableau[row])
    basis[row] = col


def _run_phase(tableau, basis, tol, cap, iterations):
    """Bland pivots on a tableau whose last row is the reduced-cost row.

    Returns (status, iterations); status is OPTIMAL or UNBOUNDED.
    """
    n_rows = tableau.shape[0] - 1
    cost = tableau[-1]
    while True:
        entering = -1
        for j in range(tableau.shape[1] - 1):
            if cost[j] < -tol:
                entering = j
                break
        if entering < 0:
            return OPTIMAL, iterations
        ratio_best = math.inf
        leave = -1
        for i in range(n_rows):
            a = tableau[i, entering]
            if a > tol:
                r = tableau[i, -1] / a
                if r < ratio_best - tol or (abs(r - ratio_best) <= tol and
                                            (leave < 0 or basis[i] < basis[leave])):
                    ratio_best = r
                    leave = i
        if leave < 0:
            return UNBOUNDED, iterations
        _pivot(tableau, basis, leave, entering)
        iterations += 1
        if iterations > cap:
            raise IterationCap(f"simplex exceeded {cap} pivots")


def simplex_solve(lp: LinearProgram, tol: float = 1e-9) -> LPSolution:
    """Two-phase dense simplex with Bland's anti-cycling rule.

    Bounded variables are shifted (or reflected) to x' >= 0, genuinely free
    variables are split, finite upper bounds become explicit rows; phase one
    minimizes artificial variables of the >= and = rows.
    """
    n = lp.num_vars
    # variable transforms: each entry maps transformed column(s) back
    transforms = []  # (kind, data, cols)
    columns = []     # per transformed column: (orig_var, sign)
    extra_rows = []  # (coeffs over transformed cols as dict, rhs) for upper bounds
    offset = np.zeros(n)
    for j, (lo, hi) in enumerate(lp.bounds):
        if lo == hi:
            transforms.append(("fixed", lo, ()))
            offset[j] = lo
        elif lo > -math.inf:
            col = len(columns)
            columns.append((j, 1.0))
            transforms.append(("shift", lo, (col,)))
            offset[j] = lo
            if hi < math.inf:
                extra_rows.append(({col: 1.0}, hi - lo))
        elif hi < math.inf:
            col = len(columns)
            columns.append((j, -1.0))
            transforms.append(("reflect", hi, (col,)))
            offset[j] = hi
        else:
            col = len(columns)
            columns.append((j, 1.0))
            columns.append((j, -1.0))
            transforms.append(("split", 0.0, (col, col + 1)))

    n_cols = len(columns)
    rows = []  # (dense coeffs, relation, rhs) in transformed space
    for coeffs, rel, rhs in lp.constraints:
        coeffs = np.asarray(coeffs, dtype=float)
        dense = np.zeros(n_cols)
        for col, (orig, sign) in enumerate(columns):
            dense[col] = sign * coeffs[orig]
        rows.append((dense, rel, rhs - float(coeffs @ offset)))
    for sparse, rhs in extra_rows:
        dense = np.zeros(n_cols)
        for col, val in sparse.items():
            dense[col] = val
        rows.append((dense, LESS_EQ, rhs))

    m_rows = len(rows)
    n_slack = sum(1 for _, rel, _ in rows if rel != EQUAL)
    art_rows = []
    tableau = np.zeros((m_rows + 1, n_cols + n_slack + 1))
    basis = [-1] * m_rows
    slack_at = n_cols
    for i, (dense, rel, rhs) in enumerate(rows):
        if rhs < 0:
            dense, rhs = -dense, -rhs
            rel = {LESS_EQ: GREATER_EQ, GREATER_EQ: LESS_EQ, EQUAL: EQUAL}[rel]
        tableau[i, :n_cols] = dense
        tableau[i, -1] = rhs
        if rel == LESS_EQ:
            tableau[i, slack_at] = 1.0
            basis[i] = slack_at
            slack_at += 1
        elif rel == GREATER_EQ:
            tableau[i, slack_at] = -1.0
            slack_at += 1
            art_rows.append(i)
        else:
            art_rows.append(i)

    cap = 200 * (m_rows + n_cols + n_slack + 10)
    iterations = 0
    if art_rows:
        art_start = n_cols + n_slack
        full = np.zeros((m_rows + 1, art_start + len(art_rows) + 1))
        full[:-1, :art_start] = tableau[:-1, :art_start]
        full[:-1, -1] = tableau[:-1, -1]
        for k, i in enumerate(art_rows):
            full[i, art_start + k] = 1.0
            basis[i] = art_start + k
        # phase-1 reduced costs: minimize the artificial sum
        full[-1, art_start:-1] = 1.0
        for i in art_rows:
            full[-1] -= full[i]
        status, iterations = _run_phase(full, basis, tol, cap, iterations)
        phase1_value = -full[-1, -1]
        if status != OPTIMAL or phase1_value > _FEAS_TOL:
            return LPSolution(INFEASIBLE, None, None, iterations)
        # drive leftover artificials out of the basis, drop redundant rows
        keep = []
        for i in range(m_rows):
            if basis[i] >= art_start:
                piv = -1
                for j in range(art_start):
                    if abs(full[i, j]) > tol:
                        piv = j
                        break
                if piv < 0:
                    continue  # all-zero row: redundant
                _pivot(full, basis, i, piv)
                iterations += 1
            keep.append(i)
        tableau = np.zeros((len(keep) + 1, n_cols + n_slack + 1))
        tableau[:-1, :-1] = full[keep][:, :art_start]
        tableau[:-1, -1] = full[keep][:, -1]
        basis = [basis[i] for i in keep]

    # phase-2 reduced costs from the real objective on transformed columns
    cost = np.zeros(n_cols + n_slack + 1)
    obj = np.asarray(lp.objective, dtype=float)
    for col, (orig, sign) in enumerate(columns):
        cost[col] = sign * obj[orig]
    tableau[-1] = cost
    for i, b in enumerate(basis):
        if cost[b] != 0.0:
            tableau[-1] -= cost[b] * tableau[i]
    status, iterations = _run_phase(tableau, basis, tol, cap, iterations)
    if status == UNBOUNDED:
        return LPSolution(UNBOUNDED, None, None, iterations)

    values = np.zeros(n_cols)
    for i, b in enumerate(basis):
        if b < n_cols:
            values[b] = tableau[i, -1]
    assignment = np.zeros(n)
    for j, (kind, data, cols) in enumerate(transforms):
        if kind == "fixed":
            assignment[j] = data
        elif kind == "shift":
            assignment[j] = data + values[cols[0]]
        elif kind == "reflect":
            assignment[j] = data - values[cols[0]]
        else:
            assignment[j] = values[cols[0]] - values[cols[1]]
    return LPSolution(OPTIMAL, float(obj @ assignment), assignment, iterations)


# ---------------------------------------------------------------------------
# invariant oracle

def build_lp_k(g: Graph, k: int) -> LinearProgram:
    """Minimax edge-difference program with vertex k pinned to 1.

    Variables are x_0..x_{n-1} and the objective variable y (last). Pinning
    is encoded as equal bounds; y inherits the implied window [0, 2].
    """
    if not 0 <= k < g.n:
        raise VertexOutOfRange(f"vertex {k} not in [0, {g.n})")
    n = g.n
    y = n
    objective = [0.0] * n + [1.0]
    constraints = []
    for u, v in g.edges:
        row = [0.0] * (n + 1)
        row[u], row[v], row[y] = 1.0, -1.0, -1.0
        constraints.append((tuple(row), LESS_EQ, 0.0))
        row = [0.0] * (n + 1)
        row[u], row[v], row[y] = -1.0, 1.0, -1.0
        constraints.append((tuple(row), LESS_EQ, 0.0))
    constraints.append((tuple([1.0] * n + [0.0]), EQUAL, 0.0))
    bounds = [(-1.0, 1.0)] * n + [(0.0, 2.0)]
    bounds[k] = (1.0, 1.0)
    return LinearProgram(n + 1, tuple(objective), tuple(constraints), tuple(bounds))


def solve_lp_k(g: Graph, k: int, tol: float = 1e-9) -> LPSolution:
    sol = simplex_solve(build_lp_k(g, k), tol)
    if sol.status != OPTIMAL:
        raise GammaConnError(f"pinned-vertex LP at k={k} reported {sol.status}")
    return sol


def gamma_lp_details(g: Graph, tol: float = 1e-9):
    """All pinned-vertex optima: (minimum, per-vertex list, best vertex, best x)."""
    if g.n < 2:
        raise TooSmall("the LP oracle needs at least 2 vertices")
    if not is_connected(g):
        raise DisconnectedGraph("the LP oracle mirrors the connected-only formula")
    per_k = []
    best_k = -1
    best = math.inf
    best_x = None
    for k in range(g.n):
        sol = solve_lp_k(g, k, tol)
        per_k.append(sol.objective)
        if sol.objective < best - 1e-12:
            best = sol.objective
            best_k = k
            best_x = sol.assignment[: g.n]
    return best, per_k, best_k, best_x


def gamma_via_lp(g: Graph, tol: float = 1e-9) -> float:
    """Minimum over pinned vertices of the minimax program's optimum."""
    return gamma_lp_details(g, tol)[0]


# ---------------------------------------------------------------------------
# l1 edge-variation oracle (tiny graphs only)

def b_small_oracle(g: Graph, max_n: int = 12, tol: float = 1e-9) -> float:
    """Minimum total edge variation under zero sum and unit l1 norm.

    One LP per sign pattern: inside a fixed orthant the l1 norm is linear,
    so enumerating all orthants makes the nonconvex constraint exact.
    Negating x maps a pattern to its complement, so the first sign is
    pinned positive and only 2^(n-1) patterns are solved.
    """
    if g.n < 2:
        raise TooSmall("the l1 oracle needs at least 2 vertices")
    if g.n > max_n:
        raise TooLarge(f"the l1 oracle is capped at n <= {max_n}")
    if not is_connected(g):
        raise DisconnectedGraph("the l1 oracle requires a connected graph")
    n, m = g.n, g.m
    edge_rows = []
    for i, (u, v) in enumerate(g.edges):
        row = [0.0] * (n + m)
        row[u], row[v], row[n + i] = 1.0, -1.0, -1.0
        edge_rows.append((tuple(row), LESS_EQ, 0.0))
        row = [0.0] * (n + m)
        row[u], row[v], row[n + i] = -1.0, 1.0, -1.0
        edge_rows.append((tuple(row), LESS_EQ, 0.0))
    zero_sum = (tuple([1.0] * n + [0.0] * m), EQUAL, 0.0)
    objective = tuple([0.0] * n + [1.0] * m)
    t_bounds = [(0.0, 2.0)] * m

    best = math.inf
    for signs in iter_product((1.0, -1.0), repeat=n - 1):
        sg = (1.0,) + signs
        norm_row = (tuple(list(sg) + [0.0] * m), EQUAL, 1.0)
        bounds = [((0.0, 1.0) if s > 0 else (-1.0, 0.0)) for s in sg] + t_bounds
        lp = LinearProgram(n + m, objective, tuple(edge_rows) + (zero_sum, norm_row),
                           tuple(bounds))
        sol = simplex_solve(lp, tol)
        if sol.status == OPTIMAL and sol.objective < best:
            best = sol.objective
    if not math.isfinite(best):
        raise GammaConnError("no sign pattern produced a feasible l1 program")
    return best
