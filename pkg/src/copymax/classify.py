"""Type classification and small-graph sweeps.

Sweeping the edge density from 0 to 1 and asking which host attains the
best density partitions [0, 1] into S (quasi-star wins), T (a strictly
interior three-class host wins) and K (quasi-clique wins) regions.  For
every graph the observed patterns are K, SK, TK or STK (the K tail is a
proven fact, the rest is numerics), and anything else is reported verbatim
as OTHER rather than forced into a pattern.

The module also hunts for graphs whose interior region is provably
non-empty (fractional independence number exceeding both the independence
number and half the vertex count) and computes exact extremal copy counts
ex(n, e, pattern) at tiny scale by exhausting host isomorphism classes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .density import attribute_winner, best_t_density, clique_density, star_density
from .graphs import (
    Graph,
    enumerate_connected_graphs,
    graph_from_edge_mask,
    independent_set_census,
    is_connected,
    write_graph6,
    _graph_classes,
)
from .hosts import copies_count, three_class_graph
from .weightings import fractional_independence_number, spectrum

MAX_EX_VERTICES = 9


@dataclass(frozen=True)
class TypeClassification:
    graph_id: str
    pattern: str               # "K", "SK", "TK", "STK" or "OTHER"
    gamma: float | None        # first boundary
    delta: float | None        # second boundary (STK only)
    gamma_bracket: tuple | None
    delta_bracket: tuple | None
    samples: tuple             # (beta, winner, q_star) per grid point
    q_grid: int
    tol: float

    def to_json_dict(self):
        return {
            "graph6": self.graph_id,
            "pattern": self.pattern,
            "gamma": self.gamma,
            "delta": self.delta,
            "gamma_bracket": list(self.gamma_bracket) if self.gamma_bracket else None,
            "delta_bracket": list(self.delta_bracket) if self.delta_bracket else None,
            "samples": [
                {"beta": b, "winner": w, "q_star": q} for b, w, q in self.samples
            ],
        }


@dataclass(frozen=True)
class QStarCurve:
    samples: tuple             # (beta, q_star, tie)
    non_decreasing: bool
    violations: tuple          # (beta_i, beta_i+1) pairs where q_star dropped


@dataclass(frozen=True)
class SweepRow:
    graph6: str
    v: int
    e: int
    alpha: int
    alpha_star: Fraction
    max_independent_sets: int
    predicted_start: str
    pattern: str
    gamma: float | None
    delta: float | None

    def to_csv_row(self):
        gamma = f"{self.gamma:.12g}" if self.gamma is not None else ""
        delta = f"{self.delta:.12g}" if self.delta is not None else ""
        return (f"{self.graph6},{self.v},{self.e},{self.alpha},"
                f"{self.alpha_star},{self.max_independent_sets},"
                f"{self.pattern},{gamma},{delta}")


def default_beta_grid():
    """Geometric 1e-5..0.1 (40 points) then linear 0.1..1 (90 points):
    resolves both the vanishing-density regime and the K tail."""
    grid = np.concatenate([np.geomspace(1e-5, 0.1, 40), np.linspace(0.1, 1.0, 90)])
    return [float(b) for b in np.unique(grid)]


def _winner_at(spec, beta, q_grid):
    prof = best_t_density(spec, beta, q_grid=q_grid)
    t0 = star_density(spec, beta)
    t1 = clique_density(spec, beta)
    return attribute_winner(prof.value, t0, t1), prof.q_star


def _refine_boundary(spec, lo, hi, left_winner, q_grid, tol):
    """Bisect the winner change inside (lo, hi) to absolute tolerance tol."""
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if _winner_at(spec, mid, q_grid)[0] == left_winner:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi), (lo, hi)


def classify_type(g: Graph, betas=None, q_grid: int = 128,
                  tol: float = 1e-6) -> TypeClassification:
    if not is_connected(g):
        raise ValueError("classification requires a connected graph")
    spec = spectrum(g)
    if betas is None:
        betas = default_beta_grid()
    samples = []
    for beta in betas:
        w, q_star = _winner_at(spec, beta, q_grid)
        samples.append((beta, w, q_star))
    runs = [samples[0][1]]
    changes = []                     # (index before change)
    for i in range(1, len(samples)):
        if samples[i][1] != runs[-1]:
            runs.append(samples[i][1])
            changes.append(i - 1)
    seq = "".join(runs)
    graph_id = write_graph6(g)
    gamma = delta = None
    gamma_bracket = delta_bracket = None
    if seq in ("SK", "TK", "STK"):
        gamma, gamma_bracket = _refine_boundary(
            spec, samples[changes[0]][0], samples[changes[0] + 1][0],
            runs[0], q_grid, tol)
        if seq == "STK":
            delta, delta_bracket = _refine_boundary(
                spec, samples[changes[1]][0], samples[changes[1] + 1][0],
                runs[1], q_grid, tol)
    pattern = seq if seq in ("K", "SK", "TK", "STK") else "OTHER"
    return TypeClassification(
        graph_id=graph_id, pattern=pattern,
        gamma=gamma, delta=delta,
        gamma_bracket=gamma_bracket, delta_bracket=delta_bracket,
        samples=tuple(samples), q_grid=q_grid, tol=tol,
    )


def q_star_curve(g: Graph, betas=None, q_grid: int = 128) -> QStarCurve:
    """Sampled argmax curve with a monotonicity report.

    Whether q_star increases with beta is an open conjecture: violations
    are reported, never treated as errors.
    """
    if not is_connected(g):
        raise ValueError("q_star curve requires a connected graph")
    spec = spectrum(g)
    if betas is None:
        betas = default_beta_grid()
    samples = []
    for beta in betas:
        prof = best_t_density(spec, beta, q_grid=q_grid)
        samples.append((beta, prof.q_star, prof.tie))
    violations = tuple(
        (samples[i][0], samples[i + 1][0])
        for i in range(len(samples) - 1)
        if samples[i + 1][1] < samples[i][1] - 1e-8
    )
    return QStarCurve(samples=tuple(samples),
                      non_decreasing=not violations,
                      violations=violations)


def search_counterexamples(max_v: int):
    """Connected graphs (up to isomorphism, 2..max_v vertices) whose
    fractional independence number exceeds both the independence number and
    half the vertex count: exactly the graphs whose type cannot start with
    S or K."""
    out = []
    for g in enumerate_connected_graphs(max_v):
        alpha_star = fractional_independence_number(g)
        if alpha_star <= Fraction(g.n, 2):
            continue
        if alpha_star > independent_set_census(g).alpha:
            out.append(g)
    return out


def _predicted_start(alpha, alpha_star, v):
    # smallest vanishing-density exponent among v/2 (K), v - alpha (S),
    # v - alpha_star (interior)
    if alpha_star == Fraction(v, 2):
        return "K"
    if alpha_star > alpha:           # alpha_star > max(alpha, v/2)
        return "T"
    return "S"


def sweep_connected_graphs(max_v: int, q_grid: int = 128, tol: float = 1e-6):
    """Classify every connected graph on 2..max_v vertices, with invariant
    cross-checks tying the numeric pattern to the exponent predictions."""
    if max_v > 5:
        raise ValueError("the full numeric sweep is limited to 5 vertices")
    rows = []
    for g in enumerate_connected_graphs(max_v):
        census = independent_set_census(g)
        alpha_star = fractional_independence_number(g)
        cls = classify_type(g, q_grid=q_grid, tol=tol)
        predicted = _predicted_start(census.alpha, alpha_star, g.n)
        if alpha_star == Fraction(g.n, 2) and cls.pattern != "K":
            raise RuntimeError(f"{cls.graph_id}: expected pure K pattern, got {cls.pattern}")
        if census.alpha > Fraction(g.n, 2) and not cls.pattern.startswith("S"):
            raise RuntimeError(f"{cls.graph_id}: expected S start, got {cls.pattern}")
        if alpha_star > max(Fraction(census.alpha), Fraction(g.n, 2)) and \
                not cls.pattern.startswith("T"):
            raise RuntimeError(f"{cls.graph_id}: expected T start, got {cls.pattern}")
        rows.append(SweepRow(
            graph6=cls.graph_id, v=g.n, e=g.edge_count,
            alpha=census.alpha, alpha_star=alpha_star,
            max_independent_sets=census.max_sets,
            predicted_start=predicted, pattern=cls.pattern,
            gamma=cls.gamma, delta=cls.delta,
        ))
    return rows


def sweep_to_csv(rows) -> str:
    lines = ["graph6,v,e,alpha,alpha_star,A,pattern,gamma,delta"]
    lines += [r.to_csv_row() for r in rows]
    return "\n".join(lines) + "\n"


def exhaustive_ex(n: int, e: int, pattern: Graph):
    """Exact maximum of the copy count over all hosts with n vertices and at
    most e edges, by exhausting isomorphism classes.

    Adding an edge never destroys a copy, so the maximum is attained with
    exactly min(e, C(n,2)) edges; only that level is counted.
    """
    if n > MAX_EX_VERTICES:
        raise ValueError(f"exhaustive search limited to {MAX_EX_VERTICES} vertices")
    if e < 0:
        raise ValueError("edge bound must be non-negative")
    e = min(e, n * (n - 1) // 2)
    levels = _graph_classes(n)
    best = -1
    best_host = None
    for mask in levels[e]:
        host = graph_from_edge_mask(n, mask)
        c = copies_count(pattern, host)
        if c > best:
            best, best_host = c, host
    return best, best_host


@dataclass(frozen=True)
class ThreeClassProbe:
    exhaustive_max: int
    family_max: int
    family_sizes: tuple
    ratio: float               # family_max / exhaustive_max


def three_class_host_probe(n: int, e: int, pattern: Graph) -> ThreeClassProbe:
    """How close the best three-class host of the same size comes to the
    true extremal count (a report, not an assertion: the conjecture that
    the family is asymptotically optimal is open)."""
    exhaustive_max, _ = exhaustive_ex(n, e, pattern)
    best = -1
    best_sizes = None
    for ny in range(n + 1):
        for nr in range(n - ny + 1):
            nb = n - ny - nr
            edges = ny * (ny - 1) // 2 + nr * (nr - 1) // 2 + nr * ny + nr * nb
            if edges > e:
                continue
            host = three_class_graph(ny, nr, nb)
            c = copies_count(pattern, host)
            if c > best:
                best, best_sizes = c, (ny, nr, nb)
    ratio = best / exhaustive_max if exhaustive_max > 0 else math.nan
    return ThreeClassProbe(exhaustive_max=exhaustive_max, family_max=best,
                           family_sizes=best_sizes, ratio=ratio)
