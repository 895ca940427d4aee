"""Half-integral fractional independence weightings and their census.

A fractional independence weighting assigns each vertex a weight in
{0, 1/2, 1} so that the two endpoints of every edge sum to at most 1.  The
maximum total weight over such assignments is the fractional independence
number; by half-integrality of the vertex-cover LP relaxation nothing is
lost by restricting to these three values.  All arithmetic is exact:
weights are stored as integers counted in halves.

The census of weightings by their (zero, half, one) vertex counts (the
"spectrum") is the sufficient statistic for every asymptotic density
formula downstream.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph, independent_set_census

MAX_WEIGHTING_VERTICES = 16


@dataclass(frozen=True)
class Weighting:
    """One weighting, vertex weights in halves (0, 1 or 2 per vertex)."""

    halves: tuple

    @property
    def r(self):
        return self.halves.count(0)

    @property
    def y(self):
        return self.halves.count(1)

    @property
    def b(self):
        return self.halves.count(2)

    @property
    def total(self):
        return Fraction(sum(self.halves), 2)

    def value(self, u):
        return Fraction(self.halves[u], 2)

    def signature(self):
        return (self.r, self.y, self.b)


@dataclass(frozen=True)
class WeightingSpectrum:
    """Multiset of (r, y, b) signatures with multiplicities.

    ``maximiser_counts[i]`` is the number of weightings of maximum total
    weight that have exactly i zero-weight vertices; indices run from 0 to
    floor(v - alpha_star), with zeros where nothing attains the maximum.
    """

    v: int
    entries: tuple                  # ((r, y, b), multiplicity), sorted
    alpha: int
    alpha_star: Fraction
    maximiser_counts: tuple

    @property
    def total_weightings(self):
        return sum(m for _, m in self.entries)

    @property
    def max_independent_sets(self):
        # 0/1 weightings with b = alpha are exactly the maximum independent sets
        target = (self.v - self.alpha, 0, self.alpha)
        for sig, mult in self.entries:
            if sig == target:
                return mult
        return 0

    def y_zero_slice(self):
        return {sig: m for sig, m in self.entries if sig[1] == 0}

    def star_limit_constant(self) -> Fraction:
        """Leading coefficient of the quasi-star density as beta -> 0."""
        return Fraction(self.max_independent_sets, 2 ** (self.v - self.alpha))

    def interior_limit_constant(self, q: float) -> float:
        """Leading coefficient of the interior host density as beta -> 0."""
        if not 0.0 < q < 1.0:
            raise ValueError("q must lie strictly between 0 and 1")
        two_exp = 2 * (self.v - self.alpha_star)  # even integer
        out = 0.0
        for i, count in enumerate(self.maximiser_counts):
            if count:
                out += count * ((1.0 - q * q) / 2.0) ** i * q ** (int(two_exp) - 2 * i)
        return out

    def to_json_dict(self):
        return {
            "v": self.v,
            "alpha": self.alpha,
            "alpha_star": str(self.alpha_star),
            "entries": [
                {"r": r, "y": y, "b": b, "mult": m}
                for (r, y, b), m in self.entries
            ],
        }

    def to_json(self):
        return json.dumps(self.to_json_dict())


def enumerate_weightings(g: Graph) -> list:
    """All valid weightings, found by depth-first assignment with per-edge
    pruning; sorted by (r, y, b) signature then by the weight tuple."""
    n = g.n
    if n > MAX_WEIGHTING_VERTICES:
        raise ValueError(f"weighting enumeration limited to {MAX_WEIGHTING_VERTICES} vertices")
    adj = g.adj
    # cap[u] = largest weight u may still take given already-assigned neighbours
    cap = [2] * n
    halves = [0] * n
    out = []

    def assign(u):
        if u == n:
            out.append(Weighting(tuple(halves)))
            return
        later = adj[u] >> (u + 1)
        for w in range(cap[u] + 1):
            halves[u] = w
            if w == 0:
                assign(u + 1)
                continue
            # tighten caps of later neighbours to 2 - w, restore afterwards
            touched = []
            m = later
            base = u + 1
            limit = 2 - w
            while m:
                low = m & -m
                v = base + low.bit_length() - 1
                m ^= low
                if cap[v] > limit:
                    touched.append((v, cap[v]))
                    cap[v] = limit
            assign(u + 1)
            for v, old in touched:
                cap[v] = old
        halves[u] = 0

    assign(0)
    out.sort(key=lambda w: (w.signature(), w.halves))
    return out


def fractional_independence_number(g: Graph) -> Fraction:
    """Maximum total weight, as an exact half-integer."""
    n = g.n
    if n > MAX_WEIGHTING_VERTICES:
        raise ValueError(f"weighting search limited to {MAX_WEIGHTING_VERTICES} vertices")
    adj = g.adj
    cap = [2] * n
    best = 0

    def search(u, total):
        nonlocal best
        if total + 2 * (n - u) <= best:  # optimistic bound: all 1s from here
            return
        if u == n:
            best = total
            return
        later = adj[u] >> (u + 1)
        for w in (2, 1, 0):
            if w > cap[u]:
                continue
            touched = []
            if w:
                m = later
                base = u + 1
                limit = 2 - w
                while m:
                    low = m & -m
                    v = base + low.bit_length() - 1
                    m ^= low
                    if cap[v] > limit:
                        touched.append((v, cap[v]))
                        cap[v] = limit
            search(u + 1, total + w)
            for v, old in touched:
                cap[v] = old

    search(0, 0)
    return Fraction(best, 2)


def spectrum(g: Graph) -> WeightingSpectrum:
    """Weighting census of a graph without isolated vertices."""
    if g.has_isolated_vertices:
        raise ValueError("spectrum requires a graph with no isolated vertices")
    weightings = enumerate_weightings(g)
    sig = Counter(w.signature() for w in weightings)
    census = independent_set_census(g)
    best_halves = max(sum(w.halves) for w in weightings)
    alpha_star = Fraction(best_halves, 2)
    max_red = int(g.n - alpha_star)  # floor, since alpha_star is half-integral
    counts = [0] * (max_red + 1)
    for w in weightings:
        if sum(w.halves) == best_halves:
            counts[w.r] += 1
    return WeightingSpectrum(
        v=g.n,
        entries=tuple(sorted(sig.items())),
        alpha=census.alpha,
        alpha_star=alpha_star,
        maximiser_counts=tuple(counts),
    )


def star_limit_constant(g: Graph) -> Fraction:
    return spectrum(g).star_limit_constant()


def interior_limit_constant(g: Graph, q: float) -> float:
    return spectrum(g).interior_limit_constant(q)
