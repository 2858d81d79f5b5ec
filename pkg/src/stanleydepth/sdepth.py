"""Stanley depth of I/J through interval partitions of a finite poset.

Fix the corner g of the lcm box.  The poset P holds every exponent vector
a <= g with x^a in I but not in J.  For an interval [c, d] of P let
rho(d) = #{j : d_j = g_j}.  Then sdepth(I/J) is the largest k such that P
splits into intervals all of whose tops have rho >= k.

Deciding "sdepth >= k" is posed as an exact cover problem.  Splitting an
interval whose top has rho > k along the coordinates sitting at g shows we
may ask for tops with rho exactly k; points with rho >= k may then stay
uncovered and become singleton intervals.  So points with rho < k must be
covered exactly once, points with rho = k at most once, and the candidate
pieces are the intervals [c, d] with rho(c) < k = rho(d).  The search is
Knuth's Algorithm X with the fewest-candidates rule.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

from .depth import ResourceCap
from .monomials import FactorModule, Monomial, format_monomial, sort_key


class SearchBudgetExceeded(ResourceCap):
    """The decision search ran out of nodes; the answer is unknown."""


DEFAULT_NODE_BUDGET = 2_000_000
DEFAULT_MAX_POINTS = 200_000
BRUTEFORCE_MAX_POINTS = 12


@dataclass(frozen=True)
class HVZPoset:
    g: Monomial
    points: Tuple[Monomial, ...]

    @property
    def n(self) -> int:
        return len(self.g)

    @property
    def point_set(self) -> FrozenSet[Monomial]:
        return frozenset(self.points)

    def rho(self, d: Monomial) -> int:
        return sum(1 for x, y in zip(d, self.g) if x == y)

    def __len__(self):
        return len(self.points)


@dataclass(frozen=True)
class IntervalPartition:
    intervals: Tuple[Tuple[Monomial, Monomial], ...]
    g: Monomial

    @property
    def rho_min(self) -> int:
        return min(sum(1 for x, y in zip(d, self.g) if x == y) for _, d in self.intervals)

    def to_text(self, names=None) -> List[List[str]]:
        return [[format_monomial(c, names), format_monomial(d, names)] for c, d in self.intervals]


def build_poset(F: FactorModule, g=None, max_points: int = DEFAULT_MAX_POINTS) -> HVZPoset:
    g = F.lcm_exponents if g is None else tuple(g)
    volume = 1
    for x in g:
        volume *= x + 1
    if volume > max_points:
        raise ResourceCap(f"poset box of volume {volume} exceeds the cap of {max_points}")
    pts = [a for a in itertools.product(*(range(x + 1) for x in g)) if F.in_module(a)]
    return HVZPoset(g, tuple(sorted(pts, key=sort_key)))


def _box(c, d):
    return itertools.product(*(range(x, y + 1) for x, y in zip(c, d)))


def _leq(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def partition_violation(P: HVZPoset, D: IntervalPartition) -> Optional[str]:
    """First reason why D is not an interval partition of P, or None."""
    pts = P.point_set
    if tuple(D.g) != tuple(P.g):
        return f"partition built for g={D.g}, poset has g={P.g}"
    if not D.intervals:
        return "empty partition" if pts else None
    seen: Dict[Monomial, Tuple[Monomial, Monomial]] = {}
    for c, d in D.intervals:
        if not _leq(c, d):
            return f"interval [{c}, {d}] has bottom above top"
        for end in (c, d):
            if end not in pts:
                return f"endpoint {end} of [{c}, {d}] is not in the poset"
        for a in _box(c, d):
            if a not in pts:
                return f"point {a} of [{c}, {d}] is not in the poset"
            if a in seen:
                return f"point {a} lies in both {seen[a]} and [{c}, {d}]"
            seen[a] = (c, d)
    missing = pts - seen.keys()
    if missing:
        return f"point {min(missing, key=sort_key)} is not covered"
    return None


def validate_partition(P: HVZPoset, D: IntervalPartition) -> bool:
    return partition_violation(P, D) is None


def _tops(P: HVZPoset, c: Monomial, k: int, members):
    """Tops d >= c inside P with rho(d) == k."""
    g = P.g
    at_g = [j for j in range(P.n) if c[j] == g[j]]
    free = [j for j in range(P.n) if c[j] < g[j]]
    for raise_ in itertools.combinations(free, k - len(at_g)):
        lifted = set(raise_)
        ranges = []
        for j in range(P.n):
            if c[j] == g[j] or j in lifted:
                ranges.append((g[j],))
            else:
                ranges.append(range(c[j], g[j]))
        for d in itertools.product(*ranges):
            if d in members:
                yield d


class _AlgorithmX:
    """Exact cover with primary (exactly once) and secondary (at most once) items."""

    def __init__(self, primary, secondary, rows, budget):
        self.Y = rows
        self.X = {it: set() for it in itertools.chain(primary, secondary)}
        for r, items in enumerate(rows):
            for it in items:
                self.X[it].add(r)
        self.open = set(primary)
        self.budget = budget
        self.nodes = 0

    def _select(self, r):
        X, Y = self.X, self.Y
        cols = []
        for j in Y[r]:
            for i in X[j]:
                for k in Y[i]:
                    if k != j:
                        X[k].discard(i)
            cols.append(X.pop(j))
            self.open.discard(j)
        return cols

    def _deselect(self, r, cols, primary):
        X, Y = self.X, self.Y
        for j in reversed(Y[r]):
            X[j] = cols.pop()
            if j in primary:
                self.open.add(j)
            for i in X[j]:
                for k in Y[i]:
                    if k != j:
                        X[k].add(i)

    def solve(self, primary) -> Optional[List[int]]:
        frames: list = []
        while True:
            if not self.open:
                return [f[2] for f in frames]
            col = min(self.open, key=lambda it: (len(self.X[it]), it))
            frames.append([sorted(self.X[col]), 0, None, None])
            while frames:
                fr = frames[-1]
                if fr[2] is not None:
                    self._deselect(fr[2], fr[3], primary)
                    fr[2] = fr[3] = None
                if fr[1] < len(fr[0]):
                    self.nodes += 1
                    if self.nodes > self.budget:
                        raise SearchBudgetExceeded(f"exact-cover search exceeded {self.budget} nodes")
                    fr[2] = fr[0][fr[1]]
                    fr[1] += 1
                    fr[3] = self._select(fr[2])
                    break
                frames.pop()
            else:
                return None


def sdepth_decision(P: HVZPoset, k: int, node_budget: int = DEFAULT_NODE_BUDGET) -> Optional[IntervalPartition]:
    """An interval partition of P with every top at rho >= k, or None.

    Raises SearchBudgetExceeded when the search gives up; that is "unknown",
    never "no".
    """
    if not 0 <= k <= P.n:
        raise ValueError(f"k={k} outside 0..{P.n}")
    members = P.point_set
    index = {a: i for i, a in enumerate(P.points)}
    rho = [P.rho(a) for a in P.points]
    primary = [i for i, r in enumerate(rho) if r < k]
    secondary = [i for i, r in enumerate(rho) if r == k]
    rows, spans = [], []
    for i in primary:
        c = P.points[i]
        for d in _tops(P, c, k, members):
            rows.append([index[a] for a in _box(c, d)])
            spans.append((c, d))
    solver = _AlgorithmX(primary, secondary, rows, node_budget)
    chosen = solver.solve(set(primary))
    if chosen is None:
        return None
    intervals = [spans[r] for r in chosen]
    covered = set()
    for r in chosen:
        covered.update(rows[r])
    intervals += [(a, a) for i, a in enumerate(P.points) if i not in covered]
    intervals.sort(key=lambda cd: (sort_key(cd[0]), sort_key(cd[1])))
    return IntervalPartition(tuple(intervals), P.g)


@dataclass(frozen=True)
class SdepthResult:
    value: int
    witness: IntervalPartition
    poset: HVZPoset


def sdepth_of_poset(P: HVZPoset, node_budget: int = DEFAULT_NODE_BUDGET) -> SdepthResult:
    if not P.points:
        raise ValueError("empty poset: I/J has no nonzero multidegree in the box")
    lo, best = 0, sdepth_decision(P, 0, node_budget)
    hi = max(P.rho(a) for a in P.points)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        found = sdepth_decision(P, mid, node_budget)
        if found is None:
            hi = mid - 1
        else:
            lo, best = mid, found
    return SdepthResult(lo, best, P)


def sdepth(F: FactorModule, node_budget: int = DEFAULT_NODE_BUDGET, g=None, max_points: int = DEFAULT_MAX_POINTS) -> SdepthResult:
    return sdepth_of_poset(build_poset(F, g, max_points), node_budget)


def sdepth_bruteforce(P: HVZPoset, max_points: int = BRUTEFORCE_MAX_POINTS) -> int:
    """max over every interval partition of P of its smallest rho, by enumeration.

    Each partition is produced exactly once: the first uncovered point in
    the fixed order is necessarily the bottom of its interval.
    """
    if len(P.points) > max_points:
        raise ResourceCap(f"{len(P.points)} points exceed the brute-force cap of {max_points}")
    pts = P.points
    members = P.point_set
    ups = {c: [d for d in pts if _leq(c, d) and all(a in members for a in _box(c, d))] for c in pts}
    best = -1

    def rec(covered: frozenset, worst: int):
        nonlocal best
        rest = [a for a in pts if a not in covered]
        if not rest:
            best = max(best, worst)
            return
        c = rest[0]
        for d in ups[c]:
            block = set(_box(c, d))
            if block & covered:
                continue
            rec(covered | block, min(worst, P.rho(d)))

    rec(frozenset(), P.n)
    return best
