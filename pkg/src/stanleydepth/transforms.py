"""Polarization, canonical form and the numeric invariants e, d, t of I/J."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .monomials import (
    FactorModule,
    Monomial,
    MonomialIdeal,
    degree,
    make_factor,
    minimalize,
)


def exponent_bounds(F: FactorModule) -> Monomial:
    """e_i = max exponent of x_i over G(I) and G(J)."""
    return F.lcm_exponents


def e_total(F: FactorModule) -> int:
    return sum(e - 1 for e in exponent_bounds(F) if e > 0)


def min_degree(F: FactorModule) -> int:
    return min(degree(g) for g in F.I.gens)


def type_with_respect_to(F: FactorModule, i: int) -> Tuple[int, ...]:
    """Sorted distinct positive exponents of x_i (1-based) over G(I) and G(J)."""
    if not 1 <= i <= F.n:
        raise IndexError(f"variable index {i} outside 1..{F.n}")
    return tuple(sorted({g[i - 1] for g in F.all_gens if g[i - 1] > 0}))


def _relabel_variable(F: FactorModule, i: int) -> FactorModule:
    levels = {k: j + 1 for j, k in enumerate(type_with_respect_to(F, i))}
    levels[0] = 0

    def fix(g):
        return g[: i - 1] + (levels[g[i - 1]],) + g[i:]

    I = minimalize((fix(g) for g in F.I.gens), F.n)
    J = minimalize((fix(g) for g in F.J.gens), F.n)
    return FactorModule(I, J)


def canonical_form(F: FactorModule, order=None) -> FactorModule:
    """Relabel the exponent levels k_1 < ... < k_s of every variable to 1..s.

    ``order`` is the sequence of 1-based variables to process; ascending by
    default.  The result does not depend on it.
    """
    for i in order if order is not None else range(1, F.n + 1):
        F = _relabel_variable(F, i)
    return F


def is_canonical(F: FactorModule) -> bool:
    return all(
        type_with_respect_to(F, i) == tuple(range(1, len(type_with_respect_to(F, i)) + 1))
        for i in range(1, F.n + 1)
    )


@dataclass(frozen=True)
class PolarizationMap:
    """Where each source variable goes under complete polarization.

    ``slots[i]`` lists the 0-based target variables replacing x_{i+1}: the
    first is x_{i+1} itself and the k-th power uses the first k slots.
    """

    source_n: int
    target_n: int
    slots: Tuple[Tuple[int, ...], ...]
    names: Tuple[str, ...] = field(default=())

    def apply(self, u: Monomial) -> Monomial:
        out = [0] * self.target_n
        for i, a in enumerate(u):
            if a > len(self.slots[i]):
                raise ValueError(f"exponent {a} of x{i + 1} exceeds the polarization map")
            for t in self.slots[i][:a]:
                out[t] = 1
        return tuple(out)

    def depolarize(self, v: Monomial) -> Monomial:
        """Substitute every fresh variable by its source variable."""
        out = [0] * self.source_n
        for i, targets in enumerate(self.slots):
            out[i] = sum(v[t] for t in targets)
        return tuple(out)

    def to_json(self) -> Dict[str, List[int]]:
        return {str(i + 1): [t + 1 for t in targets] for i, targets in enumerate(self.slots)}


def polarization_map(F: FactorModule) -> PolarizationMap:
    n = F.n
    bounds = exponent_bounds(F)
    slots = []
    names = [f"x{i + 1}" for i in range(n)]
    nxt = n
    for i, e in enumerate(bounds):
        fresh = list(range(nxt, nxt + max(e - 1, 0)))
        nxt += len(fresh)
        slots.append((i,) + tuple(fresh))
        if len(fresh) == 1:
            names.append(f"y{i + 1}")
        else:
            names.extend(f"y{i + 1}_{k + 1}" for k in range(len(fresh)))
    return PolarizationMap(n, nxt, tuple(slots), tuple(names))


def polarize(F: FactorModule):
    """Complete polarization of I and J with one shared variable map.

    Returns the polarized factor (in n + e_total variables) and the map.
    """
    pmap = polarization_map(F)
    N = pmap.target_n
    I = minimalize((pmap.apply(g) for g in F.I.gens), N)
    J = minimalize((pmap.apply(g) for g in F.J.gens), N)
    return make_factor(I, J), pmap


@dataclass(frozen=True)
class InvariantReport:
    e_per_var: Tuple[int, ...]
    e_total: int
    d_min: int
    r_count: int
    index_t: int
    b_set: Tuple[Monomial, ...]
    canonical: FactorModule
    d_prime: int
    e_prime: int
    r_prime: int

    @property
    def naive_bound(self) -> int:
        """d - e on the presentation as given; a (weaker) lower bound for depth."""
        return self.d_min - self.e_total


def generators_of_degree(I: MonomialIdeal, d: int):
    """Split G(I) into the generators of degree d and the rest (the set E)."""
    fs = tuple(g for g in I.gens if degree(g) == d)
    es = tuple(g for g in I.gens if degree(g) != d)
    return fs, es


def monomials_of_degree(d: int, caps: Monomial):
    """All exponent vectors of total degree d with entry j at most caps[j]."""
    n = len(caps)

    def rec(j, left):
        if j == n - 1:
            if left <= caps[j]:
                yield (left,)
            return
        for a in range(min(left, caps[j]) + 1):
            for rest in rec(j + 1, left - a):
                yield (a,) + rest

    return sorted(rec(0, d)) if n else []


def b_set(F: FactorModule, d: int | None = None) -> Tuple[Monomial, ...]:
    """Monomials of degree d+1 in I minus J, exponents capped at e_i + 1."""
    d = min_degree(F) if d is None else d
    caps = tuple(e + 1 for e in exponent_bounds(F))
    return tuple(u for u in monomials_of_degree(d + 1, caps) if F.in_module(u))


def index_t(F: FactorModule) -> int:
    C = canonical_form(F)
    return max(min_degree(C) - e_total(C), 0)


def compute_invariants(F: FactorModule) -> InvariantReport:
    C = canonical_form(F)
    d = min_degree(F)
    dp = min_degree(C)
    ep = e_total(C)
    return InvariantReport(
        e_per_var=exponent_bounds(F),
        e_total=e_total(F),
        d_min=d,
        r_count=len(generators_of_degree(F.I, d)[0]),
        index_t=max(dp - ep, 0),
        b_set=b_set(F, d),
        canonical=C,
        d_prime=dp,
        e_prime=ep,
        r_prime=len(generators_of_degree(C.I, dp)[0]),
    )

