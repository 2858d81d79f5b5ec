"""Checkers for the depth / Stanley depth statements, and a seeded fuzzer.

Every checker returns a ``CheckOutcome``.  A conclusion is only evaluated
when the hypothesis holds; instances that hit an engine cap come back with
``hypothesis_held=None`` (unknown) and count as skipped, never as passes.
"""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import cached_property
from typing import Dict, Iterator, List, Optional

from .depth import DEFAULT_CAPS, Caps, ResourceCap, betti_table, taylor_oracle
from .linalg import QQ, FieldSpec
from .monomials import (
    EqualIdeals,
    FactorModule,
    MonomialIdeal,
    degree,
    divides,
    format_ideal,
    make_factor,
    minimalize,
    support,
    variable,
)
from .sdepth import DEFAULT_NODE_BUDGET, sdepth
from .transforms import b_set, compute_invariants, generators_of_degree, polarize


def serialize(F: FactorModule) -> Dict:
    return {"I": format_ideal(F.I), "J": format_ideal(F.J), "n": F.n}


@dataclass
class CheckOutcome:
    check_id: str
    hypothesis_held: Optional[bool]
    conclusion_held: Optional[bool] = None
    witness: Dict = field(default_factory=dict)
    quantities: Dict[str, int] = field(default_factory=dict)
    # report-only checks (conjectures, characteristic comparison) never fail a run
    asserted: bool = True
    note: str = ""

    def __post_init__(self):
        if (self.conclusion_held is not None) != bool(self.hypothesis_held):
            raise ValueError(f"{self.check_id}: conclusion must be present exactly when the hypothesis holds")

    @property
    def status(self) -> str:
        if self.hypothesis_held is None:
            return "unknown"
        if not self.hypothesis_held:
            return "vacuous"
        return "pass" if self.conclusion_held else "fail"

    @property
    def failed(self) -> bool:
        return self.asserted and self.status == "fail"

    def to_json(self) -> Dict:
        out = asdict(self)
        out["status"] = self.status
        return out


class Analysis:
    """Lazily computed depth / sdepth data for one factor, shared by checkers."""

    def __init__(self, F: FactorModule, field: FieldSpec = QQ, caps: Caps = DEFAULT_CAPS,
                 node_budget: int = DEFAULT_NODE_BUDGET):
        self.F = F
        self.field = field
        self.caps = caps
        self.node_budget = node_budget

    @cached_property
    def invariants(self):
        return compute_invariants(self.F)

    @property
    def t(self) -> int:
        return self.invariants.index_t

    @cached_property
    def betti(self):
        return betti_table(self.F, self.field, self.caps)

    @property
    def depth(self) -> int:
        return self.betti.depth

    @cached_property
    def sdepth_result(self):
        return sdepth(self.F, self.node_budget, max_points=self.caps.max_box)

    @property
    def sdepth(self) -> int:
        return self.sdepth_result.value

    @cached_property
    def polarized(self) -> "Analysis":
        return Analysis(polarize(self.F)[0], self.field, self.caps, self.node_budget)

    @cached_property
    def canonical(self) -> "Analysis":
        return Analysis(self.invariants.canonical, self.field, self.caps, self.node_budget)

    def quantities(self) -> Dict[str, int]:
        inv = self.invariants
        return {"depth": self.depth, "sdepth": self.sdepth, "t": inv.index_t,
                "d_prime": inv.d_prime, "e_prime": inv.e_prime, "r_prime": inv.r_prime}


def _as_analysis(F, analysis: Optional[Analysis]) -> Analysis:
    if analysis is not None:
        return analysis
    return Analysis(F)


def _guard(check_id: str, A: Analysis, body, asserted: bool = True) -> CheckOutcome:
    try:
        out = body()
    except ResourceCap as exc:
        return CheckOutcome(check_id, None, witness=serialize(A.F), asserted=asserted, note=str(exc))
    out.witness = serialize(A.F)
    out.asserted = asserted
    return out


def _implication(check_id, hypothesis, conclusion, quantities) -> CheckOutcome:
    return CheckOutcome(check_id, hypothesis, conclusion() if hypothesis else None, quantities=quantities)


def support_condition(fs, es, bs, n: int) -> bool:
    """Some x_j outside every supp f_i has (B \\ E) meeting (x_j) and E inside (x_j)."""
    used = set()
    for f in fs:
        used |= support(f)
    rest = [b for b in bs if b not in set(es)]
    for j in range(n):
        if j in used:
            continue
        xj = variable(j + 1, n)
        if any(divides(xj, b) for b in rest) and all(divides(xj, e) for e in es):
            return True
    return False


def canonical_support_condition(A: Analysis) -> bool:
    inv = A.invariants
    C = inv.canonical
    fs, es = generators_of_degree(C.I, inv.d_prime)
    return support_condition(fs, es, b_set(C, inv.d_prime), C.n)


def check_theorem_24(F: FactorModule, analysis: Analysis = None) -> CheckOutcome:
    """sdepth = t+1 and (r' <= 4, or r' = 5 with the support condition) => depth <= t+1."""
    A = _as_analysis(F, analysis)

    def body():
        t, r = A.t, A.invariants.r_prime
        small = r <= 4 or (r == 5 and canonical_support_condition(A))
        hyp = A.sdepth == t + 1 and small
        return _implication("theorem_24", hyp, lambda: A.depth <= t + 1, A.quantities())

    return _guard("theorem_24", A, body)


def check_theorem_27(F: FactorModule, analysis: Analysis = None) -> CheckOutcome:
    """sdepth = t => depth = t."""
    A = _as_analysis(F, analysis)

    def body():
        return _implication("theorem_27", A.sdepth == A.t, lambda: A.depth == A.t, A.quantities())

    return _guard("theorem_27", A, body)


def _generated_by_six_variables(I: MonomialIdeal) -> bool:
    return len(I.gens) == 6 and all(degree(g) == 1 for g in I.gens)


def check_prop_31(F: FactorModule, analysis: Analysis = None) -> CheckOutcome:
    """Squarefree, I = six variables, sdepth = 2 => depth <= 2."""
    A = _as_analysis(F, analysis)

    def body():
        hyp = F.is_squarefree and _generated_by_six_variables(F.I) and A.sdepth == 2
        return _implication("prop_31", hyp, lambda: A.depth <= 2, A.quantities())

    return _guard("prop_31", A, body)


def check_prop_32(F: FactorModule, analysis: Analysis = None) -> CheckOutcome:
    """I' = six variables, sdepth = t+1 => depth <= t+1."""
    A = _as_analysis(F, analysis)

    def body():
        hyp = _generated_by_six_variables(A.invariants.canonical.I) and A.sdepth == A.t + 1
        return _implication("prop_32", hyp, lambda: A.depth <= A.t + 1, A.quantities())

    return _guard("prop_32", A, body)


def check_prop_31_32(F: FactorModule, analysis: Analysis = None):
    A = _as_analysis(F, analysis)
    return check_prop_31(F, A), check_prop_32(F, A)


def check_theorem_21_22(F: FactorModule, analysis: Analysis = None) -> CheckOutcome:
    """Squarefree I/J with sdepth = d+1 and (r <= 4, or r = 5 with the support condition) => depth <= d+1."""
    A = _as_analysis(F, analysis)

    def body():
        if not F.is_squarefree:
            return CheckOutcome("theorem_21_22", False, quantities=A.quantities())
        d = A.invariants.d_min
        fs, es = generators_of_degree(F.I, d)
        small = len(fs) <= 4 or (len(fs) == 5 and support_condition(fs, es, b_set(F, d), F.n))
        hyp = small and A.sdepth == d + 1
        return _implication("theorem_21_22", hyp, lambda: A.depth <= d + 1, A.quantities())

    return _guard("theorem_21_22", A, body)


def check_stanley(F: FactorModule, analysis: Analysis = None) -> CheckOutcome:
    """depth <= sdepth; reported, not asserted."""
    A = _as_analysis(F, analysis)
    return _guard("stanley", A,
                  lambda: _implication("stanley", True, lambda: A.depth <= A.sdepth, A.quantities()),
                  asserted=False)


def check_conjecture_02(F: FactorModule, analysis: Analysis = None) -> CheckOutcome:
    """Squarefree I/J with sdepth = d+1 => depth <= d+1; reported, not asserted."""
    A = _as_analysis(F, analysis)

    def body():
        d = A.invariants.d_min
        hyp = F.is_squarefree and A.sdepth == d + 1
        return _implication("conjecture_02", hyp, lambda: A.depth <= d + 1, A.quantities())

    return _guard("conjecture_02", A, body, asserted=False)


def check_ikm_identity(F: FactorModule, analysis: Analysis = None) -> CheckOutcome:
    """sdepth - depth is unchanged by polarization."""
    A = _as_analysis(F, analysis)

    def body():
        P = A.polarized
        q = {"depth": A.depth, "sdepth": A.sdepth, "depth_pol": P.depth, "sdepth_pol": P.sdepth,
             "e": A.invariants.e_total}
        return _implication("ikm_identity", True, lambda: A.sdepth - A.depth == P.sdepth - P.depth, q)

    return _guard("ikm_identity", A, body)


def check_polarization_shift(F: FactorModule, analysis: Analysis = None) -> CheckOutcome:
    """depth(polarization) = depth + e."""
    A = _as_analysis(F, analysis)

    def body():
        e = A.invariants.e_total
        q = {"depth": A.depth, "depth_pol": A.polarized.depth, "e": e}
        return _implication("polarization_shift", True, lambda: A.polarized.depth == A.depth + e, q)

    return _guard("polarization_shift", A, body)


def check_canonical_invariance(F: FactorModule, analysis: Analysis = None) -> CheckOutcome:
    """depth and sdepth agree on I/J and its canonical form."""
    A = _as_analysis(F, analysis)

    def body():
        C = A.canonical
        q = {"depth": A.depth, "sdepth": A.sdepth, "depth_canonical": C.depth, "sdepth_canonical": C.sdepth}
        return _implication("canonical_invariance", True,
                            lambda: (A.depth, A.sdepth) == (C.depth, C.sdepth), q)

    return _guard("canonical_invariance", A, body)


def check_index_bound(F: FactorModule, analysis: Analysis = None) -> CheckOutcome:
    """depth >= t and sdepth >= t."""
    A = _as_analysis(F, analysis)
    return _guard("index_bound", A,
                  lambda: _implication("index_bound", True,
                                       lambda: A.depth >= A.t and A.sdepth >= A.t, A.quantities()))


def check_naive_bound(F: FactorModule, analysis: Analysis = None) -> CheckOutcome:
    """depth >= d - e and sdepth >= d - e on the presentation as given."""
    A = _as_analysis(F, analysis)

    def body():
        b = A.invariants.naive_bound
        q = {"depth": A.depth, "sdepth": A.sdepth, "d": A.invariants.d_min, "e": A.invariants.e_total}
        return _implication("naive_bound", True, lambda: A.depth >= b and A.sdepth >= b, q)

    return _guard("naive_bound", A, body)


def check_field_stability(F: FactorModule, analysis: Analysis = None, other: FieldSpec = FieldSpec(2)) -> CheckOutcome:
    """Betti tables over the analysis field and another characteristic agree; reported only."""
    A = _as_analysis(F, analysis)

    def body():
        alt = betti_table(F, other, A.caps)
        q = {"depth": A.depth, f"depth_char{other.characteristic}": alt.depth}
        return _implication("field_stability", True, lambda: alt.entries == A.betti.entries, q)

    return _guard("field_stability", A, body, asserted=False)


BATTERY = (
    check_ikm_identity,
    check_polarization_shift,
    check_canonical_invariance,
    check_index_bound,
    check_naive_bound,
    check_theorem_24,
    check_theorem_27,
    check_theorem_21_22,
    check_prop_31,
    check_prop_32,
    check_stanley,
    check_conjecture_02,
    check_field_stability,
)


def run_battery(F: FactorModule, analysis: Analysis = None) -> List[CheckOutcome]:
    A = _as_analysis(F, analysis)
    return [check(F, A) for check in BATTERY]


@dataclass(frozen=True)
class FuzzConfig:
    seed: int = 0
    instance_count: int = 200
    n_max: int = 4
    exponent_max: int = 3
    gen_count_max: int = 4
    zero_j_probability: float = 0.2
    caps: Caps = DEFAULT_CAPS
    node_budget: int = DEFAULT_NODE_BUDGET


def _random_monomial(rng: random.Random, n: int, top: int, positive: bool):
    while True:
        u = tuple(rng.randint(0, top) for _ in range(n))
        if not positive or any(u):
            return u


def random_factor(rng: random.Random, config: FuzzConfig) -> FactorModule:
    """Draw I, then J inside I from multiples of I's generators."""
    while True:
        n = rng.randint(1, config.n_max)
        top = config.exponent_max
        I = minimalize((_random_monomial(rng, n, top, True)
                        for _ in range(rng.randint(1, config.gen_count_max))), n)
        if rng.random() < config.zero_j_probability:
            J = minimalize((), n)
        else:
            js = []
            for _ in range(rng.randint(1, config.gen_count_max)):
                f = rng.choice(I.gens)
                m = _random_monomial(rng, n, top, False)
                js.append(tuple(min(a + b, top) for a, b in zip(f, m)))
            J = minimalize(js, n)
        try:
            return make_factor(I, J)
        except EqualIdeals:
            continue


def corpus(config: FuzzConfig) -> Iterator[FactorModule]:
    rng = random.Random(config.seed)
    for _ in range(config.instance_count):
        yield random_factor(rng, config)


def _instance_records(job):
    idx, F, config, field = job
    A = Analysis(F, field, config.caps, config.node_budget)
    recs = []
    for out in run_battery(F, A):
        rec = {"instance": idx, "seed": config.seed, "field": str(field)}
        rec.update(out.to_json())
        recs.append(rec)
    return recs


def fuzz(config: FuzzConfig, field: FieldSpec = QQ, workers: int = 1) -> Iterator[Dict]:
    """Run the checker battery over the seeded corpus; one record per check.

    With ``workers > 1`` instances run in a process pool; records still come
    out in instance order, so the stream is identical to the sequential one.
    """
    jobs = ((idx, F, config, field) for idx, F in enumerate(corpus(config)))
    if workers <= 1:
        for job in jobs:
            yield from _instance_records(job)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for recs in pool.map(_instance_records, jobs, chunksize=4):
            yield from recs


def cross_validate(F: FactorModule, field: FieldSpec = QQ, caps: Caps = DEFAULT_CAPS) -> bool:
    """Koszul and Taylor-cone Betti tables agree entrywise."""
    return betti_table(F, field, caps).entries == taylor_oracle(F, field, caps).entries
