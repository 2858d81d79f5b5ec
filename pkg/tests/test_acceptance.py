"""Exit criteria.  Each test appends one PASS/FAIL line to the terminal summary.

Run alone with ``pytest tests/test_acceptance.py`` (or ``python tests/test_acceptance.py``).
"""
import json
import math
import sys
import time

import pytest

from conftest import ACCEPTANCE_LINES
from stanleydepth.checks import (
    Analysis,
    FuzzConfig,
    check_canonical_invariance,
    check_ikm_identity,
    check_index_bound,
    check_prop_31_32,
    check_theorem_24,
    check_theorem_27,
    corpus,
)
from stanleydepth.depth import taylor_oracle
from stanleydepth.monomials import format_ideal, parse_factor, parse_ideal
from stanleydepth.sdepth import build_poset, sdepth, sdepth_bruteforce
from stanleydepth.transforms import canonical_form, compute_invariants, polarize

CORPUS = FuzzConfig(seed=2024, instance_count=200, n_max=4, exponent_max=3, gen_count_max=4)


def record(number, ok, detail):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {detail}")
    print(ACCEPTANCE_LINES[-1])


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


@pytest.fixture(scope="module")
def corpus_runs():
    """Every corpus instance with its checker outcomes, computed once."""
    runs = []
    with Timer() as timer:
        for F in corpus(CORPUS):
            A = Analysis(F)
            runs.append((F, A, {
                "ikm": check_ikm_identity(F, A),
                "canonical": check_canonical_invariance(F, A),
                "bound": check_index_bound(F, A),
                "t24": check_theorem_24(F, A),
                "t27": check_theorem_27(F, A),
            }))
    return runs, timer.seconds


def tally(runs, key):
    failed = [o for _, _, outs in runs if (o := outs[key]).status == "fail"]
    unknown = [o for _, _, outs in runs if outs[key].status == "unknown"]
    return failed, unknown


def test_c01_exponent_bounds():
    with Timer() as t:
        inv = compute_invariants(parse_factor("x1^3*x2^4*x3^5, x1^10*x2^2"))
    ok = inv.e_per_var == (10, 4, 5) and inv.e_total == 16 and t.seconds < 1
    record(1, ok, f"e={inv.e_per_var} e_total={inv.e_total} ({t.seconds:.3f}s)")
    assert ok


def test_c02_canonical_form():
    with Timer() as t:
        F = parse_factor("x1^3*x2^4*x3^5, x1^10*x2^2")
        C = canonical_form(F)
        inv = compute_invariants(F)
    expected = set(parse_ideal("x1*x2^2*x3, x1^2*x2", 3).gens)
    ok = (set(C.I.gens) == expected and C.J.is_zero and (inv.d_prime, inv.e_prime, inv.index_t) == (3, 2, 1)
          and t.seconds < 1)
    record(2, ok, f"I'=({format_ideal(C.I)}) d'={inv.d_prime} e'={inv.e_prime} t={inv.index_t} ({t.seconds:.3f}s)")
    assert ok


def test_c03_principal_mod_square():
    with Timer() as t:
        F = parse_factor("x1", "x1*x2^2")
        inv = compute_invariants(F)
        P, pmap = polarize(F)
        A = Analysis(F)
        sd, d = A.sdepth, A.depth
    pol = (format_ideal(P.I, pmap.names), format_ideal(P.J, pmap.names))
    parts = {
        "e_total=1": inv.e_total == 1,
        "t=0": inv.index_t == 0,
        "polarization=(x1)/(x1*x2*y2)": pol == ("x1", "x1*x2*y2"),
        "sdepth=1": sd == 1,
        "depth=1": d == 1,
        "<1s": t.seconds < 1,
    }
    ok = all(parts.values())
    bad = [k for k, v in parts.items() if not v]
    record(3, ok, f"e_total={inv.e_total} t={inv.index_t} pol={pol} sdepth={sd} depth={d}"
                  + (f"; unmet: {bad}" if bad else ""))
    assert ok, f"unmet parts {bad}; t computed on the canonical form (x1)/(x1*x2) is {inv.index_t}"


def test_c04_socle_example():
    with Timer() as t:
        F = parse_factor("x2", "x1^2*x2, x1*x2^2")
        inv = compute_invariants(F)
        A = Analysis(F)
        sd, d = A.sdepth, A.depth
    ok = (inv.e_total, inv.index_t, sd, d) == (2, 0, 0, 0) and t.seconds < 1
    record(4, ok, f"e_total={inv.e_total} t={inv.index_t} sdepth={sd} depth={d} ({t.seconds:.3f}s)")
    assert ok


def test_c05_generator_growth():
    C = canonical_form(parse_factor("x1^3*x2^4, x1^11*x2"))
    ok = len(C.I.gens) == 2 and compute_invariants(parse_factor("x1^3*x2^4, x1^11*x2")).r_prime == 2
    record(5, ok, f"canonical form ({format_ideal(C.I)}) has {len(C.I.gens)} generators")
    assert ok


def test_c06_six_variables():
    with Timer() as t:
        F = parse_factor("x1, x2, x3, x4, x5, x6", "x1^2, x1*x2, x1*x3, x1*x4, x1*x5, x1*x7", 7)
        A = Analysis(F)
        p31, p32 = check_prop_31_32(F, A)
    ok = (A.t == 0 and A.sdepth <= 1 and A.depth <= 1 and p32.hypothesis_held is True
          and p32.conclusion_held is True and t.seconds < 30)
    record(6, ok, f"t={A.t} sdepth={A.sdepth} depth={A.depth} prop_32={p32.status} ({t.seconds:.2f}s)")
    assert ok


def test_c07_polarization_identity(corpus_runs):
    runs, seconds = corpus_runs
    failed, unknown = tally(runs, "ikm")
    ok = len(runs) == 200 and not failed and not unknown and seconds < 600
    record(7, ok, f"{len(runs)} instances, {len(failed)} failures, {len(unknown)} unknown ({seconds:.1f}s for the corpus)")
    assert ok, [o.witness for o in failed + unknown]


def test_c08_canonical_invariance(corpus_runs):
    runs, _ = corpus_runs
    failed, unknown = tally(runs, "canonical")
    ok = not failed and not unknown
    record(8, ok, f"{len(runs)} instances, {len(failed)} failures, {len(unknown)} unknown")
    assert ok, [o.witness for o in failed + unknown]


def test_c09_index_bounds(corpus_runs):
    runs, _ = corpus_runs
    failed, unknown = tally(runs, "bound")
    ok = not failed and not unknown
    record(9, ok, f"depth >= t and sdepth >= t on {len(runs)} instances, {len(failed)} failures")
    assert ok, [o.witness for o in failed + unknown]


def test_c10_engine_cross_validation(corpus_runs):
    runs, _ = corpus_runs
    betti_bad = [str(F) for F, A, _ in runs[:100] if A.betti.entries != taylor_oracle(F).entries]
    small = 0
    sdepth_bad = []
    for F, A, _ in runs:
        P = A.sdepth_result.poset
        if len(P) <= 12:
            small += 1
            if sdepth_bruteforce(P) != A.sdepth:
                sdepth_bad.append(str(F))
    ok = not betti_bad and not sdepth_bad and small > 0
    record(10, ok, f"Koszul vs Taylor on 100 instances: {len(betti_bad)} mismatches; "
                   f"search vs brute force on {small} small posets: {len(sdepth_bad)} mismatches")
    assert ok, (betti_bad, sdepth_bad)


def test_c11_maximal_ideal():
    with Timer() as t:
        values = {}
        for n in (3, 4, 5):
            F = parse_factor(", ".join(f"x{i}" for i in range(1, n + 1)))
            values[n] = sdepth(F).value
        brute = sdepth_bruteforce(build_poset(parse_factor("x1, x2, x3")))
    ok = all(values[n] == math.ceil(n / 2) for n in values) and brute == values[3] and t.seconds < 120
    record(11, ok, f"sdepth(m) = {values}, brute force at n=3: {brute} ({t.seconds:.2f}s)")
    assert ok


def test_c12_implication_checkers(corpus_runs):
    runs, _ = corpus_runs
    violations = []
    fired = {"t24": 0, "t27": 0}
    for key in fired:
        for _, _, outs in runs:
            o = outs[key]
            fired[key] += o.status == "pass"
            if o.status == "fail":
                violations.append(json.dumps(o.to_json(), sort_keys=True))
    for line in violations:
        print(line)
    unknown = sum(outs[k].status == "unknown" for _, _, outs in runs for k in fired)
    ok = not violations and not unknown
    record(12, ok, f"{len(violations)} hypothesis-true/conclusion-false cases "
                   f"(hypothesis held: theorem_24 {fired['t24']}, theorem_27 {fired['t27']}; unknown {unknown})")
    assert ok, violations


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
