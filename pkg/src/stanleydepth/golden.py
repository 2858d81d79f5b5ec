"""Worked examples with their published values, as executable fixtures.

Each fixture computes a value from the library and compares it with the
value stated for the example.  ``run_golden`` returns one row per fixture.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, List

from .checks import Analysis, check_prop_32, check_stanley, check_theorem_24, check_theorem_27
from .monomials import contains, format_ideal, lcm, minimalize, parse_factor, parse_ideal, parse_monomial
from .transforms import canonical_form, compute_invariants, polarize, type_with_respect_to


def factor(i_text: str, j_text: str = "0", n: int | None = None):
    return parse_factor(i_text, j_text, n)


DEG12_PAIR = ("x1^3*x2^4*x3^5, x1^10*x2^2", "0", 3)
X1_MOD = ("x1", "x1*x2^2", 2)
X2_MOD = ("x2", "x1^2*x2, x1*x2^2", 2)
SIX_VARS = ("x1, x2, x3, x4, x5, x6", "x1^2, x1*x2, x1*x3, x1*x4, x1*x5, x1*x7", 7)
R_GROWTH = ("x1^3*x2^4, x1^11*x2", "0", 2)
X1_X2X3 = ("x1, x2*x3", "0", 3)


@dataclass
class Fixture:
    name: str
    compute: Callable[[], Any]
    expected: Any


@dataclass
class GoldenRow:
    name: str
    expected: Any
    actual: Any

    @property
    def passed(self) -> bool:
        return self.actual == self.expected


def _ideal_text(F):
    return format_ideal(F.I), format_ideal(F.J)


def _polar_text(spec):
    P, pmap = polarize(factor(*spec))
    return format_ideal(P.I, pmap.names), format_ideal(P.J, pmap.names)


def _applies(check, spec):
    out = check(factor(*spec))
    return out.hypothesis_held, out.conclusion_held


def _inv(spec):
    return compute_invariants(factor(*spec))


def _an(spec):
    return Analysis(factor(*spec))


def fixtures() -> List[Fixture]:
    return [
        Fixture("(x1^3x2^4x3^5, x1^10x2^2) lcm exponents",
                lambda: lcm(parse_monomial("x1^3*x2^4*x3^5"), parse_monomial("x1^10*x2^2", 3)), (10, 4, 5)),
        Fixture("(x1^3x2^4x3^5, x1^10x2^2) e_i", lambda: _inv(DEG12_PAIR).e_per_var, (10, 4, 5)),
        Fixture("(x1^3x2^4x3^5, x1^10x2^2) e_I", lambda: _inv(DEG12_PAIR).e_total, 16),
        Fixture("(x1^3x2^4x3^5, x1^10x2^2) d - e", lambda: _inv(DEG12_PAIR).naive_bound, -4),
        Fixture("(x1^3x2^4x3^5, x1^10x2^2) type x1", lambda: type_with_respect_to(factor(*DEG12_PAIR), 1), (3, 10)),
        Fixture("(x1^3x2^4x3^5, x1^10x2^2) type x2", lambda: type_with_respect_to(factor(*DEG12_PAIR), 2), (2, 4)),
        Fixture("(x1^3x2^4x3^5, x1^10x2^2) type x3", lambda: type_with_respect_to(factor(*DEG12_PAIR), 3), (5,)),
        Fixture("(x1^3x2^4x3^5, x1^10x2^2) canonical form",
                lambda: set(canonical_form(factor(*DEG12_PAIR)).I.gens),
                set(parse_ideal("x1*x2^2*x3, x1^2*x2", 3).gens)),
        Fixture("(x1^3x2^4x3^5, x1^10x2^2) canonical degrees", lambda: sorted(sum(g) for g in _inv(DEG12_PAIR).canonical.I.gens), [3, 4]),
        Fixture("(x1^3x2^4x3^5, x1^10x2^2) e'", lambda: _inv(DEG12_PAIR).e_prime, 2),
        Fixture("(x1^3x2^4x3^5, x1^10x2^2) d'", lambda: _inv(DEG12_PAIR).d_prime, 3),
        Fixture("(x1^3x2^4x3^5, x1^10x2^2) index t", lambda: _inv(DEG12_PAIR).index_t, 1),
        Fixture("(x1, x2x3) squarefree t = d", lambda: (_inv(X1_X2X3).index_t, _inv(X1_X2X3).d_min), (1, 1)),
        Fixture("(x1^3x2^4, x1^11x2) minimal generators kept",
                lambda: len(minimalize(parse_ideal(R_GROWTH[0]).gens, 2).gens), 2),
        Fixture("(x1^3x2^4, x1^11x2) r", lambda: _inv(R_GROWTH).r_count, 1),
        Fixture("(x1^3x2^4, x1^11x2) canonical form",
                lambda: set(canonical_form(factor(*R_GROWTH)).I.gens), set(parse_ideal("x1*x2^2, x1^2*x2").gens)),
        Fixture("(x1^3x2^4, x1^11x2) r'", lambda: _inv(R_GROWTH).r_prime, 2),
        Fixture("(x1)/(x1x2^2) e_i", lambda: _inv(X1_MOD).e_per_var, (1, 2)),
        Fixture("(x1)/(x1x2^2) e", lambda: _inv(X1_MOD).e_total, 1),
        Fixture("(x1)/(x1x2^2) index t", lambda: _inv(X1_MOD).index_t, 0),
        Fixture("(x1)/(x1x2^2) polarization", lambda: _polar_text(X1_MOD), ("x1", "x1*x2*y2")),
        Fixture("(x1)/(x1x2^2) sdepth", lambda: _an(X1_MOD).sdepth, 1),
        Fixture("(x1)/(x1x2^2) depth", lambda: _an(X1_MOD).depth, 1),
        Fixture("(x1)/(x1x2^2) t+1 bound applies",
                lambda: _applies(check_theorem_24, X1_MOD),
                (True, True)),
        Fixture("(x1)/(x1x2^2) depth <= sdepth", lambda: check_stanley(factor(*X1_MOD)).conclusion_held, True),
        Fixture("(x2)/(x1^2x2, x1x2^2) e_i", lambda: _inv(X2_MOD).e_per_var, (2, 2)),
        Fixture("(x2)/(x1^2x2, x1x2^2) e", lambda: _inv(X2_MOD).e_total, 2),
        Fixture("(x2)/(x1^2x2, x1x2^2) index t", lambda: _inv(X2_MOD).index_t, 0),
        Fixture("(x2)/(x1^2x2, x1x2^2) polarization", lambda: _polar_text(X2_MOD), ("x2", "x1*x2*y1, x1*x2*y2")),
        Fixture("(x2)/(x1^2x2, x1x2^2) x1*x2 survives", lambda: contains(parse_ideal(X2_MOD[1]), parse_monomial("x1*x2")), False),
        Fixture("(x2)/(x1^2x2, x1x2^2) sdepth", lambda: _an(X2_MOD).sdepth, 0),
        Fixture("(x2)/(x1^2x2, x1x2^2) depth", lambda: _an(X2_MOD).depth, 0),
        Fixture("(x2)/(x1^2x2, x1x2^2) sdepth = t forces depth = t",
                lambda: _applies(check_theorem_27, X2_MOD),
                (True, True)),
        Fixture("(x2)/(x1^2x2, x1x2^2) depth <= sdepth", lambda: check_stanley(factor(*X2_MOD)).conclusion_held, True),
        Fixture("(x1..x6)/J in 7 vars index t", lambda: _inv(SIX_VARS).index_t, 0),
        Fixture("(x1..x6)/J in 7 vars sdepth <= 1", lambda: _an(SIX_VARS).sdepth <= 1, True),
        Fixture("(x1..x6)/J in 7 vars depth <= 1", lambda: _an(SIX_VARS).depth <= 1, True),
        Fixture("(x1..x6)/J in 7 vars polarization sdepth <= 2", lambda: _an(SIX_VARS).polarized.sdepth <= 2, True),
        Fixture("(x1..x6)/J in 7 vars six-variable t+1 bound applies",
                lambda: _applies(check_prop_32, SIX_VARS),
                (True, True)),
    ]


def run_golden() -> List[GoldenRow]:
    return [GoldenRow(f.name, f.expected, f.compute()) for f in fixtures()]
