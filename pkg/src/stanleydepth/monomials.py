"""Monomials, monomial ideals and factors I/J.

A monomial x^a in n variables is stored as a plain tuple of n non-negative
exponents.  Ideals are kept as their minimal generating set G(I) in a fixed
total order (total degree, then lexicographic with x1 > x2 > ...), so two ideals are
equal exactly when their ``gens`` tuples are equal.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Tuple

Monomial = Tuple[int, ...]


class NotContained(ValueError):
    """J has a generator outside I."""


class EqualIdeals(ValueError):
    """I and J coincide, so I/J is the zero module."""


class MonomialParseError(ValueError):
    def __init__(self, message: str, text: str, offset: int):
        super().__init__(f"{message} at offset {offset}: {text!r}")
        self.text = text
        self.offset = offset


def _check_lengths(u: Monomial, v: Monomial) -> None:
    if len(u) != len(v):
        raise ValueError(f"monomials live in different rings ({len(u)} vs {len(v)} variables)")


def unit(n: int) -> Monomial:
    return (0,) * n


def variable(i: int, n: int) -> Monomial:
    """The variable x_i (1-based) in n variables."""
    if not 1 <= i <= n:
        raise IndexError(f"variable index {i} outside 1..{n}")
    return tuple(1 if j == i - 1 else 0 for j in range(n))


def degree(u: Monomial) -> int:
    return sum(u)


def support(u: Monomial) -> frozenset:
    """0-based indices of the variables dividing u."""
    return frozenset(j for j, a in enumerate(u) if a)


def is_squarefree(u: Monomial) -> bool:
    return all(a <= 1 for a in u)


def divides(u: Monomial, v: Monomial) -> bool:
    _check_lengths(u, v)
    return all(a <= b for a, b in zip(u, v))


def lcm(u: Monomial, v: Monomial) -> Monomial:
    _check_lengths(u, v)
    return tuple(max(a, b) for a, b in zip(u, v))


def lcm_all(ms: Iterable[Monomial], n: int) -> Monomial:
    out = unit(n)
    for m in ms:
        out = lcm(out, m)
    return out


def multiply(u: Monomial, v: Monomial) -> Monomial:
    _check_lengths(u, v)
    return tuple(a + b for a, b in zip(u, v))


def sort_key(u: Monomial):
    # degree first, then x1 > x2 > ... so (x1, x2) prints in index order
    return (sum(u), tuple(-a for a in u))


@dataclass(frozen=True)
class MonomialIdeal:
    n: int
    gens: Tuple[Monomial, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("ambient ring needs at least one variable")
        for g in self.gens:
            if len(g) != self.n or any(a < 0 for a in g):
                raise ValueError(f"bad generator {g} for a ring in {self.n} variables")

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_squarefree(self) -> bool:
        return all(is_squarefree(g) for g in self.gens)

    def __contains__(self, u: Monomial) -> bool:
        return contains(self, u)

    def __str__(self):
        return format_ideal(self)


def minimalize(ms: Iterable[Monomial], n: int) -> MonomialIdeal:
    """Minimal generating set of the ideal generated by ``ms``."""
    cands = sorted(set(tuple(m) for m in ms), key=sort_key)
    kept: list = []
    for m in cands:
        if len(m) != n:
            raise ValueError(f"monomial {m} does not have {n} exponents")
        # candidates come in degree order, so only earlier ones can divide m
        if not any(divides(g, m) for g in kept):
            kept.append(m)
    return MonomialIdeal(n, tuple(kept))


def ideal(ms: Iterable[Monomial], n: int | None = None) -> MonomialIdeal:
    ms = [tuple(m) for m in ms]
    if n is None:
        if not ms:
            raise ValueError("cannot infer the ring of the zero ideal")
        n = len(ms[0])
    return minimalize(ms, n)


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ())


def contains(I: MonomialIdeal, u: Monomial) -> bool:
    return any(divides(g, u) for g in I.gens)


def intersect(I1: MonomialIdeal, I2: MonomialIdeal) -> MonomialIdeal:
    if I1.n != I2.n:
        raise ValueError("ideals live in different rings")
    return minimalize((lcm(a, b) for a in I1.gens for b in I2.gens), I1.n)


def ideal_sum(I1: MonomialIdeal, I2: MonomialIdeal) -> MonomialIdeal:
    if I1.n != I2.n:
        raise ValueError("ideals live in different rings")
    return minimalize(I1.gens + I2.gens, I1.n)


def is_subideal(J: MonomialIdeal, I: MonomialIdeal) -> bool:
    return all(contains(I, g) for g in J.gens)


@dataclass(frozen=True)
class FactorModule:
    """The multigraded module I/J for monomial ideals J strictly inside I."""

    I: MonomialIdeal
    J: MonomialIdeal

    @property
    def n(self) -> int:
        return self.I.n

    @property
    def all_gens(self) -> Tuple[Monomial, ...]:
        return self.I.gens + self.J.gens

    @property
    def lcm_exponents(self) -> Monomial:
        """Componentwise maximal exponents over G(I) and G(J)."""
        return lcm_all(self.all_gens, self.n)

    @property
    def is_squarefree(self) -> bool:
        return self.I.is_squarefree and self.J.is_squarefree

    def in_module(self, u: Monomial) -> bool:
        """True when x^u spans a nonzero graded piece of I/J."""
        return contains(self.I, u) and not contains(self.J, u)

    def __str__(self):
        return f"({format_ideal(self.I)})/({format_ideal(self.J)})"


def make_factor(I: MonomialIdeal, J: MonomialIdeal) -> FactorModule:
    if I.n != J.n:
        raise ValueError("I and J live in different rings")
    if not is_subideal(J, I):
        raise NotContained(f"J = ({format_ideal(J)}) is not contained in I = ({format_ideal(I)})")
    if is_subideal(I, J):
        raise EqualIdeals(f"I = J = ({format_ideal(I)})")
    return FactorModule(I, J)


# text grammar: terms "x<i>^<e>" joined by "*", generators joined by ","

_TERM = re.compile(r"x(\d+)(?:\^(\d+))?")


def _strip(text: str):
    """Drop whitespace, remembering each kept character's original offset."""
    kept = [(c, i) for i, c in enumerate(text) if not c.isspace()]
    return "".join(c for c, _ in kept), [i for _, i in kept] + [len(text)]


def parse_monomials(text: str):
    """Parse ``"x1^2*x3, x2"`` into a list of {index: exponent} dicts.

    Returns the parsed terms plus the largest variable index seen.
    """
    s, offsets = _strip(text)
    if s == "0":
        return [], 0
    if not s:
        raise MonomialParseError("empty ideal", text, 0)
    out = []
    top = 0
    pos = 0
    while True:
        exps: dict = {}
        while True:
            m = _TERM.match(s, pos)
            if m is None or (m.group(2) is None and s.startswith("^", m.end())):
                bad = pos if m is None else m.end() + 1
                raise MonomialParseError("expected a term like x3 or x3^2", text, offsets[min(bad, len(s))])
            i = int(m.group(1))
            e = int(m.group(2)) if m.group(2) is not None else 1
            if i < 1:
                raise MonomialParseError("variable indices start at 1", text, offsets[pos])
            exps[i] = exps.get(i, 0) + e
            top = max(top, i)
            pos = m.end()
            if pos < len(s) and s[pos] == "*":
                pos += 1
                continue
            break
        out.append(exps)
        if pos == len(s):
            return out, top
        if s[pos] != ",":
            raise MonomialParseError(f"unexpected {s[pos]!r}", text, offsets[pos])
        pos += 1


def _to_tuple(exps: dict, n: int) -> Monomial:
    return tuple(exps.get(i + 1, 0) for i in range(n))


def parse_monomial(text: str, n: int | None = None) -> Monomial:
    terms, top = parse_monomials(text)
    if len(terms) != 1:
        raise MonomialParseError("expected a single monomial", text, 0)
    n = top if n is None else n
    if top > n:
        raise MonomialParseError(f"variable x{top} outside a ring in {n} variables", text, 0)
    return _to_tuple(terms[0], n)


def parse_ideal(text: str, n: int | None = None) -> MonomialIdeal:
    terms, top = parse_monomials(text)
    n = max(top, 1) if n is None else n
    if top > n:
        raise MonomialParseError(f"variable x{top} outside a ring in {n} variables", text, 0)
    return minimalize((_to_tuple(t, n) for t in terms), n)


def parse_factor(text_I: str, text_J: str = "0", n: int | None = None) -> FactorModule:
    """Parse generators of I and J (``"0"`` for the zero ideal) into I/J.

    n defaults to the largest variable index appearing in either text.
    """
    if n is None:
        n = max(parse_monomials(text_I)[1], parse_monomials(text_J)[1], 1)
    return make_factor(parse_ideal(text_I, n), parse_ideal(text_J, n))


def format_monomial(u: Monomial, names=None) -> str:
    parts = []
    for i, a in enumerate(u):
        if a == 0:
            continue
        name = names[i] if names else f"x{i + 1}"
        parts.append(name if a == 1 else f"{name}^{a}")
    return "*".join(parts) if parts else "1"


def format_ideal(I: MonomialIdeal, names=None) -> str:
    if I.is_zero:
        return "0"
    return ", ".join(format_monomial(g, names) for g in I.gens)
