"""Exact depth of I/J from multigraded Betti numbers.

Two independent routes compute beta_{i,a} = dim Tor_i(I/J, K)_a:

* ``betti_table`` uses the Koszul complex on x_1..x_n tensored with I/J.  In
  multidegree a its i-th piece has one basis vector per i-subset F of the
  variables with x^(a - e_F) a nonzero monomial of I/J.
* ``taylor_oracle`` resolves I and J by their Taylor complexes, lifts the
  inclusion J -> I to a chain map, takes the mapping cone and computes the
  homology of cone (x) K one multidegree at a time.

Depth then follows from Auslander-Buchsbaum: depth = n - pd.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np

from .linalg import QQ, FieldSpec, rank
from .monomials import FactorModule, Monomial, divides, lcm_all


class ResourceCap(RuntimeError):
    """The instance is larger than the configured engine limits."""


class BoxExceeded(ValueError):
    """A multidegree outside the lcm box was requested."""


@dataclass
class Caps:
    max_vars: int = 14
    max_box: int = 200_000
    max_taylor_gens: int = 12


DEFAULT_CAPS = Caps()


@dataclass(frozen=True)
class BettiTable:
    entries: Dict[Tuple[int, Monomial], int]
    n: int
    field: FieldSpec = QQ

    @property
    def pd(self) -> int:
        return max(i for i, _ in self.entries)

    @property
    def depth(self) -> int:
        return self.n - self.pd

    def graded(self) -> Dict[Tuple[int, int], int]:
        """Coarsen to the standard-graded table {(i, total degree): beta}."""
        out: Dict[Tuple[int, int], int] = {}
        for (i, a), b in self.entries.items():
            out[(i, sum(a))] = out.get((i, sum(a)), 0) + b
        return out

    def total(self, i: int) -> int:
        return sum(b for (j, _), b in self.entries.items() if j == i)

    def rows(self):
        """Report rows sorted by homological index, then multidegree."""
        return [(i, a, self.entries[(i, a)]) for i, a in sorted(self.entries)]

    def to_json(self):
        return {
            "field": str(self.field),
            "n": self.n,
            "pd": self.pd,
            "depth": self.depth,
            "entries": [[i, list(a), b] for i, a, b in self.rows()],
        }


class _Box:
    """The lattice of exponent vectors 0 <= a <= bound with membership flags."""

    def __init__(self, F: FactorModule, bound: Monomial, caps: Caps):
        if F.n > caps.max_vars:
            raise ResourceCap(f"{F.n} variables exceed the cap of {caps.max_vars}")
        self.bound = tuple(bound)
        self.shape = tuple(b + 1 for b in bound)
        volume = int(np.prod(self.shape))
        if volume > caps.max_box:
            raise ResourceCap(f"multidegree box of volume {volume} exceeds the cap of {caps.max_box}")
        self.strides = np.array([int(np.prod(self.shape[j + 1:])) for j in range(F.n)], dtype=np.int64)
        pts = np.indices(self.shape).reshape(F.n, -1).T
        self.points = pts
        self.in_I = self._member(pts, F.I.gens)
        self.in_J = self._member(pts, F.J.gens)
        self.module = self.in_I & ~self.in_J

    @staticmethod
    def _member(pts, gens):
        flags = np.zeros(len(pts), dtype=bool)
        for g in gens:
            flags |= np.all(pts >= np.array(g), axis=1)
        return flags

    def index(self, a: Monomial) -> int:
        return int(np.dot(self.strides, a))


def _koszul_piece(box: _Box, a: Monomial):
    """Basis of the Koszul complex in multidegree a, or None when it is exact.

    Returns (support variables, module flag per subset mask).
    """
    supp = [j for j, x in enumerate(a) if x > 0]
    m = len(supp)
    offsets = np.zeros(1 << m, dtype=np.int64)
    for k, j in enumerate(supp):
        offsets[1 << k: 1 << (k + 1)] = offsets[: 1 << k] + box.strides[j]
    flags = box.module[box.index(a) - offsets]
    if not flags.any():
        return None
    masks = np.arange(1 << m)
    for k in range(m):
        bit = 1 << k
        low = masks[(masks & bit) == 0]
        # x_j maps (I/J)_{a-F-e_j} isomorphically onto (I/J)_{a-F} for all F:
        # the complex is a cone over an isomorphism, hence exact
        if np.array_equal(flags[low], flags[low | bit]):
            return None
    return supp, flags


def _koszul_ranks(supp, flags, field: FieldSpec):
    m = len(supp)
    by_size: Dict[int, list] = {}
    for mask in np.flatnonzero(flags):
        by_size.setdefault(int(mask).bit_count(), []).append(int(mask))
    dims = {i: len(v) for i, v in by_size.items()}
    ranks = {}
    for i in range(1, m + 1):
        if i not in by_size or i - 1 not in by_size:
            ranks[i] = 0
            continue
        rows = []
        for mask in by_size[i]:
            row = {}
            pos = 0
            for k in range(m):
                bit = 1 << k
                if mask & bit:
                    face = mask ^ bit
                    if flags[face]:
                        row[face] = -1 if pos % 2 else 1
                    pos += 1
            rows.append(row)
        ranks[i] = rank(rows, field)
    return dims, ranks


def tor_rank(F: FactorModule, field: FieldSpec, i: int, a: Monomial, caps: Caps = DEFAULT_CAPS) -> int:
    """dim Tor_i(I/J, K) in multidegree a, via the Koszul complex."""
    bound = F.lcm_exponents
    if len(a) != F.n or not divides(a, bound):
        raise BoxExceeded(f"multidegree {a} outside the box {bound}")
    if not 0 <= i <= F.n:
        raise ValueError(f"homological index {i} outside 0..{F.n}")
    box = _Box(F, bound, caps)
    return _tor_at(box, tuple(a), field).get(i, 0)


def _tor_at(box: _Box, a: Monomial, field: FieldSpec) -> Dict[int, int]:
    piece = _koszul_piece(box, a)
    if piece is None:
        return {}
    supp, flags = piece
    dims, ranks = _koszul_ranks(supp, flags, field)
    out = {}
    for i, dim in dims.items():
        b = dim - ranks.get(i, 0) - ranks.get(i + 1, 0)
        if b:
            out[i] = b
    return out


def betti_table(F: FactorModule, field: FieldSpec = QQ, caps: Caps = DEFAULT_CAPS, bound=None) -> BettiTable:
    """All multigraded Betti numbers of I/J over the lcm box.

    ``bound`` overrides the box corner (used to check that a larger box adds
    nothing).
    """
    bound = F.lcm_exponents if bound is None else tuple(bound)
    box = _Box(F, bound, caps)
    entries = {}
    for idx in np.flatnonzero(box.in_I):
        a = tuple(int(x) for x in box.points[idx])
        for i, b in _tor_at(box, a, field).items():
            entries[(i, a)] = b
    return BettiTable(entries, F.n, field)


def depth(F: FactorModule, field: FieldSpec = QQ, caps: Caps = DEFAULT_CAPS) -> int:
    return betti_table(F, field, caps).depth


def projective_dimension(F: FactorModule, field: FieldSpec = QQ, caps: Caps = DEFAULT_CAPS) -> int:
    return betti_table(F, field, caps).pd


# Taylor mapping-cone oracle

def _taylor_faces(gens, n):
    """Nonempty subsets of generator indices with their lcm multidegrees."""
    faces = {}
    for size in range(1, len(gens) + 1):
        for sub in itertools.combinations(range(len(gens)), size):
            faces[sub] = lcm_all((gens[k] for k in sub), n)
    return faces


def _perm_sign(seq) -> int:
    sign = 1
    seq = list(seq)
    for x in range(len(seq)):
        for y in range(x + 1, len(seq)):
            if seq[x] > seq[y]:
                sign = -sign
    return sign


def taylor_oracle(F: FactorModule, field: FieldSpec = QQ, caps: Caps = DEFAULT_CAPS) -> BettiTable:
    """Betti numbers of I/J from the mapping cone of Taylor(J) -> Taylor(I).

    Homological position i of the cone holds the I-faces with i+1 generators
    and the J-faces with i generators.  The comparison map sends a J-face
    tau to +-(lcm tau / lcm phi(tau)) * phi(tau), where phi picks for every
    J-generator an I-generator dividing it; faces on which phi is not
    injective go to zero.
    """
    gi, gj = F.I.gens, F.J.gens
    if len(gi) + len(gj) > caps.max_taylor_gens:
        raise ResourceCap(f"{len(gi) + len(gj)} generators exceed the Taylor cap of {caps.max_taylor_gens}")
    n = F.n
    phi = [next(k for k, g in enumerate(gi) if divides(g, h)) for h in gj]
    faces_i = _taylor_faces(gi, n)
    faces_j = _taylor_faces(gj, n)

    # cone (x) K splits by multidegree; only unit coefficients survive
    cells: Dict[Monomial, Dict[int, list]] = {}
    for sub, a in faces_i.items():
        cells.setdefault(a, {}).setdefault(len(sub) - 1, []).append(("I", sub))
    for sub, a in faces_j.items():
        cells.setdefault(a, {}).setdefault(len(sub), []).append(("J", sub))

    entries = {}
    for a, by_pos in cells.items():
        index = {pos: {cell: k for k, cell in enumerate(cs)} for pos, cs in by_pos.items()}
        ranks = {}
        for pos, cs in by_pos.items():
            target = index.get(pos - 1)
            if not target:
                ranks[pos] = 0
                continue
            rows = []
            for kind, sub in cs:
                row = {}
                if len(sub) > 1:
                    sgn = 1 if kind == "I" else -1
                    faces = faces_i if kind == "I" else faces_j
                    for k in range(len(sub)):
                        face = sub[:k] + sub[k + 1:]
                        if faces[face] == a:
                            col = target.get((kind, face))
                            row[col] = row.get(col, 0) + sgn * (-1) ** k
                if kind == "J":
                    image = [phi[k] for k in sub]
                    if len(set(image)) == len(image):
                        face = tuple(sorted(image))
                        if faces_i[face] == a:
                            col = target[("I", face)]
                            row[col] = row.get(col, 0) + _perm_sign(image)
                rows.append(row)
            ranks[pos] = rank(rows, field)
        for pos, cs in by_pos.items():
            b = len(cs) - ranks.get(pos, 0) - ranks.get(pos + 1, 0)
            if b:
                entries[(pos, a)] = b
    return BettiTable(entries, n, field)
