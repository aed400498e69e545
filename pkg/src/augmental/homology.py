"""Augmental chain complexes, homology and cohomology.

The chain complex of a pair ``(total, sub)`` has one basis element per face of
``total`` not in ``sub``, the empty face included, so ``d[v] = [()]``.  With a
``VOID`` sub this gives reduced homology; with a present sub the empty face is
struck and the result is classical relative homology.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .abelian import ZERO, Coefficients, FgAbelianGroup, ZZ, base_change, canonicalize
from .complex import (
    ComplexPair, SimplicialComplex, as_pair, contrastar, link, require_face,
)
from .snf import rank_mod_p, snf_sparse


@dataclass
class ChainComplex:
    """Bases per degree and sparse boundary maps.

    ``boundary[i]`` is a list with one entry per basis face of degree ``i``,
    mapping row indices in degree ``i - 1`` to integer coefficients.
    """

    basis: dict = field(default_factory=dict)
    boundary: dict = field(default_factory=dict)

    @property
    def degrees(self) -> list:
        return sorted(self.basis)

    def rows(self, i: int) -> dict:
        """``boundary[i]`` as ``{row: {col: value}}``."""
        rows: dict = {}
        for j, col in enumerate(self.boundary.get(i, [])):
            for r, v in col.items():
                rows.setdefault(r, {})[j] = v
        return rows

    def transposed_rows(self, i: int) -> dict:
        return {j: dict(col) for j, col in enumerate(self.boundary.get(i, [])) if col}

    def dense(self, i: int) -> np.ndarray:
        """``boundary[i]`` as an integer array of shape (n_{i-1}, n_i)."""
        m = np.zeros((len(self.basis.get(i - 1, [])), len(self.basis.get(i, []))), dtype=object)
        for j, col in enumerate(self.boundary.get(i, [])):
            for r, v in col.items():
                m[r, j] = v
        return m


def build_chain(pair, coeff: Coefficients = ZZ) -> ChainComplex:
    """Augmental chain complex of a pair; checks that the boundary squares to zero.

    Signs come from the global label order.  ``coeff`` only matters later,
    when ranks are taken.
    """
    pair = as_pair(pair)
    total, sub = pair.total, pair.sub
    cc = ChainComplex()
    if total.is_void:
        return cc
    struck = sub.faces
    index: dict = {}
    for d in range(-1, total.dim + 1):
        fs = [f for f in total.faces_of_dim(d) if f not in struck]
        cc.basis[d] = fs
        index[d] = {f: k for k, f in enumerate(fs)}
    for d in range(0, total.dim + 1):
        lower = index[d - 1]
        cols = []
        for f in cc.basis[d]:
            col = {}
            for j in range(len(f)):
                r = lower.get(f[:j] + f[j + 1:])
                if r is not None:
                    col[r] = -1 if j % 2 else 1
            cols.append(col)
        cc.boundary[d] = cols
    for d in range(1, total.dim + 1):
        below = cc.boundary[d - 1]
        for col in cc.boundary[d]:
            acc: dict = {}
            for r, v in col.items():
                for rr, vv in below[r].items():
                    acc[rr] = acc.get(rr, 0) + v * vv
            if any(acc.values()):
                raise AssertionError("boundary does not square to zero")
    return cc


class HomologyTable:
    """Nonzero homology groups (over Z) or dimensions (over a field) by degree."""

    __slots__ = ("coeff", "groups")

    def __init__(self, coeff: Coefficients, groups: dict):
        self.coeff = coeff
        zero = (lambda g: g.is_zero()) if coeff.kind == "Z" else (lambda g: g == 0)
        self.groups = {i: g for i, g in sorted(groups.items()) if not zero(g)}

    def __getitem__(self, i: int):
        return self.groups.get(i, ZERO if self.coeff.kind == "Z" else 0)

    def rank(self, i: int) -> int:
        """Free rank over Z, dimension over a field."""
        g = self[i]
        return g.rank if isinstance(g, FgAbelianGroup) else g

    def is_zero(self) -> bool:
        return not self.groups

    def is_coefficient_group(self, i: int) -> bool:
        """Whether ``H_i`` is isomorphic to the coefficient ring itself."""
        g = self[i]
        return g == FgAbelianGroup(1) if self.coeff.kind == "Z" else g == 1

    def nonzero_degrees(self) -> list:
        return list(self.groups)

    def top(self):
        return max(self.groups) if self.groups else None

    def __eq__(self, other):
        if not isinstance(other, HomologyTable):
            return NotImplemented
        return self.coeff == other.coeff and self.groups == other.groups

    def __hash__(self):
        return hash((self.coeff, tuple(self.groups.items())))

    def shifted(self, k: int) -> "HomologyTable":
        """Table with ``H_i`` moved to degree ``i + k``."""
        return HomologyTable(self.coeff, {i + k: g for i, g in self.groups.items()})

    def render_group(self, i: int) -> str:
        return render_group(self[i], self.coeff)

    def lines(self, verbose: bool = False, top: int | None = None) -> list:
        if verbose:
            hi = top if top is not None else max([*self.groups, -1])
            degs = range(-1, hi + 1)
        else:
            degs = self.groups
        return [f"H_{i} = {self.render_group(i)}" for i in degs]

    def __repr__(self):
        body = ", ".join(f"{i}: {self.render_group(i)}" for i in self.groups)
        return f"HomologyTable({self.coeff}, {{{body}}})"


def render_group(g, coeff: Coefficients) -> str:
    if coeff.kind == "Z":
        return str(g)
    if g == 0:
        return "0"
    name = "Q" if coeff.kind == "Q" else f"Z_{coeff.p}"
    return name if g == 1 else f"{name}^{g}"


def _ranks(cc: ChainComplex, coeff: Coefficients, transpose: bool = False):
    """Per degree: rank of the boundary map and, over Z, its torsion invariants."""
    ranks, tors = {}, {}
    for d in cc.boundary:
        rows = cc.transposed_rows(d) if transpose else cc.rows(d)
        if coeff.kind == "Zp":
            ranks[d] = rank_mod_p(rows, coeff.p)
            tors[d] = ()
        else:
            snf = snf_sparse(rows)
            ranks[d] = snf.rank
            tors[d] = tuple(x for x in snf.diagonal if x > 1)
    return ranks, tors


def _table(cc: ChainComplex, coeff: Coefficients, cohomology: bool) -> HomologyTable:
    ranks, tors = _ranks(cc, coeff, transpose=cohomology)
    groups = {}
    for d, b in cc.basis.items():
        free = len(b) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if coeff.kind == "Z":
            t = tors.get(d, ()) if cohomology else tors.get(d + 1, ())
            groups[d] = canonicalize(free, t)
        else:
            groups[d] = free
    return HomologyTable(coeff, groups)


@lru_cache(maxsize=8192)
def _homology_cached(total: SimplicialComplex, sub: SimplicialComplex, coeff: Coefficients,
                     cohomology: bool) -> HomologyTable:
    return _table(build_chain(ComplexPair(total, sub)), coeff, cohomology)


def homology(pair, coeff: Coefficients = ZZ) -> HomologyTable:
    """Augmental homology of a complex or a pair ``(total, sub)``."""
    p = as_pair(pair)
    return _homology_cached(p.total, p.sub, coeff, False)


def cohomology(pair, coeff: Coefficients = ZZ) -> HomologyTable:
    p = as_pair(pair)
    return _homology_cached(p.total, p.sub, coeff, True)


def local_homology(sigma: SimplicialComplex, face, coeff: Coefficients = ZZ) -> HomologyTable:
    """``H_*(sigma, cost face)``, checked against the link homology shifted by ``#face``."""
    face = require_face(sigma, face)
    rel = homology((sigma, contrastar(sigma, face)), coeff)
    via_link = homology(link(sigma, face), coeff).shifted(len(face))
    if rel != via_link:
        raise AssertionError(f"local homology paths disagree at {face}: {rel} vs {via_link}")
    return rel


def link_homology_shifted(sigma: SimplicialComplex, face, coeff: Coefficients = ZZ) -> HomologyTable:
    """Local homology computed only through the link (the cheap path)."""
    face = require_face(sigma, face)
    return homology(link(sigma, face), coeff).shifted(len(face))


def uct_prediction(integral: HomologyTable, coeff: Coefficients) -> HomologyTable:
    """Field homology predicted from integral homology by universal coefficients."""
    if integral.coeff.kind != "Z" or not coeff.is_field:
        raise ValueError("need integral input and a field target")
    dims: dict = {}
    for i, g in integral.groups.items():
        bc = base_change(g, coeff)
        dims[i] = dims.get(i, 0) + bc.tensor_dim
        dims[i + 1] = dims.get(i + 1, 0) + bc.tor_dim
    return HomologyTable(coeff, dims)


def uct_cohomology_prediction(integral: HomologyTable) -> HomologyTable:
    """Integral cohomology from integral homology: free part of H_i, torsion of H_{i-1}."""
    groups: dict = {}
    for i, g in integral.groups.items():
        groups[i] = canonicalize(g.rank + groups.get(i, ZERO).rank, groups.get(i, ZERO).torsion)
        nxt = groups.get(i + 1, ZERO)
        groups[i + 1] = canonicalize(nxt.rank, nxt.torsion + g.torsion)
    return HomologyTable(ZZ, groups)
