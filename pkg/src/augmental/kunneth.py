"""Künneth right-hand sides for joins and products, checked against direct homology.

Join formula (all indices from -1, since augmental homology starts there)::

    H_{q+1}(X * Y) = (+)_{i+j=q} H_i(X) (x) H_j(Y)  (+)  (+)_{i+j=q-1} Tor(H_i(X), H_j(Y))

Product formula: the same double sum restricted to ``i, j >= 0`` plus extra
copies of ``H_q`` of a factor whose sub is ``VOID`` (reduced homology misses
the degree-zero class that classical homology of that factor would carry).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .abelian import ZERO, Coefficients, FgAbelianGroup, ZZ, direct_sum, tensor, tor1
from .complex import (
    EMPTY_SIMPLEX, ComplexPair, SimplicialComplex, as_pair, link, make_face, require_face,
)
from .constructions import OrderedComplex, join, ordered, pair_join, pair_label, pair_product, product
from .errors import PreconditionError
from .homology import HomologyTable, homology, render_group, uct_prediction


@dataclass(frozen=True)
class KunnethRow:
    degree: int
    lhs: object
    rhs: object
    label: str = ""

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


@dataclass
class KunnethReport:
    """Degreewise comparison; ``degree`` is the homology degree of the constructed complex."""

    kind: str
    coeff: Coefficients = ZZ
    rows: list = field(default_factory=list)
    case: str | None = None
    degenerate: bool = False

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    def failures(self) -> list:
        return [r for r in self.rows if not r.ok]

    def render(self) -> str:
        head = f"# {self.kind}" + (f" case {self.case}" if self.case else "")
        if self.degenerate:
            head += " (degenerate)"
        lines = [head, "q | LHS | RHS | ok"]
        for r in self.rows:
            q = f"{r.label} {r.degree}" if r.label else str(r.degree)
            lhs = render_group(r.lhs, self.coeff)
            rhs = render_group(r.rhs, self.coeff)
            lines.append(f"{q} | {lhs} | {rhs} | {'true' if r.ok else 'false'}")
        return "\n".join(lines)


def _add(acc: dict, d: int, g: FgAbelianGroup):
    if not g.is_zero():
        acc[d] = direct_sum(acc.get(d, ZERO), g)


def join_rhs_table(hx: HomologyTable, hy: HomologyTable) -> HomologyTable:
    """Predicted integral homology of a pair join from the factors' tables."""
    acc: dict = {}
    for i, a in hx.groups.items():
        for j, b in hy.groups.items():
            _add(acc, i + j + 1, tensor(a, b))
            _add(acc, i + j + 2, tor1(a, b))
    return HomologyTable(ZZ, acc)


def product_case(px: ComplexPair, py: ComplexPair) -> str:
    """Which of the four product formulas applies."""
    x1, x2, y1, y2 = px.total, px.sub, py.total, py.sub
    degenerate = x1.is_void or y1.is_void or not x1.vertices or not y1.vertices
    if degenerate or (not x2.is_void and not y2.is_void):
        return "C4"
    if x2.is_void and y2.is_void:
        return "C1"
    if x2.is_void:
        return "C2"
    return "C3"


def product_rhs_table(hx: HomologyTable, hy: HomologyTable, case: str) -> HomologyTable:
    """Predicted integral homology of a pair product in degrees ``>= 0``."""
    acc: dict = {}
    for i, a in hx.groups.items():
        for j, b in hy.groups.items():
            if i >= 0 and j >= 0:
                _add(acc, i + j, tensor(a, b))
                _add(acc, i + j + 1, tor1(a, b))
    if case in ("C1", "C3"):
        for i, a in hx.groups.items():
            if i >= 0:
                _add(acc, i, a)
    if case in ("C1", "C2"):
        for j, b in hy.groups.items():
            if j >= 0:
                _add(acc, j, b)
    return HomologyTable(ZZ, acc)


def kunneth_join_rhs(pair_x, pair_y, q: int) -> FgAbelianGroup:
    """Predicted ``H_{q+1}`` of the pair join."""
    hx, hy = homology(as_pair(pair_x)), homology(as_pair(pair_y))
    return join_rhs_table(hx, hy)[q + 1]


def kunneth_product_rhs(pair_x, pair_y, q: int) -> FgAbelianGroup:
    """Predicted ``H_q`` (``q >= 0``) of the pair product."""
    px, py = as_pair(pair_x), as_pair(pair_y)
    return product_rhs_table(homology(px), homology(py), product_case(px, py))[q]


def _compare(kind: str, lhs: HomologyTable, rhs: HomologyTable, coeff: Coefficients,
             min_degree: int = -1, label: str = "") -> list:
    if coeff.is_field:
        rhs = uct_prediction(rhs, coeff) if rhs.coeff.kind == "Z" else rhs
    degs = sorted(d for d in set(lhs.groups) | set(rhs.groups) if d >= min_degree)
    return [KunnethRow(d, lhs[d], rhs[d], label) for d in degs]


def verify_join(pair_x, pair_y, coeff: Coefficients = ZZ) -> KunnethReport:
    px, py = as_pair(pair_x), as_pair(pair_y)
    lhs = homology(pair_join(px, py), coeff)
    rhs = join_rhs_table(homology(px), homology(py))
    return KunnethReport("join", coeff, _compare("join", lhs, rhs, coeff))


def verify_product(pair_x, pair_y, order_x=None, order_y=None,
                   coeff: Coefficients = ZZ) -> KunnethReport:
    """Product formula in degrees ``>= 0``; orders default to label order."""
    px, py = _unwrap(pair_x), _unwrap(pair_y)
    order_x = order_x or _order_of(pair_x)
    order_y = order_y or _order_of(pair_y)
    case = product_case(px, py)
    prod = pair_product(px, py, order_x, order_y)
    lhs = homology(prod, coeff)
    rhs = product_rhs_table(homology(px), homology(py), case)
    degenerate = prod.total.is_void or prod.total == EMPTY_SIMPLEX
    rows = _compare("product", lhs, rhs, coeff, min_degree=0)
    return KunnethReport("product", coeff, rows, case, degenerate)


def _unwrap(x) -> ComplexPair:
    if isinstance(x, OrderedComplex):
        return ComplexPair(x.complex)
    return as_pair(x)


def _order_of(x):
    return x.order if isinstance(x, OrderedComplex) else None


def verify_degree_shift(pair_x, pair_y, order_x=None, order_y=None,
                        coeff: Coefficients = ZZ) -> KunnethReport:
    """``H_q(X x Y) = H_{q+1}(X * Y)`` plus the case's correction terms."""
    px, py = _unwrap(pair_x), _unwrap(pair_y)
    for p in (px, py):
        if p.total.is_void:
            raise PreconditionError("degree shift needs non-void totals")
        if p.total == EMPTY_SIMPLEX and p.sub.is_void:
            raise PreconditionError("degree shift excludes the pair ({()}, VOID)")
    case = product_case(px, py)
    prod = pair_product(px, py, order_x or _order_of(pair_x), order_y or _order_of(pair_y))
    lhs = homology(prod, ZZ)
    acc = {d - 1: g for d, g in homology(pair_join(px, py), ZZ).groups.items()}
    if case in ("C1", "C3"):
        for d, g in homology(px).groups.items():
            _add(acc, d, g)
    if case in ("C1", "C2"):
        for d, g in homology(py).groups.items():
            _add(acc, d, g)
    rhs = HomologyTable(ZZ, acc)
    if coeff.is_field:
        lhs = homology(prod, coeff)
    return KunnethReport("degree-shift", coeff, _compare("shift", lhs, rhs, coeff), case)


def projections(face: tuple, first: SimplicialComplex, second: SimplicialComplex) -> tuple:
    """Coordinate faces of a product face."""
    lookup = {pair_label(x, y): (x, y) for x in first.vertices for y in second.vertices}
    xs = {lookup[v][0] for v in face}
    ys = {lookup[v][1] for v in face}
    return tuple(sorted(xs)), tuple(sorted(ys))


def verify_link_kunneth(op1, op2, face1, face2) -> KunnethReport:
    """Link homology in a product against the join of the factor links.

    For every product face ``s`` projecting onto ``face1`` and ``face2``, with
    ``c = dim face1 + dim face2 - dim s``, three tables must agree after
    shifting: ``H(Lk s)`` in degree ``d + c``, ``H(Lk(face1 u face2))`` in the
    join in degree ``d``, and the join formula applied to the factor links.
    """
    o1, o2 = ordered(op1), ordered(op2)
    s1 = require_face(o1.complex, face1)
    s2 = require_face(o2.complex, face2)
    if not s1 or not s2:
        raise PreconditionError("link Künneth needs nonempty factor faces")
    prod = product(o1, o2).complex
    l1, l2 = link(o1.complex, s1), link(o2.complex, s2)
    predicted = join_rhs_table(homology(l1), homology(l2))
    jn = join(o1.complex, o2.complex)
    pre = "L:" if set(o1.complex.vertices) & set(o2.complex.vertices) else ""
    jface = make_face([pre + v for v in s1] + [("R:" if pre else "") + v for v in s2])
    in_join = homology(link(jn, jface))
    report = KunnethReport("link")
    report.rows += _compare("link", in_join, predicted, ZZ, label="join")
    found = False
    for s in sorted(prod.faces):
        if not s or projections(s, o1.complex, o2.complex) != (s1, s2):
            continue
        found = True
        c = (len(s1) - 1) + (len(s2) - 1) - (len(s) - 1)
        lk = homology(link(prod, s)).shifted(-c)
        report.rows += _compare("link", lk, in_join, ZZ, label="[" + " ".join(s) + "]")
    if not found:
        raise AssertionError("no product face over the given factor faces")
    return report
