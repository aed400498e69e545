"""Reading and writing complexes as JSON.

``{"facets": [["a","b"],["c"]]}``; ``{"facets": []}`` is ``VOID`` and
``{"facets": [[]]}`` is ``{()}``.  An optional ``"order"`` list declares the
vertex order used by products.
"""

from __future__ import annotations

import json
from pathlib import Path

from .complex import SimplicialComplex, from_facets
from .constructions import OrderedComplex, ordered
from .errors import MalformedFaceError


class ComplexFormatError(ValueError):
    """Input that is not a complex in the JSON format."""


def loads_complex(text: str, source: str = "<string>") -> tuple:
    """Parse JSON text into ``(complex, order)``; ``order`` is ``None`` if absent."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ComplexFormatError(
            f"{source}: malformed JSON at line {e.lineno}, column {e.colno} (char {e.pos}): {e.msg}"
        ) from None
    if not isinstance(data, dict) or "facets" not in data:
        raise ComplexFormatError(f"{source}: expected an object with a 'facets' list")
    facets = data["facets"]
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise ComplexFormatError(f"{source}: 'facets' must be a list of lists")
    try:
        sigma = from_facets([[str(v) for v in f] for f in facets])
    except MalformedFaceError as e:
        raise ComplexFormatError(f"{source}: {e}") from None
    order = data.get("order")
    if order is not None:
        if not isinstance(order, list):
            raise ComplexFormatError(f"{source}: 'order' must be a list")
        order = [str(v) for v in order]
        if len(set(order)) != len(order) or not set(sigma.vertices) <= set(order):
            raise ComplexFormatError(f"{source}: 'order' must list every vertex once")
    return sigma, order


def read_complex(path) -> tuple:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as e:
        raise ComplexFormatError(f"{p}: {e.strerror}") from None
    return loads_complex(text, str(p))


def read_ordered(path) -> OrderedComplex:
    sigma, order = read_complex(path)
    return ordered(sigma, order)


def dumps_complex(x, order=None) -> str:
    """Serialise a complex (or an ordered complex, which keeps its order)."""
    if isinstance(x, OrderedComplex):
        x, order = x.complex, (order or x.order)
    sigma: SimplicialComplex = x
    data: dict = {"facets": [] if sigma.is_void else [list(f) for f in sigma.facets]}
    if order is not None:
        data["order"] = list(order)
    return json.dumps(data, separators=(",", ": "), ensure_ascii=False)


def write_complex(path, x, order=None):
    Path(path).write_text(dumps_complex(x, order) + "\n", encoding="utf-8")
