"""Preferred extended Dynkin diagrams of the contragredient families.

The catalog is pure data: for each family it records the diagram (vertices
with parity, color and positive integer a-labels; edges with multiplicities
and long-root designations; the distinguished lowest vertex) together with an
exact rational realization of the vertices as vectors in a weighted coordinate
space.  The defining property of the a-labels is that the label-weighted sum
of the realization vectors vanishes identically and the labels have no common
factor; ``verify_marks`` checks exactly that, and every entry is validated
against it rather than trusted.

Conventions baked into the data:

* ``SL(m, n)`` is the cycle on ``m + n + 2`` vertices: two white arcs of
  sizes m and n separated by two grey vertices (one of them the lowest
  root), all labels 1.
* ``B(m, n)``/``D(m, n)`` put the orthogonal part on the left (short tip or
  fork first), the single grey vertex in the middle, and the symplectic tail
  ending in the long lowest root across a double edge.
* ``C(n)`` has two grey tips (one of them the lowest root) joined to the head
  of the symplectic chain.
* ``D21A`` (the one-parameter 9-dimensional family) is a star with a grey
  center; the bilinear form depends on the rational parameter, the
  combinatorics do not.
* ``F4`` and ``G3`` are the two exceptional paths.

Vertex numbering: where a drawing convention exists the even part comes
first left to right, fork tips get the lowest numbers, and the lowest root
is always the last vertex.

All arithmetic is exact (``fractions.Fraction``); no floating point.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DimensionMismatch, InvalidParams

EVEN = "even"
ODD = "odd"

WHITE = "white"
GREY = "grey"
BLACK = "black"

EVEN_RULE = "even"
ODD_RULE = "odd"

FAMILY_NAMES = ("SL", "B", "C", "D", "D21A", "F4", "G3")

#: Admissibility parity defaults per family.  Interpretive catalog data, not a
#: theorem; overridable per entry (see ``family_spec``).
DEFAULT_PARITY_RULE = {
    "SL": EVEN_RULE,
    "B": ODD_RULE,
    "C": ODD_RULE,
    "D": EVEN_RULE,
    "D21A": ODD_RULE,
    "F4": ODD_RULE,
    "G3": ODD_RULE,
}

#: Center dimension of the even part; equals (number of dark vertices) - 1.
CENTER_DIM = {"SL": 1, "B": 0, "C": 1, "D": 0, "D21A": 0, "F4": 0, "G3": 0}


@dataclass(frozen=True)
class Node:
    id: int
    parity: str
    color: str
    a_label: int


@dataclass(frozen=True)
class Edge:
    """Undirected edge with u < v; ``longer`` names the long endpoint (mult > 1)."""

    u: int
    v: int
    mult: int
    longer: int | None = None


@dataclass(frozen=True)
class FamilySpec:
    family: str
    m: int | None = None
    n: int | None = None
    alpha: Fraction | None = None
    parity_rule: str = ODD_RULE


@dataclass(frozen=True)
class FamilyTemplate:
    """One row of ``list_families``: parameter names, constraints, defaults."""

    family: str
    params: tuple[str, ...]
    constraints: str
    parity_rule: str


@dataclass(frozen=True)
class Diagram:
    family: FamilySpec
    nodes: tuple[Node, ...]
    edges: tuple[Edge, ...]
    lowest: int

    def node(self, i: int) -> Node:
        return _node_map(self)[i]

    def has_node(self, i: int) -> bool:
        return i in _node_map(self)

    def neighbors(self, i: int) -> tuple[int, ...]:
        return _adjacency(self)[i]

    def edge_between(self, u: int, v: int) -> Edge | None:
        return _edge_map(self).get((min(u, v), max(u, v)))

    def even_ids(self) -> tuple[int, ...]:
        return tuple(nd.id for nd in self.nodes if nd.parity == EVEN)

    def odd_ids(self) -> tuple[int, ...]:
        return tuple(nd.id for nd in self.nodes if nd.parity == ODD)

    def a_label(self, i: int) -> int:
        return self.node(i).a_label


@lru_cache(maxsize=None)
def _node_map(diagram: Diagram) -> dict[int, Node]:
    return {nd.id: nd for nd in diagram.nodes}


@lru_cache(maxsize=None)
def _adjacency(diagram: Diagram) -> dict[int, tuple[int, ...]]:
    adj: dict[int, list[int]] = {nd.id: [] for nd in diagram.nodes}
    for e in diagram.edges:
        adj[e.u].append(e.v)
        adj[e.v].append(e.u)
    return {i: tuple(sorted(js)) for i, js in adj.items()}


@lru_cache(maxsize=None)
def _edge_map(diagram: Diagram) -> dict[tuple[int, int], Edge]:
    return {(e.u, e.v): e for e in diagram.edges}


@dataclass(frozen=True)
class RootRealization:
    """Exact coordinates of the diagram vertices in a weighted basis.

    ``weights`` is the diagonal of the bilinear form (one rational per basis
    vector: +1 for orthogonal-type coordinates, -1 for symplectic-type ones,
    other rationals for the exceptional families).  ``coords[i]`` is the
    vector of vertex i+1.  ``odd_test`` selects the parity predicate: with
    ``"odd_sum"`` a vertex is odd when its negative-weight coordinates sum to
    an odd integer, with ``"half_integer"`` when they sum to a non-integer.
    """

    weights: tuple[Fraction, ...]
    coords: tuple[tuple[Fraction, ...], ...]
    odd_test: str = "odd_sum"

    def bilinear_vec(self, a: tuple[Fraction, ...], b: tuple[Fraction, ...]) -> Fraction:
        return sum((w * x * y for w, x, y in zip(self.weights, a, b)), Fraction(0))

    def bilinear(self, i: int, j: int) -> Fraction:
        return self.bilinear_vec(self.coords[i - 1], self.coords[j - 1])

    def norm(self, i: int) -> Fraction:
        return self.bilinear(i, i)

    def gram(self) -> tuple[tuple[Fraction, ...], ...]:
        n = len(self.coords)
        return tuple(
            tuple(self.bilinear(i, j) for j in range(1, n + 1)) for i in range(1, n + 1)
        )

    def parity_of_vector(self, vec: tuple[Fraction, ...]) -> str:
        s = sum(
            (c for w, c in zip(self.weights, vec) if w < 0),
            Fraction(0),
        )
        if self.odd_test == "half_integer":
            return ODD if s.denominator != 1 else EVEN
        return ODD if s.denominator == 1 and int(s) % 2 == 1 else EVEN

    def parity_of(self, i: int) -> str:
        return self.parity_of_vector(self.coords[i - 1])


# ---------------------------------------------------------------------------
# family validation and specs


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidParams(msg)


def family_spec(
    family: str,
    m: int | None = None,
    n: int | None = None,
    alpha: Fraction | int | str | None = None,
    parity_rule: str | None = None,
) -> FamilySpec:
    """Validate parameters and return a concrete FamilySpec.

    ``parity_rule`` defaults to the family's catalog value and may be
    overridden per entry.
    """
    _require(family in FAMILY_NAMES, f"unknown family {family!r}")
    if alpha is not None:
        alpha = Fraction(alpha)
    if family == "SL":
        _require(m is not None and n is not None, "SL needs m and n")
        _require(m >= 2 and n >= 1, "SL requires m >= 2 and n >= 1")
        _require(m != n, "SL(n, n) is excluded from the catalog")
        alpha = None
    elif family == "B":
        _require(m is not None and n is not None, "B needs m and n")
        _require(m >= 0 and n >= 1, "B requires m >= 0 and n >= 1")
        alpha = None
    elif family == "C":
        _require(n is not None, "C needs n")
        _require(m is None, "C takes a single parameter n")
        _require(n >= 3, "C requires n >= 3")
        alpha = None
    elif family == "D":
        _require(m is not None and n is not None, "D needs m and n")
        _require(m >= 2 and n >= 1, "D requires m >= 2 and n >= 1")
        alpha = None
    elif family == "D21A":
        _require(m is None and n is None, "D21A takes only alpha")
        if alpha is None:
            alpha = Fraction(2)
        _require(
            alpha > 0 or alpha < -1,
            "D21A requires rational alpha with alpha > 0 or alpha < -1",
        )
    else:  # F4, G3
        _require(m is None and n is None and alpha is None, f"{family} takes no parameters")
    rule = parity_rule if parity_rule is not None else DEFAULT_PARITY_RULE[family]
    _require(rule in (EVEN_RULE, ODD_RULE), f"bad parity rule {rule!r}")
    return FamilySpec(family=family, m=m, n=n, alpha=alpha, parity_rule=rule)


def list_families() -> tuple[FamilyTemplate, ...]:
    """The seven supported families with their parameter constraints."""
    return (
        FamilyTemplate("SL", ("m", "n"), "m >= 2, n >= 1, m != n", EVEN_RULE),
        FamilyTemplate("B", ("m", "n"), "m >= 0, n >= 1", ODD_RULE),
        FamilyTemplate("C", ("n",), "n >= 3", ODD_RULE),
        FamilyTemplate("D", ("m", "n"), "m >= 2, n >= 1", EVEN_RULE),
        FamilyTemplate("D21A", ("alpha",), "rational alpha, alpha > 0 or alpha < -1", ODD_RULE),
        FamilyTemplate("F4", (), "", ODD_RULE),
        FamilyTemplate("G3", (), "", ODD_RULE),
    )


# ---------------------------------------------------------------------------
# builders
#
# Each builder returns (colors, labels, edges, weights, coords, odd_test)
# with vertices implicitly numbered 1..len(colors) and the lowest root last.
# Coordinates are written over a basis of e's (positive weight) followed by
# d's (negative weight); _vec packs {index: coefficient} into a tuple.

F0 = Fraction(0)
F1 = Fraction(1)


def _vec(dim: int, entries: dict[int, Fraction | int]) -> tuple[Fraction, ...]:
    v = [F0] * dim
    for k, c in entries.items():
        v[k] = Fraction(c)
    return tuple(v)


def _build_sl(m: int, n: int):
    # Cycle 1 - 2 - ... - N - 1 with grey vertices at m+1 and N (lowest).
    total = m + n + 2
    dim = total  # m+1 e's, n+1 d's
    colors = [WHITE] * total
    colors[m] = GREY
    colors[total - 1] = GREY
    labels = [1] * total
    edges = [Edge(i, i + 1, 1) for i in range(1, total)] + [Edge(1, total, 1)]
    weights = tuple([F1] * (m + 1) + [-F1] * (n + 1))
    coords = []
    for i in range(1, m + 1):  # e_i - e_{i+1}
        coords.append(_vec(dim, {i - 1: 1, i: -1}))
    coords.append(_vec(dim, {m: 1, m + 1: -1}))  # e_{m+1} - d_1, grey
    for j in range(1, n + 1):  # d_j - d_{j+1}
        coords.append(_vec(dim, {m + j: 1, m + j + 1: -1}))
    coords.append(_vec(dim, {m + n + 1: 1, 0: -1}))  # d_{n+1} - e_1, grey lowest
    return colors, labels, edges, weights, tuple(coords), "odd_sum"


def _build_b(m: int, n: int):
    dim = m + n
    weights = tuple([F1] * m + [-F1] * n)
    if m == 0:
        # Black short vertex, symplectic chain, long lowest root.
        total = n + 1
        colors = [BLACK] + [WHITE] * n
        labels = [2] * n + [1]
        coords = [_vec(dim, {n - 1: 1})]  # d_n, black
        for j in range(1, n):  # d_{n-j} - d_{n-j+1}
            coords.append(_vec(dim, {n - j - 1: 1, n - j: -1}))
        coords.append(_vec(dim, {0: -2}))  # -2 d_1, lowest
        edges = [Edge(i, i + 1, 1) for i in range(2, total)]
        if n == 1:
            edges = [Edge(1, 2, 4, longer=2)]
        else:
            edges.insert(0, Edge(1, 2, 2, longer=2))
            edges[-1] = Edge(total - 1, total, 2, longer=total)
        return colors, labels, edges, weights, tuple(coords), "odd_sum"
    total = m + n + 1
    colors = [WHITE] * m + [GREY] + [WHITE] * n
    labels = [2] * (m + n) + [1]
    coords = [_vec(dim, {m - 1: 1})]  # e_m, short tip
    for k in range(2, m + 1):  # e_{m-k+1} - e_{m-k+2}
        coords.append(_vec(dim, {m - k: 1, m - k + 1: -1}))
    coords.append(_vec(dim, {m + n - 1: 1, 0: -1}))  # d_n - e_1, grey
    for j in range(1, n):  # d_{n-j} - d_{n-j+1}
        coords.append(_vec(dim, {m + n - j - 1: 1, m + n - j: -1}))
    coords.append(_vec(dim, {m: -2}))  # -2 d_1, lowest
    edges = [Edge(i, i + 1, 1) for i in range(1, total)]
    if m >= 2:
        edges[0] = Edge(1, 2, 2, longer=2)
    else:
        edges[0] = Edge(1, 2, 2, longer=1)  # short even tip against the grey
    if n >= 2:
        edges[-1] = Edge(total - 1, total, 2, longer=total)
    return colors, labels, edges, weights, tuple(coords), "odd_sum"


def _build_c(n: int):
    # Two grey tips joined to the head of the symplectic chain; long tip at
    # the other end; the lowest root is the second grey tip.
    total = n + 1
    dim = n  # one e, n-1 d's
    weights = tuple([F1] + [-F1] * (n - 1))
    colors = [GREY] + [WHITE] * (n - 1) + [GREY]
    labels = [1] + [2] * (n - 2) + [1, 1]
    coords = [_vec(dim, {0: 1, 1: -1})]  # e_1 - d_1, grey
    for j in range(1, n - 1):  # d_j - d_{j+1}
        coords.append(_vec(dim, {j: 1, j + 1: -1}))
    coords.append(_vec(dim, {n - 1: 2}))  # 2 d_{n-1}, long tip
    coords.append(_vec(dim, {0: -1, 1: -1}))  # -e_1 - d_1, grey lowest
    edges = [Edge(i, i + 1, 1) for i in range(1, n - 1)]
    edges.append(Edge(n - 1, n, 2, longer=n))
    edges.append(Edge(2, total, 1))
    edges.append(Edge(1, total, 1))  # the grey tips pair to -2: adjacent
    return colors, labels, edges, weights, tuple(coords), "odd_sum"


def _build_d(m: int, n: int):
    total = m + n + 1
    dim = m + n
    weights = tuple([F1] * m + [-F1] * n)
    colors = [WHITE] * m + [GREY] + [WHITE] * n
    labels = [1, 1] + [2] * (m + n - 2) + [1]
    coords = [
        _vec(dim, {m - 2: 1, m - 1: 1}),  # e_{m-1} + e_m, fork tip
        _vec(dim, {m - 2: 1, m - 1: -1}),  # e_{m-1} - e_m, fork tip
    ]
    for k in range(3, m + 1):  # e_{m-k+1} - e_{m-k+2}
        coords.append(_vec(dim, {m - k: 1, m - k + 1: -1}))
    coords.append(_vec(dim, {m + n - 1: 1, 0: -1}))  # d_n - e_1, grey
    for j in range(1, n):
        coords.append(_vec(dim, {m + n - j - 1: 1, m + n - j: -1}))
    coords.append(_vec(dim, {m: -2}))  # -2 d_1, lowest
    edges = [Edge(1, 3, 1), Edge(2, 3, 1)]
    edges += [Edge(i, i + 1, 1) for i in range(3, total)]
    if n >= 2:
        edges[-1] = Edge(total - 1, total, 2, longer=total)
    return colors, labels, edges, weights, tuple(coords), "odd_sum"


def _build_d21a(alpha: Fraction):
    # Star with grey center 3; white tips 1, 2 and the lowest root 4.
    weights = (-(1 + alpha) / 2, Fraction(1, 2), alpha / 2)
    colors = [WHITE, WHITE, GREY, WHITE]
    labels = [1, 1, 2, 1]
    coords = (
        _vec(3, {1: 2}),
        _vec(3, {2: 2}),
        _vec(3, {0: 1, 1: -1, 2: -1}),
        _vec(3, {0: -2}),
    )
    edges = [Edge(1, 3, 1), Edge(2, 3, 1), Edge(3, 4, 1)]
    return colors, labels, edges, weights, coords, "odd_sum"


def _build_f4():
    weights = (F1, F1, F1, Fraction(-3))
    colors = [WHITE, WHITE, WHITE, GREY, WHITE]
    labels = [1, 2, 3, 2, 1]
    h = Fraction(1, 2)
    coords = (
        _vec(4, {0: 1, 1: -1}),
        _vec(4, {1: 1, 2: -1}),
        _vec(4, {2: 1}),
        (-h, -h, -h, h),
        _vec(4, {3: -1}),
    )
    edges = [Edge(1, 2, 1), Edge(2, 3, 2, longer=2), Edge(3, 4, 1), Edge(4, 5, 1)]
    return colors, labels, edges, weights, coords, "half_integer"


def _build_g3():
    # Basis: two coordinates carrying the G2 plane (weights 2 and 3/2) and
    # one symplectic-type coordinate (weight -2).
    weights = (Fraction(2), Fraction(3, 2), Fraction(-2))
    colors = [WHITE, WHITE, GREY, WHITE]
    labels = [2, 4, 2, 1]
    coords = (
        (Fraction(3, 2), Fraction(-1), F0),  # long G2 simple root
        (Fraction(-1, 2), F1, F0),  # short G2 simple root
        (Fraction(-1, 2), Fraction(-1), F1),  # grey
        (F0, F0, Fraction(-2)),  # lowest
    )
    edges = [Edge(1, 2, 3, longer=1), Edge(2, 3, 1), Edge(3, 4, 1)]
    return colors, labels, edges, weights, coords, "odd_sum"


def _built(spec: FamilySpec):
    if spec.family == "SL":
        return _build_sl(spec.m, spec.n)
    if spec.family == "B":
        return _build_b(spec.m, spec.n)
    if spec.family == "C":
        return _build_c(spec.n)
    if spec.family == "D":
        return _build_d(spec.m, spec.n)
    if spec.family == "D21A":
        return _build_d21a(spec.alpha)
    if spec.family == "F4":
        return _build_f4()
    return _build_g3()


def build_preferred_diagram(spec: FamilySpec) -> Diagram:
    """The preferred extended Dynkin diagram for a validated FamilySpec.

    Deterministic: equal specs give identical vertex numbering, labels and
    edges.  The lowest root is always the last vertex.
    """
    colors, labels, edges, _w, _c, _t = _built(spec)
    nodes = tuple(
        Node(id=i + 1, parity=EVEN if col == WHITE else ODD, color=col, a_label=a)
        for i, (col, a) in enumerate(zip(colors, labels))
    )
    edges = tuple(sorted(edges, key=lambda e: (e.u, e.v)))
    return Diagram(family=spec, nodes=nodes, edges=edges, lowest=len(nodes))


def root_realization(spec: FamilySpec) -> RootRealization:
    """Exact rational realization matching ``build_preferred_diagram(spec)``."""
    _colors, _labels, _edges, weights, coords, odd_test = _built(spec)
    return RootRealization(weights=weights, coords=coords, odd_test=odd_test)


def verify_marks(diagram: Diagram, realization: RootRealization) -> bool:
    """True iff the labels are positive, coprime, and weight the vertex
    vectors to an exactly zero sum."""
    if len(realization.coords) != len(diagram.nodes):
        raise DimensionMismatch(
            f"realization has {len(realization.coords)} vectors for "
            f"{len(diagram.nodes)} vertices"
        )
    labels = [nd.a_label for nd in diagram.nodes]
    if any(a <= 0 for a in labels):
        return False
    if math.gcd(*labels) != 1:
        return False
    dim = len(realization.weights)
    for k in range(dim):
        s = sum((a * vec[k] for a, vec in zip(labels, realization.coords)), F0)
        if s != 0:
            return False
    return True


# ---------------------------------------------------------------------------
# even-part shape check


def white_component_types(diagram: Diagram) -> tuple[str, ...]:
    """Dynkin types of the connected components left after deleting the dark
    vertices, sorted.  Unrecognized shapes come back as ``"?<size>"``."""
    whites = set(diagram.even_ids())
    seen: set[int] = set()
    types = []
    for start in sorted(whites):
        if start in seen:
            continue
        comp = _component(diagram, start, whites)
        seen |= comp
        types.append(_dynkin_type(diagram, sorted(comp)))
    return tuple(sorted(types))


def _component(diagram: Diagram, start: int, allowed: set[int]) -> set[int]:
    comp = {start}
    queue = [start]
    while queue:
        i = queue.pop()
        for j in diagram.neighbors(i):
            if j in allowed and j not in comp:
                comp.add(j)
                queue.append(j)
    return comp


def _dynkin_type(diagram: Diagram, comp: list[int]) -> str:
    k = len(comp)
    inside = set(comp)
    edges = [
        e
        for e in diagram.edges
        if e.u in inside and e.v in inside
    ]
    if k == 1:
        return "A1"
    deg = {i: 0 for i in comp}
    for e in edges:
        deg[e.u] += 1
        deg[e.v] += 1
    multi = [e for e in edges if e.mult > 1]
    if k == 2:
        m = edges[0].mult
        return {1: "A2", 2: "C2", 3: "G2"}.get(m, f"?{k}")
    if max(deg.values()) == 2:
        # path component
        if not multi:
            return f"A{k}"
        if len(multi) == 1 and multi[0].mult == 2:
            e = multi[0]
            tip = e.u if deg[e.u] == 1 else (e.v if deg[e.v] == 1 else None)
            if tip is not None:
                return f"C{k}" if e.longer == tip else f"B{k}"
        return f"?{k}"
    branch = [i for i in comp if deg[i] == 3]
    if len(branch) == 1 and not multi and max(deg.values()) == 3:
        tips = [j for j in diagram.neighbors(branch[0]) if j in inside and deg[j] == 1]
        if len(tips) >= 2:
            return f"D{k}"
    return f"?{k}"


def expected_g0_types(spec: FamilySpec) -> tuple[str, ...]:
    """Recorded Dynkin type of the semisimple even part, normalized the same
    way ``white_component_types`` reports it (B2=C2, D3=A3, rank-1 pieces A1)."""

    def ctype(r: int) -> list[str]:
        return ["A1"] if r == 1 else (["C2"] if r == 2 else [f"C{r}"])

    def btype(r: int) -> list[str]:
        return ["A1"] if r == 1 else (["C2"] if r == 2 else [f"B{r}"])

    def dtype(r: int) -> list[str]:
        if r == 2:
            return ["A1", "A1"]
        if r == 3:
            return ["A3"]
        return [f"D{r}"]

    f = spec.family
    if f == "SL":
        out = [f"A{spec.m}", f"A{spec.n}"]
    elif f == "B":
        out = (btype(spec.m) if spec.m >= 1 else []) + ctype(spec.n)
    elif f == "C":
        out = ctype(spec.n - 1)
    elif f == "D":
        out = dtype(spec.m) + ctype(spec.n)
    elif f == "D21A":
        out = ["A1", "A1", "A1"]
    elif f == "F4":
        out = ["A1", "B3"]
    else:
        out = ["A1", "G2"]
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# canonical JSON

_PARAM_KEYS = {
    "SL": ("m", "n"),
    "B": ("m", "n"),
    "C": ("n",),
    "D": ("m", "n"),
    "D21A": ("alpha",),
    "F4": (),
    "G3": (),
}


def diagram_to_dict(diagram: Diagram) -> dict:
    spec = diagram.family
    params: dict[str, object] = {}
    for key in _PARAM_KEYS.get(spec.family, ()):
        if key == "alpha":
            params["alpha"] = str(spec.alpha)
        else:
            params[key] = getattr(spec, key)
    return {
        "family": spec.family,
        "params": params,
        "nodes": [
            {"id": nd.id, "parity": nd.parity, "color": nd.color, "a": nd.a_label}
            for nd in diagram.nodes
        ],
        "edges": [
            {"u": e.u, "v": e.v, "mult": e.mult, "longer": e.longer}
            for e in diagram.edges
        ],
        "lowest": diagram.lowest,
    }


def diagram_to_json(diagram: Diagram) -> str:
    """Canonical byte-stable serialization: fixed key order, no whitespace,
    nodes sorted by id and edges by (u, v)."""
    return json.dumps(diagram_to_dict(diagram), separators=(",", ":"))


def diagram_from_dict(obj: dict) -> Diagram:
    """Rebuild a diagram from its canonical dictionary form.

    Diagrams whose family/params resolve in the catalog get the catalog's
    parity rule by default; a top-level ``"parity_rule"`` key overrides it.
    Structural invariants are checked; marks are not (no realization here).
    """
    try:
        family = obj["family"]
        params = obj.get("params", {}) or {}
        rule = obj.get("parity_rule")
        nodes = tuple(
            Node(id=nd["id"], parity=nd["parity"], color=nd["color"], a_label=nd["a"])
            for nd in obj["nodes"]
        )
        edges = tuple(
            Edge(u=e["u"], v=e["v"], mult=e["mult"], longer=e.get("longer"))
            for e in obj["edges"]
        )
        lowest = obj["lowest"]
    except (KeyError, TypeError) as exc:
        raise InvalidParams(f"malformed diagram object: {exc}") from exc
    try:
        spec = family_spec(
            family,
            m=params.get("m"),
            n=params.get("n"),
            alpha=params.get("alpha"),
            parity_rule=rule,
        )
    except InvalidParams:
        raise
    diagram = Diagram(
        family=spec,
        nodes=tuple(sorted(nodes, key=lambda nd: nd.id)),
        edges=tuple(sorted(edges, key=lambda e: (e.u, e.v))),
        lowest=lowest,
    )
    validate_diagram(diagram)
    return diagram


def diagram_from_json(text: str) -> Diagram:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidParams(f"not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise InvalidParams("diagram JSON must be an object")
    return diagram_from_dict(obj)


def validate_diagram(diagram: Diagram) -> None:
    """Structural invariants every diagram must satisfy (no realization needed)."""
    ids = [nd.id for nd in diagram.nodes]
    if ids != list(range(1, len(ids) + 1)):
        raise InvalidParams("vertex ids must be consecutive integers starting at 1")
    for nd in diagram.nodes:
        white = nd.color == WHITE
        if white != (nd.parity == EVEN):
            raise InvalidParams(f"vertex {nd.id}: color/parity mismatch")
        if nd.color not in (WHITE, GREY, BLACK):
            raise InvalidParams(f"vertex {nd.id}: bad color {nd.color!r}")
        if nd.a_label <= 0:
            raise InvalidParams(f"vertex {nd.id}: label must be positive")
    seen = set()
    for e in diagram.edges:
        if e.u >= e.v:
            raise InvalidParams(f"edge ({e.u},{e.v}) must have u < v")
        if (e.u, e.v) in seen:
            raise InvalidParams(f"duplicate edge ({e.u},{e.v})")
        seen.add((e.u, e.v))
        if e.u not in set(ids) or e.v not in set(ids):
            raise InvalidParams(f"edge ({e.u},{e.v}) references unknown vertices")
        if e.mult not in (1, 2, 3, 4):
            raise InvalidParams(f"edge ({e.u},{e.v}): multiplicity {e.mult} out of range")
        if e.mult == 1 and e.longer is not None:
            raise InvalidParams(f"edge ({e.u},{e.v}): single edges carry no long end")
        if e.mult > 1 and e.longer not in (e.u, e.v):
            raise InvalidParams(f"edge ({e.u},{e.v}): long end must be u or v")
    if diagram.lowest not in set(ids):
        raise InvalidParams("lowest vertex not in diagram")
    if not any(nd.parity == ODD for nd in diagram.nodes):
        raise InvalidParams("a superdiagram needs at least one dark vertex")
    # connectivity
    all_ids = set(ids)
    comp = _component(diagram, ids[0], all_ids)
    if comp != all_ids:
        raise InvalidParams("diagram must be connected")
