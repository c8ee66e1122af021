"""Plain-text renderings of Vogan superdiagrams.

Three styles: ``ascii`` (figure-like drawing: O = white vertex, X = grey or
black vertex, parentheses around circled vertices, ``*`` on the lowest root),
``dot`` (Graphviz source), and ``json`` (the canonical byte-stable form from
``catalog.diagram_to_json``).

The exact ASCII layout is a documented convention, not a contract: cycles are
drawn with the lowest root bridging the two ends of the bottom row, forked
diagrams with the fork tips stacked on the left.
"""

from __future__ import annotations

from .catalog import BLACK, Diagram, GREY, ODD, diagram_to_json

STYLES = ("ascii", "dot", "json")


def render(diagram: Diagram, style: str, circled: frozenset = frozenset()) -> str:
    if style == "json":
        return diagram_to_json(diagram)
    if style == "dot":
        return to_dot(diagram, circled)
    if style == "ascii":
        return to_ascii(diagram, circled)
    raise ValueError(f"unknown style {style!r}")


def _token(diagram: Diagram, i: int, circled: frozenset) -> str:
    nd = diagram.node(i)
    glyph = "O" if nd.parity != ODD else "X"
    tok = f"{glyph}{i}"
    if i == diagram.lowest:
        tok += "*"
    if i in circled:
        tok = f"({tok})"
    return tok


def _edge_str(diagram: Diagram, left: int, right: int) -> str:
    e = diagram.edge_between(left, right)
    if e.mult == 1:
        return "--"
    if e.mult == 2:
        return "<==" if e.longer == right else "==>"
    return f"<{e.mult}=" if e.longer == right else f"={e.mult}>"


def _is_cycle(diagram: Diagram) -> bool:
    return len(diagram.nodes) >= 3 and all(
        len(diagram.neighbors(nd.id)) == 2 for nd in diagram.nodes
    )


def to_ascii(diagram: Diagram, circled: frozenset = frozenset()) -> str:
    lines = _ascii_lines(diagram, circled)
    lines.append("legend: O white, X grey/black, (..) circled, * lowest root")
    return "\n".join(lines)


def _ascii_lines(diagram: Diagram, circled: frozenset) -> list[str]:
    if _is_cycle(diagram):
        return _ascii_cycle(diagram, circled)
    ids = [nd.id for nd in diagram.nodes]
    deg = {i: len(diagram.neighbors(i)) for i in ids}
    centers = [i for i in ids if deg[i] >= 3]
    if not centers:
        # plain path: walk from the tip with the smallest id
        tips = [i for i in ids if deg[i] == 1]
        start = min(tips)
        return [_ascii_chain(diagram, _walk(diagram, start), circled)]
    center = centers[0]
    nbrs = sorted(diagram.neighbors(center))
    mates = [
        (a, b)
        for k, a in enumerate(nbrs)
        for b in nbrs[k + 1 :]
        if diagram.edge_between(a, b) is not None
    ]
    if mates:
        # two of the tips are joined to each other (the C-family triangle)
        stacked = list(mates[0])
        rest = [j for j in nbrs if j not in stacked]
        spine_next = rest[0] if rest else diagram.lowest
    else:
        through = [j for j in nbrs if deg[j] > 1]
        spine_next = through[0] if through else diagram.lowest
        stacked = [j for j in nbrs if j != spine_next][:2]
    spine = [center] + _walk(diagram, spine_next, forbidden={center})
    chain = _ascii_chain(diagram, spine, circled)
    t1 = _token(diagram, stacked[0], circled)
    t2 = _token(diagram, stacked[1], circled)
    width = max(len(t1), len(t2))
    pad = " " * (width + 1)
    lines = [t1, pad + "\\", pad + " " + chain, pad + "/", t2]
    if mates:
        for k in (1, 2, 3):  # mark the tip-to-tip edge with a vertical bar
            lines[k] = "|" + lines[k][1:]
    return lines


def _walk(diagram: Diagram, start: int, forbidden: set | None = None) -> list[int]:
    seen = set(forbidden or ())
    path = [start]
    seen.add(start)
    cur = start
    while True:
        nxt = [j for j in diagram.neighbors(cur) if j not in seen]
        if not nxt:
            return path
        cur = min(nxt)
        path.append(cur)
        seen.add(cur)


def _ascii_chain(diagram: Diagram, ids: list[int], circled: frozenset) -> str:
    parts = [_token(diagram, ids[0], circled)]
    for a, b in zip(ids, ids[1:]):
        parts.append(_edge_str(diagram, a, b))
        parts.append(_token(diagram, b, circled))
    return "".join(parts)


def _ascii_cycle(diagram: Diagram, circled: frozenset) -> list[str]:
    bottom_ids = [nd.id for nd in diagram.nodes if nd.id != diagram.lowest]
    bottom = _ascii_chain(diagram, bottom_ids, circled)
    first = _token(diagram, bottom_ids[0], circled)
    last = _token(diagram, bottom_ids[-1], circled)
    c1 = len(first) // 2
    c2 = len(bottom) - len(last) + len(last) // 2
    phi = _token(diagram, diagram.lowest, circled)
    mid = (c1 + c2) // 2
    start = max(c1 + 1, mid - len(phi) // 2)
    top = (
        " " * c1
        + "."
        + "-" * (start - c1 - 1)
        + phi
        + "-" * max(1, c2 - start - len(phi))
        + "."
    )
    pipes = " " * c1 + "|" + " " * (c2 - c1 - 1) + "|"
    return [top, pipes, bottom]


def to_dot(diagram: Diagram, circled: frozenset = frozenset()) -> str:
    lines = ["graph vogan {", "  rankdir=LR;", '  node [shape=circle, fontsize=10];']
    for nd in diagram.nodes:
        attrs = [f'label="{nd.id} (a={nd.a_label})"']
        if nd.color == GREY:
            attrs.append("style=filled")
            attrs.append("fillcolor=lightgray")
        elif nd.color == BLACK:
            attrs.append("style=filled")
            attrs.append("fillcolor=black")
            attrs.append("fontcolor=white")
        if nd.id in circled:
            attrs.append("peripheries=2")
        if nd.id == diagram.lowest:
            attrs.append('xlabel="phi"')
        lines.append(f"  n{nd.id} [{', '.join(attrs)}];")
    for e in diagram.edges:
        attrs = []
        if e.mult > 1:
            attrs.append(f'label="x{e.mult}"')
            short = e.u if e.longer == e.v else e.v
            attrs.append(f'xlabel="short: {short}"')
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  n{e.u} -- n{e.v}{suffix};")
    lines.append("}")
    return "\n".join(lines)
