"""The push-the-button calculus on Vogan superdiagrams.

A circling is a set of even vertex ids.  Pressing a circled vertex toggles
the circling of each neighbor, except odd neighbors and except the longer
end of a multiple edge.  Everything else here is closure machinery over that
single move: orbits, relatedness, reduction to a minimal representative,
diagram symmetries, and the isomorphism decision for pairs of admissible
circlings.

All functions are pure; diagrams and circlings are immutable and hashable.
Circlings are plain ``frozenset[int]``.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .catalog import Diagram, EVEN, EVEN_RULE, ODD, RootRealization
from .errors import (
    CapExceeded,
    DimensionMismatch,
    InvalidCircling,
    NotAdmissible,
    NotPressable,
    UnknownVertex,
    ZeroNorm,
)

DEFAULT_CAP = 2**22

Circling = frozenset


def _ckey(c: frozenset) -> tuple[int, tuple[int, ...]]:
    return (len(c), tuple(sorted(c)))


def as_circling(diagram: Diagram, ids: Iterable[int]) -> frozenset:
    """Validate vertex ids and return the circling as a frozenset."""
    c = frozenset(ids)
    for i in c:
        if not diagram.has_node(i):
            raise InvalidCircling(f"vertex {i} is not in the diagram")
        if diagram.node(i).parity == ODD:
            raise InvalidCircling(f"vertex {i} is odd and cannot be circled")
    return c


def is_admissible(diagram: Diagram, circled: Iterable[int]) -> bool:
    """Whether the label sum over the circled vertices has the parity the
    family's rule demands."""
    c = as_circling(diagram, circled)
    s = sum(diagram.a_label(i) for i in c)
    if diagram.family.parity_rule == EVEN_RULE:
        return s % 2 == 0
    return s % 2 == 1


def require_admissible(diagram: Diagram, circled: Iterable[int]) -> frozenset:
    c = as_circling(diagram, circled)
    if not is_admissible(diagram, c):
        raise NotAdmissible(f"circling {sorted(c)} is not admissible")
    return c


@lru_cache(maxsize=None)
def _toggles(diagram: Diagram, i: int) -> frozenset:
    """Vertices whose circling flips when i is pressed: even neighbors of i,
    minus long ends of multiple edges."""
    out = []
    for j in diagram.neighbors(i):
        if diagram.node(j).parity == ODD:
            continue
        e = diagram.edge_between(i, j)
        # The long end across a double edge keeps its circling (its Cartan
        # number is even); across a triple edge both ends toggle (-1, -3).
        if e.mult in (2, 4) and e.longer == j:
            continue
        out.append(j)
    return frozenset(out)


def pressable(diagram: Diagram, circled: Iterable[int]) -> list[int]:
    """Vertices that may be pressed: the circled ones (circlings only ever
    contain even vertices)."""
    return sorted(as_circling(diagram, circled))


def press(diagram: Diagram, circled: Iterable[int], i: int) -> frozenset:
    """Press vertex i: toggle its even neighbors except long ends of multiple
    edges.  i itself never changes."""
    c = as_circling(diagram, circled)
    if not diagram.has_node(i):
        raise UnknownVertex(f"vertex {i} is not in the diagram")
    if diagram.node(i).parity == ODD:
        raise NotPressable(f"vertex {i} is odd")
    if i not in c:
        raise NotPressable(f"vertex {i} is not circled")
    return c ^ _toggles(diagram, i)


def press_sequence(diagram: Diagram, circled: Iterable[int], steps: Iterable[int]) -> frozenset:
    """Replay a sequence of presses from a starting circling."""
    c = as_circling(diagram, circled)
    for i in steps:
        c = press(diagram, c, i)
    return c


@dataclass
class OrbitReport:
    """Breadth-first closure of a circling under presses.

    ``generator_log`` maps each orbit element to (predecessor, pressed vertex);
    the seed maps to (None, None).  ``path_to`` rebuilds the press sequence
    from the seed to any element.
    """

    seed: frozenset
    orbit: frozenset
    generator_log: dict
    min_size: int

    def path_to(self, target: frozenset) -> list[int]:
        if target not in self.generator_log:
            raise KeyError(f"{sorted(target)} is not in the orbit")
        steps: list[int] = []
        cur = target
        while True:
            pred, pressed = self.generator_log[cur]
            if pred is None:
                break
            steps.append(pressed)
            cur = pred
        steps.reverse()
        return steps


def f_orbit(diagram: Diagram, circled: Iterable[int]) -> OrbitReport:
    """All circlings reachable from the given one by presses."""
    seed = as_circling(diagram, circled)
    log: dict = {seed: (None, None)}
    queue = deque([seed])
    while queue:
        cur = queue.popleft()
        for i in sorted(cur):
            nxt = cur ^ _toggles(diagram, i)
            if nxt not in log:
                log[nxt] = (cur, i)
                queue.append(nxt)
    orbit = frozenset(log)
    return OrbitReport(
        seed=seed,
        orbit=orbit,
        generator_log=log,
        min_size=min(len(c) for c in orbit),
    )


def f_related(diagram: Diagram, c1: Iterable[int], c2: Iterable[int]) -> list[int] | None:
    """A press sequence carrying c1 to c2, or None if the orbits differ.

    Presses are involutions, so the two orbits either coincide or are
    disjoint; the sequence returned is shortest (breadth-first).
    """
    a = as_circling(diagram, c1)
    b = as_circling(diagram, c2)
    report = f_orbit(diagram, a)
    if b not in report.orbit:
        return None
    return report.path_to(b)


def reduce(diagram: Diagram, circled: Iterable[int]) -> tuple[frozenset, list[int]]:
    """Minimal circling in the press orbit (fewest circled vertices, ties by
    lexicographic id order) plus a witness press sequence.  The input must be
    admissible."""
    c = require_admissible(diagram, circled)
    report = f_orbit(diagram, c)
    rep = min(report.orbit, key=_ckey)
    return rep, report.path_to(rep)


def odd_removed_components(diagram: Diagram) -> int:
    """Number of connected components of the subgraph on even vertices."""
    whites = set(diagram.even_ids())
    count = 0
    seen: set[int] = set()
    for start in sorted(whites):
        if start in seen:
            continue
        count += 1
        stack = [start]
        seen.add(start)
        while stack:
            i = stack.pop()
            for j in diagram.neighbors(i):
                if j in whites and j not in seen:
                    seen.add(j)
                    stack.append(j)
    return count


# ---------------------------------------------------------------------------
# diagram symmetries


@dataclass(frozen=True)
class Symmetry:
    """Attribute-preserving vertex permutation; perm[i-1] is the image of i.

    Symmetries are not required to fix the lowest root; ``fixes_lowest``
    records whether this one does.
    """

    perm: tuple[int, ...]
    fixes_lowest: bool

    def image(self, i: int) -> int:
        return self.perm[i - 1]

    def apply(self, circled: Iterable[int]) -> frozenset:
        return frozenset(self.perm[i - 1] for i in circled)

    def is_identity(self) -> bool:
        return all(p == i + 1 for i, p in enumerate(self.perm))


def _node_signature(diagram: Diagram, i: int):
    nd = diagram.node(i)
    profile = []
    for j in diagram.neighbors(i):
        e = diagram.edge_between(i, j)
        role = "none" if e.longer is None else ("self" if e.longer == i else "other")
        nj = diagram.node(j)
        profile.append((e.mult, role, nj.parity, nj.color, nj.a_label))
    return (nd.parity, nd.color, nd.a_label, tuple(sorted(profile)))


@lru_cache(maxsize=None)
def automorphisms(diagram: Diagram) -> tuple[Symmetry, ...]:
    """All attribute-preserving graph automorphisms, by exhaustive backtracking
    (catalog diagrams are small).  The result is a group containing the
    identity, sorted with the identity first."""
    ids = [nd.id for nd in diagram.nodes]
    sig = {i: _node_signature(diagram, i) for i in ids}
    candidates = {i: tuple(j for j in ids if sig[j] == sig[i]) for i in ids}
    order = sorted(ids, key=lambda i: (len(candidates[i]), i))
    found: list[tuple[int, ...]] = []
    assign: dict[int, int] = {}
    used: set[int] = set()

    def compatible(i: int, j: int) -> bool:
        for w, img in assign.items():
            e1 = diagram.edge_between(i, w)
            e2 = diagram.edge_between(j, img)
            if (e1 is None) != (e2 is None):
                return False
            if e1 is not None:
                if e1.mult != e2.mult:
                    return False
                l1 = None if e1.longer is None else (i if e1.longer == i else w)
                l2 = None if e2.longer is None else (j if e2.longer == j else img)
                mapped = None if l1 is None else (j if l1 == i else img)
                if mapped != l2:
                    return False
        return True

    def backtrack(k: int) -> None:
        if k == len(order):
            found.append(tuple(assign[i] for i in ids))
            return
        i = order[k]
        for j in candidates[i]:
            if j in used or not compatible(i, j):
                continue
            assign[i] = j
            used.add(j)
            backtrack(k + 1)
            del assign[i]
            used.discard(j)

    backtrack(0)
    perms = sorted(found)
    return tuple(
        Symmetry(perm=p, fixes_lowest=p[diagram.lowest - 1] == diagram.lowest)
        for p in perms
    )


def equivalent(
    diagram: Diagram, c1: Iterable[int], c2: Iterable[int]
) -> tuple[bool, tuple[Symmetry, list[int]] | None]:
    """Whether two admissible circlings present the same real form: some
    symmetry image of c1 is press-related to c2.  Returns a witness
    (symmetry, presses) with presses replaying from the symmetry image of c1
    to c2."""
    a = require_admissible(diagram, c1)
    b = require_admissible(diagram, c2)
    report = f_orbit(diagram, b)
    for sym in automorphisms(diagram):
        img = sym.apply(a)
        if img in report.orbit:
            steps = list(reversed(report.path_to(img)))
            return True, (sym, steps)
    return False, None


# ---------------------------------------------------------------------------
# classification


@dataclass
class EquivalenceClass:
    """One isomorphism class of admissible circlings.

    ``members`` are the admissible circlings in the class;
    ``representative`` is the smallest member (size, then lexicographic);
    ``witness[member]`` is a (symmetry, presses) pair with
    ``press_sequence(symmetry.apply(member), presses) == representative``;
    ``parity_mixed`` flags classes whose press orbits also contain
    inadmissible circlings (the label-sum parity is not preserved by presses
    next to odd vertices, so this does occur).
    """

    members: frozenset
    representative: frozenset
    witness: dict
    parity_mixed: bool

    @property
    def size(self) -> int:
        return len(self.members)


def orbit_cap() -> int:
    value = os.environ.get("VOGAN_ORBIT_CAP")
    if value is None:
        return DEFAULT_CAP
    try:
        return int(value)
    except ValueError:
        return DEFAULT_CAP


def classify(diagram: Diagram, cap: int | None = None) -> list[EquivalenceClass]:
    """Partition all admissible circlings into equivalence classes.

    Enumerates every subset of the even vertices; refuses (CapExceeded) when
    there are more than ``cap`` of them (default 2**22, overridable via the
    VOGAN_ORBIT_CAP environment variable).
    """
    if cap is None:
        cap = orbit_cap()
    evens = sorted(diagram.even_ids())
    total = 2 ** len(evens)
    if total > cap:
        raise CapExceeded(
            f"{total} circlings exceed the enumeration cap {cap}"
        )

    orbit_of: dict = {}
    orbits: list[OrbitReport] = []
    admissible: list[frozenset] = []
    for size in range(len(evens) + 1):
        for combo in combinations(evens, size):
            c = frozenset(combo)
            if not is_admissible(diagram, c):
                continue
            admissible.append(c)
            if c in orbit_of:
                continue
            report = f_orbit(diagram, c)
            oid = len(orbits)
            orbits.append(report)
            for member in report.orbit:
                orbit_of[member] = oid

    syms = automorphisms(diagram)

    # union-find over orbit ids under the symmetry action
    parent = list(range(len(orbits)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for oid, report in enumerate(orbits):
        for sym in syms:
            image = sym.apply(report.seed)
            union(oid, orbit_of[image])

    groups: dict[int, list[int]] = {}
    for oid in range(len(orbits)):
        groups.setdefault(find(oid), []).append(oid)

    admissible_set = set(admissible)
    classes = []
    for oids in groups.values():
        members = set()
        mixed = False
        for oid in oids:
            for member in orbits[oid].orbit:
                if member in admissible_set:
                    members.add(member)
                else:
                    mixed = True
        rep = min(members, key=_ckey)
        rep_oid = orbit_of[rep]
        witness = {}
        for member in members:
            for sym in syms:
                img = sym.apply(member)
                if orbit_of.get(img) == rep_oid:
                    report = orbits[rep_oid]
                    steps = report.path_to(img)[::-1] + report.path_to(rep)
                    witness[member] = (sym, steps)
                    break
        classes.append(
            EquivalenceClass(
                members=frozenset(members),
                representative=rep,
                witness=witness,
                parity_mixed=mixed,
            )
        )
    classes.sort(key=lambda cl: _ckey(cl.representative))
    return classes


# ---------------------------------------------------------------------------
# reflection bookkeeping


@dataclass(frozen=True)
class NeighborReflection:
    """One neighbor's worth of reflection data for a press at vertex alpha.

    ``n_value`` is twice the pairing of the neighbor with alpha over alpha's
    self-pairing; ``toggled`` is what the press actually does; ``rule_match``
    states that (for even neighbors) toggling happens exactly when n_value is
    odd; ``parity_preserved`` confirms the reflected vector keeps the
    neighbor's parity.
    """

    neighbor: int
    n_value: int
    skipped_odd: bool
    toggled: bool
    rule_match: bool
    parity_preserved: bool


@dataclass(frozen=True)
class ReflectionReport:
    vertex: int
    entries: tuple[NeighborReflection, ...]


def reflection_report(
    diagram: Diagram,
    realization: RootRealization,
    circled: Iterable[int],
    i: int,
) -> ReflectionReport:
    """Reflection data justifying the press at i: Cartan integers of all
    neighbors, the parity of their reflections, and agreement of the toggle
    rule with parity of the Cartan integer."""
    c = as_circling(diagram, circled)
    if len(realization.coords) != len(diagram.nodes):
        raise DimensionMismatch("realization does not match the diagram")
    if not diagram.has_node(i):
        raise UnknownVertex(f"vertex {i} is not in the diagram")
    if diagram.node(i).parity == ODD or i not in c:
        raise NotPressable(f"vertex {i} is not pressable in {sorted(c)}")
    norm = realization.norm(i)
    if norm == 0:
        raise ZeroNorm(f"vertex {i} has vanishing self-pairing")
    alpha = realization.coords[i - 1]
    toggles = _toggles(diagram, i)
    entries = []
    for j in sorted(diagram.neighbors(i)):
        beta = realization.coords[j - 1]
        n = 2 * realization.bilinear_vec(beta, alpha) / norm
        if n.denominator != 1:
            raise ZeroNorm(f"non-integer Cartan number at ({j},{i}): {n}")
        n = int(n)
        reflected = tuple(b - n * a for a, b in zip(alpha, beta))
        parity_preserved = realization.parity_of_vector(reflected) == diagram.node(j).parity
        odd = diagram.node(j).parity == ODD
        toggled = j in toggles
        rule_match = True if odd else (toggled == (n % 2 != 0))
        entries.append(
            NeighborReflection(
                neighbor=j,
                n_value=n,
                skipped_odd=odd,
                toggled=toggled,
                rule_match=rule_match,
                parity_preserved=parity_preserved,
            )
        )
    return ReflectionReport(vertex=i, entries=tuple(entries))


# ---------------------------------------------------------------------------
# JSON helpers shared by the CLI and the HTTP service


def circling_to_dict(circled: Iterable[int]) -> dict:
    return {"circled": sorted(circled)}


def steps_to_dict(steps: Iterable[int]) -> dict:
    return {"steps": list(steps)}


def symmetry_to_dict(sym: Symmetry) -> dict:
    return {"perm": list(sym.perm), "fixes_lowest": sym.fixes_lowest}


def class_to_dict(cl: EquivalenceClass) -> dict:
    return {
        "representative": circling_to_dict(cl.representative),
        "size": cl.size,
        "parity_mixed": cl.parity_mixed,
    }
