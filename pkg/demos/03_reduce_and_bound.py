"""Reduction and the circled-vertex bound.

Any admissible circling can be pushed down to one with at most as many
circled vertices as the even part has connected components.  This demo
reduces the D(5,3) example pair and then sweeps a slice of the catalog,
reporting the worst orbit minimum against the bound per instance.
"""

from itertools import combinations

from voganpress import build_preferred_diagram, family_spec, f_orbit, reduce
from voganpress.engine import is_admissible, odd_removed_components
from voganpress.render import to_ascii

spec = family_spec("D", 5, 3)
diagram = build_preferred_diagram(spec)

for start in ({2, 4, 9}, {1, 4, 9}):
    reduced, steps = reduce(diagram, frozenset(start))
    print(f"{sorted(start)} --presses {steps}--> {sorted(reduced)}")
    print(to_ascii(diagram, reduced))
    print()

print("bound sweep (instance, components, worst orbit minimum):")
for family, kw in [
    ("SL", dict(m=3, n=2)),
    ("SL", dict(m=4, n=3)),
    ("B", dict(m=2, n=2)),
    ("C", dict(n=4)),
    ("D", dict(m=4, n=2)),
    ("D", dict(m=5, n=3)),
    ("D21A", dict()),
    ("F4", dict()),
    ("G3", dict()),
]:
    d = build_preferred_diagram(family_spec(family, **kw))
    bound = odd_removed_components(d)
    evens = sorted(d.even_ids())
    worst = 0
    seen = set()
    for size in range(len(evens) + 1):
        for combo in combinations(evens, size):
            c = frozenset(combo)
            if c in seen or not is_admissible(d, c):
                continue
            report = f_orbit(d, c)
            seen |= report.orbit
            worst = max(worst, report.min_size)
    print(f"  {family}{kw if kw else ''}: components {bound}, worst minimum {worst}")
