"""Press circled vertices step by step on the nine-vertex cycle.

Starting from the circling {1,2,3,4,6} the presses F2, F4, F3 land on {3,6}:
two superdiagrams presenting the same real form.  Each step draws the
diagram and explains which neighbors toggled and which were skipped.
"""

from voganpress import build_preferred_diagram, family_spec, press, root_realization
from voganpress.engine import reflection_report
from voganpress.render import to_ascii

spec = family_spec("SL", 4, 3)
diagram = build_preferred_diagram(spec)
realization = root_realization(spec)

circling = frozenset({1, 2, 3, 4, 6})
print(to_ascii(diagram, circling))
print()

for vertex in (2, 4, 3):
    report = reflection_report(diagram, realization, circling, vertex)
    notes = []
    for e in report.entries:
        if e.skipped_odd:
            notes.append(f"{e.neighbor} odd, kept")
        elif e.toggled:
            notes.append(f"{e.neighbor} toggled (n={e.n_value})")
        else:
            notes.append(f"{e.neighbor} kept (n={e.n_value} even)")
    circling = press(diagram, circling, vertex)
    print(f"press {vertex}: {'; '.join(notes)}")
    print(to_ascii(diagram, circling))
    print()

print(f"final circling: {sorted(circling)}")
