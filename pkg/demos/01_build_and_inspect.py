"""Build preferred extended Dynkin diagrams and inspect their data.

Walks the seven families, draws a representative of each, and checks the
defining property of the a-labels: weighting the vertex vectors by the
labels sums to exactly zero.
"""

from voganpress import (
    build_preferred_diagram,
    family_spec,
    list_families,
    root_realization,
    verify_marks,
)
from voganpress.render import to_ascii

print("Supported families:")
for t in list_families():
    params = ", ".join(t.params) if t.params else "-"
    print(f"  {t.family:5} params: {params:8} constraints: {t.constraints or '-'}"
          f"  admissibility rule: {t.parity_rule}")

print()
for family, kw in [
    ("SL", dict(m=3, n=2)),
    ("B", dict(m=3, n=2)),
    ("C", dict(n=4)),
    ("D", dict(m=5, n=3)),
    ("D21A", dict()),
    ("F4", dict()),
    ("G3", dict()),
]:
    spec = family_spec(family, **kw)
    diagram = build_preferred_diagram(spec)
    realization = root_realization(spec)
    labels = [nd.a_label for nd in diagram.nodes]
    print(f"--- {family} {kw or ''}")
    print(to_ascii(diagram))
    print(f"a-labels: {labels}")
    print(f"marks verified (sum a*vertex = 0, gcd 1): {verify_marks(diagram, realization)}")
    print()
