"""Partition all admissible circlings of a diagram into real-form classes.

Two admissible circlings present the same real form when a diagram symmetry
image of one is press-related to the other.  The D(5,3) example pair lands
in one class; the class listing also shows the parity-mixing diagnostic
(orbits that wander through inadmissible circlings).
"""

from voganpress import build_preferred_diagram, classify, equivalent, family_spec

diagram = build_preferred_diagram(family_spec("D", 5, 3))

same, (symmetry, steps) = equivalent(diagram, frozenset({2, 4, 9}), frozenset({1, 4, 9}))
print(f"{{2,4,9}} ~ {{1,4,9}}: {same}")
print(f"  witness: apply symmetry {symmetry.perm}, then press {steps or 'nothing'}")
print()

for name, kw in [("SL", dict(m=3, n=2)), ("D", dict(m=5, n=3)), ("D21A", dict())]:
    d = build_preferred_diagram(family_spec(name, **kw))
    classes = classify(d)
    total = sum(cl.size for cl in classes)
    print(f"{name}{kw or ''}: {total} admissible circlings in {len(classes)} classes")
    for cl in classes:
        flag = "  [parity-mixed orbit]" if cl.parity_mixed else ""
        print(f"  representative {sorted(cl.representative) or '{}'}, size {cl.size}{flag}")
    print()
