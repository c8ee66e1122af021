"""Press calculus: presses, orbits, relatedness, reduction, symmetries,
equivalence, classification, reflection bookkeeping."""

import pytest

from voganpress import catalog, engine
from voganpress.errors import (
    CapExceeded,
    InvalidCircling,
    NotAdmissible,
    NotPressable,
    UnknownVertex,
)

from conftest import build


# -- admissibility -----------------------------------------------------------

def test_fig2_circling_is_not_admissible(d42):
    assert engine.is_admissible(d42, {4, 7}) is False


def test_sl32_circling_3_5_is_admissible(sl32):
    assert engine.is_admissible(sl32, {3, 5}) is True


def test_admissibility_follows_the_rule_parity(sl32, d53):
    # SL and D default to the even rule
    assert engine.is_admissible(sl32, set()) is True
    assert engine.is_admissible(sl32, {3}) is False
    assert engine.is_admissible(d53, {2, 4, 9}) is True
    assert engine.is_admissible(d53, {4, 9}) is False
    # odd-rule family: must contain an odd label sum
    b22 = build("B", m=2, n=2)
    assert engine.is_admissible(b22, {5}) is True
    assert engine.is_admissible(b22, set()) is False


def test_parity_rule_override():
    spec = catalog.family_spec("D", 4, 2, parity_rule="odd")
    d = catalog.build_preferred_diagram(spec)
    assert engine.is_admissible(d, {4, 7}) is True


def test_invalid_circlings_rejected(sl32):
    with pytest.raises(InvalidCircling):
        engine.is_admissible(sl32, {4})  # grey
    with pytest.raises(InvalidCircling):
        engine.is_admissible(sl32, {12})  # unknown


# -- press -------------------------------------------------------------------

def test_fig4_press_steps(sl43):
    c = frozenset({1, 2, 3, 4, 6})
    c = engine.press(sl43, c, 2)
    assert c == frozenset({2, 4, 6})
    c = engine.press(sl43, c, 4)
    assert c == frozenset({2, 3, 4, 6})
    c = engine.press(sl43, c, 3)
    assert c == frozenset({3, 6})


def test_press_skips_longer_end_of_double_edge(d53):
    # 8 <== 9 with 9 long: pressing 8 leaves 9 alone, pressing 9 toggles 8
    assert engine.press(d53, {8}, 8) == frozenset({7, 8})
    assert engine.press(d53, {9}, 9) == frozenset({8, 9})


def test_press_toggles_across_triple_edge_both_ways():
    g3 = build("G3")
    assert engine.press(g3, {1}, 1) == frozenset({1, 2})
    assert engine.press(g3, {2}, 2) == frozenset({1, 2})


def test_press_errors(sl43):
    with pytest.raises(NotPressable):
        engine.press(sl43, {3, 6}, 2)  # 2 not circled
    with pytest.raises(NotPressable):
        engine.press(sl43, {1, 2, 3, 4, 6}, 5)  # 5 odd
    with pytest.raises(UnknownVertex):
        engine.press(sl43, {1}, 42)


def test_press_is_involutive(sl43):
    c = frozenset({2, 4, 6})
    assert engine.press(sl43, engine.press(sl43, c, 4), 4) == c


# -- orbits and relatedness --------------------------------------------------

def test_orbit_of_sl32_contains_the_figure_pair(sl32):
    report = engine.f_orbit(sl32, {3, 5})
    assert frozenset({2, 3, 5}) in report.orbit
    assert frozenset({1, 5}) in report.orbit


def test_orbit_of_empty_circling_is_trivial(sl32):
    report = engine.f_orbit(sl32, set())
    assert report.orbit == frozenset({frozenset()})
    assert report.min_size == 0


def test_orbit_of_d53_contains_reduced_circling(d53):
    report = engine.f_orbit(d53, {2, 4, 9})
    assert frozenset({1, 9}) in report.orbit


def test_orbit_paths_replay(d53):
    report = engine.f_orbit(d53, {2, 4, 9})
    for member in sorted(report.orbit, key=lambda c: (len(c), sorted(c)))[:12]:
        steps = report.path_to(member)
        assert engine.press_sequence(d53, {2, 4, 9}, steps) == member


def test_f_related_fig1_pair(sl32):
    steps = engine.f_related(sl32, {2, 3, 5}, {3, 5})
    assert steps is not None
    assert engine.press_sequence(sl32, {2, 3, 5}, steps) == frozenset({3, 5})


def test_f_related_last_example(sl32):
    steps = engine.f_related(sl32, {1, 5}, {3, 5})
    assert steps == [1, 2, 3]


def test_f_related_none_across_orbits(sl32):
    # {3} has odd label sum; {3,5} even: presses on the 7-cycle change the
    # sum by 1 or 2, but these two particular orbits never meet
    assert engine.f_related(sl32, set(), {3, 5}) is None


def test_reduce_d53(d53):
    reduced, steps = engine.reduce(d53, {2, 4, 9})
    assert reduced == frozenset({1, 9})
    assert engine.press_sequence(d53, {2, 4, 9}, steps) == reduced
    assert len(reduced) <= engine.odd_removed_components(d53)


def test_reduce_is_idempotent_on_minimal(d53):
    reduced, steps = engine.reduce(d53, {1, 9})
    assert reduced == frozenset({1, 9})
    assert steps == []


def test_reduce_requires_admissible(d53):
    with pytest.raises(NotAdmissible):
        engine.reduce(d53, {4, 9})


def test_reduce_sl32_obeys_the_two_component_bound(sl32):
    reduced, _ = engine.reduce(sl32, {3, 5})
    assert len(reduced) <= 2 == engine.odd_removed_components(sl32)


# -- components --------------------------------------------------------------

def test_odd_removed_components():
    assert engine.odd_removed_components(build("D", m=5, n=3)) == 2
    assert engine.odd_removed_components(build("SL", m=3, n=2)) == 2
    assert engine.odd_removed_components(build("B", m=0, n=2)) == 1  # dark leaf
    assert engine.odd_removed_components(build("C", n=4)) == 1
    assert engine.odd_removed_components(build("D21A")) == 3
    assert engine.odd_removed_components(build("F4")) == 2
    assert engine.odd_removed_components(build("G3")) == 2


# -- symmetries --------------------------------------------------------------

def test_d53_automorphisms_contain_the_fork_swap(d53):
    perms = {s.perm for s in engine.automorphisms(d53)}
    assert (2, 1, 3, 4, 5, 6, 7, 8, 9) in perms
    assert (1, 2, 3, 4, 5, 6, 7, 8, 9) in perms
    assert len(perms) == 2


def test_identity_always_present(d42):
    syms = engine.automorphisms(d42)
    assert syms[0].is_identity()


def test_sl32_automorphism_is_the_reflection(sl32):
    perms = {s.perm for s in engine.automorphisms(sl32)}
    # (1 3)(4 7)(5 6) fixing 2
    assert (3, 2, 1, 7, 6, 5, 4) in perms
    assert len(perms) == 2
    refl = [s for s in engine.automorphisms(sl32) if not s.is_identity()][0]
    assert refl.fixes_lowest is False


def test_automorphisms_form_a_group(sl32, d53):
    for d in (sl32, d53, build("D21A"), build("C", n=4)):
        syms = engine.automorphisms(d)
        perms = {s.perm for s in syms}
        for a in syms:
            for b in syms:
                composed = tuple(
                    a.perm[b.perm[i - 1] - 1] for i in range(1, len(a.perm) + 1)
                )
                assert composed in perms


def test_d21a_tip_swap_and_c_family_grey_swap():
    # D21A: the two white tips 1,2 swap; phi does not (label sums differ? no:
    # all tips labelled 1 but phi's neighbor structure matches too; the grey
    # center is fixed)
    perms = {s.perm for s in engine.automorphisms(build("D21A"))}
    assert (2, 1, 3, 4) in perms
    # C(n): the two grey tips are interchangeable
    c4 = build("C", n=4)
    perms = {s.perm for s in engine.automorphisms(c4)}
    assert (5, 2, 3, 4, 1) in perms


# -- equivalence -------------------------------------------------------------

def test_d53_example_circlings_are_equivalent(d53):
    same, witness = engine.equivalent(d53, {2, 4, 9}, {1, 4, 9})
    assert same is True
    sym, steps = witness
    assert engine.press_sequence(d53, sym.apply(frozenset({2, 4, 9})), steps) == frozenset(
        {1, 4, 9}
    )


def test_equivalent_to_itself_with_identity(d53):
    same, (sym, steps) = engine.equivalent(d53, {1, 9}, {1, 9})
    assert same and sym.is_identity() and steps == []


def test_equivalent_requires_admissibility(sl32):
    # {2,3,5} has odd label sum: not admissible under the SL even rule
    with pytest.raises(NotAdmissible):
        engine.equivalent(sl32, {2, 3, 5}, {1, 5})


def test_equivalent_false_case(d53):
    same, witness = engine.equivalent(d53, frozenset(), {1, 9})
    assert same is False and witness is None


# -- classification ----------------------------------------------------------

def test_classify_d53_groups_the_example_pair(d53):
    classes = engine.classify(d53)
    def class_of(c):
        c = frozenset(c)
        for k, cl in enumerate(classes):
            if c in cl.members:
                return k
        raise AssertionError(f"{sorted(c)} unclassified")
    assert class_of({2, 4, 9}) == class_of({1, 4, 9})


def test_classify_partition_laws(sl32):
    classes = engine.classify(sl32)
    members = [cl.members for cl in classes]
    union = set().union(*members)
    evens = sorted(sl32.even_ids())
    from itertools import combinations

    admissible = set()
    for size in range(len(evens) + 1):
        for combo in combinations(evens, size):
            c = frozenset(combo)
            if engine.is_admissible(sl32, c):
                admissible.add(c)
    assert union == admissible
    total = sum(len(m) for m in members)
    assert total == len(union)  # pairwise disjoint


def test_classify_empty_circling_is_its_own_representative(sl32):
    classes = engine.classify(sl32)
    empty_class = [cl for cl in classes if frozenset() in cl.members]
    assert len(empty_class) == 1
    assert empty_class[0].representative == frozenset()


def test_classify_witnesses_replay(d42):
    for cl in engine.classify(d42):
        for member in cl.members:
            sym, steps = cl.witness[member]
            assert engine.press_sequence(d42, sym.apply(member), steps) == cl.representative


def test_classify_flags_parity_mixing(sl32):
    classes = engine.classify(sl32)
    cls = [cl for cl in classes if frozenset({3, 5}) in cl.members]
    assert len(cls) == 1
    # pressing 3 on {3,5} gives {2,3,5} with odd sum: the orbit mixes parity
    assert cls[0].parity_mixed is True


def test_classify_cap():
    big = build("SL", m=12, n=11)  # 23 even vertices
    with pytest.raises(CapExceeded):
        engine.classify(big)
    with pytest.raises(CapExceeded):
        engine.classify(build("SL", m=3, n=2), cap=4)


def test_classify_env_cap(monkeypatch, sl32):
    monkeypatch.setenv("VOGAN_ORBIT_CAP", "4")
    with pytest.raises(CapExceeded):
        engine.classify(sl32)
    monkeypatch.setenv("VOGAN_ORBIT_CAP", "1000000")
    assert engine.classify(sl32)


# -- reflection bookkeeping --------------------------------------------------

def test_reflection_single_edges_give_minus_one(sl32):
    r = catalog.root_realization(sl32.family)
    rep = engine.reflection_report(sl32, r, {2}, 2)
    assert [(e.neighbor, e.n_value) for e in rep.entries] == [(1, -1), (3, -1)]
    assert all(e.toggled and e.rule_match and e.parity_preserved for e in rep.entries)


def test_reflection_double_edge_long_neighbor_is_even_and_kept(d53):
    r = catalog.root_realization(d53.family)
    rep = engine.reflection_report(d53, r, {8}, 8)
    by = {e.neighbor: e for e in rep.entries}
    assert by[9].n_value == -2 and by[9].toggled is False and by[9].rule_match
    assert by[7].n_value == -1 and by[7].toggled is True


def test_reflection_marks_odd_neighbors_skipped(d53):
    r = catalog.root_realization(d53.family)
    rep = engine.reflection_report(d53, r, {5}, 5)
    by = {e.neighbor: e for e in rep.entries}
    assert by[6].skipped_odd is True and by[6].toggled is False
    assert by[6].parity_preserved is True
    assert by[4].skipped_odd is False and by[4].toggled is True


def test_reflection_triple_edge():
    g3 = build("G3")
    r = catalog.root_realization(g3.family)
    rep = engine.reflection_report(g3, r, {2}, 2)
    by = {e.neighbor: e for e in rep.entries}
    assert by[1].n_value == -3 and by[1].toggled is True and by[1].rule_match


def test_reflection_requires_pressable(sl32):
    r = catalog.root_realization(sl32.family)
    with pytest.raises(NotPressable):
        engine.reflection_report(sl32, r, {1}, 2)


def test_reflection_zero_norm_guards_corrupt_data(sl32):
    from voganpress.errors import ZeroNorm

    r = catalog.root_realization(sl32.family)
    zeroed = catalog.RootRealization(
        weights=r.weights,
        coords=tuple(
            tuple(0 * c for c in vec) if k == 0 else vec for k, vec in enumerate(r.coords)
        ),
        odd_test=r.odd_test,
    )
    with pytest.raises(ZeroNorm):
        engine.reflection_report(sl32, zeroed, {1}, 1)
