import random

import pytest

from voganpress import catalog


def sweep_params():
    """Every catalog instance in the exhaustive test range: SL up to m+n=9,
    B/C/D families up to total rank 8, one D21A per sign regime, F4, G3."""
    out = []
    for m in range(2, 9):
        for n in range(1, 9):
            if m != n and m + n <= 9:
                out.append(("SL", {"m": m, "n": n}))
    for m in range(0, 8):
        for n in range(1, 9):
            if m + n <= 8:
                out.append(("B", {"m": m, "n": n}))
    for n in range(3, 9):
        out.append(("C", {"n": n}))
    for m in range(2, 8):
        for n in range(1, 7):
            if m + n <= 8:
                out.append(("D", {"m": m, "n": n}))
    out.append(("D21A", {}))
    out.append(("D21A", {"alpha": "1/2"}))
    out.append(("D21A", {"alpha": "-3"}))
    out.append(("F4", {}))
    out.append(("G3", {}))
    return out


#: Larger instances used only for sampled (non-exhaustive) property checks.
LARGE_PARAMS = [
    ("SL", {"m": 6, "n": 5}),
    ("SL", {"m": 8, "n": 3}),
    ("D", {"m": 6, "n": 3}),
    ("B", {"m": 5, "n": 4}),
]

SWEEP_PARAMS = sweep_params()


def build(family, **kw):
    return catalog.build_preferred_diagram(catalog.family_spec(family, **kw))


@pytest.fixture
def rng():
    return random.Random(20260810)


@pytest.fixture
def sl32():
    return build("SL", m=3, n=2)


@pytest.fixture
def sl43():
    return build("SL", m=4, n=3)


@pytest.fixture
def d53():
    return build("D", m=5, n=3)


@pytest.fixture
def d42():
    return build("D", m=4, n=2)


def random_circling(diagram, rng, p=0.5):
    return frozenset(i for i in diagram.even_ids() if rng.random() < p)
