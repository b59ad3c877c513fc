import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from reflexpoly.corpus import corpus_3d  # noqa: E402
from reflexpoly.gallery import standard_gallery  # noqa: E402
from reflexpoly.lattice import UnimodularMap, identity  # noqa: E402


def random_unimodular(d, rng, steps=6, spread=2):
    """Product of random elementary matrices, signs and swaps."""
    m = [list(r) for r in identity(d)]
    for _ in range(steps):
        i, j = rng.sample(range(d), 2) if d > 1 else (0, 0)
        kind = rng.random()
        if d > 1 and kind < 0.7:
            k = rng.randint(-spread, spread)
            m[i] = [a + k * b for a, b in zip(m[i], m[j])]
        elif d > 1 and kind < 0.85:
            m[i], m[j] = m[j], m[i]
        else:
            m[i] = [-a for a in m[i]]
    return UnimodularMap(tuple(map(tuple, m)))


def transformed(p, u):
    from reflexpoly.polytope import Polytope

    return Polytope([u(v) for v in p.vertices])


@pytest.fixture(scope="session")
def gallery():
    return standard_gallery()


@pytest.fixture(scope="session")
def reflexive_gallery(gallery):
    return {k: p for k, p in gallery.items() if p.dim >= 2}


@pytest.fixture(scope="session")
def corpus():
    return corpus_3d()


@pytest.fixture
def rng():
    return random.Random(20240607)


@pytest.fixture(scope="session")
def classification():
    from reflexpoly.classify import classify_reflexive_2d

    return classify_reflexive_2d()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
