import pytest

from tricolor.generators import GENERATORS, random_class_graph

SMALL_SEEDS = range(0, 300)        # max 22 vertices
LARGE_SEEDS = range(1000, 1200)    # max 40 vertices


def handcrafted_instances():
    out = {}
    for name, fn in GENERATORS.items():
        if name == "cycle":
            for n in (3, 6, 7, 8, 9, 10, 11, 12):
                out[f"cycle{n}"] = fn(n)
        elif name == "random-class":
            continue
        else:
            out[name] = fn()
    return out


@pytest.fixture(scope="session")
def named():
    return handcrafted_instances()


@pytest.fixture(scope="session")
def corpus_small():
    return [random_class_graph(s, 22) for s in SMALL_SEEDS]


@pytest.fixture(scope="session")
def corpus_large():
    return [random_class_graph(s, 40) for s in LARGE_SEEDS]


@pytest.fixture(scope="session")
def corpus_full(corpus_small, corpus_large):
    return corpus_small + corpus_large
