import json
import pathlib
import random

import pytest

from sgk.fatgraph import FatGraph
from sgk.generators import exhaustive_great_webs
from sgk.replay import CATALOG, replay

GOLDEN = pathlib.Path(__file__).parent / "golden"


def load_bundle(path: pathlib.Path) -> dict:
    return json.loads(path.read_text())


def bundle_graphs(doc: dict):
    near = FatGraph.from_dict(doc["near"])
    far = FatGraph.from_dict(doc["far"])
    corr = {int(k): v for k, v in doc["corr"].items()}
    return near, far, corr


@pytest.fixture(scope="session")
def golden_bundles():
    docs = [load_bundle(p) for p in sorted(GOLDEN.glob("*.json"))]
    assert docs, "golden corpus missing; run scripts/make_goldens.py"
    return docs


@pytest.fixture(scope="session")
def valid_bundles(golden_bundles):
    return [d for d in golden_bundles if "expected" not in d]


@pytest.fixture(scope="session")
def mutant_bundles(golden_bundles):
    return [d for d in golden_bundles if "expected" in d]


@pytest.fixture(scope="session")
def exhaustive_webs():
    # the delta=3, t=4 sweep used by the counting and abundance checks
    return list(exhaustive_great_webs(delta=3, t=4, vmax=3))


@pytest.fixture(scope="session")
def traces():
    # replayed once per session; shared by the replay and acceptance tests
    return {tid: replay(tid) for tid in CATALOG}


@pytest.fixture()
def rng():
    return random.Random(1729)
