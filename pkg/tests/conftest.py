import json

import pytest

from idelink import Manifold, load_and_validate, presentation_from_dict

LENS5 = {
    "surgery": {"components": ["L1"], "matrix": [[5]]},
    "link": {"components": ["K"], "lk_with_surgery": [[1]], "lk_mutual": [[0]]},
}

HOPF = {
    "surgery": {"components": [], "matrix": []},
    "link": {
        "components": ["K1", "K2"],
        "lk_with_surgery": [[], []],
        "lk_mutual": [[0, 1], [1, 0]],
    },
}

# L(4,1) with a knot linking the surgery curve twice; its preferred
# longitude is a nonprimitive vector in the peripheral lattice
LENS4_TWICE = {
    "surgery": {"components": ["L1"], "matrix": [[4]]},
    "link": {"components": ["K"], "lk_with_surgery": [[2]], "lk_mutual": [[0]]},
}


def manifold(data) -> Manifold:
    return load_and_validate(presentation_from_dict(data))


@pytest.fixture
def lens5() -> Manifold:
    return manifold(LENS5)


@pytest.fixture
def hopf() -> Manifold:
    return manifold(HOPF)


@pytest.fixture
def lens4_twice() -> Manifold:
    return manifold(LENS4_TWICE)


@pytest.fixture
def lens5_path(tmp_path):
    p = tmp_path / "lens5.json"
    p.write_text(json.dumps(LENS5))
    return str(p)


@pytest.fixture
def hopf_path(tmp_path):
    p = tmp_path / "hopf.json"
    p.write_text(json.dumps(HOPF))
    return str(p)
