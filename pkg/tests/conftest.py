"""Shared fixtures."""

import json
import os
from pathlib import Path

import pytest

from braided_homology.fixtures import shift_cycle_set
from braided_homology.homology.groups import FiniteAbelianGroup
from braided_homology.multipermutation.enumerate import EnumerationConfig, enumerate_cycle_sets
from braided_homology.structures.cycle_set import from_cycle_set, trivial_cycle_set, validate_cycle_set
from braided_homology.structures.monoid import cyclic_group
from braided_homology.structures.shelf import PRIMAL, dihedral_quandle, from_shelf
from braided_homology.utils.config import Config, set_config


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Built-in defaults only: no config/config.json and no BRAIDED_HOMOLOGY_* overrides."""
    for key in list(os.environ):
        if key.startswith(Config.ENV_PREFIX):
            monkeypatch.delenv(key)
    config = Config(config_path=tmp_path / "config.json", env_path=tmp_path / ".env")
    set_config(config)
    return config


@pytest.fixture(scope="session")
def size_four_cycle_sets():
    """Canonical representatives of the cycle sets on four points."""
    return tuple(enumerate_cycle_sets(EnumerationConfig(4, up_to_iso=True, budget=5_000_000, workers=1)))


@pytest.fixture
def z2():
    return FiniteAbelianGroup.cyclic(2)


@pytest.fixture
def trivial2():
    return trivial_cycle_set(2)


@pytest.fixture
def trivial3():
    return trivial_cycle_set(3)


@pytest.fixture
def shift2():
    return shift_cycle_set(2)


@pytest.fixture
def square_free3():
    """0 swaps 1 and 2; 1 and 2 act trivially. MP level 2."""
    return validate_cycle_set([[0, 2, 1], [0, 1, 2], [0, 1, 2]])


@pytest.fixture
def flip2():
    return from_cycle_set(trivial_cycle_set(2))


@pytest.fixture
def r3():
    return from_shelf(dihedral_quandle(3), PRIMAL)


@pytest.fixture
def group_z2():
    return cyclic_group(2)


@pytest.fixture
def write_doc(tmp_path):
    """Write a JSON document into tmp_path and return its path."""

    def _write(name: str, data) -> Path:
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return path

    return _write
