"""Pinned generator data for the concrete groups used by the checks.

Each entry names a group file in the data directory together with the order
and tags it must have.  Loading validates both, so corrupted data fails loudly.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

from .groupfile import read_group
from .perm import GeneratedGroup

DATA_DIR_ENV = "CHARSIMPLE_DATA_DIR"
PACKAGE_DATA = Path(__file__).resolve().parent / "data"


class CatalogError(RuntimeError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    expected_order: int
    tags: frozenset[str]
    ambient: str | None = None


ENTRIES = {
    e.name: e
    for e in [
        CatalogEntry("A5", 60, frozenset({"simple", "transitive"})),
        CatalogEntry("A6", 360, frozenset({"simple", "transitive"})),
        CatalogEntry("S5", 120, frozenset({"transitive"})),
        CatalogEntry("A5_in_A6_transitive", 60, frozenset({"simple", "transitive"}), ambient="A6"),
        CatalogEntry("M11", 7920, frozenset({"simple", "transitive"})),
        CatalogEntry("M12", 95040, frozenset({"simple", "transitive"})),
        CatalogEntry("M11_in_M12_stabilizer", 7920, frozenset({"simple", "intransitive"}), ambient="M12"),
        CatalogEntry("M11_in_M12_transitive", 7920, frozenset({"simple", "transitive"}), ambient="M12"),
        CatalogEntry("SL32", 168, frozenset({"simple", "intransitive"}), ambient="AGL32"),
        CatalogEntry("AGL32", 1344, frozenset({"transitive"})),
        CatalogEntry("SL32_transitive", 168, frozenset({"simple", "transitive"}), ambient="AGL32"),
    ]
}


def data_dir(override=None) -> Path:
    if override is not None:
        return Path(override)
    env = os.environ.get(DATA_DIR_ENV)
    return Path(env) if env else PACKAGE_DATA


def names() -> list[str]:
    return list(ENTRIES)


def load(name: str, directory=None) -> GeneratedGroup:
    try:
        entry = ENTRIES[name]
    except KeyError:
        raise CatalogError(f"unknown catalog group {name!r}") from None
    path = data_dir(directory) / f"{name}.txt"
    if not path.is_file():
        raise CatalogError(f"missing data file {path}")
    try:
        group = read_group(path, name=name)
    except ValueError as exc:
        raise CatalogError(f"{path}: {exc}") from exc
    if group.order() != entry.expected_order:
        raise CatalogError(f"{name}: order {group.order()} but expected {entry.expected_order}")
    if "transitive" in entry.tags and not group.is_transitive():
        raise CatalogError(f"{name}: tagged transitive but is not")
    if "intransitive" in entry.tags and group.is_transitive():
        raise CatalogError(f"{name}: tagged intransitive but is transitive")
    if entry.ambient is not None:
        ambient = load(entry.ambient, directory)
        if not group.is_subgroup_of(ambient):
            raise CatalogError(f"{name}: not contained in {entry.ambient}")
    return group


def self_test(directory=None) -> dict[str, int]:
    return {name: load(name, directory).order() for name in ENTRIES}


def two_a5_in_a6(directory=None) -> tuple[GeneratedGroup, GeneratedGroup]:
    """Point stabilizer A5 and a transitive A5 in A6; together they factorize A6."""
    a6 = load("A6", directory)
    t1 = a6.point_stabilizer(0)
    t1.name = "A5_stabilizer"
    return t1, load("A5_in_A6_transitive", directory)


def two_m11_in_m12(directory=None) -> tuple[GeneratedGroup, GeneratedGroup]:
    """Intransitive and transitive M11 in M12; their intersection has order 660."""
    return load("M11_in_M12_stabilizer", directory), load("M11_in_M12_transitive", directory)


def affine_example(directory=None) -> tuple[GeneratedGroup, GeneratedGroup]:
    """``F_2^3 : SL(3,2)`` on 8 points and a transitive simple complement."""
    return load("AGL32", directory), load("SL32_transitive", directory)
