"""Shipped data for the genus-3 Klein quartic computations.

The quartic x^3 y + y^3 z + z^3 x = 0 has the largest automorphism group
a genus-3 surface allows (order 168, simple), generated by elements R,
S, T of orders 2, 3, 7.  The data files hold the integer homology
matrices of the three generators, in the column convention of
:mod:`spinvariants.surface_action`, together with the printed integer
correction vectors V_R, V_S, V_T.  The pairing is the standard one at
genus 3.

Matrices live in JSON data files rather than code because transcription
is the main risk: every file is verified against a SHA-256 checksum at
load time, and the test suite recomputes the V vectors, the generator
orders (2, 3, 7), and the solution families from scratch.  The product
R*S*T multiplies out to the identity matrix exactly; that is recorded
(and regression-tested) as a property of this particular transcription,
not assumed of every presentation of the group.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from ..surface_action import HomologyAction, Pairing, from_interchange

_DATA_FILES = ("klein_R.json", "klein_S.json", "klein_T.json", "klein_vectors.json")


@dataclass(frozen=True)
class KleinData:
    """The quartic's pairing, generator matrices, and printed V vectors."""

    pairing: Pairing
    R: HomologyAction
    S: HomologyAction
    T: HomologyAction
    V_R: tuple[int, ...]
    V_S: tuple[int, ...]
    V_T: tuple[int, ...]


def fixture_names() -> tuple[str, ...]:
    """Names of the shipped data files, resolvable by fixture_text."""
    return _DATA_FILES


def fixture_text(name: str) -> str:
    """Raw text of a shipped data file, checksum-verified."""
    if name not in _DATA_FILES:
        raise ValueError(f"unknown fixture {name!r}; available: {', '.join(_DATA_FILES)}")
    data_dir = resources.files(__package__) / "data"
    text = (data_dir / name).read_text(encoding="utf-8")
    expected = json.loads((data_dir / "checksums.json").read_text(encoding="utf-8"))
    digest = hashlib.sha256(text.encode("utf-8")).hexdigest()
    if digest != expected[name]:
        raise RuntimeError(f"fixture {name} is corrupted: checksum mismatch")
    return text


@lru_cache(maxsize=1)
def klein_data() -> KleinData:
    """Load and validate the shipped quartic data."""
    actions = {}
    pairing = None
    for letter in "RST":
        action, p = from_interchange(json.loads(fixture_text(f"klein_{letter}.json")))
        actions[letter] = action
        pairing = p
    vectors = json.loads(fixture_text("klein_vectors.json"))
    return KleinData(pairing=pairing,
                     R=actions["R"], S=actions["S"], T=actions["T"],
                     V_R=tuple(vectors["V_R"]),
                     V_S=tuple(vectors["V_S"]),
                     V_T=tuple(vectors["V_T"]))
