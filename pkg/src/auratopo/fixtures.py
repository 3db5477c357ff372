"""Bundled example spaces with recorded expected behavior.

Each fixture ships as a JSON document under ``auratopo/data``.  The catalog
maps a short name to the file plus a one-line note on what the space
demonstrates; the verification suite holds the actual expected values.
"""

from __future__ import annotations

import os
from importlib import resources
from typing import Optional

from .aura import AuraSpace
from .documents import load_document, parse_document

__all__ = ["FIXTURES", "FIXTURE_NAMES", "fixture_note", "load_fixture"]

FIXTURES = {
    "clusters5": "five points splitting into three scope components",
    "rotor3": "non-transitive rotor; subspace topology strictly finer than the trace",
    "chain3": "transitive chain of scopes; convergence depends only on the tail",
    "split3": "ambient topology disconnected, scope topology indiscrete",
    "ladder4": "nested scopes giving a five-set scope topology",
    "sierpinski2": "two-point space that is scope-connected and scope-path connected",
    "discrete2": "two points with singleton scopes",
    "blob2": "two points whose scopes are the whole space",
    "blob2n": "blob2 relabelled with numeric points",
}

FIXTURE_NAMES = tuple(FIXTURES)

# pairs used by the product checks: (left factor, right factor)
PRODUCT_PAIRS = {
    "chain-strict": ("rotor3", "discrete2"),
    "indiscrete": ("blob2", "blob2n"),
}


def fixture_note(name: str) -> str:
    return FIXTURES[name]


def load_fixture(name: str, fixtures_dir: Optional[str] = None) -> AuraSpace:
    """Load a fixture space by name.

    ``fixtures_dir`` overrides the bundled data directory; a missing name or
    file surfaces as FileNotFoundError so callers can map it to an I/O exit.
    """
    filename = f"{name}.json"
    if fixtures_dir is not None:
        return load_document(os.path.join(fixtures_dir, filename)).space
    ref = resources.files("auratopo").joinpath("data").joinpath(filename)
    if not ref.is_file():
        raise FileNotFoundError(f"no bundled fixture {name!r}")
    return parse_document(ref.read_text(encoding="utf-8")).space
