"""Sensitivity and block sensitivity of Boolean functions.

Inputs are bitstrings with x1 first (or integers with x1 as bit 0).
Reports are plain dicts with the same keys as the command-line tool's
json-lines output.
"""

from ._core import (
    Caps,
    Dnf,
    Error,
    TruthTable,
    ball,
    family,
    hypercubes_to_dnf,
    load,
    measures,
    normalize,
    one_set_components,
    onesbound_tight,
    props,
    proposition_pair,
    reconstruct,
    replay,
    solve,
    suite_names,
    verify,
    witness,
)

__all__ = [
    "Caps",
    "Dnf",
    "Error",
    "TruthTable",
    "ball",
    "family",
    "hypercubes_to_dnf",
    "load",
    "measures",
    "normalize",
    "one_set_components",
    "onesbound_tight",
    "props",
    "proposition_pair",
    "reconstruct",
    "replay",
    "solve",
    "suite_names",
    "verify",
    "witness",
]
