"""Sumsets, spectra and subspace structure in F2^n."""

import json

from ._core import (
    ContractViolation,
    DimensionError,
    FormatError,
    PointSet,
    PreconditionViolation,
    Subspace,
    coset_decompose,
    generate,
    indicator_transform,
    max_dimension,
    spectrum,
    sumset,
    walsh_coefficients,
    wht,
)
from . import _core

__all__ = [
    "ContractViolation",
    "DimensionError",
    "FormatError",
    "PointSet",
    "PreconditionViolation",
    "Subspace",
    "campaign",
    "check_flatness",
    "coset_decompose",
    "doubling",
    "energy",
    "flatten",
    "generate",
    "indicator_transform",
    "max_dimension",
    "oracle_check",
    "spectrum",
    "sumset",
    "theorem4",
    "walsh_coefficients",
    "wht",
]


def doubling(a, b):
    return json.loads(_core._doubling(a, b))


def energy(a1, a2, a3=None, a4=None, method="fourier"):
    """Normalized additive energy; with two sets this is omega(A, B, A, B)."""
    if a3 is None and a4 is None:
        a3, a4 = a1, a2
    elif a3 is None or a4 is None:
        raise TypeError("energy takes two or four sets")
    return json.loads(_core._energy(a1, a2, a3, a4, method))


def check_flatness(a, b, delta):
    return json.loads(_core._check_flatness(a, b, delta))


def flatten(a, b, k, step_coefficient=0.01):
    """Returns (A', B', report)."""
    fa, fb, report = _core._flatten(a, b, k, step_coefficient)
    return fa, fb, json.loads(report)


def theorem4(a, b, k):
    """Returns (H, report)."""
    h, report = _core._theorem4(a, b, k)
    return h, json.loads(report)


def oracle_check(trials=100, seed=1):
    return json.loads(_core._oracle_check(trials, seed))


def campaign(config):
    """Runs a campaign from a config dict; returns (csv_text, report_dict)."""
    csv_text, report = _core._campaign(json.dumps(config))
    return csv_text, json.loads(report)
