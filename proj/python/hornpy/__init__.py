"""Python bindings for the horn library."""

import json as _json

from . import _core
from ._core import (
    HornError,
    angle_pair,
    decompfamily_witness,
    elliptic_rep,
    layer_product,
    psi,
    pu11_construct,
    render_slice,
    slice_counts,
    surjective_pair,
    u2_construct,
)


def classify(matrix, form=None):
    return _json.loads(_core._classify(matrix, form))


def linear_forms(tau):
    return _json.loads(_core._linear_forms(tau))


def wall_catalog():
    return _json.loads(_core._wall_catalog())


def active_walls(tau, tol=-1.0):
    return _json.loads(_core._active_walls(tau, tol))


def cell_table():
    return _json.loads(_core._cell_table())


def member(tau, tol=-1.0):
    return _json.loads(_core._member(tau, tol))


def find_witness(tau, seed=42, budget=200000):
    return _json.loads(_core._find_witness(tau, seed, budget))
