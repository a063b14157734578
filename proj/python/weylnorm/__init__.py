"""Exact Tits and unitary Weyl group extensions over Q(z8)."""

import json

from . import _weylnorm
from ._weylnorm import SCHEMA_VERSION, CapExceeded, ConfigError, cartan_matrix, generators, tits_lifts, unitary_lifts

__all__ = [
    "SCHEMA_VERSION",
    "CapExceeded",
    "ConfigError",
    "cartan_matrix",
    "generators",
    "tits_lifts",
    "unitary_lifts",
    "roots",
    "verify",
    "split_check",
    "tits_group_order",
    "run_cli",
]


def roots(type, rank):
    return json.loads(_weylnorm.roots_json(type, rank))


def verify(type, rank, rep="adjoint", suite="tits", threads=1):
    """Report dict for suite in {"tits", "unitary", "action"}."""
    return json.loads(_weylnorm.verify_json(type, rank, rep, suite, threads))


def split_check(type, rank, rep="adjoint", cap=1 << 20, threads=1):
    return json.loads(_weylnorm.split_json(type, rank, rep, cap, threads))


def tits_group_order(type, rank, rep="adjoint", cap=1 << 16):
    """Order of the group generated by the Tits lifts, or None past cap."""
    return _weylnorm.tits_group_order(type, rank, rep, cap)


def run_cli(*args):
    """Returns (exit_code, stdout, stderr)."""
    return _weylnorm.run_cli([str(a) for a in args])
