"""Exact computer algebra for q-deformed Lax equations."""

from ._core import (  # noqa: F401
    QlaxError,
    Symbol,
    commutator,
    convergence,
    dx,
    kdv_verify,
    lax_solve,
    mat_invert,
    mat_random,
    q_exp,
    q_log,
    symmetry,
)

__version__ = "0.1.0"
