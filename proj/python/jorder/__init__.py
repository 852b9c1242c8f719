"""Exact partially ordered Jordan algebras, their symmetric cones, and the
cyclic order on their geometries.

All scalars cross the boundary as exact "p/q" strings; elements are JSON
coordinate arrays in the instance's documented layout.
"""

from jorder._core import (
    JorderError,
    bullet,
    check_axioms,
    classify_pair,
    cone_contains,
    cyclically_ordered,
    cyclically_ordered_full,
    instance_dim,
    instance_name,
    instances,
    inverse,
    is_invertible,
    quad,
    render_interval,
    spectral_ball,
    torus_boxes,
    transversal,
    tube_experiment,
    unit,
    zero,
)

__all__ = [
    "JorderError",
    "bullet",
    "check_axioms",
    "classify_pair",
    "cone_contains",
    "cyclically_ordered",
    "cyclically_ordered_full",
    "instance_dim",
    "instance_name",
    "instances",
    "inverse",
    "is_invertible",
    "quad",
    "render_interval",
    "spectral_ball",
    "torus_boxes",
    "transversal",
    "tube_experiment",
    "unit",
    "zero",
]
