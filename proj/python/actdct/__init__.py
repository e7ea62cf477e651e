"""8-point arithmetic cosine transform (ACT).

Exact DCT-II computation from the 10 prescribed non-uniform samples,
the factorized transform matrix, and bit-accurate fixed-point simulators
of the two hardware architectures with an accuracy-sweep harness.
"""

from ._core import (
    act_mertens,
    act_null_mean,
    build_w,
    complexity,
    dct2,
    default_schedule_json,
    factorization_t,
    graph_json,
    grid_json,
    grid_points,
    interpolate,
    mean_from_samples,
    mean_weights,
    mertens,
    moebius,
    simulate,
    sweep,
    transform_via_t,
)

__all__ = [
    "act_mertens",
    "act_null_mean",
    "build_w",
    "complexity",
    "dct2",
    "default_schedule_json",
    "factorization_t",
    "graph_json",
    "grid_json",
    "grid_points",
    "interpolate",
    "mean_from_samples",
    "mean_weights",
    "mertens",
    "moebius",
    "simulate",
    "sweep",
    "transform_via_t",
]
