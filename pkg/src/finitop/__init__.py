"""Verification engine for generalized open sets and weak continuity
classes on finite topological spaces."""

__version__ = "0.1.0"

from .core import (
    FinSpace,
    PointMap,
    SetFamily,
    closure,
    complement,
    constant_map,
    full_mask,
    graph_map,
    identity_map,
    image,
    interior,
    mask_of,
    points_of,
    preimage,
    product,
    validate_topology,
)
from .operators import (
    KINDS,
    delta_closure,
    delta_interior,
    e_closure,
    e_interior,
    e_theta_closure,
    e_theta_interior,
    family,
    kernel_closure,
    kernel_interior,
    theta_closure,
    theta_interior,
)

__all__ = [
    "FinSpace",
    "PointMap",
    "SetFamily",
    "closure",
    "complement",
    "constant_map",
    "full_mask",
    "graph_map",
    "identity_map",
    "image",
    "interior",
    "mask_of",
    "points_of",
    "preimage",
    "product",
    "validate_topology",
    "KINDS",
    "delta_closure",
    "delta_interior",
    "e_closure",
    "e_interior",
    "e_theta_closure",
    "e_theta_interior",
    "family",
    "kernel_closure",
    "kernel_interior",
    "theta_closure",
    "theta_interior",
    "__version__",
]
