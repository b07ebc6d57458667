"""Permutation-group tools for checking transitive characteristically simple subgroups."""

from .perm import (
    BoundExceeded,
    CosetSpace,
    DegreeMismatch,
    GeneratedGroup,
    NotASubgroup,
    Permutation,
    alternating_group,
    build_chain,
    compose,
    coset_action,
    symmetric_group,
)

__version__ = "0.1.0"
