"""Python bindings for the e8lab C++ library."""

from ._core import (
    are_equal,
    build_versal,
    check_relations,
    degree,
    delta_image,
    diagram_info,
    fiber_is_smooth,
    garside_element,
    inn_equal,
    invariant_degrees,
    is_central,
    kernel_search,
    milnor,
    normal_form,
    positive_roots,
    rep_word,
    run_cli,
    semigroup_from_gaps,
    semigroup_from_generators,
    spin_parity,
    verify_kernel_certificate,
    verify_paper,
)

__all__ = [
    "are_equal",
    "build_versal",
    "check_relations",
    "degree",
    "delta_image",
    "diagram_info",
    "fiber_is_smooth",
    "garside_element",
    "inn_equal",
    "invariant_degrees",
    "is_central",
    "kernel_search",
    "milnor",
    "normal_form",
    "positive_roots",
    "rep_word",
    "run_cli",
    "semigroup_from_gaps",
    "semigroup_from_generators",
    "spin_parity",
    "verify_kernel_certificate",
    "verify_paper",
]
