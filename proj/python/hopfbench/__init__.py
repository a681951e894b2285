"""Python bindings for the hopfbench core.

Presentations are passed as JSON text, a path to a JSON file, or
``catalog:<id>[:<params>]`` together with the field ``p, k``.
"""

from ._core import (
    ambiguity,
    build,
    catalog_list,
    catalog_show,
    dimension,
    field_info,
    grouplikes,
    identity_suite,
    instantiate,
    iso,
    iso_criteria,
    nichols,
    normal_form,
    skew_primitive_dim,
    verify,
)

__all__ = [
    "ambiguity",
    "build",
    "catalog_list",
    "catalog_show",
    "dimension",
    "field_info",
    "grouplikes",
    "identity_suite",
    "instantiate",
    "iso",
    "iso_criteria",
    "nichols",
    "normal_form",
    "skew_primitive_dim",
    "verify",
]
