"""Input parsing and output writers."""

from .export import export_matrices, module_document, to_json, write_json, write_json_lines
from .parser import (
    KINDS,
    base_braiding,
    load_braiding,
    load_cochain,
    load_cycle_set,
    load_document,
    load_structure,
    parse_document,
)

__all__ = [
    "export_matrices",
    "module_document",
    "to_json",
    "write_json",
    "write_json_lines",
    "KINDS",
    "base_braiding",
    "load_braiding",
    "load_cochain",
    "load_cycle_set",
    "load_document",
    "load_structure",
    "parse_document",
]
