"""JSON input files: one pydantic model per kind, dispatched on "kind"."""

import json
from pathlib import Path
from typing import Annotated, Any, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, ValidationError, model_validator

from ..core.errors import ParseError, SizeMismatch
from ..extensions.cochains import Cochain2
from ..homology.groups import FiniteAbelianGroup
from ..structures.braided import BraidedSet, validate_braided_set
from ..structures.cycle_set import CycleSet, from_cycle_set, validate_cycle_set
from ..structures.modules import (
    LeftBraidedModule,
    RightBraidedModule,
    validate_left_module,
    validate_right_module,
)
from ..structures.shelf import PRIMAL, Shelf, from_shelf, validate_shelf

IntTable = List[List[int]]


class _Document(BaseModel):
    model_config = ConfigDict(extra="forbid")

    size: Optional[int] = None

    @model_validator(mode="after")
    def _size_matches(self) -> "_Document":
        rows = self._rows()
        if self.size is not None and rows is not None and self.size != rows:
            raise ValueError(f"size is {self.size} but the table has {rows} rows")
        return self

    def _rows(self) -> Optional[int]:
        return None


class BraidedSetFile(_Document):
    kind: Literal["braided_set"]
    left: IntTable
    right: IntTable

    def _rows(self) -> Optional[int]:
        return len(self.left)

    def build(self) -> BraidedSet:
        return validate_braided_set(self.left, self.right)


class CycleSetFile(_Document):
    kind: Literal["cycle_set"]
    table: IntTable

    def _rows(self) -> Optional[int]:
        return len(self.table)

    def build(self) -> CycleSet:
        return validate_cycle_set(self.table)


class ShelfFile(_Document):
    kind: Literal["shelf"]
    table: IntTable
    variant: Literal["primal", "mirror"] = PRIMAL

    def _rows(self) -> Optional[int]:
        return len(self.table)

    def build(self) -> Shelf:
        return validate_shelf(self.table)


BaseFile = Annotated[Union[BraidedSetFile, CycleSetFile, ShelfFile], Field(discriminator="kind")]


def base_braiding(doc: Union[BraidedSetFile, CycleSetFile, ShelfFile]) -> BraidedSet:
    """The braided set a base document stands for."""
    if isinstance(doc, CycleSetFile):
        return from_cycle_set(doc.build())
    if isinstance(doc, ShelfFile):
        return from_shelf(doc.build(), doc.variant)
    return doc.build()


class RightModuleFile(_Document):
    kind: Literal["right_module"]
    base: BaseFile
    action: IntTable

    def build(self) -> RightBraidedModule:
        return validate_right_module(base_braiding(self.base), self.action)


class LeftModuleFile(_Document):
    kind: Literal["left_module"]
    base: BaseFile
    action: IntTable

    def build(self) -> LeftBraidedModule:
        return validate_left_module(base_braiding(self.base), self.action)


class CochainFile(_Document):
    kind: Literal["cochain2"]
    base: int = Field(ge=1)
    moduli: List[int] = Field(min_length=1)
    values: IntTable

    def build(self) -> Cochain2:
        return Cochain2.from_ranks(self.base, FiniteAbelianGroup(tuple(self.moduli)), self.values)


InputFile = Annotated[
    Union[BraidedSetFile, CycleSetFile, ShelfFile, RightModuleFile, LeftModuleFile, CochainFile],
    Field(discriminator="kind"),
]

_adapter: TypeAdapter = TypeAdapter(InputFile)

KINDS = ("braided_set", "cycle_set", "shelf", "right_module", "left_module", "cochain2")


def parse_document(data: Any) -> Any:
    """Validate a decoded JSON value into its file model.

    Raises:
        ParseError: Unknown kind, missing fields or wrong shapes
    """
    try:
        return _adapter.validate_python(data)
    except ValidationError as exc:
        errors = [
            {"loc": [str(p) for p in err["loc"]], "msg": err["msg"]} for err in exc.errors(include_url=False)
        ]
        raise ParseError(f"invalid input document: {errors[0]['msg']}", witness=errors) from exc


def load_document(path: Union[str, Path]) -> Any:
    """Read and validate a JSON file.

    Raises:
        ParseError: If the file is missing, not JSON, or not a known kind
    """
    path = Path(path)
    try:
        with open(path, "r") as f:
            data = json.load(f)
    except OSError as exc:
        raise ParseError(f"cannot read {path}", witness={"path": str(path)}) from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc.msg}", witness={"line": exc.lineno}) from exc
    return parse_document(data)


def load_structure(path: Union[str, Path]) -> Any:
    """Parse and validate a file, returning the built structure."""
    return load_document(path).build()


def load_braiding(path: Union[str, Path]) -> BraidedSet:
    """Any base kind, as a braided set."""
    doc = load_document(path)
    if not isinstance(doc, (BraidedSetFile, CycleSetFile, ShelfFile)):
        raise ParseError(f"{path} holds a {doc.kind}, expected a braided set, cycle set or shelf")
    return base_braiding(doc)


def load_cycle_set(path: Union[str, Path]) -> CycleSet:
    doc = load_document(path)
    if not isinstance(doc, CycleSetFile):
        raise ParseError(f"{path} holds a {doc.kind}, expected a cycle_set")
    return doc.build()


def load_cochain(path: Union[str, Path], base_size: Optional[int] = None) -> Cochain2:
    doc = load_document(path)
    if not isinstance(doc, CochainFile):
        raise ParseError(f"{path} holds a {doc.kind}, expected a cochain2")
    f = doc.build()
    if base_size is not None and f.base_size != base_size:
        raise SizeMismatch(f"cochain on {f.base_size} points, structure has {base_size}")
    return f
