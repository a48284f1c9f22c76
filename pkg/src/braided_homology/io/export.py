"""Writers for JSON documents, JSON-lines reports and integer matrices."""

import json
from pathlib import Path
from typing import Any, Dict, Iterable, TextIO, Union

from ..complexes.chain import ChainComplex
from ..structures.braided import BraidedSet
from ..structures.modules import LeftBraidedModule, RightBraidedModule
from ..utils.logging import get_logger

logger = get_logger(__name__)


def to_json(obj: Any) -> str:
    """One compact JSON line for a result object or a plain value."""
    data = obj.to_dict() if hasattr(obj, "to_dict") else obj
    return json.dumps(data, separators=(",", ":"), default=_default)


def _default(value: Any) -> Any:
    if isinstance(value, (set, frozenset, tuple)):
        return list(value)
    if hasattr(value, "to_dict"):
        return value.to_dict()
    raise TypeError(f"{type(value).__name__} is not JSON serializable")


def write_json(obj: Any, path: Union[str, Path]) -> Path:
    """Write one document, pretty-printed."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    data = obj.to_dict() if hasattr(obj, "to_dict") else obj
    with open(path, "w") as f:
        json.dump(data, f, indent=2, default=_default)
    return path


def write_json_lines(records: Iterable[Any], stream: TextIO, summary: Dict[str, Any]) -> int:
    """One JSON object per line, closed by a summary object; returns the record count."""
    count = 0
    for record in records:
        stream.write(to_json(record) + "\n")
        stream.flush()
        count += 1
    stream.write(to_json({"summary": {**summary, "records": count}}) + "\n")
    return count


def module_document(B: BraidedSet, module: Union[RightBraidedModule, LeftBraidedModule]) -> Dict[str, Any]:
    """A module file that re-parses together with its base."""
    data = module.to_dict()
    return {"kind": data["kind"], "base": B.to_dict(), "action": data["action"]}


def export_matrices(complex_: ChainComplex, directory: Union[str, Path]) -> Dict[int, Path]:
    """Write ∂_k as <name>_d<k>.txt (plain integer rows) for every assembled degree."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = {}
    for k, matrix in sorted(complex_.differentials.items()):
        stem = "".join(c if c.isalnum() else "_" for c in complex_.name).strip("_")
        path = directory / f"{stem}_d{k}.txt"
        path.write_text(f"# {matrix.rows} {matrix.cols}\n{matrix.to_text()}\n")
        written[k] = path
    logger.info("matrices exported", directory=str(directory), count=len(written))
    return written
