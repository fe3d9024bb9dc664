"""Reading command inputs and writing deterministic JSON and DOT outputs."""
import json
import logging
import sys
from pathlib import Path
from typing import Any, Optional, Type, TypeVar

from pydantic import BaseModel, ValidationError

from app.core.config import settings
from app.core.errors import InputError
from app.models.algebra import QuarticForm
from app.schemas.algebra import QuarticSchema

logger = logging.getLogger(__name__)

SchemaT = TypeVar("SchemaT", bound=BaseModel)


def load_json(path: Path) -> Any:
    """Parse a JSON file; ``-`` reads standard input."""
    try:
        text = sys.stdin.read() if str(path) == "-" else Path(path).read_text()
    except OSError as e:
        raise InputError(f"Cannot read {path}: {e}")
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}")


def load_input(path: Path, schema: Type[SchemaT], key: Optional[str] = None) -> SchemaT:
    """
    Validate a JSON input against its wire schema.

    Args:
        path: Input file
        schema: Pydantic schema of the document
        key: Read this member of the document when it is present

    Returns:
        The validated schema instance
    """
    data = load_json(path)
    if key is not None and isinstance(data, dict) and key in data:
        data = data[key]
    try:
        return schema.model_validate(data)
    except ValidationError as e:
        raise InputError(f"{path}: {e.error_count()} invalid field(s): {e.errors()[0]['msg']}")


def load_quartic(path: Path) -> QuarticForm:
    """A quartic from f.json, or from the ``f`` member of a design-f output."""
    return load_input(path, QuarticSchema, key="f").to_form()


def dump_json(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=settings.JSON_INDENT) + "\n"


def emit(payload: Any, out: Optional[Path] = None) -> None:
    text = dump_json(payload)
    if out is None:
        sys.stdout.write(text)
        return
    Path(out).write_text(text)
    logger.info(f"Wrote {out}")


def emit_dot(text: str, path: Optional[Path]) -> None:
    if path is None:
        return
    Path(path).write_text(text)
    logger.info(f"Wrote {path}")
