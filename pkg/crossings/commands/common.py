"""Input loading and document output shared by the sub-commands."""

import csv
import hashlib
import io
import sys

from pydantic import BaseModel

from crossings.models import Graph
from crossings.services.graph_parser import parse_bytes, read_source


def load_graph(path: str) -> tuple[Graph, str]:
    """Parsed graph and the sha256 digest of the raw input."""
    data = read_source(path)
    return parse_bytes(data), "sha256:" + hashlib.sha256(data).hexdigest()


def flatten(value, prefix: str = "") -> list[tuple[str, str]]:
    """Dotted key, value rows; list items are keyed by position."""
    if isinstance(value, dict):
        items = value.items()
    elif isinstance(value, list):
        items = ((str(i), v) for i, v in enumerate(value))
    else:
        if value is None:
            return [(prefix, "")]
        if isinstance(value, bool):
            return [(prefix, str(value).lower())]
        return [(prefix, str(value))]
    rows = []
    for key, item in items:
        rows.extend(flatten(item, f"{prefix}.{key}" if prefix else str(key)))
    return rows


def emit(document: BaseModel, as_csv: bool = False, stream=None) -> None:
    stream = stream or sys.stdout
    if not as_csv:
        stream.write(document.model_dump_json(indent=2) + "\n")
        return
    output = io.StringIO()
    writer = csv.writer(output, lineterminator="\n")
    writer.writerow(["key", "value"])
    writer.writerows(flatten(document.model_dump(mode="json")))
    stream.write(output.getvalue())


def add_input_argument(parser) -> None:
    parser.add_argument("path", help="edge-list file, or '-' for standard input")


def positive_int(text: str) -> int:
    value = int(text.replace("_", ""))
    if value < 1:
        raise ValueError(text)
    return value
