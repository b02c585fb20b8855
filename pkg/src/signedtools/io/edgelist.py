"""
Signed edge-list text format.

    # optional comment lines
    n 4
    0 1 +
    0 3 -

The header gives the vertex count; each body line is one edge ``u v s`` with
``0 <= u < v < n`` and ``s`` one of ``+``/``-``. Blank lines and lines starting
with ``#`` are ignored. Written files list edges in sorted order.
"""

import logging
import re
from pathlib import Path
from typing import Dict, Union

from ..core.graph import Edge, Sign, SignedGraph
from ..exceptions import GraphInputError, GraphParseError
from ..utils.logging import get_logger

_NATURAL = re.compile(r"[0-9]+")


def _natural(token: str, what: str, line_number: int) -> int:
    """A token of ASCII decimal digits; signs, underscores and other scripts are rejected."""
    if not _NATURAL.fullmatch(token):
        raise GraphParseError(f"{what} {token!r} is not a non-negative integer", line_number)
    return int(token)


def parse_edge_list(text: str) -> SignedGraph:
    """
    Parse signed edge-list text.

    Raises:
        GraphParseError: on a malformed header or edge line, with its line number
    """
    n = None
    signs: Dict[Edge, Sign] = {}

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()

        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise GraphParseError(f"expected header 'n <count>', got {line!r}", line_number)
            n = _natural(fields[1], "vertex count", line_number)
            continue

        if len(fields) != 3:
            raise GraphParseError(f"expected 'u v s', got {line!r}", line_number)
        u = _natural(fields[0], "vertex id", line_number)
        v = _natural(fields[1], "vertex id", line_number)
        if not 0 <= u < v < n:
            raise GraphParseError(f"edge ({u}, {v}) violates 0 <= u < v < {n}", line_number)
        try:
            sign = Sign.from_token(fields[2])
        except GraphInputError:
            raise GraphParseError(
                f"sign must be '+' or '-', got {fields[2]!r}", line_number
            ) from None
        if (u, v) in signs:
            raise GraphParseError(f"duplicate edge ({u}, {v})", line_number)
        signs[(u, v)] = sign

    if n is None:
        raise GraphParseError("missing header 'n <count>'")
    return SignedGraph(n, ((u, v, s) for (u, v), s in signs.items()))


def format_edge_list(g: SignedGraph) -> str:
    """Canonical text: header then one sorted edge per line."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v} {s.token}" for u, v, s in g.signed_edges())
    return "\n".join(lines) + "\n"


def read_edge_list(path: Union[str, Path], loglevel: int = logging.WARNING) -> SignedGraph:
    """
    Read and parse a signed edge-list file.

    Raises:
        GraphInputError: if the file cannot be read
        GraphParseError: if its content is malformed
    """
    logger = get_logger(__name__, loglevel)
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        logger.error(f"Cannot read {path}: {e}")
        raise GraphInputError(f"cannot read {path}: {e}") from e
    except UnicodeDecodeError as e:
        logger.error(f"{path} is not UTF-8 text: {e}")
        raise GraphParseError(f"{path} is not UTF-8 text: {e.reason} at byte {e.start}") from e

    try:
        g = parse_edge_list(text)
    except GraphParseError as e:
        logger.error(f"{path}: {e}")
        raise
    logger.info(f"Read {path}: n={g.n}, {g.edge_count} edges")
    return g


def write_edge_list(
    g: SignedGraph, path: Union[str, Path], loglevel: int = logging.WARNING
) -> Path:
    logger = get_logger(__name__, loglevel)
    path = Path(path)
    path.write_text(format_edge_list(g), encoding="utf-8")
    logger.debug(f"Wrote {path}")
    return path
