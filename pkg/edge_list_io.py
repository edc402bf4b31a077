#!/usr/bin/env python3
"""
Edge List I/O
Parser and writer for the "n m" + 1-indexed arc-line file format, and the
deterministic JSON encoding of result documents
"""

import json
import logging
import re
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from compspec_config import __version__
from compspec_errors import EdgeListParseError
from digraph_core import Digraph

logger = logging.getLogger(__name__)

RESULT_SCHEMA_VERSION = 1

# Upper bound on the declared vertex count the parser will allocate for
PARSER_MAX_VERTICES = 100_000

_DECIMAL = re.compile(r'^[0-9]+$')

# Longer numerals cannot be a vertex or an arc count under PARSER_MAX_VERTICES
TOKEN_MAX_DIGITS = 18


def _tokens(text: str, line_number: int) -> List[int]:
    values = []
    for token in text.split():
        if not _DECIMAL.match(token):
            raise EdgeListParseError(line_number, f"expected a decimal integer, got {token!r}")
        if len(token) > TOKEN_MAX_DIGITS:
            raise EdgeListParseError(
                line_number, f"integer of {len(token)} digits exceeds {TOKEN_MAX_DIGITS} digits")
        values.append(int(token))
    return values


def parse_edge_list(data: Union[bytes, str]) -> Digraph:
    """
    Parse an edge-list file into a 0-indexed digraph

    Blank lines and lines whose first non-blank character is '#' are skipped; LF and
    CRLF line endings are both accepted. Repeated arcs are kept once but still count
    toward the declared m.
    """
    if isinstance(data, str):
        data = data.encode('utf-8')

    n: Optional[int] = None
    declared_m = 0
    arc_lines = 0
    last_line = 0
    arcs = set()

    for line_number, raw in enumerate(data.split(b'\n'), start=1):
        try:
            text = raw.decode('ascii')
        except UnicodeDecodeError:
            raise EdgeListParseError(line_number, "non-ASCII byte")
        text = text[:-1] if text.endswith('\r') else text
        stripped = text.strip()
        if not stripped or stripped.startswith('#'):
            continue
        last_line = line_number
        values = _tokens(stripped, line_number)
        if len(values) != 2:
            raise EdgeListParseError(line_number, f"expected 2 integers, got {len(values)}")

        if n is None:
            n, declared_m = values
            if n < 1:
                raise EdgeListParseError(line_number, "header declares no vertices")
            if n > PARSER_MAX_VERTICES:
                raise EdgeListParseError(line_number, f"n={n} exceeds parser limit {PARSER_MAX_VERTICES}")
            continue

        u, v = values
        for endpoint in (u, v):
            if endpoint < 1 or endpoint > n:
                raise EdgeListParseError(line_number, f"vertex {endpoint} outside 1..{n}")
        if u == v:
            raise EdgeListParseError(line_number, f"self-loop at vertex {u}")
        arc_lines += 1
        if arc_lines > declared_m:
            raise EdgeListParseError(line_number, f"more arc lines than the declared m={declared_m}")
        if (u - 1, v - 1) in arcs:
            logger.debug(f"line {line_number}: repeated arc {u} {v} collapsed")
        arcs.add((u - 1, v - 1))

    if n is None:
        raise EdgeListParseError(None, "missing 'n m' header")
    if arc_lines != declared_m:
        raise EdgeListParseError(last_line, f"header declares m={declared_m} but found {arc_lines} arc lines")
    return Digraph(n, frozenset(arcs))


def read_edge_list(path: Union[str, Path]) -> Digraph:
    return parse_edge_list(Path(path).read_bytes())


def format_edge_list(D: Digraph, comment: Optional[str] = None) -> str:
    """Canonical text: optional comment, header, arcs sorted, 1-indexed, LF endings"""
    lines = []
    if comment:
        lines.extend(f"# {part}" for part in comment.splitlines())
    lines.append(f"{D.n} {D.arc_count}")
    lines.extend(f"{u + 1} {v + 1}" for u, v in D.sorted_arcs())
    return "\n".join(lines) + "\n"


def write_edge_list(D: Digraph, path: Union[str, Path], comment: Optional[str] = None) -> Path:
    path = Path(path)
    path.write_text(format_edge_list(D, comment), encoding='ascii', newline='\n')
    logger.info(f"wrote {D.n}-vertex, {D.arc_count}-arc edge list to {path}")
    return path


def _round_floats(value):
    if isinstance(value, float):
        return float(f"{value:.15g}")
    if isinstance(value, dict):
        return {str(k): _round_floats(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_round_floats(v) for v in value]
    return value


def build_document(command: str, payload: Dict, D: Optional[Digraph] = None,
                   config: Optional[Dict] = None) -> Dict:
    """Wrap a command payload with input echo, tolerances and versions"""
    document = {
        'schema_version': RESULT_SCHEMA_VERSION,
        'toolkit_version': __version__,
        'command': command,
    }
    if D is not None:
        document['input'] = {'n': D.n, 'm': D.arc_count}
    if config is not None:
        document['tolerances'] = {key: config[key] for key in ('cert_tol', 'dedup_tol', 'verify_eps')}
        document['max_n'] = config['max_n']
    document.update(payload)
    return document


def encode_document(document: Dict) -> str:
    """Deterministic JSON: sorted keys, floats at 15 significant digits"""
    return json.dumps(_round_floats(document), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def arcs_one_indexed(D: Digraph) -> List[Tuple[int, int]]:
    return [(u + 1, v + 1) for u, v in D.sorted_arcs()]
