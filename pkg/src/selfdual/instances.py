"""Instance file format.

Plain UTF-8 text:

    # optional comment lines anywhere before the data they precede
    n m
    v v v ...        (m lines, strictly increasing 0-based vertex ids)

Parsers reject out-of-range ids, unsorted or repeated ids within a line,
empty edge lines, duplicate edges and a wrong edge count; with
``require_pidnf`` they additionally enforce the Sperner and pairwise
intersection conditions.
"""

from __future__ import annotations

import os
from typing import Iterable, Optional, Union

from .core import MAX_VERTICES, Hypergraph, ParseError, mask_from_vertices, validate_pidnf


def parse_instance(text: str, require_pidnf: bool = False) -> Hypergraph:
    lines = [
        (idx + 1, ln.strip())
        for idx, ln in enumerate(text.splitlines())
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise ParseError("empty instance file")

    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError(f"line {lineno}: expected 'n m' header, got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"line {lineno}: non-integer header {header!r}") from None
    if not 1 <= n <= MAX_VERTICES:
        raise ParseError(f"line {lineno}: n={n} exceeds {MAX_VERTICES}" if n > MAX_VERTICES
                         else f"line {lineno}: n must be at least 1")
    if m < 0:
        raise ParseError(f"line {lineno}: negative edge count {m}")
    if len(lines) - 1 != m:
        raise ParseError(f"declared {m} edges but found {len(lines) - 1} edge lines")

    edges = []
    seen = set()
    for lineno, ln in lines[1:]:
        try:
            ids = [int(tok) for tok in ln.split()]
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex id in {ln!r}") from None
        if not ids:
            raise ParseError(f"line {lineno}: empty edge")
        for a, b in zip(ids, ids[1:]):
            if a >= b:
                raise ParseError(f"line {lineno}: vertex ids must be strictly increasing")
        if ids[0] < 0 or ids[-1] >= n:
            raise ParseError(f"line {lineno}: vertex id out of range [0, {n - 1}]")
        mask = mask_from_vertices(ids)
        if mask in seen:
            raise ParseError(f"line {lineno}: duplicate edge {ln!r}")
        seen.add(mask)
        edges.append(mask)

    h = Hypergraph(n, tuple(edges))
    if require_pidnf:
        validate_pidnf(h)
    return h


def serialize_instance(h: Hypergraph, comments: Iterable[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(f"{h.n} {len(h.edges)}")
    for edge in h.edge_sets():
        out.append(" ".join(str(v) for v in edge))
    return "\n".join(out) + "\n"


def load_instance(path: Union[str, os.PathLike], require_pidnf: bool = False) -> Hypergraph:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read(), require_pidnf=require_pidnf)


def save_instance(path: Union[str, os.PathLike], h: Hypergraph,
                  comments: Optional[Iterable[str]] = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_instance(h, comments or ()))
