"""Versioned on-disk formats: graphs, color lists, colorings.

One self-describing JSON family, written canonically (sorted keys, two
space indent, trailing newline) so files are line-diffable and byte-stable
under read-then-write round-trips.  Incidence keys are "v:e" strings to
avoid ambiguous pair encodings.
"""

from __future__ import annotations

import json
from typing import Dict, Mapping, Tuple, Union

from .conflict import ListAssignment
from .errors import FormatError, InputError
from .graph import PART_A, PART_B, BipartiteGraph, Incidence, Multigraph, build_multigraph

FORMAT_VERSION = 1


def _dump(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _load(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise FormatError("top-level value must be an object")
    if doc.get("format_version") != FORMAT_VERSION:
        raise FormatError(f"unsupported format_version {doc.get('format_version')!r}")
    return doc


# -- graphs ------------------------------------------------------------------


def graph_to_text(g: Union[Multigraph, BipartiteGraph]) -> str:
    if isinstance(g, BipartiteGraph):
        doc = {
            "format_version": FORMAT_VERSION,
            "kind": "bipartite",
            "vertex_count": g.graph.vertex_count,
            "edges": [list(pair) for pair in g.graph.edges],
            "parts": {"A": g.a_vertices(), "B": g.b_vertices()},
        }
    else:
        doc = {
            "format_version": FORMAT_VERSION,
            "kind": "multigraph",
            "vertex_count": g.vertex_count,
            "edges": [list(pair) for pair in g.edges],
        }
    return _dump(doc)


def graph_from_text(text: str) -> Union[Multigraph, BipartiteGraph]:
    doc = _load(text)
    kind = doc.get("kind")
    if kind not in ("multigraph", "bipartite"):
        raise FormatError(f"unknown graph kind {kind!r}")
    try:
        n = int(doc["vertex_count"])
        pairs = [(int(u), int(v)) for u, v in doc["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed graph document: {exc}") from exc
    try:
        g = build_multigraph(n, pairs)
    except InputError as exc:
        raise FormatError(f"graph document does not encode a valid graph: {exc}") from exc
    if kind == "multigraph":
        return g
    try:
        part_a = {int(v) for v in doc["parts"]["A"]}
        part_b = {int(v) for v in doc["parts"]["B"]}
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed parts: {exc}") from exc
    if part_a | part_b != set(range(n)) or part_a & part_b:
        raise FormatError("parts must partition the vertex set")
    labels = [PART_A if v in part_a else PART_B for v in range(n)]
    try:
        return BipartiteGraph(g, labels)
    except InputError as exc:
        raise FormatError(f"graph document violates its bipartite labeling: {exc}") from exc


# -- color lists -------------------------------------------------------------


def _key_to_incidence(key: str) -> Incidence:
    v, _, e = key.partition(":")
    return Incidence(int(v), int(e))


def lists_to_text(lists: Mapping, incidence: bool = False) -> str:
    body = {}
    for key, colors in lists.items():
        name = f"{key.vertex}:{key.edge}" if incidence else str(int(key))
        body[name] = sorted(int(c) for c in colors)
    return _dump({"format_version": FORMAT_VERSION, "lists": body})


def lists_from_text(text: str, incidence: bool = False):
    doc = _load(text)
    body = doc.get("lists")
    if not isinstance(body, dict):
        raise FormatError("missing lists object")
    try:
        if incidence:
            return {
                _key_to_incidence(k): frozenset(int(c) for c in v) for k, v in body.items()
            }
        return ListAssignment({int(k): frozenset(int(c) for c in v) for k, v in body.items()})
    except (TypeError, ValueError) as exc:
        raise FormatError(f"malformed lists: {exc}") from exc


# -- colorings ---------------------------------------------------------------


def coloring_to_text(colors: Mapping, mode: str) -> str:
    if mode not in ("strong", "incidence"):
        raise FormatError(f"unknown mode {mode!r}")
    body = {}
    for key, c in colors.items():
        name = f"{key.vertex}:{key.edge}" if mode == "incidence" else str(int(key))
        body[name] = int(c)
    return _dump({"format_version": FORMAT_VERSION, "mode": mode, "colors": body})


def coloring_from_text(text: str) -> Tuple[str, Dict]:
    doc = _load(text)
    mode = doc.get("mode")
    if mode not in ("strong", "incidence"):
        raise FormatError(f"unknown mode {mode!r}")
    body = doc.get("colors")
    if not isinstance(body, dict):
        raise FormatError("missing colors object")
    try:
        if mode == "incidence":
            return mode, {_key_to_incidence(k): int(c) for k, c in body.items()}
        return mode, {int(k): int(c) for k, c in body.items()}
    except (TypeError, ValueError) as exc:
        raise FormatError(f"malformed colors: {exc}") from exc


# -- small path helpers ------------------------------------------------------


def read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
