"""Text encodings of edge colorings: a JSON document and a DOT graph."""

from __future__ import annotations

import json

from .graphcore import EdgeColoring


class DocumentError(ValueError):
    """The input is not a well-formed coloring document."""


def encode_json(c: EdgeColoring, meta: dict | None = None) -> str:
    """Serialize with fields in the order n, k, classes, meta; one class per line.

    Output is deterministic for a given coloring and meta.
    """
    lines = ["{", f'  "n": {c.n},', f'  "k": {c.k},']
    if c.k == 0:
        lines.append('  "classes": []' + ("," if meta is not None else ""))
    else:
        lines.append('  "classes": [')
        for idx, cls in enumerate(c.classes):
            body = ", ".join(f"[{u}, {v}]" for u, v in cls)
            sep = "," if idx < c.k - 1 else ""
            lines.append(f"    [{body}]{sep}")
        lines.append("  ]" + ("," if meta is not None else ""))
    if meta is not None:
        lines.append(f'  "meta": {json.dumps(meta, sort_keys=True)}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{what} must be an integer, got {value!r}")
    return value


def decode_json(text: str) -> tuple[EdgeColoring, dict | None]:
    """Parse a coloring document.

    Structural problems raise :class:`DocumentError`. Semantic problems
    (duplicate or missing edges, vertices out of range) are left for
    verification to report.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    for key in ("n", "k", "classes"):
        if key not in doc:
            raise DocumentError(f"missing field {key!r}")
    n = _int(doc["n"], "n")
    k = _int(doc["k"], "k")
    classes = doc["classes"]
    if not isinstance(classes, list):
        raise DocumentError("classes must be a list")
    if k != len(classes):
        raise DocumentError(f"k={k} but {len(classes)} classes are listed")
    parsed = []
    for i, cls in enumerate(classes):
        if not isinstance(cls, list):
            raise DocumentError(f"class {i} must be a list of edges")
        edges = []
        for e in cls:
            if not isinstance(e, list) or len(e) != 2:
                raise DocumentError(f"class {i}: edge {e!r} is not a pair")
            edges.append((_int(e[0], "vertex"), _int(e[1], "vertex")))
        parsed.append(edges)
    meta = doc.get("meta")
    if meta is not None and not isinstance(meta, dict):
        raise DocumentError("meta must be an object")
    return EdgeColoring(n, parsed), meta


def encode_dot(c: EdgeColoring, name: str | None = None) -> str:
    """Undirected DOT graph; each edge carries its color as ``class=<index>``."""
    name = name or f"K{c.n}"
    out = [f"graph {name} {{", f"  // n={c.n} k={c.k}"]
    out.extend(f"  {v};" for v in range(c.n))
    colors = c.color_of()
    for (u, v) in sorted(colors):
        out.append(f"  {u} -- {v} [class={colors[(u, v)]}];")
    out.append("}")
    return "\n".join(out) + "\n"
