"""Deterministic JSON, CSV and SVG renderers."""

from __future__ import annotations

import json
import re
from collections.abc import Sequence

SCHEMA = 1

_DOT = re.compile(r'<circle cx="(\d+)" cy="(\d+)"')


def to_json(payload: dict) -> str:
    return json.dumps({"schema": SCHEMA, **payload}, indent=2, sort_keys=True) + "\n"


def scatter_svg(seq: Sequence[int], title: str = "", scale: int = 8) -> str:
    """Dots at (position, letter), 1-based, in data coordinates.

    The y axis is flipped by the group transform so larger letters sit
    higher; the circle attributes keep the raw integer coordinates.
    """
    length = len(seq)
    top = max(seq, default=0)
    width = (length + 2) * scale
    height = (top + 2) * scale
    radius = 0.3
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
    ]
    if title:
        lines.append(f"<title>{_escape(title)}</title>")
    lines.append(
        f'<g transform="translate(0,{height}) scale({scale},-{scale})" fill="black">'
    )
    for x, y in enumerate(seq, start=1):
        lines.append(f'<circle cx="{x}" cy="{y}" r="{radius}"/>')
    lines += ["</g>", "</svg>"]
    return "\n".join(lines) + "\n"


def parse_svg_points(text: str) -> list[tuple[int, int]]:
    return [(int(x), int(y)) for x, y in _DOT.findall(text)]


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
