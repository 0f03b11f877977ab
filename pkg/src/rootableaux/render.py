"""Plain-text drawings of box configurations, fillings and books."""
from __future__ import annotations

from typing import Mapping, Sequence

from .boxes import Book, BoxConfiguration
from .boxes_c import BookC, SignedBoxConfiguration, signed_values
from .roots import fmt_rational


def draw_cells(labels: Mapping[tuple[int, int], str], width: int | None = None) -> list[str]:
    """Draw boxed cells; ``labels`` maps (row, col) to the text shown inside."""
    if not labels:
        return []
    w = width or max(len(s) for s in labels.values())
    w = max(w, 1)
    r0 = min(r for r, _ in labels)
    c0 = min(c for _, c in labels)
    rows = max(r for r, _ in labels) - r0 + 1
    cols = max(c for _, c in labels) - c0 + 1
    H, W = 2 * rows + 1, (w + 3) * cols + 1
    canvas = [[" "] * W for _ in range(H)]
    step = w + 3
    for (r, c), text in labels.items():
        y, x = 2 * (r - r0), step * (c - c0)
        for dx in range(1, step):
            canvas[y][x + dx] = "-"
            canvas[y + 2][x + dx] = "-"
        for yy in (y, y + 2):
            canvas[yy][x] = "+"
            canvas[yy][x + step] = "+"
        canvas[y + 1][x] = "|"
        canvas[y + 1][x + step] = "|"
        cell = text.center(step - 1)
        for k, ch in enumerate(cell):
            canvas[y + 1][x + 1 + k] = ch
    return ["".join(line).rstrip() for line in canvas]


def _labels(config: BoxConfiguration, mode: str, entries: Sequence[int] | None) -> dict:
    if mode == "entry":
        if entries is None:
            raise ValueError("entry labels need a filling")
        return {b.cell: str(e) for b, e in zip(config.boxes, entries)}
    if mode == "index":
        return {b.cell: str(b.index) for b in config.boxes}
    return {b.cell: str(b.content) for b in config.boxes}


def render_configuration(config: BoxConfiguration, mode: str = "content", entries: Sequence[int] | None = None) -> str:
    """mode is "content", "index" or "entry" (the latter needs ``entries``)."""
    return "\n".join(draw_cells(_labels(config, mode, entries)))


def _signed_labels(page: SignedBoxConfiguration, mode: str, values: Mapping[int, int] | None) -> dict:
    out = {}
    for b in page.boxes:
        if mode == "entry":
            out[b.cell] = str(values[b.index])
        elif mode == "index":
            out[b.cell] = str(b.index)
        else:
            out[b.cell] = fmt_rational(b.content)
    return out


def side_by_side(blocks: Sequence[list[str]], captions: Sequence[str], gap: str = "  :  ") -> str:
    """Join drawings horizontally with dashed separators and captions underneath."""
    height = max((len(b) for b in blocks), default=0)
    widths = [max((len(s) for s in b), default=0) for b in blocks]
    widths = [max(w, len(c)) for w, c in zip(widths, captions)]
    padded = [[""] * (height - len(b)) + b for b in blocks]
    lines = []
    for k in range(height):
        lines.append(gap.join(p[k].ljust(w) for p, w in zip(padded, widths)).rstrip())
    lines.append(gap.replace(":", " ").join(c.center(w) for c, w in zip(captions, widths)).rstrip())
    return "\n".join(lines)


def render_book(book: Book, mode: str = "content", word: Sequence[int] | None = None) -> str:
    blocks, caps = [], []
    for p in book.pages:
        ent = None
        if mode == "entry":
            ent = word[p.start: p.start + len(p.config)]
        labels = _labels(p.config, mode, ent)
        if mode == "index":
            labels = {b.cell: str(b.index + p.start) for b in p.config.boxes}
        blocks.append(draw_cells(labels))
        caps.append(f"page {fmt_rational(p.label)}")
    return side_by_side(blocks, caps)


def render_book_c(book: BookC, mode: str = "content", word: Sequence[int] | None = None) -> str:
    values = signed_values(book, word) if mode == "entry" else None
    blocks = [draw_cells(_signed_labels(p, mode, values)) for p in book.pages]
    caps = [f"page {fmt_rational(p.page_label)}" for p in book.pages]
    return side_by_side(blocks, caps)
