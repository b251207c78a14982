"""Minimal deterministic SVG line charts, no external renderer.

Fixed 800x500 viewBox with axes, ticks and labels; output bytes depend only
on the input data.
"""

from __future__ import annotations

from pathlib import Path

WIDTH, HEIGHT = 800, 500
MARGIN_LEFT, MARGIN_RIGHT = 70, 20
MARGIN_TOP, MARGIN_BOTTOM = 40, 55

COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e"]


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def _ticks(lo: float, hi: float, count: int = 6) -> list[float]:
    if hi <= lo:
        hi = lo + 1.0
    step = (hi - lo) / (count - 1)
    return [lo + i * step for i in range(count)]


def line_chart(
    series: list[tuple[str, list[float], list[float]]],
    title: str,
    x_label: str,
    y_label: str,
    dashed: tuple[str, ...] = (),
) -> str:
    """Render (label, xs, ys) series to an SVG document string."""
    x_lo = min(min(xs) for _, xs, _ in series)
    x_hi = max(max(xs) for _, xs, _ in series)
    y_lo = min(0.0, min(min(ys) for _, _, ys in series))
    y_hi = max(max(ys) for _, _, ys in series)
    if y_hi <= y_lo:
        y_hi = y_lo + 1.0

    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    def px(x: float) -> float:
        return MARGIN_LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w

    def py(y: float) -> float:
        return HEIGHT - MARGIN_BOTTOM - (y - y_lo) / (y_hi - y_lo) * plot_h

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}">',
        '<rect width="100%" height="100%" fill="#ffffff"/>',
        f'<text x="{WIDTH / 2:.1f}" y="22" text-anchor="middle" font-size="15" '
        f'font-family="sans-serif">{_escape(title)}</text>',
    ]

    for y in _ticks(y_lo, y_hi):
        yy = py(y)
        out.append(
            f'<line x1="{MARGIN_LEFT}" y1="{yy:.2f}" x2="{WIDTH - MARGIN_RIGHT}" '
            f'y2="{yy:.2f}" stroke="#dddddd" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{MARGIN_LEFT - 8}" y="{yy + 4:.2f}" text-anchor="end" '
            f'font-size="11" font-family="sans-serif">{y:.3g}</text>'
        )
    for x in _ticks(x_lo, x_hi):
        xx = px(x)
        out.append(
            f'<line x1="{xx:.2f}" y1="{HEIGHT - MARGIN_BOTTOM}" x2="{xx:.2f}" '
            f'y2="{HEIGHT - MARGIN_BOTTOM + 5}" stroke="#000000" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{xx:.2f}" y="{HEIGHT - MARGIN_BOTTOM + 18}" text-anchor="middle" '
            f'font-size="11" font-family="sans-serif">{x:.4g}</text>'
        )

    out.append(
        f'<line x1="{MARGIN_LEFT}" y1="{HEIGHT - MARGIN_BOTTOM}" '
        f'x2="{WIDTH - MARGIN_RIGHT}" y2="{HEIGHT - MARGIN_BOTTOM}" stroke="#000000" stroke-width="1.5"/>'
    )
    out.append(
        f'<line x1="{MARGIN_LEFT}" y1="{MARGIN_TOP}" x2="{MARGIN_LEFT}" '
        f'y2="{HEIGHT - MARGIN_BOTTOM}" stroke="#000000" stroke-width="1.5"/>'
    )
    out.append(
        f'<text x="{WIDTH / 2:.1f}" y="{HEIGHT - 12}" text-anchor="middle" '
        f'font-size="13" font-family="sans-serif">{_escape(x_label)}</text>'
    )
    out.append(
        f'<text x="18" y="{HEIGHT / 2:.1f}" text-anchor="middle" font-size="13" '
        f'font-family="sans-serif" transform="rotate(-90 18 {HEIGHT / 2:.1f})">{_escape(y_label)}</text>'
    )

    for i, (label, xs, ys) in enumerate(series):
        color = COLORS[i % len(COLORS)]
        dash = ' stroke-dasharray="6 4"' if label in dashed else ""
        points = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in zip(xs, ys))
        out.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="1.5"{dash} points="{points}"/>'
        )
        out.append(
            f'<text x="{WIDTH - MARGIN_RIGHT - 6}" y="{MARGIN_TOP + 16 + 16 * i}" text-anchor="end" '
            f'font-size="11" font-family="sans-serif" fill="{color}">{_escape(label)}</text>'
        )

    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_line_chart(path, series, title: str, x_label: str, y_label: str, dashed=()) -> Path:
    path = Path(path)
    path.write_text(line_chart(series, title, x_label, y_label, dashed), encoding="utf-8", newline="\n")
    return path
