"""Deterministic SVG beamplot emission.

The renderer is a pure function of (model, config) and builds the document
as text, so identical inputs give byte-identical output on every platform.
Two independent horizontal scales share the plot area: citation values
anchor the lower x-axis, yearly paper counts the upper one; both start
at zero.  Years run top-down, earliest first, one evenly spaced row each.

Marker classes are stable, for tests and downstream styling:
``paper-point`` (one diamond per paper), ``beam`` (per-year citation range),
``year-median`` (triangle below each non-empty row), ``pub-count`` (circle
per row), ``value-median-line`` and ``count-median-line`` (the two dashed
overall medians).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import floor

from .model import BeamplotModel, ValueMode

# Vertical shift for each further diamond sharing an (x, y) spot; fixed so
# coincident papers stay visible without randomized jitter.
STACK_OFFSET_PX = 3.0


class DegenerateCanvasError(ValueError):
    """Margins leave no positive plot area."""


class OutOfRangeError(ValueError):
    """A value, count or year lies outside the model's data range."""


@dataclass(frozen=True)
class RenderConfig:
    """Canvas geometry and visual-encoding constants."""

    width_px: int = 900
    height_px: int = 600
    margin_top: int = 70
    margin_right: int = 50
    margin_bottom: int = 70
    margin_left: int = 80
    value_color: str = "black"
    count_color: str = "red"
    diamond_size: float = 4.0
    triangle_size: float = 4.0
    circle_radius: float = 4.0
    dash_pattern: str = "2 3"
    max_ticks: int = 10


def _plot_box(config: RenderConfig) -> tuple[float, float, float, float]:
    """(left, top, right, bottom) of the data area; raises if non-positive."""
    left = config.margin_left
    top = config.margin_top
    right = config.width_px - config.margin_right
    bottom = config.height_px - config.margin_bottom
    if right <= left or bottom <= top:
        raise DegenerateCanvasError(
            f"margins leave no plot area in a {config.width_px}x{config.height_px} canvas"
        )
    return float(left), float(top), float(right), float(bottom)


def _value_span(model: BeamplotModel) -> float:
    return float(max((row.max_value for row in model.rows if row.paper_count), default=0))


def _count_span(model: BeamplotModel) -> int:
    return max(row.paper_count for row in model.rows)


def value_to_x(value, model: BeamplotModel, config: RenderConfig) -> float:
    """Map a citation value onto the lower x-axis scale, [0, max] left to right."""
    left, _, right, _ = _plot_box(config)
    span = _value_span(model)
    if not 0 <= float(value) <= span:
        raise OutOfRangeError(f"value {value} outside the data range [0, {span}]")
    return left + float(value) / (span or 1.0) * (right - left)


def count_to_x(count, model: BeamplotModel, config: RenderConfig) -> float:
    """Map a yearly paper count onto the upper x-axis scale, [0, max] left to right."""
    left, _, right, _ = _plot_box(config)
    span = _count_span(model)
    if not 0 <= float(count) <= span:
        raise OutOfRangeError(f"count {count} outside the data range [0, {span}]")
    return left + float(count) / (span or 1.0) * (right - left)


def year_to_y(year: int, model: BeamplotModel, config: RenderConfig) -> float:
    """Vertical center of one year's row; earliest year on top."""
    _, top, _, bottom = _plot_box(config)
    first = model.rows[0].year
    if not first <= year <= model.rows[-1].year:
        raise OutOfRangeError(
            f"year {year} outside the span {first}..{model.rows[-1].year}"
        )
    row_height = (bottom - top) / len(model.rows)
    return top + (year - first + 0.5) * row_height


def _integer_ticks(upper: int, max_ticks: int) -> list[int]:
    """Ticks at multiples of the smallest 1/2/5*10^k step fitting the budget."""
    if upper <= 0:
        return [0]
    scale = 1
    while True:
        for step in (scale, 2 * scale, 5 * scale):
            if upper // step + 1 <= max(max_ticks, 1):
                return list(range(0, upper + 1, step))
        scale *= 10


def _fmt(coordinate: float) -> str:
    """Coordinates carry at most two decimals so output never depends on platform."""
    text = f"{coordinate:.2f}".rstrip("0").rstrip(".")
    return "0" if text in ("", "-0") else text


def _diamond(x: float, y: float, size: float, color: str) -> str:
    points = f"M {_fmt(x)} {_fmt(y - size)} L {_fmt(x + size)} {_fmt(y)} " \
             f"L {_fmt(x)} {_fmt(y + size)} L {_fmt(x - size)} {_fmt(y)} Z"
    return f'<path class="paper-point" d="{points}" fill="{color}"/>'


def _triangle(x: float, y: float, size: float, color: str) -> str:
    points = f"M {_fmt(x)} {_fmt(y - size)} L {_fmt(x + size)} {_fmt(y + size)} " \
             f"L {_fmt(x - size)} {_fmt(y + size)} Z"
    return f'<path class="year-median" d="{points}" fill="{color}"/>'


def render_beamplot(model: BeamplotModel, config: RenderConfig | None = None) -> str:
    """Emit the complete beamplot as a standalone SVG 1.1 document."""
    config = config or RenderConfig()
    left, top, right, bottom = _plot_box(config)
    center_x = (left + right) / 2

    value_label = "Times cited"
    if model.mode is ValueMode.AGE_WEIGHTED:
        value_label = "Times cited (age-weighted)"

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{config.width_px}" '
        f'height="{config.height_px}" viewBox="0 0 {config.width_px} {config.height_px}" '
        'font-family="Helvetica, Arial, sans-serif" font-size="12">',
        f"<!-- beamplot census_year={model.census_year} mode={model.mode.value} -->",
        "<title>Citation beamplot</title>",
    ]

    # Lower x-axis: citation values.
    out.append(f'<g class="axis axis-values" stroke="{config.value_color}">')
    out.append(
        f'<line x1="{_fmt(left)}" y1="{_fmt(bottom)}" x2="{_fmt(right)}" y2="{_fmt(bottom)}"/>'
    )
    for tick in _integer_ticks(floor(_value_span(model)), config.max_ticks):
        x = value_to_x(tick, model, config)
        out.append(f'<line x1="{_fmt(x)}" y1="{_fmt(bottom)}" x2="{_fmt(x)}" y2="{_fmt(bottom + 5)}"/>')
        out.append(
            f'<text x="{_fmt(x)}" y="{_fmt(bottom + 20)}" stroke="none" '
            f'fill="{config.value_color}" text-anchor="middle">{tick}</text>'
        )
    out.append(
        f'<text x="{_fmt(center_x)}" y="{_fmt(bottom + 42)}" stroke="none" '
        f'fill="{config.value_color}" text-anchor="middle">{value_label}</text>'
    )
    out.append("</g>")

    # Upper x-axis: papers per year.
    out.append(f'<g class="axis axis-counts" stroke="{config.count_color}">')
    out.append(f'<line x1="{_fmt(left)}" y1="{_fmt(top)}" x2="{_fmt(right)}" y2="{_fmt(top)}"/>')
    for tick in _integer_ticks(_count_span(model), config.max_ticks):
        x = count_to_x(tick, model, config)
        out.append(f'<line x1="{_fmt(x)}" y1="{_fmt(top)}" x2="{_fmt(x)}" y2="{_fmt(top - 5)}"/>')
        out.append(
            f'<text x="{_fmt(x)}" y="{_fmt(top - 12)}" stroke="none" '
            f'fill="{config.count_color}" text-anchor="middle">{tick}</text>'
        )
    out.append(
        f'<text x="{_fmt(center_x)}" y="{_fmt(top - 34)}" stroke="none" '
        f'fill="{config.count_color}" text-anchor="middle">Papers per year</text>'
    )
    out.append("</g>")

    # Y-axis: every year of the span, gap years included.
    out.append(f'<g class="axis axis-years" stroke="{config.value_color}">')
    out.append(f'<line x1="{_fmt(left)}" y1="{_fmt(top)}" x2="{_fmt(left)}" y2="{_fmt(bottom)}"/>')
    for row in model.rows:
        y = year_to_y(row.year, model, config)
        out.append(
            f'<text x="{_fmt(left - 8)}" y="{_fmt(y + 4)}" stroke="none" '
            f'fill="{config.value_color}" text-anchor="end">{row.year}</text>'
        )
    out.append("</g>")

    # Overall medians: dashed reference lines under the markers.
    x = value_to_x(model.overall_value_median, model, config)
    out.append(
        f'<line class="value-median-line" x1="{_fmt(x)}" y1="{_fmt(top)}" '
        f'x2="{_fmt(x)}" y2="{_fmt(bottom)}" stroke="{config.value_color}" '
        f'stroke-dasharray="{config.dash_pattern}"/>'
    )
    x = count_to_x(model.overall_count_median, model, config)
    out.append(
        f'<line class="count-median-line" x1="{_fmt(x)}" y1="{_fmt(top)}" '
        f'x2="{_fmt(x)}" y2="{_fmt(bottom)}" stroke="{config.count_color}" '
        f'stroke-dasharray="{config.dash_pattern}"/>'
    )

    # Beams: citation range per year, when there is a range to show.
    out.append(f'<g class="beams" stroke="{config.value_color}" stroke-width="1.5">')
    for row in model.rows:
        if row.paper_count >= 2 and row.min_value != row.max_value:
            y = year_to_y(row.year, model, config)
            x1 = value_to_x(row.min_value, model, config)
            x2 = value_to_x(row.max_value, model, config)
            out.append(
                f'<line class="beam" x1="{_fmt(x1)}" y1="{_fmt(y)}" x2="{_fmt(x2)}" y2="{_fmt(y)}"/>'
            )
    out.append("</g>")

    # Diamonds: one per paper; coincident papers stack upward a fixed step.
    out.append('<g class="paper-points">')
    for row in model.rows:
        y = year_to_y(row.year, model, config)
        previous = None
        duplicates = 0
        for value in row.values:
            duplicates = duplicates + 1 if value == previous else 0
            previous = value
            x = value_to_x(value, model, config)
            out.append(
                _diamond(x, y - duplicates * STACK_OFFSET_PX, config.diamond_size, config.value_color)
            )
    out.append("</g>")

    # Triangles: per-year median, just below the beam.
    out.append('<g class="year-medians">')
    for row in model.rows:
        if row.paper_count:
            y = year_to_y(row.year, model, config) + config.triangle_size + 2
            x = value_to_x(row.median_value, model, config)
            out.append(_triangle(x, y, config.triangle_size, config.value_color))
    out.append("</g>")

    # Circles: papers per year against the upper scale, zeros included.
    out.append(f'<g class="pub-counts" stroke="{config.count_color}" fill="none">')
    for row in model.rows:
        y = year_to_y(row.year, model, config)
        x = count_to_x(row.paper_count, model, config)
        out.append(
            f'<circle class="pub-count" cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(config.circle_radius)}"/>'
        )
    out.append("</g>")

    out.append("</svg>")
    return "\n".join(out) + "\n"
