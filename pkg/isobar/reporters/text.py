"""Plain line-oriented census report."""

from typing import List

import click

from isobar.reporters.census import MapCensus


class PlainReporter:
    """Reports a census as stable `key: value` lines.

    Example:
        V: 52
        E: 78
        F: 28
        weights: 3x22 4x1 6x5
        total weight: 100
        euler: ok
        pattern: case_a
        f-vector: f_5 = 22; f_6 = 1; f_8 = 5; f = 28
    """

    def render(self, census: MapCensus) -> List[str]:
        """Report lines without printing them."""
        lines = [
            f"V: {census.vertices}",
            f"E: {census.edges}",
            f"F: {census.faces}",
            "weights: " + " ".join(f"{w}x{n}" for w, n in census.weights.items()),
            f"total weight: {census.total_weight}",
        ]
        if census.euler_weight_ok is not None:
            lines.append(f"euler: {'ok' if census.euler_weight_ok else 'violated'}")
        lines.append(f"pattern: {census.pattern}")
        lines.append(f"f-vector: {census.f_vector.format_line()}")
        if census.colours is not None:
            for face, colour in sorted(census.colours.items()):
                lines.append(f"face {face} colour {'ABCD'[colour]}")
        return lines

    def report(self, census: MapCensus) -> None:
        for line in self.render(census):
            click.echo(line)
