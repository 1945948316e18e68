"""Output formatters for census reports and graph export."""

from typing import Union

from isobar.reporters.census import MapCensus, map_census
from isobar.reporters.dot import export_dot
from isobar.reporters.terminal import TerminalReporter
from isobar.reporters.text import PlainReporter

__all__ = ["MapCensus", "PlainReporter", "TerminalReporter", "export_dot", "get_reporter", "map_census"]


def get_reporter(format: str) -> Union[PlainReporter, TerminalReporter]:
    """Factory function to get a census reporter by format name.

    Args:
        format: One of 'plain' or 'terminal'

    Raises:
        ValueError: If format is not supported
    """
    reporters = {
        "plain": PlainReporter,
        "terminal": TerminalReporter,
    }

    if format not in reporters:
        raise ValueError(
            f"Unsupported format: {format}. Choose from: {', '.join(reporters.keys())}"
        )

    return reporters[format]()
