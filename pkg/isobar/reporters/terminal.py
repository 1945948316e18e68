"""Terminal census report with rich formatting."""

from typing import Optional

from rich.console import Console
from rich.table import Table
from rich.text import Text

from isobar.reporters.census import MapCensus

COLOUR_STYLES = {0: "red", 1: "green", 2: "blue", 3: "yellow"}


class TerminalReporter:
    """Reports a census as rich tables.

    Weights and the f-vector each get a table; the face colouring, when
    present, is printed as coloured letters A to D.
    """

    def __init__(self, console: Optional[Console] = None) -> None:
        self.console = console or Console()

    def report(self, census: MapCensus) -> None:
        """Print the census to the terminal.

        Args:
            census: Census to report
        """
        self.console.print()
        self.console.print(
            f"[bold]V[/bold] {census.vertices}  [bold]E[/bold] {census.edges}  "
            f"[bold]F[/bold] {census.faces}"
        )
        self.console.print()
        self._print_weights(census)
        self._print_f_vector(census)
        if census.colours is not None:
            self._print_colours(census)
        self._print_summary(census)

    def _print_weights(self, census: MapCensus) -> None:
        table = Table(show_header=True, header_style="bold cyan", border_style="cyan")
        table.add_column("Weight", justify="right")
        table.add_column("mod 3", justify="right")
        table.add_column("Faces", justify="right")
        for weight, count in census.weights.items():
            style = "bold magenta" if weight % 3 else "white"
            table.add_row(str(weight), str(weight % 3), str(count), style=style)
        self.console.print(table)

    def _print_f_vector(self, census: MapCensus) -> None:
        table = Table(show_header=True, header_style="bold cyan", border_style="cyan")
        table.add_column("Boundary length", justify="right")
        table.add_column("f_i", justify="right")
        for length, count in census.f_vector.counts.items():
            table.add_row(str(length), str(count))
        table.add_row("total", str(census.f_vector.f), style="bold")
        self.console.print(table)

    def _print_colours(self, census: MapCensus) -> None:
        assert census.colours is not None
        text = Text("Face colours: ")
        for face, colour in sorted(census.colours.items()):
            text.append(f"{face}:{'ABCD'[colour]} ", style=COLOUR_STYLES[colour])
        self.console.print(text)

    def _print_summary(self, census: MapCensus) -> None:
        summary = Text()
        summary.append("Total weight: ", style="bold")
        summary.append(str(census.total_weight))
        if census.euler_weight_ok is not None:
            if census.euler_weight_ok:
                summary.append("  = 2(V - 2)", style="green")
            else:
                summary.append("  != 2(V - 2)", style="bold red")
        summary.append("  pattern: ", style="bold")
        summary.append(census.pattern, style="magenta" if census.pattern != "unconstrained" else "white")
        self.console.print()
        self.console.print(summary)
        self.console.print()
