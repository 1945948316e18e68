"""Reader and writer for map format v1.

Grammar (line oriented, UTF-8; lines starting with `#` are comments and
blank lines are ignored):

    planarmap 1
    V <n>
    <id>: <k> <neighbour ids, counterclockwise>     (n lines, ids 0..n-1 in order)
    outer: <u> <v>                                  (optional, a dart on the outer face)

serialize_map(parse_map(text)) reproduces text exactly once comments and
blank lines are removed, provided fields are separated by single spaces.
"""

from typing import List, Optional, Tuple

from isobar.limits import MAX_VERTEX_COUNT, IsobarError, validate_input_path
from isobar.models.planar_map import InvalidMapError, PlanarMap

HEADER = "planarmap 1"


class MapFormatError(IsobarError):
    """Exception raised when a map document does not follow format v1."""

    pass


def _content_lines(text: str) -> List[Tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append((number, line))
    return lines


def _parse_int(token: str, number: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise MapFormatError(f"line {number}: {what} must be an integer, got '{token}'")


def parse_map(text: str) -> PlanarMap:
    """Parse a map format v1 document into a validated PlanarMap.

    Raises:
        MapFormatError: If a line is malformed
        InvalidMapError: If the rotation system is not a valid planar map
    """
    lines = _content_lines(text)
    if not lines:
        raise MapFormatError("empty document")

    number, line = lines[0]
    if line != HEADER:
        raise MapFormatError(f"line {number}: expected header '{HEADER}', got '{line}'")

    if len(lines) < 2:
        raise MapFormatError("missing 'V <n>' line")
    number, line = lines[1]
    parts = line.split()
    if len(parts) != 2 or parts[0] != "V":
        raise MapFormatError(f"line {number}: expected 'V <n>', got '{line}'")
    n = _parse_int(parts[1], number, "vertex count")
    if n < 1 or n > MAX_VERTEX_COUNT:
        raise MapFormatError(f"line {number}: vertex count {n} out of range")

    body = lines[2:]
    if len(body) < n:
        raise MapFormatError(f"expected {n} vertex lines, found {len(body)}")

    rotations = []
    for expected_id, (number, line) in enumerate(body[:n]):
        head, sep, rest = line.partition(":")
        if not sep:
            raise MapFormatError(f"line {number}: expected '<id>: <k> <neighbours>'")
        vertex = _parse_int(head.strip(), number, "vertex id")
        if vertex != expected_id:
            raise MapFormatError(
                f"line {number}: expected vertex {expected_id}, got {vertex}"
            )
        tokens = rest.split()
        if not tokens:
            raise MapFormatError(f"line {number}: missing neighbour count")
        k = _parse_int(tokens[0], number, "neighbour count")
        neighbours = [_parse_int(t, number, "neighbour id") for t in tokens[1:]]
        if len(neighbours) != k:
            raise MapFormatError(
                f"line {number}: declared {k} neighbours but listed {len(neighbours)}"
            )
        rotations.append(tuple(neighbours))

    outer: Optional[Tuple[int, int]] = None
    trailing = body[n:]
    if trailing:
        number, line = trailing[0]
        parts = line.split()
        if len(parts) != 3 or parts[0] != "outer:":
            raise MapFormatError(f"line {number}: expected 'outer: <u> <v>', got '{line}'")
        outer = (
            _parse_int(parts[1], number, "dart tail"),
            _parse_int(parts[2], number, "dart head"),
        )
        if len(trailing) > 1:
            raise MapFormatError(f"line {trailing[1][0]}: unexpected content after 'outer:'")

    return PlanarMap(rotations=tuple(rotations), outer_dart=outer)


def serialize_map(planar_map: PlanarMap) -> str:
    """Render a map in format v1."""
    lines = [HEADER, f"V {planar_map.vertex_count}"]
    for v, rot in enumerate(planar_map.rotations):
        lines.append(f"{v}: {len(rot)} " + " ".join(str(w) for w in rot))
    if planar_map.outer_dart is not None:
        u, v = planar_map.outer_dart
        lines.append(f"outer: {u} {v}")
    return "\n".join(lines) + "\n"


def load_map(map_path: str) -> PlanarMap:
    """Load a map file.

    Raises:
        MapFormatError: If the file cannot be read or is malformed
        InvalidMapError: If the map itself is invalid
    """
    path = validate_input_path(map_path)
    try:
        text = path.read_text(encoding="utf-8-sig")
    except (OSError, UnicodeDecodeError) as e:
        raise MapFormatError(f"Error reading map file: {e}")
    return parse_map(text)


__all__ = ["InvalidMapError", "MapFormatError", "load_map", "parse_map", "serialize_map"]
