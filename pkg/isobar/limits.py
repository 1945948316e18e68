"""Limits, shared error types and input/output hygiene."""

import re
from pathlib import Path
from typing import Optional


class IsobarError(Exception):
    """Base class for every error raised by isobar."""

    pass


class SecurityError(IsobarError):
    """Exception raised when an input file fails validation."""

    pass


class CeilingExceededError(IsobarError):
    """Raised when an exhaustive routine would exceed its size ceiling."""

    def __init__(self, message: str, ceiling: int) -> None:
        super().__init__(message)
        self.ceiling = ceiling


class BudgetExhaustedError(IsobarError):
    """Raised when a search spends its node-expansion budget without deciding."""

    def __init__(self, message: str, budget: int, expansions: int) -> None:
        super().__init__(message)
        self.budget = budget
        self.expansions = expansions


# Search and enumeration limits
DEFAULT_EXHAUSTIVE_CEILING = 32  # faces, isobaric partition enumeration
DEFAULT_CUT_CEILING = 6  # edges, quasi-connectivity search
DEFAULT_HAMILTON_BUDGET = 50_000_000  # node expansions
DEFAULT_THREEH_BUDGET = 1_000_000  # node expansions
DEFAULT_COLORING_CEILING = 40  # vertices, exact colouring

# Input limits
MAX_FILE_SIZE = 10 * 1024 * 1024  # 10MB
MAX_PATH_LENGTH = 4096
MAX_VERTEX_COUNT = 100_000
MAX_OUTPUT_LENGTH = 10_000

_ANSI_ESCAPE = re.compile(r"\x1b\[[0-9;]*[A-Za-z]")


def _validate_path_common(file_path: str) -> Path:
    if not file_path:
        raise SecurityError("File path cannot be empty")

    if len(file_path) > MAX_PATH_LENGTH:
        raise SecurityError(f"File path exceeds maximum length of {MAX_PATH_LENGTH}")

    if "\x00" in file_path:
        raise SecurityError("Null bytes not allowed in file paths")

    return Path(file_path).resolve()


def validate_input_path(file_path: str) -> Path:
    """Validate a path given on the command line before reading it.

    Args:
        file_path: Path to a map or certificate file

    Returns:
        Resolved Path object

    Raises:
        SecurityError: If the path is unusable or the file is too large
    """
    path = _validate_path_common(file_path)

    if not path.exists():
        raise SecurityError(f"File does not exist: {file_path}")
    if not path.is_file():
        raise SecurityError(f"Path is not a file: {file_path}")

    validate_file_size(path)
    return path


def validate_output_path(file_path: str, suffix: str = ".cert") -> Path:
    """Validate a path that a command will write to.

    The file need not exist yet, but its directory must, and an existing
    path must be a regular file.

    Args:
        file_path: Desired output file path
        suffix: Required file extension

    Returns:
        Resolved Path object

    Raises:
        SecurityError: If validation fails
    """
    path = _validate_path_common(file_path)

    if path.suffix != suffix:
        raise SecurityError(f"Output file must have a {suffix} extension: {file_path}")
    if path.exists() and not path.is_file():
        raise SecurityError(f"Output path is not a regular file: {file_path}")
    if not path.parent.is_dir():
        raise SecurityError(f"Output directory does not exist: {path.parent}")
    return path


def validate_file_size(file_path: Path, max_size: int = MAX_FILE_SIZE) -> None:
    """Validate that a file size is within acceptable limits.

    Raises:
        SecurityError: If file size exceeds maximum
    """
    file_size = file_path.stat().st_size

    if file_size > max_size:
        max_mb = max_size / (1024 * 1024)
        actual_mb = file_size / (1024 * 1024)
        raise SecurityError(
            f"File size ({actual_mb:.2f}MB) exceeds maximum allowed size ({max_mb:.2f}MB)"
        )


def check_ceiling(value: int, ceiling: Optional[int], what: str) -> None:
    """Raise CeilingExceededError when value is above a non-None ceiling."""
    if ceiling is not None and value > ceiling:
        raise CeilingExceededError(
            f"{what} ({value}) exceeds the exhaustive ceiling ({ceiling}); "
            f"raise the ceiling to continue",
            ceiling,
        )


def sanitize_for_output(text: str) -> str:
    """Strip escape sequences and control characters from text bound for a terminal.

    Error messages quote pieces of user files, so they go through here
    before reaching stderr.
    """
    if not text:
        return text

    sanitized = _ANSI_ESCAPE.sub("", text)
    sanitized = "".join(
        ch for ch in sanitized if ch in ("\t", "\n") or (ord(ch) >= 32 and ord(ch) != 127)
    )

    if len(sanitized) > MAX_OUTPUT_LENGTH:
        sanitized = sanitized[:MAX_OUTPUT_LENGTH] + "... (truncated)"

    return sanitized
