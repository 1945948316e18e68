"""Tests for input validation, ceilings and output sanitization."""

import pytest

from isobar.limits import (
    MAX_OUTPUT_LENGTH,
    MAX_PATH_LENGTH,
    CeilingExceededError,
    SecurityError,
    check_ceiling,
    sanitize_for_output,
    validate_file_size,
    validate_input_path,
    validate_output_path,
)


class TestPathValidation:
    """Test input path validation."""

    def test_existing_file_accepted(self, tmp_path):
        """Test that an existing file resolves."""
        f = tmp_path / "cube.map"
        f.write_text("planarmap 1\n")

        assert validate_input_path(str(f)) == f.resolve()

    def test_missing_file_rejected(self, tmp_path):
        """Test that a missing file is an error."""
        with pytest.raises(SecurityError, match="does not exist"):
            validate_input_path(str(tmp_path / "nope.map"))

    def test_directory_rejected(self, tmp_path):
        """Test that a directory is not a file."""
        with pytest.raises(SecurityError, match="not a file"):
            validate_input_path(str(tmp_path))

    def test_empty_path_rejected(self):
        """Test that an empty path is rejected."""
        with pytest.raises(SecurityError, match="cannot be empty"):
            validate_input_path("")

    def test_null_byte_rejected(self):
        """Test that null bytes in paths are rejected."""
        with pytest.raises(SecurityError, match="Null bytes"):
            validate_input_path("map\x00.txt")

    def test_long_path_rejected(self):
        """Test that over-long paths are rejected."""
        with pytest.raises(SecurityError, match="maximum length"):
            validate_input_path("a" * (MAX_PATH_LENGTH + 1))


class TestOutputPathValidation:
    """Test validation of paths a command writes to."""

    def test_new_file_accepted(self, tmp_path):
        """Test that a file that does not exist yet is fine."""
        target = tmp_path / "k24.cert"
        assert validate_output_path(str(target)) == target.resolve()

    def test_existing_file_accepted(self, tmp_path):
        """Test that an existing certificate may be overwritten."""
        target = tmp_path / "old.cert"
        target.write_text("certificate v1\n")
        assert validate_output_path(str(target)) == target.resolve()

    def test_wrong_extension_rejected(self, tmp_path):
        """Test that only .cert files are written."""
        with pytest.raises(SecurityError, match=r"\.cert extension"):
            validate_output_path(str(tmp_path / "k24.txt"))

    def test_missing_directory_rejected(self, tmp_path):
        """Test that the parent directory must exist."""
        with pytest.raises(SecurityError, match="directory does not exist"):
            validate_output_path(str(tmp_path / "nope" / "k24.cert"))

    def test_directory_rejected(self, tmp_path):
        """Test that a directory named like a certificate is rejected."""
        target = tmp_path / "dir.cert"
        target.mkdir()
        with pytest.raises(SecurityError, match="not a regular file"):
            validate_output_path(str(target))

    def test_null_byte_rejected(self):
        """Test that null bytes are rejected before touching the disk."""
        with pytest.raises(SecurityError, match="Null bytes"):
            validate_output_path("out\x00.cert")


class TestFileSize:
    """Test file size limits."""

    def test_small_file_ok(self, tmp_path):
        """Test that small files pass."""
        f = tmp_path / "small.map"
        f.write_text("x" * 100)
        validate_file_size(f)

    def test_large_file_rejected(self, tmp_path):
        """Test that files above the limit are rejected."""
        f = tmp_path / "large.map"
        f.write_text("x" * 2048)
        with pytest.raises(SecurityError, match="exceeds maximum"):
            validate_file_size(f, max_size=1024)


class TestCeiling:
    """Test exhaustive ceilings."""

    def test_within_ceiling(self):
        """Test values at or below the ceiling pass."""
        check_ceiling(32, 32, "Face count")

    def test_no_ceiling(self):
        """Test that None disables the check."""
        check_ceiling(10**6, None, "Face count")

    def test_above_ceiling(self):
        """Test that the error carries the ceiling."""
        with pytest.raises(CeilingExceededError, match="Face count \\(33\\)") as exc:
            check_ceiling(33, 32, "Face count")
        assert exc.value.ceiling == 32


class TestOutputSanitization:
    """Test terminal output sanitization."""

    def test_ansi_removed(self):
        """Test that ANSI escape codes are stripped."""
        assert sanitize_for_output("\x1b[31mred\x1b[0m text") == "red text"

    def test_control_characters_removed(self):
        """Test that control characters other than tab and newline are removed."""
        assert sanitize_for_output("a\x07b\tc\nd\x7f") == "ab\tc\nd"

    def test_truncation(self):
        """Test that long output is truncated."""
        result = sanitize_for_output("x" * (MAX_OUTPUT_LENGTH + 10))
        assert result.endswith("... (truncated)")
        assert len(result) == MAX_OUTPUT_LENGTH + len("... (truncated)")

    def test_empty(self):
        """Test empty input passes through."""
        assert sanitize_for_output("") == ""
