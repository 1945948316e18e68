"""Text formats for maps and certificates."""

from isobar.loaders.certfile import (
    CertificateFormatError,
    load_certificate,
    parse_certificate,
    serialize_certificate,
)
from isobar.loaders.mapfile import MapFormatError, load_map, parse_map, serialize_map

__all__ = [
    "CertificateFormatError",
    "MapFormatError",
    "load_certificate",
    "load_map",
    "parse_certificate",
    "parse_map",
    "serialize_certificate",
    "serialize_map",
]
