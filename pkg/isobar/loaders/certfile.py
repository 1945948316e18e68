"""Reader and writer for certificate format v1.

    certificate v1
    kind <case_a|case_b|exhaustive>
    face <id> weight <w>                       (case_a)
    vertex <x> faces <f1> <f2> <f3>            (case_b)
    partitions <count>                         (exhaustive)
    partition <reason> <face ids of side_a>    (exhaustive, <count> lines)

Lines starting with `#` and blank lines are ignored.
"""

from typing import List, Tuple

from pydantic import ValidationError

from isobar.limits import IsobarError, validate_input_path
from isobar.models.certificate import Certificate

HEADER = "certificate v1"


class CertificateFormatError(IsobarError):
    """Exception raised when a certificate document is malformed."""

    pass


def _ints(tokens: List[str], number: int) -> List[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise CertificateFormatError(f"line {number}: expected integers, got '{' '.join(tokens)}'")


def parse_certificate(text: str) -> Certificate:
    """Parse certificate format v1.

    Raises:
        CertificateFormatError: If the document is malformed or its witness
            does not match its kind
    """
    lines: List[Tuple[int, List[str]]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            lines.append((number, line.split()))

    if not lines or lines[0][1] != HEADER.split():
        raise CertificateFormatError(f"expected header '{HEADER}'")
    if len(lines) < 2 or len(lines[1][1]) != 2 or lines[1][1][0] != "kind":
        raise CertificateFormatError("expected 'kind <case_a|case_b|exhaustive>' after the header")
    kind = lines[1][1][1]
    body = lines[2:]

    fields: dict = {"kind": kind}
    if kind == "case_a":
        if len(body) != 1 or len(body[0][1]) != 4 or body[0][1][0::2] != ["face", "weight"]:
            raise CertificateFormatError("case_a certificate needs one line 'face <id> weight <w>'")
        number, tokens = body[0]
        fields["face"], fields["weight"] = _ints(tokens[1::2], number)
    elif kind == "case_b":
        if len(body) != 1 or len(body[0][1]) != 6 or (body[0][1][0], body[0][1][2]) != ("vertex", "faces"):
            raise CertificateFormatError(
                "case_b certificate needs one line 'vertex <x> faces <f1> <f2> <f3>'"
            )
        number, tokens = body[0]
        fields["vertex"] = _ints([tokens[1]], number)[0]
        fields["faces"] = tuple(_ints(tokens[3:], number))
    elif kind == "exhaustive":
        if not body or len(body[0][1]) != 2 or body[0][1][0] != "partitions":
            raise CertificateFormatError("exhaustive certificate needs 'partitions <count>'")
        number, tokens = body[0]
        count = _ints([tokens[1]], number)[0]
        records = body[1:]
        if len(records) != count:
            raise CertificateFormatError(
                f"line {number}: declared {count} partitions but listed {len(records)}"
            )
        partitions = []
        for number, tokens in records:
            if len(tokens) < 3 or tokens[0] != "partition":
                raise CertificateFormatError(
                    f"line {number}: expected 'partition <reason> <face ids>'"
                )
            partitions.append({"reason": tokens[1], "side_a": _ints(tokens[2:], number)})
        fields["partitions"] = partitions
    else:
        raise CertificateFormatError(f"unknown certificate kind '{kind}'")

    try:
        return Certificate.model_validate(fields)
    except ValidationError as e:
        errors = "; ".join(
            f"{'.'.join(str(p) for p in err['loc']) or 'certificate'}: {err['msg']}"
            for err in e.errors()
        )
        raise CertificateFormatError(f"invalid certificate: {errors}")


def serialize_certificate(certificate: Certificate) -> str:
    """Render a certificate in format v1."""
    lines = [HEADER, f"kind {certificate.kind}"]
    if certificate.kind == "case_a":
        lines.append(f"face {certificate.face} weight {certificate.weight}")
    elif certificate.kind == "case_b":
        assert certificate.faces is not None
        lines.append(f"vertex {certificate.vertex} faces " + " ".join(str(f) for f in certificate.faces))
    else:
        records = certificate.partitions or []
        lines.append(f"partitions {len(records)}")
        for record in records:
            lines.append(f"partition {record.reason} " + " ".join(str(f) for f in record.side_a))
    return "\n".join(lines) + "\n"


def load_certificate(certificate_path: str) -> Certificate:
    """Load a certificate file.

    Raises:
        CertificateFormatError: If the file cannot be read or is malformed
    """
    path = validate_input_path(certificate_path)
    try:
        text = path.read_text(encoding="utf-8-sig")
    except (OSError, UnicodeDecodeError) as e:
        raise CertificateFormatError(f"Error reading certificate file: {e}")
    return parse_certificate(text)
