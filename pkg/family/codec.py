"""Family file format: parsing and canonical serialization

Format (UTF-8, LF or CRLF):
    %% s=<int> n=<int>      optional header, either key may be omitted
    1 2 3                   one member per line, whitespace separated
    # comment               '#' starts a comment to end of line
"""

import logging
import re
from typing import Dict, List, Optional, Set, Union

from family.models import (
    FormatError, MemberSet, ParseError, SetFamily, UniformityError
)

logger = logging.getLogger(__name__)

HEADER_PREFIX = "%%"
_HEADER_FIELD = re.compile(r"^(s|n)=(\d+)$")


def _parse_header(body: str, line_no: int) -> Dict[str, int]:
    fields: Dict[str, int] = {}
    for token in body.split():
        match = _HEADER_FIELD.match(token)
        if not match:
            raise ParseError(f"bad header field '{token}'", line_no)
        fields[match.group(1)] = int(match.group(2))
    if fields.get("s") == 0 or fields.get("n") == 0:
        raise ParseError("header values must be positive", line_no)
    return fields


def _parse_member(tokens: List[str], line_no: int) -> MemberSet:
    elements: List[int] = []
    for token in tokens:
        if not (token.isascii() and token.isdigit()):
            raise ParseError(f"'{token}' is not a non-negative integer", line_no)
        elements.append(int(token))
    if len(set(elements)) != len(elements):
        raise ParseError(f"repeated element in member {elements}", line_no)
    return MemberSet(tuple(sorted(elements)))


def parse_family(text: Union[bytes, str]) -> SetFamily:
    """Parse a family file into a canonical SetFamily.

    Raises:
        UniformityError: member length differs from the first member / header s
        ParseError: non-integer token, repeated element, element outside header n
        FormatError: no members and no header s
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(f"input is not valid UTF-8: {e}")

    header: Dict[str, int] = {}
    members: Set[MemberSet] = set()
    s: Optional[int] = None
    max_element = -1

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith(HEADER_PREFIX):
            if header or members:
                raise ParseError("header must precede all members", line_no)
            header = _parse_header(line[len(HEADER_PREFIX):], line_no)
            s = header.get("s")
            continue

        member = _parse_member(line.split(), line_no)
        if s is None:
            s = member.size
        elif member.size != s:
            raise UniformityError(f"member has {member.size} elements, expected {s}", line_no)
        if "n" in header and member.max_element >= header["n"]:
            raise ParseError(
                f"element {member.max_element} outside ground set [0, {header['n']})", line_no
            )
        max_element = max(max_element, member.max_element)
        members.add(member)

    if s is None:
        raise FormatError("empty family without a '%% s=<int>' header")

    n = header.get("n", max(max_element + 1, s if not members else 1))
    family = SetFamily.build(members, s=s, n=n)
    logger.debug(f"Parsed family: s={family.s} n={family.n} members={len(family)}")
    return family


def serialize_family(family: SetFamily) -> str:
    """Canonical text; the header is written only when the round trip needs it"""
    lines: List[str] = []
    inferred_n = max((m.max_element for m in family.members), default=-1) + 1
    if not family.members or family.n != inferred_n:
        lines.append(f"{HEADER_PREFIX} s={family.s} n={family.n}")
    lines.extend(" ".join(str(e) for e in member.elements) for member in family.members)
    return "\n".join(lines) + "\n"
