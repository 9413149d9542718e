"""
Set literal grammar used by the command line and config files.

    set      := interval (("U" | "∪") interval)*
    interval := ("[" | "(") endpoint "," endpoint (")" | "]")
    endpoint := rational "pi"? | "0"
    rational := integer ("/" positive-integer)?

Examples: "[3pi,7pi)", "(5/2pi,7/2pi] U (4pi,11/2pi]".
"""

import re
from fractions import Fraction

from pydantic import ValidationError

from src.exceptions import SetLiteralError
from src.intervals.algebra import normalize_set
from src.models.intervals import BasicSupportSet, Interval, RationalPi

_ENDPOINT_REGEXP = re.compile(
    r"^(?P<sign>[+-]?)(?P<rational>\d+(?:/\d+)?)?(?P<pi>\*?(?:pi|π))?$"
)
_INTERVAL_REGEXP = re.compile(r"^(?P<left>[\[(])(?P<lo>[^,]+),(?P<hi>[^,]+)(?P<right>[\])])$")
_UNION_REGEXP = re.compile(r"\s*(?:∪|\bU\b)\s*")


def parse_endpoint(text: str) -> RationalPi:
    compact = re.sub(r"\s+", "", text)
    match = _ENDPOINT_REGEXP.match(compact)
    if not match or not (match.group("rational") or match.group("pi")):
        raise SetLiteralError(f"malformed endpoint '{text}'", endpoint=text)

    rational = match.group("rational") or "1"
    if "/" in rational and int(rational.split("/")[1]) == 0:
        raise SetLiteralError(f"zero denominator in endpoint '{text}'", endpoint=text)
    value = Fraction(rational)
    if match.group("sign") == "-":
        value = -value
    if not match.group("pi") and value != 0:
        raise SetLiteralError(
            f"endpoint '{text}' is not a rational multiple of pi (append 'pi')",
            endpoint=text,
        )
    return RationalPi.of(value)


def parse_interval(text: str) -> Interval:
    match = _INTERVAL_REGEXP.match(text.strip())
    if not match:
        raise SetLiteralError(f"malformed interval '{text}'", interval=text)
    try:
        return Interval(
            lo=parse_endpoint(match.group("lo")),
            hi=parse_endpoint(match.group("hi")),
            lo_closed=match.group("left") == "[",
            hi_closed=match.group("right") == "]",
        )
    except ValidationError as e:
        raise SetLiteralError(f"invalid interval '{text}': {e.errors()[0]['msg']}", interval=text)


def parse_set(text: str) -> BasicSupportSet:
    """Parse a union of intervals and return its canonical form."""
    pieces = [piece for piece in _UNION_REGEXP.split(text.strip()) if piece]
    if not pieces:
        raise SetLiteralError("empty set literal", literal=text)
    return normalize_set(parse_interval(piece) for piece in pieces)


def format_set(E: BasicSupportSet) -> str:
    return str(E)
