"""Reading and writing the brace/comma EDS text format.

``bc{ab,aab,aca}ca{abcab,cba}bb`` holds three seeds and two symbols. Seeds are
runs of letters, symbols are ``{alt,alt,...}``, an alternative may be empty
(``{b,}``) and adjacent symbols ``}{`` imply an empty seed between them.
Whitespace, including line breaks, is ignored everywhere.
"""

import logging
import re
from typing import BinaryIO

from src.errors import AlphabetError, EdsParseError
from src.models.eds import DegenerateSymbol, EdsText, find_invalid_letter

logger = logging.getLogger(__name__)

_TOKEN = re.compile(rb"[{},]|[^{},]+")
_WHITESPACE = b" \t\n\r\x0b\x0c"


def _read_all(source: bytes | bytearray | BinaryIO) -> bytes:
    if isinstance(source, (bytes, bytearray)):
        return bytes(source)
    return source.read()


def _letters(token: bytes, offset: int) -> bytes:
    """Strip whitespace from a letter run, rejecting anything outside the alphabet."""
    letters = token.translate(None, _WHITESPACE)
    if find_invalid_letter(letters) is not None:
        for index, letter in enumerate(token):
            if letter not in _WHITESPACE and find_invalid_letter(bytes([letter])) is not None:
                raise AlphabetError(f"byte {bytes([letter])!r} is not a permitted letter",
                                    offset + index)
    return letters


def parse_eds(source: bytes | bytearray | BinaryIO) -> EdsText:
    """Parse an EDS text.

    Args:
        source: Raw bytes or a binary stream.

    Returns:
        The parsed text with seeds and symbols in input order.

    Raises:
        EdsParseError: On unbalanced or nested braces, stray separators, or ``{}``.
        AlphabetError: On a byte outside the permitted alphabet.
    """
    data = _read_all(source)
    seeds: list[bytes] = []
    symbols: list[DegenerateSymbol] = []
    current = bytearray()
    alternatives: list[bytes] | None = None
    opened_at = 0

    for match in _TOKEN.finditer(data):
        token = match.group()
        offset = match.start()
        if token == b"{":
            if alternatives is not None:
                raise EdsParseError("nested '{'", offset)
            seeds.append(bytes(current))
            current.clear()
            alternatives = []
            opened_at = offset
        elif token == b"}":
            if alternatives is None:
                raise EdsParseError("'}' without an opening '{'", offset)
            alternatives.append(bytes(current))
            current.clear()
            if alternatives == [b""]:
                raise EdsParseError("symbol with zero alternatives", opened_at)
            symbols.append(DegenerateSymbol(alternatives=tuple(alternatives)))
            alternatives = None
        elif token == b",":
            if alternatives is None:
                raise EdsParseError("',' outside a symbol", offset)
            alternatives.append(bytes(current))
            current.clear()
        else:
            current += _letters(token, offset)

    if alternatives is not None:
        raise EdsParseError("unclosed '{'", opened_at)
    seeds.append(bytes(current))

    text = EdsText(seeds=tuple(seeds), symbols=tuple(symbols))
    logger.debug(f"Parsed EDS text: k={text.k}, n={text.length}, N={text.total_size}")
    return text


def serialize_eds(text: EdsText) -> bytes:
    """Write a text in the brace/comma format; ``parse_eds`` reads it back unchanged."""
    parts: list[bytes] = []
    for index, seed in enumerate(text.seeds):
        parts.append(seed)
        if index < len(text.symbols):
            parts.append(b"{" + b",".join(text.symbols[index].alternatives) + b"}")
    return b"".join(parts)
