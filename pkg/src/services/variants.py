"""Building elastic-degenerate texts from a reference sequence and its variants.

Variants file: tab-separated ``pos  ref  alt1[,alt2,...]`` with 1-based
``pos``; lines starting with ``#`` are comments. An empty ``ref`` is an
insertion before ``pos`` and an empty alt field is a deletion.
"""

import io
import logging
from collections.abc import Sequence
from typing import BinaryIO

import pandas as pd
from pydantic import ValidationError

from src.errors import VariantError
from src.models.eds import DegenerateSymbol, EdsText, find_invalid_letter
from src.models.generation import Variant

logger = logging.getLogger(__name__)


def read_reference(stream: BinaryIO) -> bytes:
    """Concatenate all non-header lines of a single-record FASTA or plain sequence file."""
    lines = [
        line.strip()
        for line in stream.read().splitlines()
        if not line.startswith(b">")
    ]
    return b"".join(lines)


def read_variants(stream: BinaryIO) -> list[Variant]:
    """Parse the variants TSV into validated records, in file order.

    Raises:
        VariantError: On a malformed line or a field outside the alphabet.
    """
    kept = [
        line
        for line in stream.read().decode("ascii", errors="replace").splitlines()
        if line.strip() and not line.startswith("#")
    ]
    if not kept:
        return []
    try:
        frame = pd.read_csv(
            io.StringIO("\n".join(kept)),
            sep="\t",
            header=None,
            names=["pos", "ref", "alts"],
            dtype=str,
            keep_default_na=False,
        ).fillna("")
    except (pd.errors.ParserError, ValueError) as e:
        raise VariantError(f"malformed variants file: {e}") from e

    variants = []
    for line_number, row in enumerate(frame.itertuples(index=False), start=1):
        try:
            variants.append(
                Variant(
                    pos=int(row.pos),
                    ref=row.ref.encode(),
                    alts=tuple(alt.encode() for alt in row.alts.split(",")),
                )
            )
        except (ValueError, ValidationError) as e:
            raise VariantError(f"variant record {line_number}: {e}") from e
    logger.debug(f"Read {len(variants)} variants")
    return variants


def from_reference_and_variants(reference: bytes, variants: Sequence[Variant]) -> EdsText:
    """Turn each variant site into a symbol ``{ref, alts...}`` between reference stretches.

    Raises:
        VariantError: On unsorted or overlapping sites, a site outside the
            reference, a ``ref`` that disagrees with the reference, or a
            reference letter outside the alphabet.
    """
    index = find_invalid_letter(reference)
    if index is not None:
        raise VariantError(f"reference byte {reference[index:index + 1]!r} at {index + 1} "
                           "is not a permitted letter")

    seeds: list[bytes] = []
    symbols: list[DegenerateSymbol] = []
    cursor = 0
    previous: Variant | None = None
    for variant in variants:
        start = variant.pos - 1
        if start < cursor or (previous is not None and not previous.ref and start == cursor):
            raise VariantError(
                f"variant at {variant.pos} overlaps or precedes the variant at {previous.pos}"
            )
        if start + len(variant.ref) > len(reference):
            raise VariantError(
                f"variant at {variant.pos} runs past the reference end ({len(reference)})"
            )
        actual = reference[start : start + len(variant.ref)]
        if actual != variant.ref:
            raise VariantError(
                f"variant at {variant.pos}: ref {variant.ref!r} but reference has {actual!r}"
            )
        seeds.append(reference[cursor:start])
        symbols.append(DegenerateSymbol(alternatives=(variant.ref, *variant.alts)))
        cursor = start + len(variant.ref)
        previous = variant
    seeds.append(reference[cursor:])

    text = EdsText(seeds=tuple(seeds), symbols=tuple(symbols))
    logger.info(
        f"Built text from {len(symbols)} variant sites: n={text.length}, N={text.total_size}"
    )
    return text
