"""``convert``: reference sequence plus variants to an EDS file."""

from src.commands.dependencies import EXIT_OK, write_output
from src.models.cli import CliConfig
from src.services.eds_format import serialize_eds
from src.services.variants import from_reference_and_variants, read_reference, read_variants


def cmd_convert(config: CliConfig) -> int:
    with open(config.reference, "rb") as stream:
        reference = read_reference(stream)
    with open(config.variants, "rb") as stream:
        variants = read_variants(stream)
    text = from_reference_and_variants(reference, variants)
    write_output(config.output, serialize_eds(text) + b"\n")
    return EXIT_OK
