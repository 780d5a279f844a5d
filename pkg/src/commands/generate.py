"""``generate``: write a random text."""

import logging

from src.commands.dependencies import EXIT_OK, write_output
from src.config import get_settings
from src.models.cli import CliConfig
from src.models.generation import GeneratorParams
from src.services.eds_format import serialize_eds
from src.services.generator import generate_random

logger = logging.getLogger(__name__)


def cmd_generate(config: CliConfig) -> int:
    params = config.generator or GeneratorParams()
    rng_seed = config.rng_seed if config.rng_seed is not None else get_settings().default_rng_seed
    text = generate_random(params, rng_seed)
    write_output(config.output, serialize_eds(text) + b"\n")
    logger.info(f"Wrote text with k={text.k}, N={text.total_size} to {config.output}")
    return EXIT_OK
