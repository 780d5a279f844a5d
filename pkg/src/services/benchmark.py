"""Runtime scaling of ``search`` over random texts of growing total size."""

import logging
import math
import time
from collections.abc import Sequence

import numpy as np
from scipy.stats import linregress

from src.config import get_settings
from src.models.generation import GeneratorParams, IntRange
from src.models.matching import ScalingReport, ScalingSample
from src.services.generator import generate_random, sample_pattern
from src.services.matcher import search

logger = logging.getLogger(__name__)

DEFAULT_PARAMS = GeneratorParams(
    seed_length=IntRange(low=80, high=120),
    alternatives=IntRange(low=1, high=8),
    alternative_length=IntRange(low=0, high=10),
    sigma=4,
    empty_probability=0.1,
)


def expected_unit_size(params: GeneratorParams) -> float:
    """Mean letters contributed by one seed plus the symbol after it."""
    seed = (params.seed_length.low + params.seed_length.high) / 2
    lengths = params.alternative_length
    if lengths.high == 0:
        return seed
    alternative = (max(lengths.low, 1) + lengths.high) / 2 * (1 - params.empty_probability)
    count = (params.alternatives.low + params.alternatives.high) / 2
    return seed + count * alternative


def measure_scaling(
    sizes: Sequence[int],
    params: GeneratorParams | None = None,
    pattern_length: int = 32,
    rng_seed: int | None = None,
) -> ScalingReport:
    """Time one search per target total size N.

    The number of seeds is chosen so the expected N matches each target; the
    pattern is cut from the generated text so occurrences exist.
    """
    params = params or DEFAULT_PARAMS
    if rng_seed is None:
        rng_seed = get_settings().default_rng_seed
    unit = expected_unit_size(params)

    samples = []
    for index, size in enumerate(sizes):
        k = max(1, round(size / unit))
        sized = params.model_copy(update={"k": IntRange(low=k, high=k)})
        text = generate_random(sized, rng_seed + index)
        pattern = sample_pattern(text, pattern_length, np.random.default_rng(rng_seed + index))

        started = time.perf_counter()
        report = search(pattern, text)
        seconds = time.perf_counter() - started

        samples.append(
            ScalingSample(
                total_size=text.total_size,
                k=text.k,
                seconds=seconds,
                occurrences=len(report.occurrences),
                max_extend_depth=report.max_extend_depth,
            )
        )
        logger.info(f"N={text.total_size} k={text.k}: {seconds:.3f}s, "
                    f"{len(report.occurrences)} occurrences")

    ratios = [b.seconds / a.seconds for a, b in zip(samples, samples[1:]) if a.seconds > 0]
    slope = None
    xs = [math.log(s.total_size) for s in samples]
    if len(set(xs)) >= 2:
        fit = linregress(
            xs,
            [math.log(max(s.seconds, 1e-9)) for s in samples],
        )
        slope = float(fit.slope)
    return ScalingReport(samples=samples, ratios=ratios, slope=slope)
