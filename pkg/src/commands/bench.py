"""``bench``: search runtime over growing random texts."""

from src.commands.dependencies import EXIT_OK
from src.models.cli import CliConfig, OutputFormat
from src.services.benchmark import measure_scaling


def cmd_bench(config: CliConfig) -> int:
    report = measure_scaling(
        config.sizes,
        pattern_length=config.pattern_length,
        rng_seed=config.rng_seed,
    )
    if config.output_format is OutputFormat.JSON:
        print(report.model_dump_json())
        return EXIT_OK
    print("N\tk\tseconds\toccurrences\tmax_depth")
    for sample in report.samples:
        print(
            f"{sample.total_size}\t{sample.k}\t{sample.seconds:.4f}\t"
            f"{sample.occurrences}\t{sample.max_extend_depth}"
        )
    if report.slope is not None:
        print(f"slope={report.slope:.3f}")
    return EXIT_OK
