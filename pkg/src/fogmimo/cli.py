"""Command-line entry point: ``python -m fogmimo --config FILE --out DIR``."""

from __future__ import annotations

import logging
import sys

from .config_io import ConfigError, parse_args, write_results
from .montecarlo import run_simulation

log = logging.getLogger("fogmimo")


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    try:
        config, out_dir, workers = parse_args(sys.argv[1:] if argv is None else argv)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    log.info("running %d trials on a %dx%d EPU torus", config.trials, config.window_nx, config.window_ny)
    result = run_simulation(config, workers=workers)
    paths = write_results(result, out_dir)
    log.info("wrote %d files to %s (%d skipped UT evaluations)", len(paths), out_dir, result.skipped_records)
    return 0


if __name__ == "__main__":
    sys.exit(main())
