#!/usr/bin/env python3
"""
CLI entry point for ar-window
"""
import argparse
import sys
from pathlib import Path
from typing import List, Optional

from ar_window.version import __version__

EPILOG = """
Examples:
  # Check the translation axiom of a quiver file
  ar-window validate window.tq

  # Generate a window of ZA3 on layers 0..4 and a rank 3 tube
  ar-window gen zdelta A3 0 4
  ar-window gen tube 3 4

  # Four-condition report with DOT output
  ar-window --dot analyze out/tube_3_4.tq

  # Knit the AR quiver of an algebra and study its radical
  ar-window --max-modules 60 knit samples/example.alg
  ar-window --json radical samples/loop2.alg
"""


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    """Flags accepted before or after the subcommand; subcommand copies leave unset flags alone"""
    common = argparse.ArgumentParser(
        add_help=False, argument_default=argparse.SUPPRESS if suppress else None
    )
    common.add_argument("--field", type=int, help="Prime field order (overrides the file)")
    common.add_argument("--seed", type=int, help="Random seed (overrides ARW_SEED)")
    common.add_argument("--max-modules", type=int, help="Knit limit on table size")
    common.add_argument("--max-dim", type=int, help="Knit limit on module dimension")
    common.add_argument("--max-tau-steps", type=int, help="Knit limit on τ/τ⁻ applications")
    common.add_argument("--max-power", type=int, help="Largest radical power computed")
    common.add_argument("--out", help="Output directory (default: out)")
    common.add_argument("--dot", action="store_true", help="Also write DOT files")
    common.add_argument("--json", action="store_true", help="Print the JSON report on stdout")
    common.add_argument("--config", help="Path to config file")
    common.add_argument("--debug", action="store_true", help="Enable debug logging")
    common.add_argument(
        "--strict", action="store_true", help="Exit 3 when a limit leaves the window incomplete"
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _global_flags(suppress=True)

    parser = argparse.ArgumentParser(
        prog="ar-window",
        description="Translation quivers, knitted AR components and radical filtrations",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=EPILOG,
        parents=[_global_flags(suppress=False)],
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    validate = commands.add_parser("validate", parents=[common], help="Check a quiver file")
    validate.add_argument("quiver", type=Path)

    gen = commands.add_parser("gen", parents=[common], help="Generate a quiver family window")
    gen.add_argument("family", help="zdelta or tube")
    gen.add_argument("params", nargs="*", help="Family parameters")
    gen.add_argument("-o", "--output", type=Path, help="Quiver file to write")

    analyze = commands.add_parser("analyze", parents=[common], help="Analyze a quiver file")
    analyze.add_argument("quiver", type=Path)

    knit = commands.add_parser("knit", parents=[common], help="Knit the AR quiver of an algebra")
    knit.add_argument("algebra", type=Path)

    radical = commands.add_parser("radical", parents=[common], help="Radical filtration report")
    radical.add_argument("algebra", type=Path)
    radical.add_argument(
        "--slice", help="Comma-separated table labels or indices for a slice report"
    )
    return parser


def _apply_logging(args: argparse.Namespace):
    from ar_window.config.settings import settings
    from ar_window.utils.logger import LoggerManager, logger, set_log_level

    if args.config:
        settings.reload(args.config)
        LoggerManager().configure()
    if args.debug:
        set_log_level("DEBUG")
        logger.debug("Debug logging enabled")


def run(argv: Optional[List[str]] = None) -> int:
    """Parse ``argv``, run the command and return its exit code"""
    from ar_window.config.run_config import RunConfig
    from ar_window.errors import (
        ConfigError,
        GeneratorError,
        LimitExceededError,
        ParseError,
        PresentationError,
        QuiverError,
        RepresentationError,
    )
    from ar_window.main import EXIT_FAILED, EXIT_INPUT, EXIT_LIMITS, ArWindowApp
    from ar_window.utils.logger import logger

    args = build_parser().parse_args(argv)
    try:
        _apply_logging(args)
        run_config = RunConfig.from_sources(
            {
                "seed": args.seed,
                "field_order": args.field,
                "max_modules": args.max_modules,
                "max_dim": args.max_dim,
                "max_tau_steps": args.max_tau_steps,
                "max_power": args.max_power,
                "output_directory": args.out,
            }
        )
        app = ArWindowApp(
            run_config,
            field_override=args.field,
            dot=args.dot,
            print_json=args.json,
            strict=args.strict,
        )
        if args.command == "validate":
            return app.validate(args.quiver)
        if args.command == "gen":
            return app.gen(args.family, args.params, args.output)
        if args.command == "analyze":
            return app.analyze(args.quiver)
        if args.command == "knit":
            return app.knit(args.algebra)
        names = [s.strip() for s in (args.slice or "").split(",") if s.strip()]
        return app.radical(args.algebra, names)
    except (OSError, ParseError, PresentationError, ConfigError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_INPUT
    except (QuiverError, GeneratorError, RepresentationError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_FAILED
    except LimitExceededError as e:
        logger.error(str(e))
        return EXIT_LIMITS


def main():
    """Main CLI entry point"""
    try:
        sys.exit(run())
    except KeyboardInterrupt:
        print("\n\nInterrupted by user", file=sys.stderr)
        sys.exit(130)


if __name__ == "__main__":
    main()
