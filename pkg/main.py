#!/usr/bin/env python3

"""
escalier - Main CLI
Lex Groebner escaliers, minimal bases and factorized bases of ideals of points
"""

import sys
import argparse

from escalier import __version__
from escalier.config import SessionConfig, create_default_config
from escalier.errors import ConfigError, EscalierError
from escalier.logging_utils import setup_logging
from escalier.output_handler import OutputHandler
from escalier.runner import run


def print_banner():
    """Print banner on an interactive stderr"""
    if hasattr(sys.stderr, 'isatty') and sys.stderr.isatty():
        print(f"\033[1;36m🧮 escalier v{__version__}\033[0m", file=sys.stderr)


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)

    common.add_argument(
        'input',
        nargs='?',
        default=None,
        help='Points file, CSV or JSON ("-" or omitted reads stdin)'
    )

    common.add_argument(
        '--input-format',
        choices=['auto', 'csv', 'json'],
        default=None,
        help='Input format (default: auto)'
    )

    common.add_argument(
        '-o', '--output',
        default=None,
        help='Write output to this file instead of stdout'
    )

    common.add_argument(
        '--format',
        choices=['text', 'json', 'csv'],
        default=None,
        help='Output format (default: text)'
    )

    common.add_argument(
        '--field',
        default=None,
        help='Coefficient field: q or fp:<prime> (default: $ESCALIER_FIELD or q)'
    )

    common.add_argument(
        '--config',
        type=str,
        help='Load configuration from YAML file'
    )

    # Processing options
    common.add_argument(
        '--parallel',
        action='store_true',
        help='Factorize generators on a worker pool'
    )

    common.add_argument(
        '--workers',
        type=int,
        default=None,
        help='Number of parallel workers (default: 4)'
    )

    common.add_argument(
        '--no-validate',
        action='store_true',
        help='Skip recomputing the escalier and minimal basis before factorizing'
    )

    common.add_argument(
        '--progress',
        action='store_true',
        help='Show progress bars on stderr'
    )

    # Logging
    common.add_argument(
        '--log-level',
        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
        default=None,
        help='Logging level (default: WARNING)'
    )

    common.add_argument(
        '--log-file',
        default=None,
        help='Also log to this file'
    )

    common.add_argument(
        '--no-log-file',
        action='store_true',
        help='Disable file logging'
    )
    return common


def create_parser() -> argparse.ArgumentParser:
    """Create argument parser"""
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="escalier",
        description="🧮 escalier - Groebner escaliers and factorized bases for finite point sets",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Escalier term of every point, in input order
  python main.py escalier points.csv

  # Same, with sigma value, antecedent and witness set
  python main.py escalier points.csv --trace

  # Minimal generators of the leading-term ideal
  python main.py minbasis points.csv --format json

  # Factorized basis with expanded and reduced forms
  python main.py aoe points.csv --expanded --reduced

  # Save the factorized basis, then certify it later
  python main.py aoe points.csv --format json -o basis.json
  python main.py verify points.csv --basis basis.json

  # Work over F_101
  python main.py aoe points.csv --field fp:101

  # Random instance and randomized self-check
  python main.py gen --n 3 --points 12 --coord-range 5 --seed 7
  python main.py selfcheck --instances 200 --seed 1 --progress

  # Create default config file
  python main.py --create-config
        """
    )

    parser.add_argument(
        '--version',
        action='version',
        version=f"%(prog)s {__version__}"
    )

    parser.add_argument(
        '--create-config',
        nargs='?',
        const='escalier_config.yaml',
        default=None,
        metavar='PATH',
        help='Create default configuration file and exit'
    )

    commands = parser.add_subparsers(dest='command', metavar='COMMAND')

    escalier = commands.add_parser('escalier', parents=[common], help='Escalier term of every point')
    escalier.add_argument('--trace', action='store_true', help='Add sigma, antecedent and witness set')

    commands.add_parser('minbasis', parents=[common], help='Minimal generators of the leading-term ideal')

    aoe = commands.add_parser('aoe', parents=[common], help='Factorized minimal Groebner basis')
    aoe.add_argument('--factored', action='store_true', help='Print the factor products (default)')
    aoe.add_argument('--expanded', action='store_true', help='Print the expanded products')
    aoe.add_argument('--reduced', action='store_true', help='Print the reduced Groebner basis')
    aoe.add_argument('--certificate', action='store_true', help='Append a verification certificate')

    verify = commands.add_parser('verify', parents=[common], help='Certify a basis against the points')
    verify.add_argument('--basis', default=None, help='Saved "aoe --format json" output to certify')

    gen = commands.add_parser('gen', parents=[common], help='Random point set')
    gen.add_argument('--n', type=int, default=None, help='Number of variables (default: 3)')
    gen.add_argument('--points', type=int, default=None, help='Number of points (default: 9)')
    gen.add_argument('--coord-range', type=int, default=None,
                     help='Coordinates drawn from 0..RANGE-1 (default: 5)')
    gen.add_argument('--seed', type=int, default=None, help='Random seed')

    check = commands.add_parser('selfcheck', parents=[common], help='Randomized property sweep')
    check.add_argument('--instances', type=int, default=None, help='Number of instances (default: 100)')
    check.add_argument('--seed', type=int, default=None, help='Random seed')

    return parser


def main(argv=None):
    """Main entry point"""
    print_banner()

    # Parse arguments
    parser = create_parser()
    args = parser.parse_args(argv)

    # Handle config creation
    if args.create_config:
        create_default_config(args.create_config)
        return 0

    if args.command is None:
        parser.print_usage(sys.stderr)
        print("❌ A command is required", file=sys.stderr)
        return 2

    # Load or create config
    base = None
    if args.config:
        try:
            base = SessionConfig.from_yaml(args.config)
            print(f"✅ Loaded config from: {args.config}", file=sys.stderr)
        except Exception as e:
            print(f"❌ Error loading config: {e}", file=sys.stderr)
            return 2

    config = SessionConfig.from_args(args, base)

    # Validate config
    try:
        config.validate()
    except (ConfigError, FileNotFoundError) as e:
        print(f"❌ Configuration error: {e}", file=sys.stderr)
        return 2

    # Setup logging
    logger = setup_logging(
        log_file=config.log_file if config.enable_logging else None,
        log_level=config.log_level,
        enable_file_logging=config.enable_logging
    )

    try:
        status, output = run(config)
        if config.output_path:
            OutputHandler.write(output, config.output_path)
            logger.info(f"Results saved: {config.output_path}")
        else:
            sys.stdout.write(output)
            sys.stdout.flush()
        return status

    except KeyboardInterrupt:
        logger.warning("⚠️  Interrupted by user")
        return 130

    except EscalierError as e:
        logger.debug(f"{type(e).__name__}: {e}", exc_info=True)
        print(f"❌ {e}", file=sys.stderr)
        return 1

    except OSError as e:
        logger.debug(f"I/O error: {e}", exc_info=True)
        print(f"❌ {e}", file=sys.stderr)
        return 1

    except Exception as e:
        logger.error(f"Fatal error: {e}", exc_info=True)
        print(f"❌ Fatal error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
