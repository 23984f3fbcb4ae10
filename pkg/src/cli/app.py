import argparse
import json
import logging

from src.cli.cli_print import TerminalPrinter
from src.cli.commands import COMMANDS, validate_inputs
from src.cli.run_config import load_run_config
from src.modules.errors import CapExceededError, WindowError, WorkbenchError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_FILE = 4
EXIT_INPUT = 5
EXIT_WINDOW = 6

# flag -> argparse keyword arguments; every flag maps onto the RunConfig field of the same name
CONFIG_FLAGS: dict[str, dict] = {
    "group": dict(type=str, help='Group presentation, e.g. "<s1,s2|[s1,s2]>".'),
    "radius": dict(type=int, help="Window radius (ball of this word length)."),
    "depth": dict(type=int, help="Enumeration depth in moves."),
    "color": dict(type=str, help="Stone color: black or white."),
    "vertex": dict(type=str, help="Move vertex as a word, e.g. s1*s2^-1."),
    "moves": dict(type=str, help="Move list, e.g. 'black:s, white:s^-1'."),
    "rule": dict(type=str, help="Life rule, e.g. 'B={3} S={2,3}'; ';' separates per-type rules."),
    "state": dict(type=str, help="Initial life state file (one block per line)."),
    "generations": dict(type=int, help="Number of life generations."),
    "max_alive": dict(type=int, help="Largest number of alive cells in the step matrix basis."),
    "density": dict(type=float, help="Alive probability of the random initial life state."),
    "generator": dict(type=str, help="Generator letter of the truncated operators, e.g. s or s^-1."),
    "word": dict(type=str, help="Word in a and b, e.g. a*b*a^-1*b^-1."),
    "theta": dict(type=float, help="Rotation angle in (0, 1)."),
    "rank": dict(type=int, help="Number of generators of the circle action."),
    "samples": dict(type=int, help="Number of low-discrepancy sample points."),
    "count": dict(type=int, help="Number of random words."),
    "max_length": dict(type=int, help="Longest random word."),
    "orbit_sizes": dict(type=str, help="Comma separated rotation orbit sizes."),
    "seed": dict(type=int, help="Random seed."),
    "matrices": dict(type=str, nargs="+", help="Matrix Market files."),
    "unmasked_only": dict(action="store_true", help="Restrict to the unmasked indices."),
    "ball_cap": dict(type=int, help="Largest ball size."),
    "block_cap": dict(type=int, help="Largest block size in the complex enumeration."),
    "enumeration_cap": dict(type=int, help="Largest number of enumerated states."),
    "dense_cap": dict(type=int, help="Largest dimension of a dense eigenvalue solve."),
    "commutant_cap": dict(type=int, help="Largest restricted dimension of a commutant estimate."),
    "output_dir": dict(type=str, help="Artifact directory (default: $CAYLEY_WORKBENCH_OUTPUT_DIR or ./output)."),
    "threads": dict(type=int, help="Worker threads (default: $CAYLEY_WORKBENCH_THREADS or 1)."),
}

AREA_FLAGS: dict[str, list[str]] = {
    "group": ["group", "radius", "ball_cap"],
    "go": ["group", "radius", "depth", "color", "vertex", "moves", "ball_cap", "enumeration_cap"],
    "complex": ["group", "radius", "block_cap"],
    "life": [
        "group",
        "radius",
        "rule",
        "state",
        "generations",
        "max_alive",
        "density",
        "seed",
        "block_cap",
        "enumeration_cap",
    ],
    "trunc": ["group", "radius", "generator", "ball_cap"],
    "circle": ["word", "theta", "rank", "samples", "count", "max_length", "orbit_sizes", "seed"],
    "lab": ["matrices", "unmasked_only", "dense_cap", "commutant_cap"],
}

AREA_HELP = {
    "group": "Balls and ICC evidence of a marked group.",
    "go": "Admissible Go states, single games and move operators.",
    "complex": "Maximal cells of the Cayley complex and their types.",
    "life": "Life on the cells of the Cayley complex.",
    "trunc": "Truncated generator operators and the identity defect.",
    "circle": "The action of words on the circle by squaring and rotations.",
    "lab": "Spectra and commutants of exported operators.",
}


def _add_flags(parser: argparse.ArgumentParser, names: list[str]):
    for name in names + ["output_dir", "threads"]:
        # SUPPRESS keeps absent flags out of the namespace, so config file values survive
        parser.add_argument(f"--{name.replace('_', '-')}", dest=name, default=argparse.SUPPRESS, **CONFIG_FLAGS[name])
    parser.add_argument("--config", type=str, default=None, help="Config file with key = value lines.")
    parser.add_argument("--dry-run", action="store_true", help="Validate the inputs without computing.")
    parser.add_argument("--verbose", action="store_true", help="Log at debug level.")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Experiments on marked groups, their Go and life games and operators.")
    areas = parser.add_subparsers(dest="area", required=True)
    for area, actions in COMMANDS.items():
        area_parser = areas.add_parser(area, help=AREA_HELP[area])
        action_parsers = area_parser.add_subparsers(dest="action", required=True)
        for action, handler in actions.items():
            action_parser = action_parsers.add_parser(action, help=(handler.__doc__ or "").strip() or None)
            _add_flags(action_parser, AREA_FLAGS[area])
            action_parser.set_defaults(func=handler, command=f"{area} {action}")
    return parser


def classify_error(error: BaseException) -> tuple[str, int]:
    if isinstance(error, CapExceededError):
        return "cap", EXIT_CAP
    if isinstance(error, WindowError):
        return "window", EXIT_WINDOW
    if isinstance(error, OSError):
        return "file", EXIT_FILE
    if isinstance(error, WorkbenchError):
        return "input", EXIT_INPUT
    return "unexpected", EXIT_UNEXPECTED


def error_record(kind: str, message: str, exit_code: int) -> str:
    return json.dumps({"error": kind, "message": message, "exit_code": exit_code}, sort_keys=True)


def main(argv: list[str] | None = None) -> int:
    """Runs one subcommand and returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        code = e.code if isinstance(e.code, int) else EXIT_USAGE
        if code != EXIT_OK:
            TerminalPrinter.print_error_record(error_record("usage", "invalid command line", EXIT_USAGE))
            return EXIT_USAGE
        return EXIT_OK

    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)
    overrides = {name: getattr(args, name) for name in CONFIG_FLAGS if hasattr(args, name)}
    try:
        config = load_run_config(args.config, overrides)
        TerminalPrinter.print_headline(args.command, config.group)
        if args.dry_run:
            validate_inputs(config, args.command)
            TerminalPrinter.print_dry_run("Inputs are valid, nothing was computed.")
            return EXIT_OK
        paths = args.func(config)
    except Exception as e:
        kind, code = classify_error(e)
        if code == EXIT_UNEXPECTED:
            logger.exception(f"{args.command} failed")
        TerminalPrinter.print_error(str(e))
        TerminalPrinter.print_error_record(error_record(kind, str(e), code))
        return code

    TerminalPrinter.print_title("Artifacts")
    for path in paths:
        TerminalPrinter.print_artifact(path)
    return EXIT_OK
