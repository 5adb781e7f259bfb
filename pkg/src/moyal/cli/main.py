import argparse
import logging
import os
import sys
from typing import Sequence

from moyal.cli.commands import CommandToolkit
from moyal.const import ENV_DEBUG, EXIT_INVARIANT, EXIT_OK, EXIT_VALIDATION, VERSION
from moyal.errors import InvariantBreach, ValidationError

_LOGGER = logging.getLogger(__name__)


def configure_logging() -> None:
    logging.basicConfig(
        format="%(levelname)s [%(asctime)s] %(name)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
        level=logging.DEBUG if os.environ.get(ENV_DEBUG) else logging.INFO,
    )


def build_parser(toolkit: CommandToolkit) -> tuple[argparse.ArgumentParser, dict]:
    parser = argparse.ArgumentParser(prog="moyal", description="Moyal star products and Gelfand-Shilov diagnostics.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    commands = {}
    for command in toolkit.get_commands():
        sub = subparsers.add_parser(command.name, help=command.description, description=command.description)
        command.add_arguments(sub)
        commands[command.name] = command
    return parser, commands


def main(argv: Sequence[str] | None = None) -> int:
    configure_logging()
    parser, commands = build_parser(CommandToolkit())
    args = vars(parser.parse_args(argv))
    command = commands[args["command"]]
    try:
        manifest = command.run(args)
    except ValidationError as err:
        _LOGGER.error("%s: %s", type(err).__name__, err)
        return EXIT_VALIDATION
    except InvariantBreach as err:
        _LOGGER.error("%s: %s", type(err).__name__, err)
        return EXIT_INVARIANT
    except Exception:
        _LOGGER.exception("Unexpected failure in '%s'", command.name)
        return EXIT_INVARIANT
    _LOGGER.info("%s finished in %.2fs: %s", command.name, manifest.wall_clock, manifest.summary)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
