# Copyright 2024 Lauricella Matrix Functions.
# License LGPL-3 or later (http://www.gnu.org/licenses/lgpl).

"""Command line front end.

Exit codes: 0 success, 1 validation failure, 2 usage or input error,
3 mathematical precondition failure.
"""

import argparse
import logging
import sys
from traceback import format_exception

from .exceptions import LauricellaError
from .wizards.base_command import COMMANDS

_logger = logging.getLogger(__name__)

try:
    import lauricella_batch  # noqa: F401 registers the sweep command
except ImportError:
    _logger.warning("Failed to import lauricella_batch")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise LauricellaError("%s: %s" % (self.prog, message))


def build_parser():
    parser = _Parser(
        prog="lauricella",
        description="Matrix Lauricella functions and their recursion identities.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True
    for name in sorted(COMMANDS):
        command = COMMANDS[name]
        sub = commands.add_parser(
            name, help=command._description, description=command._description
        )
        command.add_arguments(sub)
    return parser


def _setup_logging(verbose):
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def main(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except LauricellaError as err:
        sys.stderr.write("%s\n" % err)
        return err.exit_code
    _setup_logging(args.verbose)
    command = COMMANDS[args.command](args, stdout)
    try:
        return command.run()
    except LauricellaError as err:
        _logger.error("%s", err)
        return err.exit_code
    except Exception:
        _logger.error("".join(format_exception(*sys.exc_info())))
        return 2
