#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   __init__.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Command line interface.

Status codes:
    0: All good.
    1: Usage or configuration error.
    2: Data error (malformed or missing input).
    3: Uncaught error. An exception is logged.

"""
from __future__ import print_function, division, absolute_import

import argparse
import sys

from mdlsubgroups import __version__
from mdlsubgroups.cli import compare, evaluate, mine, synth
from mdlsubgroups.cli.options import OUTPUT_FORMATS, build_run_config
from mdlsubgroups.search import GAIN_MODES, get_miner_names
from mdlsubgroups.utils.exceptions import (ConfigError, DataError, EncodingError,
                                           InvalidRequestError)
from mdlsubgroups.utils.logging_color import get_logger, set_verbosity

logger = get_logger('mdlsubgroups.cli')

RUNNERS = {'mine': mine.run,
           'evaluate': evaluate.run,
           'synth': synth.run,
           'compare': compare.run}


class ArgumentParser(argparse.ArgumentParser):
    """Argument parser exiting with status 1 on usage errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, '{}: error: {}\n'.format(self.prog, message))


def _add_search_arguments(parser):
    parser.add_argument('--beam-width', type=int, help="Beam width (default 100)")
    parser.add_argument('--max-depth', type=int, help="Maximum number of conditions (default 5)")
    parser.add_argument('--n-cut', type=int, help="Cut points per numeric column (default 5)")
    parser.add_argument('--min-usage', type=int, help="Minimum subgroup usage (default 2)")
    parser.add_argument('--gain', choices=GAIN_MODES, help="Gain used by SSD++")
    parser.add_argument('--k', type=int, help="Subgroups returned by top-k")
    parser.add_argument('--min-coverage', type=int,
                        help="Minimum usage for sequential covering (default 10)")
    parser.add_argument('--max-subgroups', type=int,
                        help="Maximum subgroups for sequential covering")
    parser.add_argument('--threads', type=int, help="Threads for candidate scoring")


def _add_data_arguments(parser):
    parser.add_argument('--target', help="Target column (default: last column)")
    parser.add_argument('--schema', help="Schema sidecar file with column=kind lines")


def build_parser():
    """Build the command line parser.

    Return:
        ArgumentParser

    """
    parser = ArgumentParser(prog='mdlsubgroups',
                            description="Subgroup list discovery by compression")
    parser.add_argument('--version', action='version', version=__version__)
    parser.add_argument('-v', '--verbose', action='store_true', help="Verbose output")
    parser.add_argument('-q', '--quiet', action='store_true', help="Only warnings and errors")
    subparsers = parser.add_subparsers(dest='command', parser_class=ArgumentParser)
    subparsers.required = True
    # mine
    mine_parser = subparsers.add_parser('mine', help="Mine a subgroup list")
    mine_parser.add_argument('inputs', nargs=1, metavar='data.csv')
    mine_parser.add_argument('--algorithm', choices=get_miner_names())
    _add_data_arguments(mine_parser)
    _add_search_arguments(mine_parser)
    # evaluate
    evaluate_parser = subparsers.add_parser('evaluate', help="Evaluate a stored model")
    evaluate_parser.add_argument('inputs', nargs=2, metavar=('model.json', 'data.csv'))
    _add_data_arguments(evaluate_parser)
    # synth
    synth_parser = subparsers.add_parser('synth', help="Generate a planted dataset")
    synth_parser.add_argument('inputs', nargs=1, metavar='spec.yaml')
    synth_parser.add_argument('--seed', type=int,
                              help="Random seed, overrides the one in the YAML file")
    # compare
    compare_parser = subparsers.add_parser('compare', help="Run comparison experiments")
    compare_parser.add_argument('inputs', nargs='+', metavar='data.csv|experiment.yaml')
    compare_parser.add_argument('--sweep', nargs=2, metavar=('PARAM', 'VALUES'),
                                help="Sweep depth, cuts or beam over comma separated values")
    _add_data_arguments(compare_parser)
    _add_search_arguments(compare_parser)
    for sub_parser in (mine_parser, evaluate_parser, synth_parser, compare_parser):
        sub_parser.add_argument('--output', help="Output file or directory")
        sub_parser.add_argument('--format', choices=OUTPUT_FORMATS, help="Report format")
        sub_parser.add_argument('--config', action='append', default=[],
                                help="YAML configuration file, can be repeated")
    return parser


def main(argv=None):
    """Command line application.

    Parses the command line and runs the command, catching intermediate
    errors and transforming them to status codes (see module documentation).

    Arguments:
        argv (list[str], optional): Arguments. Defaults to `sys.argv[1:]`.

    """
    parser = build_parser()
    args = parser.parse_args(argv)
    set_verbosity(args.verbose, args.quiet)
    options = {key: value for key, value in vars(args).items()
               if key not in ('command', 'inputs', 'config', 'verbose', 'quiet')}
    exit_status = 3
    try:
        run_config = build_run_config(args.command, args.inputs, args.config, **options)
        exit_status = RUNNERS[args.command](run_config)
    except (ConfigError, InvalidRequestError) as error:
        exit_status = 1
        logger.error("Bad configuration -> %s", error)
    except (DataError, EncodingError, OSError) as error:
        exit_status = 2
        logger.error("Data error -> %s", error)
    # pylint: disable=W0703
    except Exception as error:
        exit_status = 3
        logger.exception('Uncaught exception -> %s', repr(error))
    finally:
        parser.exit(exit_status)


if __name__ == "__main__":
    main()

# EOF
