#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   options.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Run configuration shared by the command line tools."""
from __future__ import print_function, division, absolute_import

from collections import OrderedDict, namedtuple

import mdlsubgroups.baselines.miners  # noqa: F401, pylint: disable=unused-import
import mdlsubgroups.search.ssdpp  # noqa: F401, pylint: disable=unused-import
from mdlsubgroups.baselines import BaselineConfig
from mdlsubgroups.search import SearchConfig, get_miner_names
from mdlsubgroups.utils.config import load_config, merge_options
from mdlsubgroups.utils.exceptions import ConfigValueError

COMMANDS = ('mine', 'evaluate', 'synth', 'compare')
OUTPUT_FORMATS = ('json', 'table', 'csv')
SWEEP_PARAMETERS = OrderedDict([('depth', 'max_depth'),
                                ('cuts', 'n_cut'),
                                ('beam', 'beam_width')])

DEFAULTS = OrderedDict([('algorithm', 'ssdpp'),
                        ('beam-width', 100),
                        ('max-depth', 5),
                        ('n-cut', 5),
                        ('min-usage', 2),
                        ('gain', 'normalized'),
                        ('k', None),
                        ('min-coverage', 10),
                        ('max-subgroups', None),
                        ('threads', 1),
                        ('format', 'table'),
                        ('output', None),
                        ('target', None),
                        ('schema', None),
                        ('seed', None),
                        ('sweep', None)])


def _optional_int(options, key):
    value = options.get(key)
    if value is None:
        return None
    try:
        return int(value)
    except (TypeError, ValueError):
        raise ConfigValueError("{} must be an integer, got {}".format(key, value))


def parse_sweep(sweep):
    """Parse a sweep request.

    Arguments:
        sweep (list or str): `[parameter, 'v1,v2,...']` or `'parameter v1,v2'`.

    Return:
        tuple: (parameter, tuple of int values), or `None`.

    Raise:
        ConfigValueError: If the request is malformed.

    """
    if not sweep:
        return None
    if isinstance(sweep, str):
        sweep = sweep.split()
    if len(sweep) != 2 or sweep[0] not in SWEEP_PARAMETERS:
        raise ConfigValueError("Sweep must be one of {} followed by values".format(
            ', '.join(SWEEP_PARAMETERS)))
    try:
        values = tuple(int(value) for value in str(sweep[1]).split(',') if value.strip())
    except ValueError:
        raise ConfigValueError("Sweep values must be integers -> {}".format(sweep[1]))
    if not values:
        raise ConfigValueError("Empty sweep")
    return sweep[0], values


class RunConfig(namedtuple('RunConfig', ('command', 'inputs', 'output', 'algorithm', 'search',
                                         'baseline', 'seed', 'output_format', 'target',
                                         'schema', 'gain', 'sweep'))):
    """Everything a command needs to run."""

    __slots__ = ()

    def to_options(self):
        """Dashed options reproducing the mining parameters of this run.

        Return:
            OrderedDict: Options in the format of the configuration files.

        """
        return OrderedDict([('algorithm', self.algorithm),
                            ('beam-width', self.search.beam_width),
                            ('max-depth', self.search.max_depth),
                            ('n-cut', self.search.n_cut),
                            ('min-usage', self.search.min_usage),
                            ('gain', self.search.gain_mode),
                            ('k', self.baseline.k),
                            ('min-coverage', self.baseline.min_coverage),
                            ('max-subgroups', self.baseline.max_subgroups),
                            ('threads', self.search.n_threads),
                            ('target', self.target),
                            ('schema', self.schema)])

    @staticmethod
    def from_options(command, inputs, options):
        """Build the run configuration from merged options.

        Arguments:
            command (str): Command name.
            inputs (list[str]): Positional inputs.
            options (dict): Options with dashed keys, missing keys taking defaults.

        Return:
            RunConfig

        Raise:
            ConfigValueError: If a value is invalid.

        """
        if command not in COMMANDS:
            raise ConfigValueError("Unknown command -> {}".format(command))
        merged = merge_options(DEFAULTS, options)
        if merged['algorithm'] not in get_miner_names():
            raise ConfigValueError("Unknown algorithm -> {}".format(merged['algorithm']))
        if merged['format'] not in OUTPUT_FORMATS:
            raise ConfigValueError("Unknown output format -> {}".format(merged['format']))
        search = SearchConfig(beam_width=_optional_int(merged, 'beam-width'),
                              max_depth=_optional_int(merged, 'max-depth'),
                              n_cut=_optional_int(merged, 'n-cut'),
                              min_usage=_optional_int(merged, 'min-usage'),
                              gain_mode=merged['gain'],
                              n_threads=_optional_int(merged, 'threads'))
        baseline = BaselineConfig(k=_optional_int(merged, 'k'),
                                  search=search._replace(gain_mode='normalized'),
                                  min_coverage=_optional_int(merged, 'min-coverage'),
                                  max_subgroups=_optional_int(merged, 'max-subgroups'))
        return RunConfig(command, list(inputs), merged['output'], merged['algorithm'], search,
                         baseline, _optional_int(merged, 'seed'), merged['format'],
                         merged['target'], merged['schema'], merged['gain'],
                         parse_sweep(merged['sweep']))


def build_run_config(command, inputs, config_files=(), **overrides):
    """Load YAML configuration files and overlay explicit values.

    Arguments:
        command (str): Command name.
        inputs (list[str]): Positional inputs.
        config_files (list[str], optional): YAML files, later ones overriding.
        **overrides: Explicit values, `None` meaning not given.

    Return:
        RunConfig

    """
    options = load_config(*config_files) if config_files else OrderedDict()
    return RunConfig.from_options(command, inputs, merge_options(options, overrides))

# EOF
