#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   __init__.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Search for subgroup lists.

Miners are registered by name and are called with a dataset and a
`mdlsubgroups.cli.options.RunConfig`-like object exposing `search` and
`baseline` configurations. They return a tuple of (SubgroupList, listified).

"""
from __future__ import print_function, division, absolute_import

from collections import namedtuple

from mdlsubgroups import get_global_var
from mdlsubgroups.utils.exceptions import ConfigValueError, InvalidRequestError
from mdlsubgroups.utils.logging_color import get_logger

logger = get_logger('mdlsubgroups.search')

GAIN_MODES = ('normalized', 'absolute')


class SearchConfig(namedtuple('SearchConfig', ('beam_width', 'max_depth', 'n_cut', 'min_usage',
                                               'gain_mode', 'n_threads'))):
    """Beam search parameters, defaulting to width 100, depth 5 and 5 cut points."""

    __slots__ = ()

    def __new__(cls, beam_width=100, max_depth=5, n_cut=5, min_usage=2,
                gain_mode='normalized', n_threads=1):
        for name, value, minimum in (('beam_width', beam_width, 1),
                                     ('max_depth', max_depth, 1),
                                     ('n_cut', n_cut, 1),
                                     ('min_usage', min_usage, 2),
                                     ('n_threads', n_threads, 1)):
            if int(value) != value or value < minimum:
                raise ConfigValueError("{} must be an integer >= {}, got {}".format(name, minimum,
                                                                                 value))
        if gain_mode not in GAIN_MODES:
            raise ConfigValueError("Unknown gain mode -> {}".format(gain_mode))
        return super(SearchConfig, cls).__new__(cls, int(beam_width), int(max_depth), int(n_cut),
                                                int(min_usage), gain_mode, int(n_threads))


def register_miner(name, miner):
    """Register a miner under a name.

    Arguments:
        name (str): Name of the miner.
        miner (Callable): Function of (dataset, run_config).

    Return:
        int: Number of registered miners.

    """
    logger.debug("Registering miner %s -> %s", name, miner)
    get_global_var('MINERS').update({name: miner})
    return len(get_global_var('MINERS'))


def get_miner(name):
    """Get a registered miner.

    Raise:
        InvalidRequestError: If the miner is unknown.

    """
    try:
        return get_global_var('MINERS')[name]
    except KeyError:
        raise InvalidRequestError("Unknown miner -> {}".format(name))


def get_miner_names():
    """list: Names of the registered miners, sorted."""
    return sorted(get_global_var('MINERS'))

# EOF
