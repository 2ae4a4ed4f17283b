#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   __init__.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Subgroup list discovery with the minimum description length principle.

Package-wide registries are kept as global variables:
    - `FILE_TYPES`: input file extension -> loader name in `mdlsubgroups.data.loaders`.
    - `MINERS`: algorithm name -> miner entry point, filled on import of
      `mdlsubgroups.search.ssdpp` and `mdlsubgroups.baselines.miners`.

"""
from __future__ import print_function, division, absolute_import

__author__ = 'mdlsubgroups developers'
__version__ = '1.0'

__GLOBAL_VARIABLES = {}


def get_global_var(name, default=None):
    """Get a registry or setting.

    Arguments:
        name (str): Name of the variable.
        default (object, optional): Returned if the variable is not defined.

    Return:
        object

    """
    return __GLOBAL_VARIABLES.get(name, default)


def set_global_var(name, value):
    """Set a registry or setting, replacing any previous value.

    Return:
        object: `value`.

    """
    __GLOBAL_VARIABLES[name] = value
    return value


set_global_var('FILE_TYPES', {})
set_global_var('MINERS', {})

# EOF
