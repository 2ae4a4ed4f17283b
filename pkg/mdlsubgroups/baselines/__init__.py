#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   __init__.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Comparison miners scored by the weighted KL divergence without dispersion."""
from __future__ import print_function, division, absolute_import

from collections import namedtuple

from mdlsubgroups.search import SearchConfig
from mdlsubgroups.utils.exceptions import ConfigValueError


class BaselineConfig(namedtuple('BaselineConfig', ('k', 'search', 'min_coverage',
                                                   'max_subgroups'))):
    """Parameters of the comparison miners.

    Attributes:
        k (int): Number of subgroups returned by top-k, `None` to use the size
            of the list mined by SSD++ on the same data.
        search (`mdlsubgroups.search.SearchConfig`): Beam parameters.
        min_coverage (int): Sequential covering stops below this usage.
        max_subgroups (int): Optional cap on sequential covering, `None` for no cap.

    """

    __slots__ = ()

    def __new__(cls, k=None, search=None, min_coverage=10, max_subgroups=None):
        if k is not None and (int(k) != k or k < 1):
            raise ConfigValueError("k must be a positive integer, got {}".format(k))
        if int(min_coverage) != min_coverage or min_coverage < 1:
            raise ConfigValueError("min_coverage must be a positive integer, got {}".format(
                min_coverage))
        if max_subgroups is not None and (int(max_subgroups) != max_subgroups
                                          or max_subgroups < 1):
            raise ConfigValueError("max_subgroups must be a positive integer, got {}".format(
                max_subgroups))
        return super(BaselineConfig, cls).__new__(
            cls, None if k is None else int(k), SearchConfig() if search is None else search,
            int(min_coverage),
            None if max_subgroups is None else int(max_subgroups))

# EOF
