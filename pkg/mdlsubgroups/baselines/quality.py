#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   quality.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Subgroup quality measures."""
from __future__ import print_function, division, absolute_import

from mdlsubgroups.encoding.data_code import LOG2_E
from mdlsubgroups.utils.exceptions import EncodingError


def wkl_mu(stats_s, theta_d, variance_floor=0.0):
    """Weighted KL divergence without dispersion, in bits.

    `n_s (mu_s - mu_d)^2 / (2 var_d) log2(e)`

    Arguments:
        stats_s (`mdlsubgroups.model.stats.GaussianStats`): Subgroup statistics.
        theta_d (`mdlsubgroups.model.stats.GaussianStats`): Dataset statistics.
        variance_floor (float, optional): Lower bound of the dataset variance.

    Return:
        float

    Raise:
        EncodingError: If the dataset variance is 0.

    """
    variance = theta_d.floored_variance(variance_floor)
    if not variance > 0:
        raise EncodingError("Dataset variance must be positive")
    return stats_s.n * (stats_s.mean - theta_d.mean) ** 2 / (2.0 * variance) * LOG2_E

# EOF
