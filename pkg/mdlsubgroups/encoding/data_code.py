#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   data_code.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Code length of target values.

Two Gaussian codes are available: one with fixed parameters, used for the
default rule, and a Bayesian one with unknown mean and variance, used for
subgroups. The Bayesian code is made proper by conditioning on the two cover
values closest to the dataset mean, which are then encoded with the dataset
distribution.

"""
from __future__ import print_function, division, absolute_import

from collections import namedtuple

import numpy as np
from scipy.special import gammaln

from mdlsubgroups.model.stats import gaussian_stats
from mdlsubgroups.utils.exceptions import EncodingError

LOG2_E = float(np.log2(np.e))
LOG2_PI = float(np.log2(np.pi))
LOG2_2PI = float(np.log2(2.0 * np.pi))

SubgroupCode = namedtuple('SubgroupCode', ('bits', 'l_cost', 'degenerate'))


def gaussian_fixed_code_from_rss(n_values, rss, variance):
    """Fixed-parameter Gaussian code length from the residual sum of squares.

    Arguments:
        n_values (int): Number of values.
        rss (float): Residual sum of squares around the code mean.
        variance (float): Code variance.

    Return:
        float: Bits.

    Raise:
        EncodingError: If the variance is not positive.

    """
    if not n_values:
        return 0.0
    if not variance > 0:
        raise EncodingError("Variance must be positive, got {}".format(variance))
    return (0.5 * n_values * (LOG2_2PI + np.log2(variance))
            + rss / (2.0 * variance) * LOG2_E)


def gaussian_fixed_code(values, mean, variance):
    """Code length of values under a normal distribution with known parameters.

    Arguments:
        values (sequence[float]): Values.
        mean (float): Mean.
        variance (float): Variance, already floored by the caller.

    Return:
        float: Bits.

    Raise:
        EncodingError: If the variance is not positive.

    """
    values = np.asarray(values, dtype=np.float64)
    residuals = values - mean
    return float(gaussian_fixed_code_from_rss(values.size, float(np.dot(residuals, residuals)),
                                              variance))


def bayes_code_from_rss(n_values, rss):
    """Bayesian Gaussian code length of `n_values` values with residual sum of squares `rss`."""
    if n_values < 2:
        raise EncodingError("The Bayesian code needs at least 2 values, got {}".format(n_values))
    if not rss > 0:
        raise EncodingError("Residual sum of squares must be positive, got {}".format(rss))
    return float(1.0
                 + 0.5 * (n_values + 1) * LOG2_PI
                 - gammaln(0.5 * n_values) / np.log(2)
                 + 0.5 * np.log2(n_values + 1)
                 + 0.5 * n_values * np.log2(rss))


def bayes_gaussian_code(stats, variance_floor=0.0):
    """Bayesian Gaussian code length with unknown mean and variance.

    `1 + (n+1)/2 log2(pi) - log2 Gamma(n/2) + 1/2 log2(n+1) + n/2 log2(n var)`

    Arguments:
        stats (`mdlsubgroups.model.stats.GaussianStats`): Values statistics.
        variance_floor (float, optional): Lower bound on the variance.

    Return:
        float: Bits.

    Raise:
        EncodingError: If `n < 2` or the floored variance is 0.

    """
    return bayes_code_from_rss(stats.n, stats.n * stats.floored_variance(variance_floor))


def select_prior_points(cover_values, theta_d):
    """Choose the two values the Bayesian code is conditioned on.

    The first is the value closest to the dataset mean, the second the closest
    among the values different from the first. Ties go to the smaller value.

    Arguments:
        cover_values (sequence[float]): Cover target values.
        theta_d (`mdlsubgroups.model.stats.GaussianStats`): Dataset statistics.

    Return:
        tuple: (y1, y2, degenerate), with `y2 == y1` and `degenerate` set if
            all values are equal.

    Raise:
        EncodingError: If fewer than 2 values are given.

    """
    values = np.asarray(cover_values, dtype=np.float64)
    if values.size < 2:
        raise EncodingError("Need at least 2 values to choose the prior points")
    distance = np.abs(values - theta_d.mean)
    first = float(values[np.lexsort((values, distance))[0]])
    others = values != first
    if not others.any():
        return first, first, True
    values, distance = values[others], distance[others]
    return first, float(values[np.lexsort((values, distance))[0]]), False


def subgroup_code(cover_values, theta_d, config, stats=None):
    """Code length of a subgroup's target values, with its conditioning cost.

    Arguments:
        cover_values (sequence[float]): Usage target values.
        theta_d (`mdlsubgroups.model.stats.GaussianStats`): Dataset statistics.
        config (`mdlsubgroups.encoding.config.EncodingConfig`): Encoding parameters.
        stats (`mdlsubgroups.model.stats.GaussianStats`, optional): Precomputed
            statistics of `cover_values`.

    Return:
        SubgroupCode: Bits, cost of encoding the two prior points with the dataset
            distribution instead of optimally, and whether the variance floor was needed.

    Raise:
        EncodingError: If fewer than 2 values are given.

    """
    values = np.asarray(cover_values, dtype=np.float64)
    if stats is None:
        stats = gaussian_stats(values)
    if stats.n < 2:
        raise EncodingError("A subgroup needs at least 2 values, got {}".format(stats.n))
    floor = config.variance_floor
    y_first, y_second, degenerate = select_prior_points(values, theta_d)
    pair_rss = max(0.5 * (y_first - y_second) ** 2, 2.0 * floor)
    pair_fixed = gaussian_fixed_code([y_first, y_second], theta_d.mean,
                                     theta_d.floored_variance(floor))
    l_cost = pair_fixed - bayes_code_from_rss(2, pair_rss)
    bits = bayes_gaussian_code(stats, floor) + l_cost
    return SubgroupCode(bits, l_cost, degenerate or stats.variance < floor)


def subgroup_data_code(cover_values, theta_d, config):
    """Code length of a subgroup's target values.

    `L_Bayes(Y) - L_Bayes(Y2) + L(Y2 | theta_d)` with `Y2` the prior points.

    Return:
        float: Bits.

    """
    return subgroup_code(cover_values, theta_d, config).bits

# EOF
