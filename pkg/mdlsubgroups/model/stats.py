#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   stats.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Gaussian sufficient statistics of target values."""
from __future__ import print_function, division, absolute_import

from collections import namedtuple

import numpy as np


class GaussianStats(namedtuple('GaussianStats', ('n', 'sum', 'sum_sq', 'mean', 'variance'))):
    """Maximum likelihood Gaussian estimates of a set of values.

    The variance is the biased estimator, so that `n * variance` is the
    residual sum of squares around the mean. For `n = 0` mean and variance
    are reported as 0 and `is_empty` is set.

    """

    __slots__ = ()

    @property
    def is_empty(self):
        """bool: No values were accumulated."""
        return self.n == 0

    @property
    def rss(self):
        """float: Residual sum of squares around the mean."""
        return self.n * self.variance

    @property
    def std(self):
        """float: Biased standard deviation."""
        return float(np.sqrt(self.variance))

    def floored_variance(self, variance_floor):
        """Variance with a lower bound applied.

        Arguments:
            variance_floor (float): Minimum variance.

        Return:
            float

        """
        return max(self.variance, variance_floor)

    def rss_around(self, mean):
        """Residual sum of squares around an arbitrary mean.

        Arguments:
            mean (float): Reference mean.

        Return:
            float

        """
        return self.rss + self.n * (self.mean - mean) ** 2


def gaussian_stats(values):
    """Compute the Gaussian statistics of a sequence of values.

    The variance is computed in two passes and clamped at 0.

    Arguments:
        values (sequence[float]): Values.

    Return:
        GaussianStats

    """
    values = np.asarray(values, dtype=np.float64)
    n_values = int(values.size)
    if not n_values:
        return GaussianStats(0, 0.0, 0.0, 0.0, 0.0)
    total = float(np.sum(values))
    mean = total / n_values
    variance = max(float(np.mean((values - mean) ** 2)), 0.0)
    return GaussianStats(n_values, total, float(np.dot(values, values)), mean, variance)

# EOF
