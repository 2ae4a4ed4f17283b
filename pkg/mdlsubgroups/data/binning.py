#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   binning.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Equal frequency discretization of numeric columns."""
from __future__ import print_function, division, absolute_import

import numpy as np

from mdlsubgroups.utils.logging_color import get_logger

logger = get_logger('mdlsubgroups.data.binning')


class BinningScheme(object):
    """Cut points of every numeric column.

    Arguments:
        cuts (dict): Column index -> ascending cut values.
        n_cut (int): Requested number of cuts.

    """

    def __init__(self, cuts, n_cut):
        self.n_cut = n_cut
        self._cuts = {int(index): tuple(float(value) for value in values)
                      for index, values in cuts.items()}

    def cuts(self, column_index):
        """Cut points of a column.

        Return:
            tuple[float]: Empty for non-numeric or constant columns.

        """
        return self._cuts.get(column_index, ())

    def n_cuts(self, column_index):
        """Number of cut points actually available for a column."""
        return len(self.cuts(column_index))

    def is_cut(self, column_index, value):
        """Check whether a value is one of the cut points of a column."""
        return float(value) in self.cuts(column_index)

    def __eq__(self, other):
        return isinstance(other, BinningScheme) and self._cuts == other._cuts

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'BinningScheme(n_cut={}, {})'.format(self.n_cut, self._cuts)


def quantile_cuts(values, n_cut):
    """Equal frequency cut points of a set of values.

    Cut i is the empirical quantile at rank i/(n_cut+1) with midpoint
    interpolation. Only distinct cuts strictly between the minimum and the
    maximum are kept.

    Arguments:
        values (numpy.ndarray): Values, `NaN` entries ignored.
        n_cut (int): Number of requested cuts.

    Return:
        numpy.ndarray: Ascending cuts.

    """
    values = np.asarray(values, dtype=np.float64)
    values = values[~np.isnan(values)]
    if values.size < 2:
        return np.empty(0)
    ranks = np.arange(1, n_cut + 1) / (n_cut + 1.0)
    cuts = np.unique(np.quantile(values, ranks, method='midpoint'))
    return cuts[(cuts > values.min()) & (cuts < values.max())]


def equal_frequency_cuts(dataset, n_cut):
    """Compute the binning scheme of a dataset.

    Arguments:
        dataset (`mdlsubgroups.data.dataset.Dataset`): Dataset.
        n_cut (int): Number of cuts per numeric column.

    Return:
        BinningScheme

    Raise:
        ValueError: If `n_cut` is not positive.

    """
    if n_cut < 1:
        raise ValueError("n_cut must be at least 1, got {}".format(n_cut))
    cuts = {}
    for index, column in enumerate(dataset.columns):
        if column.is_numeric:
            cuts[index] = quantile_cuts(dataset.cells[index], n_cut)
            if not len(cuts[index]):
                logger.debug("Column %s admits no cut point", column.name)
    return BinningScheme(cuts, n_cut)

# EOF
