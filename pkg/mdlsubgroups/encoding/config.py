#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   config.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Encoding parameters and code length containers."""
from __future__ import print_function, division, absolute_import

from collections import namedtuple

from mdlsubgroups.data.binning import equal_frequency_cuts
from mdlsubgroups.utils.exceptions import ConfigValueError


class EncodingConfig(namedtuple('EncodingConfig', ('n_cut', 'tau', 'variance_floor', 'binning'))):
    """Parameters shared by every code length computation.

    Attributes:
        n_cut (int): Requested number of cut points per numeric column.
        tau (float): Scale of the effect size prior, always 1.
        variance_floor (float): Minimum variance, `resolution**2 / 12`.
        binning (`mdlsubgroups.data.binning.BinningScheme`): Cut points.

    """

    __slots__ = ()

    def __new__(cls, n_cut, tau, variance_floor, binning):
        if tau != 1:
            raise ConfigValueError("Only tau = 1 is supported, got {}".format(tau))
        if not variance_floor > 0:
            raise ConfigValueError("Variance floor must be positive")
        return super(EncodingConfig, cls).__new__(cls, int(n_cut), 1, float(variance_floor),
                                                  binning)

    @classmethod
    def from_dataset(cls, dataset, n_cut=5):
        """Build the configuration of a dataset.

        Arguments:
            dataset (`mdlsubgroups.data.dataset.Dataset`): Dataset.
            n_cut (int, optional): Cut points per numeric column. Defaults to 5.

        Return:
            EncodingConfig

        """
        return cls(n_cut, 1, dataset.resolution ** 2 / 12.0,
                   equal_frequency_cuts(dataset, n_cut))


class CodeLengths(namedtuple('CodeLengths', ('model_bits', 'data_bits', 'total_bits',
                                             'per_subgroup_data_bits', 'default_data_bits'))):
    """Two-part code length of a model and of the data given the model."""

    __slots__ = ()

    @classmethod
    def build(cls, model_bits, per_subgroup_data_bits, default_data_bits):
        """Assemble code lengths from their parts."""
        per_subgroup_data_bits = tuple(float(bits) for bits in per_subgroup_data_bits)
        data_bits = sum(per_subgroup_data_bits) + float(default_data_bits)
        return cls(float(model_bits), data_bits, float(model_bits) + data_bits,
                   per_subgroup_data_bits, float(default_data_bits))

# EOF
