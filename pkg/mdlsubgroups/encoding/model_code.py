#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   model_code.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Code length of a subgroup list."""
from __future__ import print_function, division, absolute_import

import numpy as np
from scipy.special import gammaln

from mdlsubgroups.data.dataset import BINARY, NOMINAL
from mdlsubgroups.utils.exceptions import EncodingError

UNIVERSAL_CONSTANT = 2.865064


def universal_int_code(integer):
    """Universal code length of a positive integer.

    `log2(k0) + log2(i) + log2(log2(i)) + ...`, summing positive terms only.

    Arguments:
        integer (int): Value to encode, at least 1.

    Return:
        float: Bits.

    Raise:
        EncodingError: If `integer < 1`.

    """
    if integer < 1:
        raise EncodingError("The universal code is defined for i >= 1, got {}".format(integer))
    bits = np.log2(UNIVERSAL_CONSTANT)
    term = np.log2(float(integer))
    while term > 0:
        bits += term
        term = np.log2(term)
    return float(bits)


def log2_binomial(total, chosen):
    """Base-2 logarithm of the binomial coefficient."""
    return float((gammaln(total + 1) - gammaln(chosen + 1) - gammaln(total - chosen + 1))
                 / np.log(2))


def numeric_condition_count(n_cuts):
    """Number of expressible conditions with `n_cuts` cut points: 2c + c(c-1)/2."""
    return 2 * n_cuts + n_cuts * (n_cuts - 1) // 2


def condition_code(column, config, cuts_available):
    """Code length of the value of a condition on a column.

    Arguments:
        column (`mdlsubgroups.data.dataset.ColumnSchema`): Column.
        config (`mdlsubgroups.encoding.config.EncodingConfig`): Encoding parameters.
        cuts_available (int): Cut points of the column.

    Return:
        float: Bits.

    Raise:
        EncodingError: If a numeric column has no cut point.

    """
    if column.kind == BINARY:
        return 1.0
    if column.kind == NOMINAL:
        return float(np.log2(column.domain_size))
    if cuts_available < 1:
        raise EncodingError("No condition can be expressed on constant column {}".format(
            column.name))
    return float(np.log2(numeric_condition_count(cuts_available)))


def description_code(description, dataset, config):
    """Code length of one description: `L_N(|a|) + log2 C(|V|, |a|) + sum L(v)`.

    Raise:
        EncodingError: If the description uses more columns than available.

    """
    size = len(description)
    if size > dataset.n_columns:
        raise EncodingError("Description uses {} of {} columns".format(size, dataset.n_columns))
    bits = universal_int_code(size) + log2_binomial(dataset.n_columns, size) if size else 0.0
    for condition in description:
        bits += condition_code(dataset.columns[condition.column_index], config,
                               config.binning.n_cuts(condition.column_index))
    return bits


def subgroup_count_code(n_subgroups):
    """Code length of the number of subgroups, shifted by one so 0 is encodable."""
    return universal_int_code(n_subgroups + 1)


def model_code(model, dataset, config):
    """Code length of a subgroup list.

    Arguments:
        model (`mdlsubgroups.model.subgroup_list.SubgroupList`): Model.
        dataset (`mdlsubgroups.data.dataset.Dataset`): Dataset.
        config (`mdlsubgroups.encoding.config.EncodingConfig`): Encoding parameters.

    Return:
        float: Bits.

    """
    descriptions = model.descriptions
    return subgroup_count_code(len(descriptions)) + sum(
        description_code(description, dataset, config) for description in descriptions)

# EOF
