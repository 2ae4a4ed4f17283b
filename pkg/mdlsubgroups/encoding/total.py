#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   total.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Total code length of a model and compression gain of a candidate."""
from __future__ import print_function, division, absolute_import

from mdlsubgroups.encoding.config import CodeLengths
from mdlsubgroups.encoding.data_code import (SubgroupCode, gaussian_fixed_code_from_rss,
                                             subgroup_code)
from mdlsubgroups.encoding.model_code import description_code, model_code, subgroup_count_code
from mdlsubgroups.model.conditions import description_mask
from mdlsubgroups.model.stats import gaussian_stats

NO_GAIN = float('-inf')


def default_code(stats, theta_d, config):
    """Code length of values encoded with the fixed dataset distribution.

    Arguments:
        stats (`mdlsubgroups.model.stats.GaussianStats`): Statistics of the values.
        theta_d (`mdlsubgroups.model.stats.GaussianStats`): Dataset statistics.
        config (`mdlsubgroups.encoding.config.EncodingConfig`): Encoding parameters.

    Return:
        float: Bits.

    """
    return float(gaussian_fixed_code_from_rss(stats.n, stats.rss_around(theta_d.mean),
                                              theta_d.floored_variance(config.variance_floor)))


def usage_code(values, theta_d, config, stats=None):
    """Code length of a subgroup usage.

    Empty usages cost nothing and single rows use the dataset distribution.

    Return:
        `mdlsubgroups.encoding.data_code.SubgroupCode`

    """
    if stats is None:
        stats = gaussian_stats(values)
    if stats.n < 2:
        return SubgroupCode(default_code(stats, theta_d, config), 0.0, False)
    return subgroup_code(values, theta_d, config, stats)


def compute_code_lengths(model, dataset, config):
    """Compute the code lengths of a model from scratch.

    Covers, statistics and codes are re-evaluated from the descriptions; no
    cached value of the model is used.

    Return:
        `mdlsubgroups.encoding.config.CodeLengths`

    """
    from mdlsubgroups.model.subgroup_list import list_covers
    covers, default_rows = list_covers(model, dataset)
    theta_d = dataset.theta_d
    per_subgroup = [usage_code(dataset.target[rows], theta_d, config).bits for rows in covers]
    default_bits = default_code(gaussian_stats(dataset.target[default_rows]), theta_d, config)
    return CodeLengths.build(model_code(model, dataset, config), per_subgroup, default_bits)


def total_code(model, dataset=None, config=None):
    """Two-part code length of a model and the data.

    The lengths are cached on the model when computed with its own dataset
    and configuration.

    Arguments:
        model (`mdlsubgroups.model.subgroup_list.SubgroupList`): Model.
        dataset (`mdlsubgroups.data.dataset.Dataset`, optional): Defaults to the
            model dataset.
        config (`mdlsubgroups.encoding.config.EncodingConfig`, optional): Defaults to
            the model configuration.

    Return:
        `mdlsubgroups.encoding.config.CodeLengths`

    """
    dataset = model.dataset if dataset is None else dataset
    config = model.config if config is None else config
    own = dataset is model.dataset and config is model.config
    if own and model.code_lengths is not None:
        return model.code_lengths
    code_lengths = compute_code_lengths(model, dataset, config)
    if own:
        model.code_lengths = code_lengths
    return code_lengths


def candidate_gain(values, n_subgroups, description, dataset, config, stats=None):
    """Compression gained by appending a subgroup to a list.

    `values` are the target values of the rows the candidate takes from the
    default rule. The gain is exact: appending changes no earlier usage.

    Arguments:
        values (numpy.ndarray): Candidate usage target values.
        n_subgroups (int): Subgroups in the list before appending.
        description (`mdlsubgroups.model.conditions.Description`): Candidate.
        dataset (`mdlsubgroups.data.dataset.Dataset`): Dataset.
        config (`mdlsubgroups.encoding.config.EncodingConfig`): Encoding parameters.
        stats (`mdlsubgroups.model.stats.GaussianStats`, optional): Statistics of `values`.

    Return:
        tuple: (gain in bits, usage). The gain is `-inf` for usages below 2.

    """
    if stats is None:
        stats = gaussian_stats(values)
    if stats.n < 2:
        return NO_GAIN, stats.n
    theta_d = dataset.theta_d
    data_gain = default_code(stats, theta_d, config) - subgroup_code(values, theta_d, config,
                                                                     stats).bits
    model_cost = (subgroup_count_code(n_subgroups + 1) - subgroup_count_code(n_subgroups)
                  + description_code(description, dataset, config))
    return data_gain - model_cost, stats.n


def normalized_gain(model, candidate, dataset=None, config=None):
    """Compression gain per covered row of appending a candidate to a model.

    Arguments:
        model (`mdlsubgroups.model.subgroup_list.SubgroupList`): Current model.
        candidate (`mdlsubgroups.model.conditions.Description`): Candidate description.
        dataset (`mdlsubgroups.data.dataset.Dataset`, optional): Defaults to the
            model dataset.
        config (`mdlsubgroups.encoding.config.EncodingConfig`, optional): Defaults to
            the model configuration.

    Return:
        tuple: (gain per row, usage). Gain per row is `-inf` for usages below 2.

    """
    dataset = model.dataset if dataset is None else dataset
    config = model.config if config is None else config
    rows = description_mask(candidate, dataset) & model.default_mask
    gain, usage = candidate_gain(dataset.target[rows], len(model), candidate, dataset, config)
    if usage < 2:
        return NO_GAIN, usage
    return gain / usage, usage

# EOF
