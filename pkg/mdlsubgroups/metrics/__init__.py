#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   __init__.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Evaluation measures of subgroup lists.

All divergences are in bits.

"""
from __future__ import print_function, division, absolute_import

from itertools import combinations

import numpy as np

from mdlsubgroups.encoding.data_code import LOG2_E
from mdlsubgroups.encoding.total import total_code
from mdlsubgroups.model.conditions import description_mask
from mdlsubgroups.model.subgroup_list import SubgroupList
from mdlsubgroups.utils.exceptions import EncodingError


def kl_normal(p_stats, q_stats, variance_floor=0.0):
    """Kullback-Leibler divergence of normal `q` from normal `p`.

    Arguments:
        p_stats (`mdlsubgroups.model.stats.GaussianStats`): Distribution `p`.
        q_stats (`mdlsubgroups.model.stats.GaussianStats`): Distribution `q`.
        variance_floor (float, optional): Lower bound of both variances.

    Return:
        float: Divergence, never negative.

    Raise:
        EncodingError: If a floored variance is 0.

    """
    var_p = p_stats.floored_variance(variance_floor)
    var_q = q_stats.floored_variance(variance_floor)
    if not (var_p > 0 and var_q > 0):
        raise EncodingError("KL divergence needs positive variances")
    divergence = (-0.5 * LOG2_E + 0.5 * np.log2(var_q / var_p)
                  + (var_p + (p_stats.mean - q_stats.mean) ** 2) / (2.0 * var_q) * LOG2_E)
    return max(float(divergence), 0.0)


def swkl(model):
    """Sum of usage-weighted KL divergences of a list from the dataset distribution.

    Arguments:
        model (`mdlsubgroups.model.subgroup_list.SubgroupList`): Model.

    Return:
        float

    """
    theta_d = model.dataset.theta_d
    floor = model.config.variance_floor
    return float(sum(subgroup.n * kl_normal(subgroup.stats, theta_d, floor)
                     for subgroup in model if subgroup.n))


def avg_jaccard(descriptions, dataset):
    """Average pairwise Jaccard index of independent full-data covers.

    Pairs of empty covers count as 0. Fewer than two descriptions give 0.

    Return:
        float

    """
    masks = [description_mask(description, dataset) for description in descriptions]
    if len(masks) < 2:
        return 0.0
    values = []
    for first, second in combinations(masks, 2):
        union = int((first | second).sum())
        values.append(int((first & second).sum()) / union if union else 0.0)
    return float(np.mean(values))


def compression_ratio(model, dataset=None, config=None):
    """Total code length relative to the empty list.

    Return:
        float

    """
    dataset = model.dataset if dataset is None else dataset
    config = model.config if config is None else config
    empty = SubgroupList(dataset, config)
    return total_code(model, dataset, config).total_bits / total_code(empty).total_bits

# EOF
