#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   oracles.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Brute-force references for the search and the code length cache."""
from __future__ import print_function, division, absolute_import

from itertools import combinations, product

from mdlsubgroups.encoding.total import compute_code_lengths
from mdlsubgroups.model.conditions import Description, description_mask
from mdlsubgroups.model.subgroup_list import SubgroupList
from mdlsubgroups.search.beam import candidate_key, column_conditions, gain_scorer
from mdlsubgroups.utils.exceptions import InvalidRequestError

MAX_COLUMNS = 6
MAX_ROWS = 500
MAX_DEPTH = 2


def exhaustive_best_subgroup(dataset, d_max, config, min_usage=2):
    """Best first subgroup by normalized gain, enumerating every description.

    Arguments:
        dataset (`mdlsubgroups.data.dataset.Dataset`): Small dataset.
        d_max (int): Maximum number of conditions, at most 2.
        config (`mdlsubgroups.encoding.config.EncodingConfig`): Encoding parameters.
        min_usage (int, optional): Minimum usage of a candidate.

    Return:
        `mdlsubgroups.search.beam.BeamCandidate`: Argmax under the candidate order,
            whatever the sign of its gain, or `None` if no description reaches
            `min_usage`.

    Raise:
        InvalidRequestError: If the dataset or depth is too large to enumerate.

    """
    if dataset.n_columns > MAX_COLUMNS or dataset.n_rows > MAX_ROWS or d_max > MAX_DEPTH:
        raise InvalidRequestError("Exhaustive search is limited to {} columns, {} rows and "
                                  "depth {}".format(MAX_COLUMNS, MAX_ROWS, MAX_DEPTH))
    score = gain_scorer(SubgroupList(dataset, config), 'normalized')
    conditions = [column_conditions(dataset, config.binning, index)
                  for index in range(dataset.n_columns)]
    best = None
    for depth in range(1, d_max + 1):
        for columns in combinations(range(dataset.n_columns), depth):
            for chosen in product(*(conditions[index] for index in columns)):
                description = Description(chosen)
                usage_cover = description_mask(description, dataset)
                if int(usage_cover.sum()) < min_usage:
                    continue
                candidate = score(description, usage_cover)
                if candidate is None:
                    continue
                if best is None or candidate_key(candidate) < candidate_key(best):
                    best = candidate
    return best


def recompute_total_code(model, dataset=None, config=None):
    """Code lengths of a model recomputed from its descriptions, ignoring caches.

    Return:
        `mdlsubgroups.encoding.config.CodeLengths`

    """
    return compute_code_lengths(model,
                                model.dataset if dataset is None else dataset,
                                model.config if config is None else config)

# EOF
