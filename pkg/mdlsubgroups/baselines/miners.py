#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   miners.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Top-k and sequential covering miners."""
from __future__ import print_function, division, absolute_import

import numpy as np

from mdlsubgroups.baselines import BaselineConfig
from mdlsubgroups.baselines.quality import wkl_mu
from mdlsubgroups.encoding.config import EncodingConfig
from mdlsubgroups.model.stats import gaussian_stats
from mdlsubgroups.model.subgroup_list import SubgroupList
from mdlsubgroups.search import register_miner
from mdlsubgroups.search.beam import BeamCandidate, run_beam
from mdlsubgroups.utils.logging_color import get_logger

logger = get_logger('mdlsubgroups.baselines.miners')


def wkl_scorer(dataset, variance_floor):
    """Build a score function returning the WKL without dispersion of a candidate."""
    def score(description, usage_cover):
        """Score a candidate by its weighted mean deviation."""
        stats = gaussian_stats(dataset.target[usage_cover])
        quality = wkl_mu(stats, dataset.theta_d, variance_floor)
        return BeamCandidate(description, usage_cover, stats.n, quality / stats.n, quality,
                             quality)

    return score


def _resolve_k(dataset, config):
    if config.k is not None:
        return config.k
    from mdlsubgroups.search.ssdpp import ssd_plus_plus
    n_subgroups = len(ssd_plus_plus(dataset, config.search))
    logger.info("Using k = %s from the SSD++ list size", max(n_subgroups, 1))
    return max(n_subgroups, 1)


def topk_miner(dataset, config=None, encoding_config=None):
    """Find the k best subgroups over the full dataset, without cover removal.

    Arguments:
        dataset (`mdlsubgroups.data.dataset.Dataset`): Dataset.
        config (`mdlsubgroups.baselines.BaselineConfig`, optional): Parameters.
        encoding_config (`mdlsubgroups.encoding.config.EncodingConfig`, optional):
            Provides the cut points and the variance floor.

    Return:
        list[tuple]: (Description, GaussianStats of the full cover), best first.

    """
    config = BaselineConfig() if config is None else config
    search = config.search
    if encoding_config is None:
        encoding_config = EncodingConfig.from_dataset(dataset, search.n_cut)
    k_value = _resolve_k(dataset, config)
    best = run_beam(dataset, encoding_config.binning,
                    wkl_scorer(dataset, encoding_config.variance_floor),
                    np.ones(dataset.n_rows, dtype=bool), search.beam_width, search.max_depth,
                    search.min_usage, keep=k_value, n_threads=search.n_threads)
    logger.info("Top-%s found %s subgroups in %s", k_value, len(best), dataset.name)
    return [(candidate.description, gaussian_stats(dataset.target[candidate.usage_cover]))
            for candidate in best]


def listify(subgroups, dataset, encoding_config):
    """Turn a ranked set of subgroups into a list, removing overlap by list order.

    Arguments:
        subgroups (list): (Description, ...) tuples in score order.
        dataset (`mdlsubgroups.data.dataset.Dataset`): Dataset.
        encoding_config (`mdlsubgroups.encoding.config.EncodingConfig`): Encoding.

    Return:
        `mdlsubgroups.model.subgroup_list.SubgroupList`

    """
    return SubgroupList.from_descriptions([subgroup[0] for subgroup in subgroups], dataset,
                                          encoding_config)


def seq_cover_miner(dataset, config=None, encoding_config=None):
    """Iteratively mine the best subgroup and remove the rows it covers.

    The dataset statistics stay fixed to the full data. Mining stops when the
    best subgroup covers fewer than `min_coverage` rows, has no positive
    quality, when fewer than `min_coverage` rows remain or when
    `max_subgroups` is reached.

    Arguments:
        dataset (`mdlsubgroups.data.dataset.Dataset`): Dataset.
        config (`mdlsubgroups.baselines.BaselineConfig`, optional): Parameters.
        encoding_config (`mdlsubgroups.encoding.config.EncodingConfig`, optional):
            Provides the cut points and the variance floor.

    Return:
        `mdlsubgroups.model.subgroup_list.SubgroupList`

    """
    config = BaselineConfig() if config is None else config
    search = config.search
    if encoding_config is None:
        encoding_config = EncodingConfig.from_dataset(dataset, search.n_cut)
    scorer = wkl_scorer(dataset, encoding_config.variance_floor)
    model = SubgroupList(dataset, encoding_config)
    while config.max_subgroups is None or len(model) < config.max_subgroups:
        if int(model.default_mask.sum()) < config.min_coverage:
            break
        best = run_beam(dataset, encoding_config.binning, scorer, model.default_mask,
                        search.beam_width, search.max_depth, search.min_usage, keep=1,
                        n_threads=search.n_threads)
        if not best or best[0].usage < config.min_coverage:
            break
        model = model.append(best[0].description, allow_small=True)
        logger.debug("Sequential covering picked %s (WKL %.4g)",
                     best[0].description.describe(dataset), best[0].score)
    logger.info("Sequential covering found %s subgroups in %s", len(model), dataset.name)
    return model


def _topk(dataset, run_config):
    """Registered top-k entry point, listified."""
    encoding_config = EncodingConfig.from_dataset(dataset, run_config.search.n_cut)
    return listify(topk_miner(dataset, run_config.baseline, encoding_config), dataset,
                   encoding_config), True


def _seqcover(dataset, run_config):
    """Registered sequential covering entry point."""
    return seq_cover_miner(dataset, run_config.baseline), False


register_miner('topk', _topk)
register_miner('seqcover', _seqcover)

# EOF
