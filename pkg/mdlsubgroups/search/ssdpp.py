#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   ssdpp.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Greedy subgroup list construction by compression."""
from __future__ import print_function, division, absolute_import

from mdlsubgroups.encoding.config import EncodingConfig
from mdlsubgroups.model.result import format_statistics
from mdlsubgroups.model.subgroup_list import SubgroupList
from mdlsubgroups.search import SearchConfig, register_miner
from mdlsubgroups.search.beam import beam_search
from mdlsubgroups.utils.logging_color import get_logger

logger = get_logger('mdlsubgroups.search.ssdpp')


def ssd_plus_plus(dataset, config=None, encoding_config=None):
    """Mine a subgroup list.

    Starting from the empty list, the best candidate of a beam search on the
    rows still in the default rule is appended while it compresses the data.

    Arguments:
        dataset (`mdlsubgroups.data.dataset.Dataset`): Dataset.
        config (`mdlsubgroups.search.SearchConfig`, optional): Search parameters.
        encoding_config (`mdlsubgroups.encoding.config.EncodingConfig`, optional):
            Encoding parameters. Built from the dataset with `config.n_cut` by default.

    Return:
        `mdlsubgroups.model.subgroup_list.SubgroupList`

    """
    config = SearchConfig() if config is None else config
    if encoding_config is None:
        encoding_config = EncodingConfig.from_dataset(dataset, config.n_cut)
    model = SubgroupList(dataset, encoding_config)
    logger.debug("Empty model: %.3f bits", model.code_lengths.total_bits)
    while True:
        candidate = beam_search(model, dataset, config)
        if candidate is None:
            break
        previous_bits = model.code_lengths.total_bits
        model = model.append(candidate.description)
        subgroup = model.subgroups[-1]
        logger.info("Subgroup %s: %s [%s], gain %.4g bits/row, total %.3f -> %.3f bits",
                    len(model), candidate.description.describe(dataset),
                    format_statistics(subgroup.n, subgroup.stats.mean, subgroup.stats.std),
                    candidate.gain_per_row, previous_bits, model.code_lengths.total_bits)
    logger.info("Found %s subgroups in %s", len(model), dataset.name)
    return model


def _ssdpp_miner(dataset, run_config):
    """Registered entry point."""
    return ssd_plus_plus(dataset, run_config.search), False


register_miner('ssdpp', _ssdpp_miner)

# EOF
