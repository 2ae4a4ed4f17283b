#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   test_acceptance.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Acceptance checks of the encoding and the miners, end to end."""
from __future__ import print_function, division, absolute_import

import numpy as np
import pytest

from mdlsubgroups.baselines import BaselineConfig
from mdlsubgroups.baselines.miners import listify, seq_cover_miner, topk_miner
from mdlsubgroups.encoding.config import EncodingConfig
from mdlsubgroups.encoding.data_code import LOG2_E, bayes_gaussian_code, gaussian_fixed_code
from mdlsubgroups.metrics import compression_ratio, kl_normal, swkl
from mdlsubgroups.model.conditions import Condition, Description
from mdlsubgroups.model.result import ModelResult
from mdlsubgroups.model.stats import gaussian_stats
from mdlsubgroups.model.subgroup_list import SubgroupList
from mdlsubgroups.search import SearchConfig
from mdlsubgroups.search.ssdpp import ssd_plus_plus
from mdlsubgroups.toys.oracles import exhaustive_best_subgroup, recompute_total_code
from mdlsubgroups.toys.planted import generate_planted

from conftest import jaccard, make_dataset, planted_spec, random_dataset

EXHAUSTIVE_SEARCH = SearchConfig(beam_width=1000, max_depth=2, n_cut=3)


def check_compression_path(model):
    """Every prefix of the list compresses more than the previous one."""
    prefix = SubgroupList(model.dataset, model.config)
    for description in model.descriptions:
        previous = prefix.code_lengths.total_bits
        prefix = prefix.append(description)
        assert prefix.code_lengths.total_bits < previous
        assert prefix.code_lengths.total_bits == pytest.approx(
            recompute_total_code(prefix).total_bits, abs=1e-6)
    assert model.code_lengths.total_bits == pytest.approx(prefix.code_lengths.total_bits,
                                                          abs=1e-6)


@pytest.fixture(scope='module')
def planted():
    """Three disjoint planted subgroups in 5000 rows."""
    return generate_planted(planted_spec())


def test_bayes_code_bic_limit():
    """The Bayesian code exceeds the ML fixed code by log2 n asymptotically."""
    rng = np.random.default_rng(2)
    distances, gaps = [], []
    for n_values in (100, 1000, 10000):
        values = rng.standard_normal(n_values)
        stats = gaussian_stats(values)
        excess = (bayes_gaussian_code(stats)
                  - gaussian_fixed_code(values, stats.mean, stats.variance))
        distances.append(abs(excess - np.log2(n_values / np.e)))
        gaps.append(abs(excess - np.log2(n_values)))
    assert distances[0] > distances[1] > distances[2]
    assert gaps[0] > gaps[1] > gaps[2]
    assert gaps[2] <= 1.0
    assert distances[2] == pytest.approx(LOG2_E, abs=0.01)


@pytest.mark.parametrize('n_planted', [1000, 10000])
def test_single_subgroup_saving_is_weighted_kl(n_planted):
    """Data bits saved by one subgroup follow its weighted KL divergence."""
    rng = np.random.default_rng(n_planted)
    n_rows = 4 * n_planted
    target = np.concatenate([rng.normal(2.0, 0.5, n_planted),
                             rng.normal(0.0, 1.0, n_rows - n_planted)])
    dataset = make_dataset({'flag': ['a'] * n_planted + ['b'] * (n_rows - n_planted)}, target)
    config = EncodingConfig.from_dataset(dataset)
    empty = SubgroupList(dataset, config)
    model = empty.append(Description([Condition.equals(0, dataset.label_code(0, 'a'))]))
    subgroup = model.subgroups[0]
    assert subgroup.n == n_planted
    saving = empty.code_lengths.data_bits - model.code_lengths.data_bits
    expected = (n_planted * kl_normal(subgroup.stats, dataset.theta_d)
                - np.log2(n_planted))
    assert abs(saving - expected) / empty.code_lengths.data_bits <= 0.01
    assert abs(saving - expected) < abs(subgroup.l_cost) + 5.0


@pytest.mark.parametrize('seed', range(20))
def test_first_subgroup_matches_exhaustive(seed):
    """With an exhaustive-width beam the first subgroup is the exhaustive argmax."""
    dataset = random_dataset(100 + seed, n_rows=200)
    config = EncodingConfig.from_dataset(dataset, EXHAUSTIVE_SEARCH.n_cut)
    oracle = exhaustive_best_subgroup(dataset, EXHAUSTIVE_SEARCH.max_depth, config)
    model = ssd_plus_plus(dataset, EXHAUSTIVE_SEARCH)
    if oracle is None or oracle.score <= 0:
        assert not len(model)
    else:
        assert model.descriptions[0] == oracle.description
    check_compression_path(model)


# pylint: disable=W0621
def test_planted_recovery(planted):
    """SSD++ and sequential covering recover the planted subgroups."""
    dataset, covers, _ = planted
    model = ssd_plus_plus(dataset)
    for cover in covers:
        assert max(jaccard(subgroup.usage, cover) for subgroup in model) >= 0.9
    check_compression_path(model)
    assert compression_ratio(model) < 1.0
    seq_model = seq_cover_miner(dataset, BaselineConfig())
    for cover in covers:
        assert max(jaccard(subgroup.usage, cover) for subgroup in seq_model) >= 0.9
    topk_config = BaselineConfig(k=max(len(model), 1))
    topk_model = listify(topk_miner(dataset, topk_config, model.config), dataset, model.config)
    assert swkl(model) >= swkl(topk_model) - 1e-6


def test_null_data_does_not_compress():
    """Pure noise gives the empty list."""
    rng = np.random.default_rng(11)
    n_rows = 300
    dataset = make_dataset({'x0': [repr(float(value)) for value in rng.uniform(0, 1, n_rows)],
                            'x1': list(rng.choice(['p', 'q'], n_rows)),
                            'x2': list(rng.choice(['a', 'b', 'c'], n_rows))},
                           rng.normal(0.0, 1.0, n_rows))
    model = ssd_plus_plus(dataset)
    assert not len(model)
    assert compression_ratio(model) == pytest.approx(1.0)


def test_model_bytes_are_reproducible():
    """Identical seeds give byte-identical model documents."""
    outputs = []
    for _ in range(2):
        dataset, _, _ = generate_planted(planted_spec(n_rows=1000))
        model = ssd_plus_plus(dataset)
        outputs.append(ModelResult.from_model(model, 'ssdpp').to_json())
    oracle_outputs = [ModelResult.from_model(ssd_plus_plus(random_dataset(3, n_rows=200),
                                                           EXHAUSTIVE_SEARCH),
                                             'ssdpp').to_json()
                      for _ in range(2)]
    assert outputs[0] == outputs[1]
    assert oracle_outputs[0] == oracle_outputs[1]

# EOF
