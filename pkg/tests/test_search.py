#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   test_search.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Test the beam search and the SSD++ miner."""
from __future__ import print_function, division, absolute_import

import numpy as np
import pytest

import mdlsubgroups.search.ssdpp  # noqa: F401, pylint: disable=unused-import
from mdlsubgroups.encoding import EncodingConfig
from mdlsubgroups.encoding.model_code import numeric_condition_count
from mdlsubgroups.model.conditions import Condition, Description
from mdlsubgroups.model.subgroup_list import SubgroupList
from mdlsubgroups.search import SearchConfig, get_miner, get_miner_names
from mdlsubgroups.search.beam import (beam_search, candidate_key, column_conditions,
                                      gain_scorer, generate_refinements)
from mdlsubgroups.search.ssdpp import ssd_plus_plus
from mdlsubgroups.toys.oracles import exhaustive_best_subgroup, recompute_total_code
from mdlsubgroups.utils.exceptions import ConfigValueError, InvalidRequestError

from conftest import make_dataset, random_dataset


@pytest.fixture
def shifted_dataset():
    """Dataset where `group = a` shifts the target by 5 standard deviations."""
    rng = np.random.default_rng(1)
    n_rows = 200
    group = rng.choice(['a', 'b', 'c'], n_rows, p=[0.2, 0.4, 0.4])
    target = rng.normal(0.0, 1.0, n_rows) + 5.0 * (group == 'a')
    return make_dataset({'noise': [repr(float(value)) for value in rng.uniform(0, 1, n_rows)],
                         'group': list(group)},
                        target, name='shifted')


@pytest.fixture
def null_dataset():
    """Target independent of every column."""
    rng = np.random.default_rng(2)
    n_rows = 300
    return make_dataset({'x': [repr(float(value)) for value in rng.uniform(0, 10, n_rows)],
                         'y': list(rng.choice(['p', 'q'], n_rows)),
                         'z': list(rng.choice(['r', 's', 't', 'u'], n_rows))},
                        rng.normal(0.0, 1.0, n_rows), name='null')


def test_search_config():
    """Test the validation of search parameters."""
    config = SearchConfig()
    assert (config.beam_width, config.max_depth, config.n_cut) == (100, 5, 5)
    assert config.gain_mode == 'normalized'
    for bad in ({'beam_width': 0}, {'max_depth': 0}, {'min_usage': 1},
                {'gain_mode': 'relative'}, {'n_cut': 2.5}):
        with pytest.raises(ConfigValueError):
            SearchConfig(**bad)


def test_miner_registry():
    """Test the miner registry."""
    assert 'ssdpp' in get_miner_names()
    assert callable(get_miner('ssdpp'))
    with pytest.raises(InvalidRequestError):
        get_miner('apriori')


# pylint: disable=W0621
def test_condition_space(shifted_dataset):
    """The search space matches the encoded condition counts."""
    config = EncodingConfig.from_dataset(shifted_dataset, 5)
    numeric = column_conditions(shifted_dataset, config.binning, 0)
    assert len(numeric) == numeric_condition_count(config.binning.n_cuts(0))
    assert len(column_conditions(shifted_dataset, config.binning, 1)) == 3
    refinements = generate_refinements(Description([Condition.equals(1, 0)]),
                                       shifted_dataset, config.binning)
    assert len(refinements) == len(numeric)
    assert all(len(description) == 2 for description in refinements)
    assert len(set(refinements)) == len(refinements)


def test_finds_planted_condition(shifted_dataset):
    """A strong single-condition effect is the first subgroup."""
    model = ssd_plus_plus(shifted_dataset, SearchConfig(beam_width=20, max_depth=2))
    group_a = shifted_dataset.label_code(1, 'a')
    assert Condition.equals(1, group_a) in model.descriptions[0].conditions
    assert model.subgroups[0].stats.mean > 4.0


def test_compression_decreases(shifted_dataset):
    """Every accepted subgroup compresses, and caches agree with a recomputation."""
    config = SearchConfig(beam_width=20, max_depth=2)
    model = ssd_plus_plus(shifted_dataset, config)
    partial = SubgroupList(shifted_dataset, model.config)
    previous = partial.code_lengths.total_bits
    for description in model.descriptions:
        candidate = beam_search(partial, shifted_dataset, config)
        assert candidate.description == description
        assert candidate.gain_per_row > 0
        partial = partial.append(description)
        assert partial.code_lengths.total_bits < previous
        previous = partial.code_lengths.total_bits
        assert recompute_total_code(partial).total_bits == \
            pytest.approx(partial.code_lengths.total_bits, abs=1e-6)
    assert beam_search(partial, shifted_dataset, config) is None


def test_null_data_gives_empty_list(null_dataset):
    """No subgroup is accepted when the target is pure noise."""
    model = ssd_plus_plus(null_dataset, SearchConfig(beam_width=20, max_depth=2))
    assert len(model) == 0
    assert model.default_mask.all()


def test_threads_do_not_change_result():
    """Parallel scoring returns the same list."""
    dataset = random_dataset(9, n_rows=300)
    single = ssd_plus_plus(dataset, SearchConfig(beam_width=10, max_depth=2))
    threaded = ssd_plus_plus(dataset, SearchConfig(beam_width=10, max_depth=2, n_threads=4))
    assert single.descriptions == threaded.descriptions
    assert single.code_lengths == threaded.code_lengths


def test_absolute_gain_mode(shifted_dataset):
    """The absolute gain ranks candidates by total compression."""
    model = ssd_plus_plus(shifted_dataset, SearchConfig(beam_width=20, max_depth=2,
                                                        gain_mode='absolute'))
    assert len(model) >= 1
    empty = SubgroupList(shifted_dataset, model.config)
    candidate = beam_search(empty, shifted_dataset,
                            SearchConfig(beam_width=20, max_depth=2, gain_mode='absolute'))
    assert candidate.score == candidate.gain_total


@pytest.mark.parametrize('seed', [0, 1, 2])
def test_beam_matches_exhaustive(seed):
    """An exhaustive-width beam finds the exhaustive argmax."""
    dataset = random_dataset(seed, n_rows=120)
    config = EncodingConfig.from_dataset(dataset, 3)
    empty = SubgroupList(dataset, config)
    oracle = exhaustive_best_subgroup(dataset, 2, config)
    found = beam_search(empty, dataset, SearchConfig(beam_width=1000, max_depth=2, n_cut=3))
    if oracle.score > 0:
        assert found.description == oracle.description
        assert candidate_key(found) == candidate_key(oracle)
    else:
        assert found is None
    score = gain_scorer(empty)
    assert score(oracle.description, oracle.usage_cover).score == oracle.score


def test_exhaustive_limits():
    """The exhaustive oracle refuses large problems."""
    dataset = random_dataset(0, n_rows=600)
    config = EncodingConfig.from_dataset(dataset, 3)
    with pytest.raises(InvalidRequestError):
        exhaustive_best_subgroup(dataset, 2, config)
    with pytest.raises(InvalidRequestError):
        exhaustive_best_subgroup(random_dataset(0), 3, config)

# EOF
