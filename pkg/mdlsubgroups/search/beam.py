#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   beam.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Level-wise beam search over descriptions.

Candidates are ranked by the total order (score desc, usage desc, number of
conditions asc, canonical description asc), so results never depend on the
order in which candidates are evaluated.

"""
from __future__ import print_function, division, absolute_import

from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor

from mdlsubgroups.data.dataset import NUMERIC
from mdlsubgroups.encoding.total import candidate_gain
from mdlsubgroups.model.conditions import Condition, Description, condition_mask
from mdlsubgroups.model.stats import gaussian_stats
from mdlsubgroups.utils.iterators import split_even
from mdlsubgroups.utils.logging_color import get_logger

logger = get_logger('mdlsubgroups.search.beam')

BeamCandidate = namedtuple('BeamCandidate', ('description', 'usage_cover', 'usage',
                                             'gain_per_row', 'gain_total', 'score'))


def candidate_key(candidate):
    """Sorting key implementing the candidate total order, best first."""
    return (-candidate.score, -candidate.usage, len(candidate.description),
            candidate.description.sort_key)


def column_conditions(dataset, binning, column_index):
    """All conditions expressible on a column.

    Equality per observed category for binary and nominal columns; `geq` and
    `leq` per cut and `between` per pair of cuts for numeric columns.

    Return:
        list[`mdlsubgroups.model.conditions.Condition`]

    """
    column = dataset.columns[column_index]
    if column.kind != NUMERIC:
        return [Condition.equals(column_index, code)
                for code in range(len(dataset.labels[column_index]))]
    cuts = binning.cuts(column_index)
    conditions = []
    for cut in cuts:
        conditions.append(Condition.geq(column_index, cut))
        conditions.append(Condition.leq(column_index, cut))
    for first, low in enumerate(cuts):
        for high in cuts[first + 1:]:
            conditions.append(Condition.between(column_index, low, high))
    return conditions


def _refinement_pairs(description, conditions_by_column):
    for column_index, conditions in conditions_by_column.items():
        if column_index in description.columns:
            continue
        for condition in conditions:
            yield condition, description.refine(condition)


def generate_refinements(candidate, dataset, binning):
    """Refine a description with one condition on each unused column.

    Arguments:
        candidate (`mdlsubgroups.model.conditions.Description`): Description to refine.
        dataset (`mdlsubgroups.data.dataset.Dataset`): Dataset.
        binning (`mdlsubgroups.data.binning.BinningScheme`): Cut points.

    Return:
        list[`mdlsubgroups.model.conditions.Description`]: Canonical and unique.

    """
    conditions_by_column = {index: column_conditions(dataset, binning, index)
                            for index in range(dataset.n_columns)}
    refinements = {refined for _, refined in _refinement_pairs(candidate, conditions_by_column)}
    return sorted(refinements, key=lambda description: description.sort_key)


def run_beam(dataset, binning, score_func, remaining_mask, beam_width, max_depth,
             min_usage=2, keep=1, n_threads=1):
    """Run a beam search with an arbitrary quality function.

    Arguments:
        dataset (`mdlsubgroups.data.dataset.Dataset`): Dataset.
        binning (`mdlsubgroups.data.binning.BinningScheme`): Cut points.
        score_func (Callable): Function of (description, usage mask) returning a
            `BeamCandidate`, or `None` if the candidate cannot be scored.
        remaining_mask (numpy.ndarray): Rows available to candidates.
        beam_width (int): Descriptions kept per level.
        max_depth (int): Maximum number of conditions.
        min_usage (int, optional): Candidates with smaller usage are discarded.
        keep (int, optional): Number of best positive-score candidates to return.
        n_threads (int, optional): Threads used to score each level.

    Return:
        list[BeamCandidate]: Best `keep` candidates with positive score, best first.

    """
    conditions_by_column = {index: column_conditions(dataset, binning, index)
                            for index in range(dataset.n_columns)}
    condition_cache = {}
    for conditions in conditions_by_column.values():
        for condition in conditions:
            condition_cache[condition] = condition_mask(condition, dataset)

    def evaluate(tasks):
        """Score a chunk of (description, parent cover, condition) tasks."""
        output = []
        for description, cover, condition in tasks:
            usage_cover = cover & condition_cache[condition]
            if int(usage_cover.sum()) < min_usage:
                continue
            candidate = score_func(description, usage_cover)
            if candidate is not None:
                output.append(candidate)
        return output

    best = []
    seen = set()
    parents = [(Description(), remaining_mask)]
    for depth in range(1, max_depth + 1):
        tasks = []
        for description, cover in parents:
            for condition, refined in _refinement_pairs(description, conditions_by_column):
                if refined not in seen:
                    seen.add(refined)
                    tasks.append((refined, cover, condition))
        if not tasks:
            break
        if n_threads > 1 and len(tasks) > n_threads:
            with ThreadPoolExecutor(max_workers=n_threads) as executor:
                results = executor.map(evaluate, split_even(tasks, n_threads))
                evaluated = [candidate for result in results for candidate in result]
        else:
            evaluated = evaluate(tasks)
        evaluated.sort(key=candidate_key)
        best = sorted(best + [candidate for candidate in evaluated[:keep]
                              if candidate.score > 0],
                      key=candidate_key)[:keep]
        logger.debug("Depth %s: %s candidates scored, %s valid", depth, len(tasks),
                     len(evaluated))
        parents = [(candidate.description, candidate.usage_cover)
                   for candidate in evaluated[:beam_width]]
        if not parents:
            break
    return best


def gain_scorer(model, gain_mode='normalized'):
    """Build a score function returning the compression gain of appending to a model.

    Arguments:
        model (`mdlsubgroups.model.subgroup_list.SubgroupList`): Current model.
        gain_mode (str, optional): `normalized` (per row) or `absolute`.

    Return:
        Callable

    """
    dataset = model.dataset
    n_subgroups = len(model)

    def score(description, usage_cover):
        """Score a candidate by its gain."""
        values = dataset.target[usage_cover]
        stats = gaussian_stats(values)
        gain, usage = candidate_gain(values, n_subgroups, description, dataset, model.config,
                                     stats)
        if usage < 2:
            return None
        gain_per_row = gain / usage
        return BeamCandidate(description, usage_cover, usage, gain_per_row, gain,
                             gain_per_row if gain_mode == 'normalized' else gain)

    return score


def beam_search(model, dataset, config, binning=None):
    """Find the best subgroup to append to a model.

    Arguments:
        model (`mdlsubgroups.model.subgroup_list.SubgroupList`): Current model.
        dataset (`mdlsubgroups.data.dataset.Dataset`): Dataset of the model.
        config (`mdlsubgroups.search.SearchConfig`): Search parameters.
        binning (`mdlsubgroups.data.binning.BinningScheme`, optional): Cut points.
            Defaults to those of the model encoding.

    Return:
        BeamCandidate: Best candidate with positive gain, or `None`.

    """
    binning = model.config.binning if binning is None else binning
    best = run_beam(dataset, binning, gain_scorer(model, config.gain_mode),
                    model.default_mask, config.beam_width, config.max_depth,
                    config.min_usage, keep=1, n_threads=config.n_threads)
    return best[0] if best else None

# EOF
