#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   subgroup_list.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Ordered subgroup lists with a fixed default rule."""
from __future__ import print_function, division, absolute_import

from collections import namedtuple

import numpy as np

from mdlsubgroups.encoding.config import CodeLengths
from mdlsubgroups.encoding.model_code import description_code, subgroup_count_code
from mdlsubgroups.encoding.total import default_code, usage_code
from mdlsubgroups.model.conditions import description_mask
from mdlsubgroups.model.stats import gaussian_stats
from mdlsubgroups.utils.exceptions import DataError
from mdlsubgroups.utils.logging_color import get_logger

logger = get_logger('mdlsubgroups.model.subgroup_list')


class Subgroup(namedtuple('Subgroup', ('description', 'stats', 'usage', 'data_bits', 'l_cost',
                                       'degenerate'))):
    """Member of a subgroup list.

    Attributes:
        description (`mdlsubgroups.model.conditions.Description`): Description.
        stats (`mdlsubgroups.model.stats.GaussianStats`): Statistics of the usage.
        usage (numpy.ndarray): Boolean mask of the rows assigned to the subgroup.
        data_bits (float): Code length of the usage target values.
        l_cost (float): Conditioning cost included in `data_bits`.
        degenerate (bool): The variance floor was applied.

    """

    __slots__ = ()

    @property
    def n(self):
        """int: Usage size."""
        return self.stats.n

    @property
    def rows(self):
        """numpy.ndarray: Indices of the rows assigned to the subgroup."""
        return np.flatnonzero(self.usage)


class SubgroupList(object):
    """Ordered subgroups followed by the dataset distribution as default rule.

    Lists are immutable: `append` returns a new list, whose code lengths are
    derived from the parent's without re-encoding earlier subgroups.

    Arguments:
        dataset (`mdlsubgroups.data.dataset.Dataset`): Dataset.
        config (`mdlsubgroups.encoding.config.EncodingConfig`): Encoding parameters.

    """

    def __init__(self, dataset, config):
        self.dataset = dataset
        self.config = config
        self.subgroups = ()
        self.default_mask = np.ones(dataset.n_rows, dtype=bool)
        self.default_mask.setflags(write=False)
        self.default_stats = dataset.theta_d
        self.code_lengths = CodeLengths.build(
            subgroup_count_code(0), (),
            default_code(dataset.theta_d, dataset.theta_d, config))

    @property
    def descriptions(self):
        """list: Descriptions in list order."""
        return [subgroup.description for subgroup in self.subgroups]

    def append(self, description, allow_small=False):
        """Append a subgroup taking rows from the default rule.

        Arguments:
            description (`mdlsubgroups.model.conditions.Description`): Description.
            allow_small (bool, optional): Accept usages below 2, as produced when
                turning sets of subgroups into lists. Defaults to False.

        Return:
            SubgroupList: New list.

        Raise:
            DataError: If the usage is below 2 and `allow_small` is not set.

        """
        dataset = self.dataset
        usage = description_mask(description, dataset) & self.default_mask
        values = dataset.target[usage]
        stats = gaussian_stats(values)
        if stats.n < 2 and not allow_small:
            raise DataError("Subgroup {} covers {} remaining rows".format(
                description.describe(dataset), stats.n))
        code = usage_code(values, dataset.theta_d, self.config, stats)
        usage.setflags(write=False)
        new = SubgroupList.__new__(SubgroupList)
        new.dataset = dataset
        new.config = self.config
        new.subgroups = self.subgroups + (Subgroup(description, stats, usage, code.bits,
                                                   code.l_cost, code.degenerate),)
        new.default_mask = self.default_mask & ~usage
        new.default_mask.setflags(write=False)
        new.default_stats = dataset.theta_d
        old = self.code_lengths
        model_bits = (old.model_bits
                      + subgroup_count_code(len(new.subgroups))
                      - subgroup_count_code(len(self.subgroups))
                      + description_code(description, dataset, self.config))
        default_bits = old.default_data_bits - default_code(stats, dataset.theta_d, self.config)
        new.code_lengths = CodeLengths.build(model_bits,
                                             old.per_subgroup_data_bits + (code.bits,),
                                             default_bits)
        return new

    @classmethod
    def from_descriptions(cls, descriptions, dataset, config):
        """Build a list from descriptions in order, accepting any usage.

        Return:
            SubgroupList

        """
        model = cls(dataset, config)
        for description in descriptions:
            model = model.append(description, allow_small=True)
        return model

    def __len__(self):
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    def __repr__(self):
        return 'SubgroupList({} subgroups, {:.3f} bits)'.format(len(self),
                                                               self.code_lengths.total_bits)


def list_covers(model, dataset=None):
    """Assign every row to the first subgroup whose description matches it.

    Arguments:
        model (SubgroupList): Model.
        dataset (`mdlsubgroups.data.dataset.Dataset`, optional): Defaults to the
            model dataset.

    Return:
        tuple: (list of per-subgroup row index arrays, default row index array).

    """
    dataset = model.dataset if dataset is None else dataset
    remaining = np.ones(dataset.n_rows, dtype=bool)
    covers = []
    condition_cache = {}
    for description in model.descriptions:
        usage = description_mask(description, dataset, condition_cache) & remaining
        remaining &= ~usage
        covers.append(np.flatnonzero(usage))
    return covers, np.flatnonzero(remaining)

# EOF
