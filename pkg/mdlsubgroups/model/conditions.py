#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   conditions.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Conditions, descriptions and their covers."""
from __future__ import print_function, division, absolute_import

import math
from collections import namedtuple

import numpy as np

from mdlsubgroups.data.dataset import MISSING_CODE
from mdlsubgroups.utils.exceptions import DataError

EQUALS = 'eq'
GEQ = 'geq'
LEQ = 'leq'
BETWEEN = 'between'
OPERATORS = (EQUALS, GEQ, LEQ, BETWEEN)
_OPERATOR_RANK = {operator: rank for rank, operator in enumerate(OPERATORS)}
_SYMBOLS = {GEQ: '>=', LEQ: '<='}


class Condition(namedtuple('Condition', ('column_index', 'operator', 'values'))):
    """Test on a single column.

    `values` holds the category code for `eq`, the threshold for `geq` and
    `leq` and the `(lo, hi)` bounds for `between`.

    """

    __slots__ = ()

    def __new__(cls, column_index, operator, values):
        if operator not in OPERATORS:
            raise ValueError("Unknown operator -> {}".format(operator))
        if not isinstance(values, (tuple, list)):
            values = (values,)
        if operator == EQUALS:
            values = tuple(int(value) for value in values)
        else:
            values = tuple(float(value) for value in values)
        if len(values) != (2 if operator == BETWEEN else 1):
            raise ValueError("Wrong number of values for {} -> {}".format(operator, values))
        if operator == BETWEEN and not values[0] < values[1]:
            raise ValueError("Interval bounds must satisfy lo < hi -> {}".format(values))
        return super(Condition, cls).__new__(cls, int(column_index), operator, values)

    @classmethod
    def equals(cls, column_index, code):
        """Build an equality condition."""
        return cls(column_index, EQUALS, (code,))

    @classmethod
    def geq(cls, column_index, threshold):
        """Build a lower bound condition."""
        return cls(column_index, GEQ, (threshold,))

    @classmethod
    def leq(cls, column_index, threshold):
        """Build an upper bound condition."""
        return cls(column_index, LEQ, (threshold,))

    @classmethod
    def between(cls, column_index, low, high):
        """Build a closed interval condition."""
        return cls(column_index, BETWEEN, (low, high))

    @property
    def sort_key(self):
        """tuple: Canonical ordering key."""
        return (self.column_index, _OPERATOR_RANK[self.operator], self.values)

    def validate(self, dataset, binning=None):
        """Check the condition is expressible on a dataset.

        Arguments:
            dataset (`mdlsubgroups.data.dataset.Dataset`): Dataset.
            binning (`mdlsubgroups.data.binning.BinningScheme`, optional): If given,
                thresholds must be cut points.

        Return:
            bool: Whether every threshold is a cut point (always True without binning).

        Raise:
            DataError: If the condition does not fit the column type.

        """
        if not 0 <= self.column_index < dataset.n_columns:
            raise DataError("Column index out of range -> {}".format(self.column_index))
        column = dataset.columns[self.column_index]
        if column.is_numeric == (self.operator == EQUALS):
            raise DataError("Operator {} not allowed on {} column {}".format(self.operator,
                                                                            column.kind,
                                                                            column.name))
        if self.operator == EQUALS:
            if not 0 <= self.values[0] < column.domain_size:
                raise DataError("Category code {} out of range for {}".format(self.values[0],
                                                                             column.name))
            return True
        if binning is None:
            return True
        return all(binning.is_cut(self.column_index, value) for value in self.values)

    def describe(self, dataset):
        """Human readable form, such as `month = 9` or `2.5 <= x <= 7`."""
        column = dataset.columns[self.column_index]
        if self.operator == EQUALS:
            labels = dataset.labels[self.column_index]
            code = self.values[0]
            label = labels[code] if labels is not None and code < len(labels) else code
            return '{} = {}'.format(column.name, label)
        if self.operator == BETWEEN:
            return '{:g} <= {} <= {:g}'.format(self.values[0], column.name, self.values[1])
        return '{} {} {:g}'.format(column.name, _SYMBOLS[self.operator], self.values[0])


def condition_matches(condition, row):
    """Evaluate a condition on a single row.

    Missing cells never match.

    Arguments:
        condition (Condition): Condition.
        row (sequence): One value per column.

    Return:
        bool

    """
    value = row[condition.column_index]
    if condition.operator == EQUALS:
        return value is not None and value != MISSING_CODE and int(value) == condition.values[0]
    if value is None or math.isnan(value):
        return False
    if condition.operator == GEQ:
        return value >= condition.values[0]
    if condition.operator == LEQ:
        return value <= condition.values[0]
    return condition.values[0] <= value <= condition.values[1]


def condition_mask(condition, dataset):
    """Rows of a dataset where a condition holds.

    Return:
        numpy.ndarray: Boolean mask.

    """
    values = dataset.cells[condition.column_index]
    if condition.operator == EQUALS:
        return values == condition.values[0]
    with np.errstate(invalid='ignore'):
        if condition.operator == GEQ:
            return values >= condition.values[0]
        if condition.operator == LEQ:
            return values <= condition.values[0]
        return (values >= condition.values[0]) & (values <= condition.values[1])


class Description(object):
    """Conjunction of conditions, at most one per column.

    Conditions are kept sorted by column, so equal descriptions compare equal
    and hash equally regardless of the input order.

    Arguments:
        conditions (iterable[Condition], optional): Conditions.

    Raise:
        ValueError: If two conditions share a column.

    """

    __slots__ = ('conditions', '_hash')

    def __init__(self, conditions=()):
        conditions = tuple(sorted(conditions, key=lambda cond: cond.sort_key))
        columns = [condition.column_index for condition in conditions]
        if len(set(columns)) != len(columns):
            raise ValueError("At most one condition per column is allowed")
        self.conditions = conditions
        self._hash = hash(conditions)

    @property
    def columns(self):
        """frozenset[int]: Columns used."""
        return frozenset(condition.column_index for condition in self.conditions)

    @property
    def sort_key(self):
        """tuple: Canonical ordering key."""
        return tuple(condition.sort_key for condition in self.conditions)

    def refine(self, condition):
        """New description with one more condition."""
        return Description(self.conditions + (condition,))

    def describe(self, dataset):
        """Human readable conjunction."""
        if not self.conditions:
            return 'dataset'
        return ' & '.join(condition.describe(dataset) for condition in self.conditions)

    def __len__(self):
        return len(self.conditions)

    def __iter__(self):
        return iter(self.conditions)

    def __eq__(self, other):
        return isinstance(other, Description) and self.conditions == other.conditions

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return 'Description({})'.format(list(self.conditions))


def description_matches(description, row):
    """Evaluate a description on a single row. The empty description matches everything."""
    return all(condition_matches(condition, row) for condition in description)


def description_mask(description, dataset, condition_cache=None):
    """Full-data cover of a description.

    Arguments:
        description (Description): Description.
        dataset (`mdlsubgroups.data.dataset.Dataset`): Dataset.
        condition_cache (dict, optional): Condition -> mask cache.

    Return:
        numpy.ndarray: Boolean mask.

    """
    mask = np.ones(dataset.n_rows, dtype=bool)
    for condition in description:
        if condition_cache is None:
            mask &= condition_mask(condition, dataset)
            continue
        if condition not in condition_cache:
            condition_cache[condition] = condition_mask(condition, dataset)
        mask &= condition_cache[condition]
    return mask

# EOF
