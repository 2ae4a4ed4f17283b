#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   planted.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Seeded synthetic datasets with planted subgroups.

A planted specification is a YAML document like::

    name: planted
    n-rows: 5000
    seed: 42
    mu0: 0.0
    sigma0: 1.0
    marker-levels: 20
    columns:
        x1: {kind: numeric, low: 0.0, high: 10.0}
        c1: {kind: nominal, levels: [a, b, c]}
    planted:
        - {shift: 3.0, ratio: 0.1}
        - {shift: -3.0, ratio: 0.2, conditions: {c1: a}}

Every planted subgroup is conjoined with its own value of a nominal
`marker` column, which keeps planted covers disjoint. Numeric conditions
are written as `{geq: v}`, `{leq: v}` or `{between: [lo, hi]}` and
categorical ones as the label.

"""
from __future__ import print_function, division, absolute_import

import json
import string
from collections import OrderedDict, namedtuple

import numpy as np
import pandas as pd

from mdlsubgroups.data.dataset import BINARY, NOMINAL, NUMERIC, COLUMN_KINDS
from mdlsubgroups.data.loaders import build_dataset, write_csv
from mdlsubgroups.model.conditions import Condition, Description, description_mask
from mdlsubgroups.model.result import encode_condition
from mdlsubgroups.utils.config import load_config
from mdlsubgroups.utils.exceptions import ConfigValueError, DataError
from mdlsubgroups.utils.logging_color import get_logger
from mdlsubgroups.utils.paths import write_text

logger = get_logger('mdlsubgroups.toys.planted')

MARKER_COLUMN = 'marker'
TARGET_COLUMN = 'target'

GeneratedColumn = namedtuple('GeneratedColumn', ('name', 'kind', 'low', 'high', 'levels'))
PlantedSubgroup = namedtuple('PlantedSubgroup', ('conditions', 'shift', 'ratio', 'use_marker'))


def _default_levels(count):
    return [string.ascii_lowercase[index % 26] * (1 + index // 26) for index in range(count)]


class PlantedSpec(object):
    """Specification of a synthetic dataset.

    Arguments:
        n_rows (int): Number of rows.
        columns (list[GeneratedColumn]): Explanatory columns besides the marker.
        planted (list[PlantedSubgroup]): Planted subgroups.
        noise_seed (int): Random seed.
        mu0 (float, optional): Mean of the background target.
        sigma0 (float, optional): Standard deviation of the background target.
        marker_levels (int, optional): Levels of the marker column. Defaults to
            one more than the number of planted subgroups, at least 3.
        name (str, optional): Dataset name.

    Raise:
        ConfigValueError: If the specification is inconsistent.

    """

    def __init__(self, n_rows, columns, planted, noise_seed, mu0=0.0, sigma0=1.0,
                 marker_levels=None, name='planted'):
        if n_rows < 2:
            raise ConfigValueError("A planted dataset needs at least 2 rows")
        if not (np.isfinite(sigma0) and sigma0 > 0 and np.isfinite(mu0)):
            raise ConfigValueError("Background mean must be finite and sigma positive")
        for subgroup in planted:
            if not np.isfinite(subgroup.shift) or not (np.isfinite(subgroup.ratio)
                                                      and subgroup.ratio > 0):
                raise ConfigValueError("Planted shifts must be finite and ratios positive")
        names = [column.name for column in columns]
        if MARKER_COLUMN in names or TARGET_COLUMN in names or len(set(names)) != len(names):
            raise ConfigValueError("Column names must be unique and differ from {} and {}".format(
                MARKER_COLUMN, TARGET_COLUMN))
        if marker_levels is None:
            marker_levels = max(3, len(planted) + 1)
        if marker_levels < len(planted) or marker_levels < 2:
            raise ConfigValueError("Need at least {} marker levels".format(max(len(planted), 2)))
        self.n_rows = int(n_rows)
        self.columns = list(columns)
        self.planted = list(planted)
        self.noise_seed = int(noise_seed)
        self.mu0 = float(mu0)
        self.sigma0 = float(sigma0)
        self.marker_levels = int(marker_levels)
        self.name = name

    @staticmethod
    def from_config(config, seed=None):
        """Build a specification from a configuration dictionary.

        Arguments:
            config (dict): Configuration (see module documentation).
            seed (int, optional): Overrides the configured seed.

        Return:
            PlantedSpec

        Raise:
            ConfigValueError: If the configuration is invalid.

        """
        columns = []
        for col_name, col_config in (config.get('columns') or {}).items():
            kind = col_config.get('kind', NUMERIC)
            if kind not in COLUMN_KINDS:
                raise ConfigValueError("Unknown kind for column {} -> {}".format(col_name, kind))
            levels = col_config.get('levels')
            if kind != NUMERIC and not levels:
                levels = _default_levels(2 if kind == BINARY else 3)
            if kind == BINARY and len(levels) != 2:
                raise ConfigValueError("Binary column {} needs 2 levels".format(col_name))
            if kind == NOMINAL and len(levels) < 3:
                raise ConfigValueError("Nominal column {} needs 3 levels".format(col_name))
            columns.append(GeneratedColumn(str(col_name), kind,
                                           float(col_config.get('low', 0.0)),
                                           float(col_config.get('high', 1.0)),
                                           [str(level) for level in levels or ()]))
        planted = [PlantedSubgroup(OrderedDict(entry.get('conditions') or {}),
                                   float(entry.get('shift', 0.0)),
                                   float(entry.get('ratio', 1.0)),
                                   bool(entry.get('use-marker', True)))
                   for entry in config.get('planted') or []]
        if seed is None:
            seed = config.get('seed')
        if seed is None:
            raise ConfigValueError("No seed given for the planted dataset")
        return PlantedSpec(int(config['n-rows']), columns, planted, seed,
                           mu0=config.get('mu0', 0.0), sigma0=config.get('sigma0', 1.0),
                           marker_levels=config.get('marker-levels'),
                           name=str(config.get('name', 'planted')))

    def marker_labels(self):
        """list[str]: Labels of the marker column."""
        return ['m{}'.format(index) for index in range(self.marker_levels)]


def load_planted_spec(file_name, seed=None):
    """Load a planted specification from YAML.

    Raise:
        OSError: If the file does not exist.
        ConfigError: If keys are missing or values invalid.

    """
    return PlantedSpec.from_config(load_config(file_name, validate=['n-rows']), seed)


def _planted_description(subgroup, index, spec, dataset):
    conditions = []
    for col_name, value in subgroup.conditions.items():
        column_index = dataset.column_index(col_name)
        if not dataset.columns[column_index].is_numeric:
            conditions.append(Condition.equals(column_index,
                                               dataset.label_code(column_index, value)))
            continue
        if not isinstance(value, dict) or len(value) != 1:
            raise ConfigValueError("Numeric condition on {} must be one of geq, leq, "
                                   "between".format(col_name))
        operator, bounds = list(value.items())[0]
        try:
            conditions.append(Condition(column_index, operator, bounds))
        except (TypeError, ValueError) as error:
            raise ConfigValueError("Bad condition on {} -> {}".format(col_name, error))
    if subgroup.use_marker:
        marker_index = dataset.column_index(MARKER_COLUMN)
        conditions.append(Condition.equals(marker_index,
                                           dataset.label_code(marker_index,
                                                              spec.marker_labels()[index])))
    return Description(conditions)


def generate_planted(spec):
    """Generate a synthetic dataset.

    Explanatory cells are drawn uniformly per column. Targets of rows in planted
    subgroup i follow `N(mu0 + shift_i sigma0, (ratio_i sigma0)^2)`, all other
    rows follow `N(mu0, sigma0^2)`.

    Arguments:
        spec (PlantedSpec): Specification.

    Return:
        tuple: (`mdlsubgroups.data.dataset.Dataset`, list of planted cover masks,
            list of planted descriptions).

    Raise:
        DataError: If planted covers overlap on the generated rows.

    """
    rng = np.random.default_rng(spec.noise_seed)
    frame = OrderedDict()
    for column in spec.columns:
        if column.kind == NUMERIC:
            frame[column.name] = [repr(float(value))
                                  for value in rng.uniform(column.low, column.high, spec.n_rows)]
        else:
            codes = rng.integers(0, len(column.levels), spec.n_rows)
            frame[column.name] = [column.levels[code] for code in codes]
    markers = spec.marker_labels()
    frame[MARKER_COLUMN] = [markers[code]
                            for code in rng.integers(0, len(markers), spec.n_rows)]
    frame[TARGET_COLUMN] = ['0.0'] * spec.n_rows
    dataset = build_dataset(pd.DataFrame(frame), TARGET_COLUMN, name=spec.name)
    descriptions = [_planted_description(subgroup, index, spec, dataset)
                    for index, subgroup in enumerate(spec.planted)]
    covers = [description_mask(description, dataset) for description in descriptions]
    covered = np.zeros(spec.n_rows, dtype=bool)
    for description, cover in zip(descriptions, covers):
        if (covered & cover).any():
            raise DataError("Planted subgroup {} overlaps an earlier one".format(
                description.describe(dataset)))
        covered |= cover
    target = rng.normal(spec.mu0, spec.sigma0, spec.n_rows)
    for subgroup, cover in zip(spec.planted, covers):
        target[cover] = rng.normal(spec.mu0 + subgroup.shift * spec.sigma0,
                                   subgroup.ratio * spec.sigma0, int(cover.sum()))
    dataset = dataset.with_target(target)
    logger.info("Generated %s with %s planted subgroups covering %s rows", dataset.name,
                len(covers), int(covered.sum()))
    return dataset, covers, descriptions


def ground_truth(spec, dataset, covers, descriptions):
    """Ground truth document of a planted dataset.

    Return:
        OrderedDict

    """
    truth = OrderedDict([('name', spec.name), ('seed', spec.noise_seed),
                         ('n-rows', spec.n_rows), ('mu0', spec.mu0), ('sigma0', spec.sigma0)])
    truth['planted'] = [OrderedDict([('description', description.describe(dataset)),
                                     ('conditions', [encode_condition(condition, dataset)
                                                     for condition in description]),
                                     ('shift', subgroup.shift),
                                     ('ratio', subgroup.ratio),
                                     ('n', int(cover.sum())),
                                     ('rows', [int(row) for row in np.flatnonzero(cover)])])
                        for subgroup, cover, description in zip(spec.planted, covers,
                                                                descriptions)]
    return truth


def write_planted(spec, dataset, covers, descriptions, csv_file, truth_file):
    """Write a planted dataset as CSV and its ground truth as JSON."""
    write_csv(dataset, csv_file, TARGET_COLUMN)
    write_text(truth_file,
               json.dumps(ground_truth(spec, dataset, covers, descriptions), indent=2) + '\n')

# EOF
