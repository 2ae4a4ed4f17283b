#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   dataset.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Typed tabular datasets with a single numeric target.

Explanatory columns are stored column-wise as numpy arrays. Numeric columns
hold floats with `NaN` marking missing cells; binary and nominal columns hold
integer codes, assigned by order of first appearance, with `MISSING_CODE`
marking missing cells.

"""
from __future__ import print_function, division, absolute_import

from collections import namedtuple

import numpy as np

from mdlsubgroups.model.stats import gaussian_stats
from mdlsubgroups.utils.exceptions import DataError
from mdlsubgroups.utils.iterators import pairwise

BINARY = 'binary'
NOMINAL = 'nominal'
NUMERIC = 'numeric'
COLUMN_KINDS = (BINARY, NOMINAL, NUMERIC)

MISSING_CODE = -1


class ColumnSchema(namedtuple('ColumnSchema', ('name', 'kind', 'domain_size'))):
    """Name, type and domain size of an explanatory column.

    `domain_size` is 2 for binary columns, the number of categories for
    nominal columns and 0 for numeric columns.

    """

    __slots__ = ()

    def __new__(cls, name, kind, domain_size=0):
        if kind not in COLUMN_KINDS:
            raise DataError("Unknown kind for column {} -> {}".format(name, kind))
        if kind == BINARY and domain_size != 2:
            raise DataError("Binary column {} must have domain size 2".format(name))
        if kind == NOMINAL and domain_size < 3:
            raise DataError("Nominal column {} needs at least 3 categories".format(name))
        if kind == NUMERIC:
            domain_size = 0
        return super(ColumnSchema, cls).__new__(cls, str(name), kind, int(domain_size))

    @property
    def is_numeric(self):
        """bool: Column holds real values."""
        return self.kind == NUMERIC


def target_resolution(target):
    """Smallest positive gap between consecutive distinct target values.

    Arguments:
        target (`Dataset` or sequence[float]): Dataset or its target values.

    Return:
        float: The resolution, 1.0 for a constant target.

    """
    if isinstance(target, Dataset):
        target = target.target
    distinct = np.unique(np.asarray(target, dtype=np.float64))
    gaps = [upper - lower for lower, upper in pairwise(distinct) if upper > lower]
    return float(min(gaps)) if gaps else 1.0


class Dataset(object):
    """Immutable typed table plus numeric target.

    Arguments:
        columns (list[ColumnSchema]): Explanatory column schemas.
        cells (list[numpy.ndarray]): One array per column (see module doc).
        target (numpy.ndarray): Target values.
        labels (list[tuple], optional): Category labels per column, `None` for
            numeric columns.
        name (str, optional): Dataset name.

    Raise:
        DataError: If the table is inconsistent.

    """

    def __init__(self, columns, cells, target, labels=None, name='dataset'):
        self.name = name
        self.columns = tuple(columns)
        names = [column.name for column in self.columns]
        duplicated = sorted({col_name for col_name in names if names.count(col_name) > 1})
        if duplicated:
            raise DataError("Duplicate column names -> {}".format(', '.join(duplicated)))
        target = np.array(target, dtype=np.float64)
        if target.ndim != 1 or target.size < 2:
            raise DataError("A dataset needs at least 2 rows")
        if not np.all(np.isfinite(target)):
            raise DataError("Target values must be finite")
        if len(cells) != len(self.columns):
            raise DataError("Got {} cell columns for {} schemas".format(len(cells),
                                                                     len(self.columns)))
        self.cells = []
        for column, values in zip(self.columns, cells):
            values = np.array(values, dtype=np.float64 if column.is_numeric else np.int64)
            if values.shape != target.shape:
                raise DataError("Column {} has {} rows, target has {}".format(column.name,
                                                                             values.size,
                                                                             target.size))
            values.setflags(write=False)
            self.cells.append(values)
        self.cells = tuple(self.cells)
        target.setflags(write=False)
        self.target = target
        if labels is None:
            labels = [None if column.is_numeric else tuple(range(column.domain_size))
                      for column in self.columns]
        self.labels = tuple(None if label_set is None else tuple(label_set)
                            for label_set in labels)
        self.theta_d = gaussian_stats(self.target)
        self.resolution = target_resolution(self.target)
        self._name_index = {column.name: index for index, column in enumerate(self.columns)}

    @property
    def n_rows(self):
        """int: Number of rows."""
        return int(self.target.size)

    @property
    def n_columns(self):
        """int: Number of explanatory columns, |V|."""
        return len(self.columns)

    @property
    def column_names(self):
        """list[str]: Explanatory column names."""
        return [column.name for column in self.columns]

    def column_index(self, name):
        """Get the index of a column by name.

        Raise:
            DataError: If the column does not exist.

        """
        try:
            return self._name_index[name]
        except KeyError:
            raise DataError("Unknown column -> {}".format(name))

    def label_code(self, column_index, label):
        """Get the integer code of a category label.

        Raise:
            DataError: If the label is unknown.

        """
        labels = self.labels[column_index]
        if labels is None:
            raise DataError("Column {} is numeric".format(self.columns[column_index].name))
        for code, known in enumerate(labels):
            if str(known) == str(label):
                return code
        raise DataError("Unknown category {} in column {}".format(label,
                                                                  self.columns[column_index].name))

    def row(self, index):
        """Row view: one value per column, `NaN`/`MISSING_CODE` for missing cells."""
        return tuple(values[index].item() for values in self.cells)

    def with_target(self, target, name=None):
        """Copy of the dataset with a different target vector."""
        return Dataset(self.columns, self.cells, target, self.labels, name or self.name)

    def __repr__(self):
        return "Dataset({}, rows={}, columns={})".format(self.name, self.n_rows, self.n_columns)

# EOF
