#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   loaders.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Data loaders.

CSV files are read with every cell as text, an empty cell meaning missing.
Column kinds are inferred from the cells and can be overridden with a
schema, either as a dictionary or as a sidecar file of `column=kind` lines.

"""
from __future__ import print_function, division, absolute_import

import os
from collections import OrderedDict

import numpy as np
import pandas as pd

from mdlsubgroups.data.dataset import (BINARY, NOMINAL, NUMERIC, COLUMN_KINDS, MISSING_CODE,
                                       ColumnSchema, Dataset)
from mdlsubgroups.utils.exceptions import DataError
from mdlsubgroups.utils.logging_color import get_logger
from mdlsubgroups.utils.paths import write_text

logger = get_logger('mdlsubgroups.data.loaders')


def load_schema(file_name):
    """Load a schema sidecar file.

    Each non-empty line has the form `column=kind`. Lines starting with `#`
    are ignored.

    Arguments:
        file_name (str): Schema file.

    Return:
        OrderedDict: Column name -> kind.

    Raise:
        OSError: If the file cannot be read.
        DataError: If a line is malformed or a kind is unknown.

    """
    schema = OrderedDict()
    with open(file_name, encoding='utf-8') as input_obj:
        for line_number, line in enumerate(input_obj, 1):
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            if '=' not in line:
                raise DataError("Malformed schema line {} in {} -> {}".format(line_number,
                                                                             file_name, line))
            name, kind = (part.strip() for part in line.split('=', 1))
            if kind not in COLUMN_KINDS:
                raise DataError("Unknown kind for column {} -> {}".format(name, kind))
            schema[name] = kind
    return schema


def _parse_numeric(cells):
    """Parse text cells as floats, `None` if any non-missing cell is not a number."""
    parsed = pd.to_numeric(cells.where(cells != ''), errors='coerce').to_numpy(dtype=np.float64)
    if np.any(np.isnan(parsed) & (cells != '').to_numpy()):
        return None
    return parsed


def _categorical_column(name, cells, kind):
    """Encode a text column by first appearance.

    Return:
        tuple: (ColumnSchema, codes, labels)

    """
    codes, labels = pd.factorize(cells.where(cells != ''), use_na_sentinel=True)
    codes = np.where(codes < 0, MISSING_CODE, codes).astype(np.int64)
    labels = tuple(str(label) for label in labels)
    if len(labels) <= 1:
        logger.warning("Column %s has a single observed value, typed as binary", name)
        kind = BINARY
    elif kind is None:
        kind = BINARY if len(labels) == 2 else NOMINAL
    elif kind == BINARY and len(labels) > 2:
        raise DataError("Column {} has {} categories and cannot be binary".format(name,
                                                                                 len(labels)))
    elif kind == NOMINAL and len(labels) == 2:
        logger.warning("Column %s has only two categories, typed as binary", name)
        kind = BINARY
    domain_size = 2 if kind == BINARY else len(labels)
    return ColumnSchema(name, kind, domain_size), codes, labels


def build_dataset(frame, target_column=None, schema_override=None, name='dataset'):
    """Build a dataset from a frame of text cells.

    Arguments:
        frame (pandas.DataFrame): Text cells, empty string meaning missing.
        target_column (str, optional): Target column. Defaults to the last one.
        schema_override (dict, optional): Column name -> kind.
        name (str, optional): Dataset name.

    Return:
        `mdlsubgroups.data.dataset.Dataset`

    Raise:
        DataError: If the frame cannot be turned into a valid dataset.

    """
    names = [str(col_name) for col_name in frame.columns]
    duplicated = sorted({col_name for col_name in names if names.count(col_name) > 1})
    if duplicated:
        raise DataError("Duplicate column names -> {}".format(', '.join(duplicated)))
    if len(names) < 1:
        raise DataError("No columns found")
    frame = frame.copy()
    frame.columns = names
    frame = frame.fillna('').astype(str).apply(lambda column: column.str.strip())
    if target_column is None:
        target_column = names[-1]
    if target_column not in names:
        raise DataError("Target column not found -> {}".format(target_column))
    schema_override = dict(schema_override or {})
    unknown = sorted(set(schema_override) - set(names))
    if unknown:
        raise DataError("Schema names unknown columns -> {}".format(', '.join(unknown)))
    # Target
    target_cells = frame[target_column]
    missing_target = (target_cells == '').to_numpy()
    if missing_target.any():
        logger.warning("Dropping %s rows with missing target in column %s",
                       int(missing_target.sum()), target_column)
        frame = frame.loc[~missing_target].reset_index(drop=True)
        target_cells = frame[target_column]
    target = _parse_numeric(target_cells)
    if target is None:
        raise DataError("Target column {} contains non-numeric values".format(target_column))
    if target.size < 2:
        raise DataError("Dataset {} has fewer than 2 rows".format(name))
    # Explanatory columns
    columns, cells, labels = [], [], []
    for col_name in names:
        if col_name == target_column:
            continue
        kind = schema_override.get(col_name)
        if kind not in (None, NUMERIC):
            schema, codes, col_labels = _categorical_column(col_name, frame[col_name], kind)
            columns.append(schema)
            cells.append(codes)
            labels.append(col_labels)
            continue
        values = _parse_numeric(frame[col_name])
        if values is None:
            if kind == NUMERIC:
                raise DataError("Column {} contains non-numeric values".format(col_name))
            schema, codes, col_labels = _categorical_column(col_name, frame[col_name], None)
            columns.append(schema)
            cells.append(codes)
            labels.append(col_labels)
            continue
        columns.append(ColumnSchema(col_name, NUMERIC))
        cells.append(values)
        labels.append(None)
    dataset = Dataset(columns, cells, target, labels, name=name)
    logger.debug("Built %r with kinds %s", dataset,
                 ', '.join('{}:{}'.format(col.name, col.kind) for col in dataset.columns))
    return dataset


def load_csv(file_name, target_column=None, schema_override=None, name=None):
    """Load a dataset from a CSV file.

    Arguments:
        file_name (str): Comma separated file with a header row.
        target_column (str, optional): Target column. Defaults to the last one.
        schema_override (dict or str, optional): Column kinds, or the name of
            a schema sidecar file.
        name (str, optional): Dataset name. Defaults to the file stem.

    Return:
        `mdlsubgroups.data.dataset.Dataset`

    Raise:
        OSError: If the file cannot be read.
        DataError: If the file is malformed.

    """
    if not os.path.exists(file_name):
        raise OSError("Cannot find input file -> {}".format(file_name))
    if isinstance(schema_override, str):
        schema_override = load_schema(schema_override)
    try:
        raw = pd.read_csv(file_name, header=None, dtype=str, keep_default_na=False,
                          encoding='utf-8', skip_blank_lines=True)
    except pd.errors.EmptyDataError:
        raise DataError("Empty input file -> {}".format(file_name))
    except (pd.errors.ParserError, UnicodeDecodeError) as error:
        raise DataError("Cannot parse {} -> {}".format(file_name, error))
    if raw.shape[0] < 1:
        raise DataError("Missing header row in {}".format(file_name))
    frame = raw.iloc[1:].reset_index(drop=True)
    frame.columns = [str(header).strip() for header in raw.iloc[0]]
    if name is None:
        name = os.path.splitext(os.path.basename(file_name))[0]
    dataset = build_dataset(frame, target_column, schema_override, name=name)
    logger.info("Loaded %s: %s rows, %s explanatory columns", name, dataset.n_rows,
                dataset.n_columns)
    return dataset


def dataset_to_frame(dataset, target_column='target'):
    """Text frame of a dataset, the inverse of `build_dataset`.

    Reals are written with their shortest exact representation and missing
    cells as empty strings.

    Return:
        pandas.DataFrame

    """
    frame = OrderedDict()
    for column, values, labels in zip(dataset.columns, dataset.cells, dataset.labels):
        if column.is_numeric:
            frame[column.name] = ['' if np.isnan(value) else repr(float(value))
                                  for value in values]
        else:
            frame[column.name] = ['' if code == MISSING_CODE else str(labels[code])
                                  for code in values]
    frame[target_column] = [repr(float(value)) for value in dataset.target]
    return pd.DataFrame(frame)


def write_csv(dataset, file_name, target_column='target'):
    """Atomically write a dataset as CSV.

    Arguments:
        dataset (`mdlsubgroups.data.dataset.Dataset`): Dataset.
        file_name (str): Output file.
        target_column (str, optional): Header of the target column.

    """
    if target_column in dataset.column_names:
        raise DataError("Target header {} clashes with a column name".format(target_column))
    write_text(file_name, dataset_to_frame(dataset, target_column).to_csv(index=False,
                                                                          lineterminator='\n'))

# EOF
