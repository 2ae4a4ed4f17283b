#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   test_data.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Test data-related functionality."""
from __future__ import print_function, division, absolute_import

import os

import numpy as np
import pandas as pd
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mdlsubgroups.data import get_data, load_data
from mdlsubgroups.data.binning import equal_frequency_cuts, quantile_cuts
from mdlsubgroups.data.dataset import (BINARY, NOMINAL, NUMERIC, MISSING_CODE,
                                       ColumnSchema, target_resolution)
from mdlsubgroups.data.loaders import build_dataset, load_csv, load_schema, write_csv
from mdlsubgroups.utils.exceptions import DataError

from conftest import make_dataset, temp_file


CSV_CONTENT = """age,colour,smoker,income
23,red,yes,10.5
35,blue,no,12.0
,green,yes,11.25
51,red,,20.0
44,blue,no,9.0
"""


@pytest.fixture
def csv_file():
    """Small mixed CSV file."""
    with temp_file(CSV_CONTENT, suffix='.csv') as file_name:
        yield file_name


# pylint: disable=W0621
def test_load_csv_kinds(csv_file):
    """Test kind inference and missing cells."""
    dataset = load_csv(csv_file)
    assert dataset.column_names == ['age', 'colour', 'smoker']
    assert [column.kind for column in dataset.columns] == [NUMERIC, NOMINAL, BINARY]
    assert dataset.columns[1].domain_size == 3
    assert np.isnan(dataset.cells[0][2])
    assert list(dataset.cells[1]) == [0, 1, 2, 0, 1]
    assert dataset.cells[2][3] == MISSING_CODE
    assert list(dataset.target) == [10.5, 12.0, 11.25, 20.0, 9.0]
    assert dataset.name == os.path.splitext(os.path.basename(csv_file))[0]


def test_load_csv_is_deterministic(csv_file):
    """Test that loading twice gives the same codes and statistics."""
    first = load_csv(csv_file)
    second = load_csv(csv_file)
    for first_values, second_values in zip(first.cells, second.cells):
        np.testing.assert_array_equal(first_values, second_values)
    assert first.theta_d == second.theta_d
    assert first.labels == second.labels


def test_target_column_choice(csv_file):
    """Test selecting a target other than the last column."""
    dataset = load_csv(csv_file, target_column='age')
    assert dataset.n_rows == 4  # the row with missing age is dropped
    assert 'income' in dataset.column_names
    assert 'age' not in dataset.column_names


def test_schema_override(csv_file):
    """Test forcing column kinds, inline and from a sidecar file."""
    dataset = load_csv(csv_file, schema_override={'age': NOMINAL})
    assert dataset.columns[0].kind == NOMINAL
    assert dataset.columns[0].domain_size == 4
    with temp_file("# kinds\nage = nominal\ncolour=nominal\n") as schema_file:
        assert load_schema(schema_file) == {'age': NOMINAL, 'colour': NOMINAL}
        dataset = load_csv(csv_file, schema_override=schema_file)
        assert dataset.columns[0].kind == NOMINAL
    with pytest.raises(DataError):
        load_csv(csv_file, schema_override={'colour': BINARY})
    with pytest.raises(DataError):
        load_csv(csv_file, schema_override={'colour': NUMERIC})
    with pytest.raises(DataError):
        load_csv(csv_file, schema_override={'unknown': NUMERIC})
    with temp_file("age: numeric\n") as schema_file:
        with pytest.raises(DataError):
            load_schema(schema_file)


def test_single_value_column_is_binary():
    """Test that a constant categorical column is typed as binary."""
    dataset = make_dataset({'flag': ['x', 'x', 'x']}, [1.0, 2.0, 3.0])
    assert dataset.columns[0] == ColumnSchema('flag', BINARY, 2)


def test_invalid_inputs(csv_file):
    """Test the data errors."""
    with pytest.raises(DataError):
        load_csv(csv_file, target_column='colour')
    with pytest.raises(DataError) as error:
        load_csv(csv_file, target_column='weight')
    assert 'weight' in str(error.value)
    with temp_file("a,a,t\n1,2,3\n4,5,6\n") as file_name:
        with pytest.raises(DataError):
            load_csv(file_name)
    with temp_file("a,t\n1,2\n") as file_name:
        with pytest.raises(DataError):
            load_csv(file_name)
    with temp_file("") as file_name:
        with pytest.raises(DataError):
            load_csv(file_name)
    with pytest.raises(OSError):
        load_csv('/non/existent/file.csv')


def test_missing_target_rows_dropped():
    """Test that rows without target are dropped."""
    frame = pd.DataFrame({'a': ['1', '2', '3'], 't': ['1.0', '', '2.0']})
    dataset = build_dataset(frame)
    assert dataset.n_rows == 2
    assert list(dataset.cells[0]) == [1.0, 3.0]


def test_get_data_from_config(csv_file):
    """Test loading through a data configuration."""
    dataset = get_data({'source': csv_file, 'target': 'income', 'name': 'small'})
    assert dataset.name == 'small'
    assert dataset.n_rows == 5
    config = "data:\n    source: {}\n    schema:\n        age: nominal\n".format(
        os.path.basename(csv_file))
    with temp_file(config, suffix='.yaml') as config_file:
        assert os.path.dirname(config_file) == os.path.dirname(csv_file)
        dataset = load_data(config_file, key='data')
    assert dataset.columns[0].kind == NOMINAL


def test_write_csv_roundtrip(csv_file):
    """Test that a written dataset is read back identically."""
    dataset = load_csv(csv_file)
    with temp_file(suffix='.csv') as output_file:
        write_csv(dataset, output_file)
        reloaded = load_csv(output_file)
    for first_values, second_values in zip(dataset.cells, reloaded.cells):
        np.testing.assert_array_equal(first_values, second_values)
    np.testing.assert_array_equal(dataset.target, reloaded.target)


def test_theta_d(csv_file):
    """Test the dataset-level target statistics."""
    dataset = load_csv(csv_file)
    target = np.array([10.5, 12.0, 11.25, 20.0, 9.0])
    assert dataset.theta_d.n == 5
    assert dataset.theta_d.mean == pytest.approx(target.mean())
    assert dataset.theta_d.variance == pytest.approx(target.var())


def test_target_resolution():
    """Test the smallest gap between distinct target values."""
    assert target_resolution([1.0, 2.0, 2.5, 2.5]) == pytest.approx(0.5)
    assert target_resolution([7.0, 7.0, 7.0]) == 1.0


def test_equal_frequency_cuts():
    """Test the cut points of numeric columns."""
    dataset = make_dataset({'x': [str(value) for value in range(1, 11)],
                            'c': ['3'] * 10,
                            'n': ['a', 'b'] * 5},
                           range(10))
    binning = equal_frequency_cuts(dataset, 1)
    assert binning.cuts(0) == (5.5,)
    assert binning.cuts(1) == ()
    assert binning.cuts(2) == ()
    assert binning.is_cut(0, 5.5)
    np.testing.assert_allclose(quantile_cuts(np.arange(1, 13), 5),
                               [2.5, 4.5, 6.5, 8.5, 10.5])
    with pytest.raises(ValueError):
        equal_frequency_cuts(dataset, 0)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=2, max_size=60), st.integers(1, 8))
def test_cuts_split_values(values, n_cut):
    """Every cut leaves values on both sides and cuts are increasing."""
    values = np.array(values, dtype=float)
    cuts = quantile_cuts(values, n_cut)
    assert len(cuts) <= n_cut
    assert np.all(np.diff(cuts) > 0)
    for cut in cuts:
        assert np.any(values <= cut)
        assert np.any(values > cut)

# EOF
