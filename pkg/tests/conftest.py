#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   conftest.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Shared fixtures and helpers of the test suite."""
from __future__ import print_function, division, absolute_import

import contextlib
import os
import shutil
import tempfile

import numpy as np
import pandas as pd
import pytest

from mdlsubgroups.data.loaders import build_dataset
from mdlsubgroups.toys.planted import GeneratedColumn, PlantedSpec, PlantedSubgroup


@contextlib.contextmanager
def temp_file(content=None, suffix=''):
    """Create a temporary file, optionally with content, and remove it on exit."""
    handle, file_name = tempfile.mkstemp(suffix=suffix)
    os.close(handle)
    if content is not None:
        with open(file_name, 'w', encoding='utf-8') as output_obj:
            output_obj.write(content)
    try:
        yield file_name
    finally:
        if os.path.exists(file_name):
            os.remove(file_name)


@pytest.fixture
def temp_dir():
    """Temporary directory, removed after the test."""
    dir_name = tempfile.mkdtemp()
    yield dir_name
    shutil.rmtree(dir_name, ignore_errors=True)


def make_dataset(columns, target, name='test'):
    """Build a dataset from a dict of text columns and a target list."""
    frame = pd.DataFrame(dict(columns, target=[repr(float(value)) for value in target]))
    return build_dataset(frame, 'target', name=name)


def random_dataset(seed, n_rows=150, n_columns=3):
    """Small random dataset with a numeric, a binary and a nominal column and some structure."""
    rng = np.random.default_rng(seed)
    columns = {'x0': [repr(float(value)) for value in rng.uniform(0, 10, n_rows)],
               'x1': list(rng.choice(['yes', 'no'], n_rows)),
               'x2': list(rng.choice(['a', 'b', 'c', 'd'], n_rows))}
    columns = dict(list(columns.items())[:n_columns])
    target = rng.normal(0.0, 1.0, n_rows)
    shifted = np.array(columns['x1']) == 'yes' if 'x1' in columns else np.zeros(n_rows, bool)
    target[shifted] += rng.uniform(0.0, 2.0)
    return make_dataset(columns, target, name='random{}'.format(seed))


def planted_spec(seed=7, n_rows=5000, shifts=(3.0, -3.0, 2.0), ratios=(0.1, 0.2, 0.3),
                 marker_levels=40):
    """Planted specification with one subgroup per marker level and a binary noise column."""
    columns = [GeneratedColumn('c1', 'binary', 0.0, 1.0, ['u', 'v'])]
    planted = [PlantedSubgroup({}, shift, ratio, True) for shift, ratio in zip(shifts, ratios)]
    return PlantedSpec(n_rows, columns, planted, seed, marker_levels=marker_levels)


def jaccard(first, second):
    """Jaccard index of two boolean masks."""
    union = int((first | second).sum())
    return int((first & second).sum()) / union if union else 0.0

# EOF
