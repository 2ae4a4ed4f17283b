#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   compare.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Comparison experiments over several datasets.

Three modes produce tidy CSV tables:
    - default: SSD++, top-k (k = |S| of SSD++) and sequential covering, one row
      per dataset and algorithm.
    - `--gain absolute`: SSD++ with normalized and absolute gain, one row per
      dataset.
    - `--sweep depth|cuts|beam V1,V2,...`: SSD++ for each value of one search
      parameter, one row per dataset and value.

"""
from __future__ import print_function, division, absolute_import

import os
from collections import OrderedDict

import pandas as pd

from mdlsubgroups.cli.options import SWEEP_PARAMETERS
from mdlsubgroups.data import get_data, load_data
from mdlsubgroups.data.loaders import load_csv
from mdlsubgroups.metrics.report import report_row, summarize
from mdlsubgroups.search import get_miner
from mdlsubgroups.utils.config import load_config
from mdlsubgroups.utils.exceptions import ConfigError, DataError, EncodingError
from mdlsubgroups.utils.logging_color import get_logger
from mdlsubgroups.utils.monitoring import Timer
from mdlsubgroups.utils.paths import write_text

logger = get_logger('mdlsubgroups.cli.compare')

DEFAULT_OUTPUT = 'comparison.csv'


def dataset_loaders(config):
    """List the datasets of the inputs without loading them.

    CSV inputs use the command line target and schema. YAML inputs either
    describe one dataset at their root, with `source` and optional `target`,
    `schema` and `name`, or list such entries under the `datasets` key.

    Return:
        list[tuple]: (label, loader function) pairs.

    Raise:
        ConfigError: If an experiment file is malformed.

    """
    loaders = []
    for input_file in config.inputs:
        if os.path.splitext(input_file)[1] in ('.yaml', '.yml'):
            experiment = load_config(input_file)
            if 'datasets' not in experiment:
                if 'source' not in experiment:
                    raise ConfigError("{} has neither datasets nor a source".format(input_file))
                loaders.append((experiment.get('name', input_file),
                                (lambda input_file=input_file: load_data(input_file))))
                continue
            base_dir = os.path.dirname(os.path.abspath(input_file))
            for entry in experiment['datasets']:
                if not isinstance(entry, dict):
                    raise ConfigError("Malformed dataset entry in {}".format(input_file))
                label = entry.get('name', entry.get('source'))
                loaders.append((label, (lambda entry=entry, base_dir=base_dir:
                                        get_data(entry, base_dir=base_dir))))
        else:
            loaders.append((input_file, (lambda input_file=input_file:
                                         load_csv(input_file, config.target, config.schema))))
    return loaders


def _mine(miner_name, dataset, config):
    with Timer(miner_name) as timer:
        model, listified = get_miner(miner_name)(dataset, config)
    return model, listified, summarize(model, timer.elapsed), timer.memory


def compare_algorithms(dataset, config):
    """Rows of the algorithm comparison on one dataset."""
    rows = []
    model, _, report, memory = _mine('ssdpp', dataset, config)
    rows.append(report_row(report, dataset=dataset.name, algorithm='ssdpp',
                           n_rows=dataset.n_rows, listified=False, memory_mib=memory))
    k_value = config.baseline.k or max(len(model), 1)
    baseline_config = config._replace(baseline=config.baseline._replace(k=k_value))
    for name in ('topk', 'seqcover'):
        _, listified, report, memory = _mine(name, dataset, baseline_config)
        rows.append(report_row(report, dataset=dataset.name, algorithm=name,
                               n_rows=dataset.n_rows, listified=listified, memory_mib=memory))
    return rows


def compare_gains(dataset, config):
    """Row comparing normalized and absolute gain on one dataset."""
    row = OrderedDict([('dataset', dataset.name), ('n_rows', dataset.n_rows)])
    reports = OrderedDict()
    for gain_mode in ('normalized', 'absolute'):
        mode_config = config._replace(search=config.search._replace(gain_mode=gain_mode))
        reports[gain_mode] = _mine('ssdpp', dataset, mode_config)[2]
    for field in ('compression_ratio', 'swkl_per_row', 'num_subgroups', 'avg_conditions',
                  'runtime_seconds'):
        for gain_mode, report in reports.items():
            row['{}_{}'.format(field, gain_mode)] = getattr(report, field)
    return [row]


def sweep_parameter(dataset, config):
    """Rows of a sweep over one search parameter on one dataset."""
    parameter, values = config.sweep
    rows = []
    for value in values:
        search = config.search._replace(**{SWEEP_PARAMETERS[parameter]: value})
        _, _, report, memory = _mine('ssdpp', dataset, config._replace(search=search))
        row = OrderedDict([('dataset', dataset.name), ('parameter', parameter),
                           ('value', value)])
        for field in ('compression_ratio', 'runtime_seconds', 'num_subgroups',
                      'avg_conditions', 'swkl_per_row'):
            row[field] = getattr(report, field)
        row['memory_mib'] = memory
        rows.append(row)
    return rows


def run(config):
    """Run the requested experiment over every input dataset.

    Failures on a dataset are logged and the remaining datasets are still run.

    Arguments:
        config (`mdlsubgroups.cli.options.RunConfig`): Run configuration;
            `output` is the CSV file, `comparison.csv` by default.

    Return:
        int: 0 if every dataset succeeded, 2 if some failed on data problems,
            3 if some failed otherwise.

    """
    if config.sweep:
        experiment = sweep_parameter
    elif config.gain == 'absolute':
        experiment = compare_gains
    else:
        experiment = compare_algorithms
    rows = []
    status = 0
    for label, loader in dataset_loaders(config):
        try:
            rows.extend(experiment(loader(), config))
        except (DataError, EncodingError, OSError) as error:
            logger.warning("Skipping dataset %s -> %s", label, error)
            status = max(status, 2)
        # pylint: disable=W0703
        except Exception as error:
            logger.exception("Error running dataset %s -> %s", label, repr(error))
            status = 3
    write_text(config.output or DEFAULT_OUTPUT,
               pd.DataFrame(rows).to_csv(index=False, lineterminator='\n'))
    return status

# EOF
