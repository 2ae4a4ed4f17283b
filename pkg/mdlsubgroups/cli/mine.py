#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   mine.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Mine a subgroup list from a CSV file."""
from __future__ import print_function, division, absolute_import

import os

import pandas as pd

from mdlsubgroups.data.loaders import load_csv
from mdlsubgroups.metrics.report import render_reports, report_row, summarize
from mdlsubgroups.model.result import ModelResult, render_table
from mdlsubgroups.search import get_miner
from mdlsubgroups.utils.config import write_config
from mdlsubgroups.utils.exceptions import InvalidRequestError
from mdlsubgroups.utils.logging_color import get_logger
from mdlsubgroups.utils.monitoring import Timer
from mdlsubgroups.utils.paths import write_text

logger = get_logger('mdlsubgroups.cli.mine')

REPORT_EXTENSIONS = {'json': 'json', 'table': 'txt', 'csv': 'csv'}


def format_report(report, output_format, model=None, label='model'):
    """Render a report in one of the output formats.

    The table format includes the subgroup table when a model is given.

    Return:
        str

    """
    if output_format == 'json':
        return report.to_json()
    if output_format == 'csv':
        return pd.DataFrame([report_row(report, model=label)]).to_csv(index=False,
                                                                      lineterminator='\n')
    text = render_reports([(label, report)])
    if model is not None:
        text = render_table(model) + '\n' + text
    return text


def run(config):
    """Mine, then write the model JSON, the report and the options used.

    Arguments:
        config (`mdlsubgroups.cli.options.RunConfig`): Run configuration. The
            single input is the CSV file; `output` is the output directory.

    Return:
        int: Exit status.

    Raise:
        InvalidRequestError: If the number of inputs is wrong.

    """
    if len(config.inputs) != 1:
        raise InvalidRequestError("mine takes exactly one input file")
    dataset = load_csv(config.inputs[0], config.target, config.schema)
    miner = get_miner(config.algorithm)
    with Timer(config.algorithm) as timer:
        model, listified = miner(dataset, config)
    report = summarize(model, timer.elapsed)
    output_dir = config.output or os.getcwd()
    base_name = os.path.join(output_dir, '{}.{}'.format(dataset.name, config.algorithm))
    ModelResult.from_model(model, config.algorithm, listified).to_file(base_name + '.model.json')
    write_config(config.to_options(), base_name + '.config.yaml')
    label = config.algorithm + (' (listified)' if listified else '')
    write_text('{}.report.{}'.format(base_name, REPORT_EXTENSIONS[config.output_format]),
               format_report(report, config.output_format, model, label))
    print(render_table(model))
    print(render_reports([(label, report)]))
    return 0

# EOF
