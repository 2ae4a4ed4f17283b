#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   evaluate.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Evaluate a stored model on a dataset."""
from __future__ import print_function, division, absolute_import

from mdlsubgroups.cli.mine import format_report
from mdlsubgroups.data.loaders import load_csv
from mdlsubgroups.metrics.report import summarize
from mdlsubgroups.model.result import ModelResult
from mdlsubgroups.utils.exceptions import InvalidRequestError
from mdlsubgroups.utils.logging_color import get_logger
from mdlsubgroups.utils.monitoring import Timer
from mdlsubgroups.utils.paths import write_text

logger = get_logger('mdlsubgroups.cli.evaluate')


def evaluate_model(model_file, dataset):
    """Rebuild a stored model on a dataset and evaluate it.

    Return:
        tuple: (SubgroupList, EvaluationReport, ModelResult)

    """
    result = ModelResult.from_file(model_file)
    with Timer('evaluation') as timer:
        model = result.to_model(dataset)
    if result.listified:
        logger.info("Model %s was built from a set of subgroups; overlap removed by list order",
                    model_file)
    return model, summarize(model, timer.elapsed), result


def run(config):
    """Evaluate a model JSON file against a CSV dataset.

    Arguments:
        config (`mdlsubgroups.cli.options.RunConfig`): Inputs are the model file
            and the CSV file; `output` is the report file, stdout if not given.

    Return:
        int: Exit status.

    """
    if len(config.inputs) != 2:
        raise InvalidRequestError("evaluate takes a model file and a data file")
    model_file, data_file = config.inputs
    dataset = load_csv(data_file, config.target, config.schema)
    model, report, result = evaluate_model(model_file, dataset)
    text = format_report(report, config.output_format, model, result.algorithm)
    if config.output:
        write_text(config.output, text)
    else:
        print(text)
    return 0

# EOF
