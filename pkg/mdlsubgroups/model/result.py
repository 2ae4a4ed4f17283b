#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   result.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Analyze and store mined subgroup lists."""
from __future__ import print_function, division, absolute_import

import json
from collections import OrderedDict
from functools import wraps

import numpy as np

from mdlsubgroups.encoding.config import EncodingConfig
from mdlsubgroups.model.conditions import EQUALS, BETWEEN, OPERATORS, Condition, Description
from mdlsubgroups.model.conditions import description_mask
from mdlsubgroups.model.subgroup_list import SubgroupList
from mdlsubgroups.utils.exceptions import DataError, NotInitializedError
from mdlsubgroups.utils.logging_color import get_logger
from mdlsubgroups.utils.paths import write_text

logger = get_logger('mdlsubgroups.model.result')

_REQUIRED_KEYS = ('algorithm', 'n-cut', 'default', 'subgroups', 'code-lengths')


def ensure_initialized(method):
    """Make sure the result is initialized."""

    @wraps(method)
    def wrapper(self, *args, **kwargs):
        """Check result is empty. Raise otherwise."""
        if not self.get_result():
            raise NotInitializedError("Trying to use a non-initialized model result")
        return method(self, *args, **kwargs)

    return wrapper


def format_statistics(n_rows, mean, std):
    """Compact statistics of a subgroup, as in `n=16, μ̂=343, σ̂=3`."""
    return u'n={}, μ̂={:.4g}, σ̂={:.4g}'.format(n_rows, mean, std)


def encode_condition(condition, dataset):
    """Serializable form of a condition, using column names and category labels."""
    column = dataset.columns[condition.column_index]
    if condition.operator == EQUALS:
        value = dataset.labels[condition.column_index][condition.values[0]]
    elif condition.operator == BETWEEN:
        value = list(condition.values)
    else:
        value = condition.values[0]
    return OrderedDict([('column', column.name),
                        ('operator', condition.operator),
                        ('value', value)])


def decode_condition(condition_dict, dataset):
    """Resolve a serialized condition on a dataset.

    Raise:
        DataError: If the condition does not fit the dataset.

    """
    try:
        column_index = dataset.column_index(condition_dict['column'])
        operator = condition_dict['operator']
        value = condition_dict['value']
    except KeyError as error:
        raise DataError("Malformed condition, missing {}".format(error))
    if operator not in OPERATORS:
        raise DataError("Unknown operator in model -> {}".format(operator))
    if operator == EQUALS:
        value = dataset.label_code(column_index, value)
    try:
        condition = Condition(column_index, operator, value)
    except (TypeError, ValueError) as error:
        raise DataError("Malformed condition {} -> {}".format(condition_dict, error))
    condition.validate(dataset)
    return condition


class ModelResult(object):
    """Manager for mined subgroup lists.

    Transforms `SubgroupList`s into plain dictionaries that can be stored
    as JSON and turned back into lists over a dataset. Runtimes are never
    stored, so a result only depends on the data and the mining parameters.

    """

    def __init__(self, result=None):
        """Initialize internal variables.

        Arguments:
            result (dict, optional): Model result. Defaults to `None`.

        Raise:
            ValueError: If `result` is not of the correct type.

        """
        if result is not None and not isinstance(result, dict):
            raise ValueError("result is not of the proper type")
        self._result = result

    def get_result(self):
        """Get the full result information.

        Return:
            dict: Full result information.

        """
        return self._result

    @staticmethod
    def from_model(model, algorithm, listified=False):
        """Load a `SubgroupList` into the internal format.

        Arguments:
            model (`mdlsubgroups.model.subgroup_list.SubgroupList`): Model.
            algorithm (str): Name of the miner.
            listified (bool, optional): The list was built from a set of subgroups.

        Return:
            ModelResult

        """
        dataset = model.dataset
        code_lengths = model.code_lengths
        result = OrderedDict()
        result['algorithm'] = algorithm
        result['dataset'] = dataset.name
        result['n-rows'] = dataset.n_rows
        result['n-cut'] = model.config.n_cut
        result['listified'] = bool(listified)
        result['default'] = OrderedDict([('n', int(model.default_mask.sum())),
                                         ('mean', dataset.theta_d.mean),
                                         ('std', dataset.theta_d.std)])
        result['subgroups'] = [OrderedDict([('conditions', [encode_condition(condition, dataset)
                                                            for condition in subgroup.description]),
                                            ('n', subgroup.n),
                                            ('mean', subgroup.stats.mean),
                                            ('std', subgroup.stats.std),
                                            ('data-bits', subgroup.data_bits),
                                            ('l-cost', subgroup.l_cost),
                                            ('degenerate', bool(subgroup.degenerate))])
                               for subgroup in model]
        result['code-lengths'] = OrderedDict([('model-bits', code_lengths.model_bits),
                                              ('data-bits', code_lengths.data_bits),
                                              ('total-bits', code_lengths.total_bits)])
        return ModelResult(result)

    @staticmethod
    def from_json(json_dict):
        """Initialize from a JSON dictionary.

        Raise:
            DataError: If any of the result data is missing.

        """
        if not isinstance(json_dict, dict):
            raise DataError("Model input must be a JSON object")
        missing = [key for key in _REQUIRED_KEYS if key not in json_dict]
        if missing:
            raise DataError("Missing keys in model input -> {}".format(','.join(missing)))
        if not isinstance(json_dict['subgroups'], list):
            raise DataError("Subgroups of the model input must be a list")
        for position, subgroup in enumerate(json_dict['subgroups']):
            if not isinstance(subgroup, dict) or \
                    not isinstance(subgroup.get('conditions'), list):
                raise DataError("Subgroup {} of the model input has no list of "
                                "conditions".format(position))
        return ModelResult(json_dict)

    @staticmethod
    def from_file(file_name):
        """Initialize from a JSON file.

        Raise:
            OSError: If the file cannot be read.
            DataError: If the file is not a valid model.

        """
        with open(file_name, encoding='utf-8') as input_obj:
            try:
                json_dict = json.load(input_obj, object_pairs_hook=OrderedDict)
            except ValueError as error:
                raise DataError("Malformed model file {} -> {}".format(file_name, error))
        return ModelResult.from_json(json_dict)

    @ensure_initialized
    def to_json(self):
        """Convert the result to a JSON string.

        Raise:
            NotInitializedError: If the result has not been initialized.

        """
        return json.dumps(self._result, indent=2, ensure_ascii=False) + '\n'

    @ensure_initialized
    def to_file(self, file_name):
        """Atomically write the result as JSON."""
        write_text(file_name, self.to_json())

    @ensure_initialized
    def get_descriptions(self, dataset):
        """Descriptions of the stored subgroups, resolved on a dataset.

        Raise:
            DataError: If a condition does not fit the dataset.

        """
        return [Description(decode_condition(condition, dataset)
                            for condition in subgroup['conditions'])
                for subgroup in self._result['subgroups']]

    @ensure_initialized
    def to_model(self, dataset):
        """Rebuild the subgroup list on a dataset.

        Thresholds which are not cut points of the dataset are accepted
        with a warning.

        Return:
            `mdlsubgroups.model.subgroup_list.SubgroupList`

        """
        config = EncodingConfig.from_dataset(dataset, int(self._result['n-cut']))
        descriptions = self.get_descriptions(dataset)
        for description in descriptions:
            for condition in description:
                if not condition.validate(dataset, config.binning):
                    logger.warning("Threshold of %s is not a cut point",
                                   condition.describe(dataset))
        return SubgroupList.from_descriptions(descriptions, dataset, config)

    @property
    @ensure_initialized
    def algorithm(self):
        """str: Miner that produced the result."""
        return self._result['algorithm']

    @property
    @ensure_initialized
    def listified(self):
        """bool: The list was built from a set of subgroups."""
        return bool(self._result.get('listified', False))


def overlaps(model):
    """Share of each description's full cover already covered by earlier subgroups.

    Return:
        list[float]: Percentages, 0 for empty covers.

    """
    covered = np.zeros(model.dataset.n_rows, dtype=bool)
    output = []
    for subgroup in model:
        cover = description_mask(subgroup.description, model.dataset)
        size = int(cover.sum())
        output.append(100.0 * int((cover & covered).sum()) / size if size else 0.0)
        covered |= cover
    return output


def render_table(model):
    """Render a subgroup list as an aligned text table.

    One line per subgroup with description, usage, mean, standard deviation
    and overlap, followed by the default rule.

    Return:
        str

    """
    dataset = model.dataset
    rows = [('#', 'description', 'n', 'mean', 'std', 'overlap')]
    for index, (subgroup, overlap) in enumerate(zip(model, overlaps(model)), 1):
        rows.append(('s{}'.format(index), subgroup.description.describe(dataset),
                     str(subgroup.n), '{:.4g}'.format(subgroup.stats.mean),
                     '{:.4g}'.format(subgroup.stats.std), '{:.0f}%'.format(overlap)))
    rows.append(('default', 'dataset', str(dataset.n_rows),
                 '{:.4g}'.format(dataset.theta_d.mean), '{:.4g}'.format(dataset.theta_d.std),
                 ''))
    widths = [max(len(row[col]) for row in rows) for col in range(len(rows[0]))]
    lines = []
    for row_num, row in enumerate(rows):
        cells = [row[0].ljust(widths[0]), row[1].ljust(widths[1])]
        cells.extend(cell.rjust(width) for cell, width in zip(row[2:], widths[2:]))
        lines.append(' | '.join(cells).rstrip())
        if not row_num:
            lines.append('-+-'.join('-' * width for width in widths))
    return '\n'.join(lines) + '\n'

# EOF
