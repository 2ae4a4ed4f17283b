#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   report.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Summary reports of subgroup lists."""
from __future__ import print_function, division, absolute_import

import json
from collections import OrderedDict, namedtuple

import numpy as np

from mdlsubgroups.encoding.total import total_code
from mdlsubgroups.metrics import avg_jaccard, compression_ratio, swkl

REPORT_FIELDS = ('swkl_total', 'swkl_per_row', 'num_subgroups', 'avg_conditions',
                 'sigma_top1_norm', 'avg_jaccard', 'compression_ratio', 'runtime_seconds',
                 'model_bits', 'data_bits', 'total_bits')

_TABLE_HEADERS = OrderedDict([('swkl_per_row', 'SWKL/n'),
                              ('sigma_top1_norm', 'sigma_top1'),
                              ('num_subgroups', '|S|'),
                              ('avg_conditions', '|a|'),
                              ('avg_jaccard', 'jaccard'),
                              ('compression_ratio', 'L%'),
                              ('swkl_total', 'SWKL'),
                              ('runtime_seconds', 'runtime[s]')])


class EvaluationReport(namedtuple('EvaluationReport', REPORT_FIELDS)):
    """Quality summary of a subgroup list."""

    __slots__ = ()

    def to_dict(self):
        """Plain ordered dictionary of the report."""
        return OrderedDict((field, _plain(getattr(self, field))) for field in self._fields)

    def to_json(self):
        """JSON form of the report."""
        return json.dumps(self.to_dict(), indent=2) + '\n'


def _plain(value):
    if isinstance(value, (np.integer, int)):
        return int(value)
    return float(value)


def summarize(model, runtime=0.0):
    """Evaluate a subgroup list.

    Arguments:
        model (`mdlsubgroups.model.subgroup_list.SubgroupList`): Model.
        runtime (float, optional): Mining time in seconds.

    Return:
        EvaluationReport

    """
    dataset = model.dataset
    swkl_total = swkl(model)
    descriptions = model.descriptions
    if len(model):
        first = model.subgroups[0].stats
        sigma_top1 = (first.std / dataset.theta_d.std) if dataset.theta_d.std > 0 else 1.0
        avg_conditions = float(np.mean([len(description) for description in descriptions]))
    else:
        sigma_top1, avg_conditions = 1.0, 0.0
    code_lengths = total_code(model)
    return EvaluationReport(swkl_total=swkl_total,
                            swkl_per_row=swkl_total / dataset.n_rows,
                            num_subgroups=len(model),
                            avg_conditions=avg_conditions,
                            sigma_top1_norm=float(sigma_top1),
                            avg_jaccard=avg_jaccard(descriptions, dataset),
                            compression_ratio=compression_ratio(model),
                            runtime_seconds=float(runtime),
                            model_bits=code_lengths.model_bits,
                            data_bits=code_lengths.data_bits,
                            total_bits=code_lengths.total_bits)


def render_reports(reports):
    """Aligned text table of reports.

    Arguments:
        reports (list[tuple]): (label, EvaluationReport) pairs.

    Return:
        str

    """
    header = ['model'] + list(_TABLE_HEADERS.values())
    rows = [header]
    for label, report in reports:
        row = [str(label)]
        for field in _TABLE_HEADERS:
            value = getattr(report, field)
            row.append(str(value) if field == 'num_subgroups' else '{:.4g}'.format(value))
        rows.append(row)
    widths = [max(len(row[col]) for row in rows) for col in range(len(header))]
    lines = ['  '.join([row[0].ljust(widths[0])]
                       + [cell.rjust(width) for cell, width in zip(row[1:], widths[1:])])
             for row in rows]
    return '\n'.join(lines) + '\n'


def report_row(report, **extra):
    """Flat ordered row of a report, for CSV output."""
    row = OrderedDict(extra)
    row.update(report.to_dict())
    return row

# EOF
