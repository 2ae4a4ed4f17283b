#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   test_cli.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Test the command line application."""
from __future__ import print_function, division, absolute_import

import json
import os

import pandas as pd
import pytest

from mdlsubgroups.cli import main
from mdlsubgroups.cli.options import build_run_config, parse_sweep
from mdlsubgroups.toys.planted import generate_planted, write_planted
from mdlsubgroups.utils.config import load_config
from mdlsubgroups.utils.exceptions import ConfigValueError

from conftest import planted_spec, temp_file

SEARCH_ARGS = ['--beam-width', '10', '--max-depth', '2', '--n-cut', '3']

SPEC_YAML = """
name: tiny
n-rows: 300
seed: 5
columns:
    x1: {kind: numeric, low: 0.0, high: 1.0}
planted:
    - {shift: 3.0, ratio: 0.2}
"""


def run_main(argv):
    """Run the application and return its exit status."""
    with pytest.raises(SystemExit) as exit_info:
        main(argv)
    return exit_info.value.code


@pytest.fixture
def data_file(temp_dir):
    """Small planted CSV file."""
    spec = planted_spec(n_rows=400, marker_levels=5)
    dataset, covers, descriptions = generate_planted(spec)
    csv_file = os.path.join(temp_dir, 'planted.csv')
    write_planted(spec, dataset, covers, descriptions, csv_file,
                  os.path.join(temp_dir, 'planted.truth.json'))
    return csv_file


def test_parse_sweep():
    """Test sweep requests."""
    assert parse_sweep(['depth', '1,2,3']) == ('depth', (1, 2, 3))
    assert parse_sweep('cuts 2,5') == ('cuts', (2, 5))
    assert parse_sweep(None) is None
    for bad in (['width', '1,2'], ['depth', 'a,b'], ['depth', ',']):
        with pytest.raises(ConfigValueError):
            parse_sweep(bad)


def test_run_config_precedence():
    """Command line values override configuration files, which override defaults."""
    with temp_file("beam-width: 30\nmax-depth: 3\nalgorithm: topk\n", suffix='.yaml') as config:
        run_config = build_run_config('mine', ['data.csv'], [config], max_depth=2, k=None)
    assert run_config.search.beam_width == 30
    assert run_config.search.max_depth == 2
    assert run_config.algorithm == 'topk'
    assert run_config.baseline.k is None
    assert run_config.baseline.min_coverage == 10
    assert run_config.output_format == 'table'
    with pytest.raises(ConfigValueError):
        build_run_config('mine', ['data.csv'], algorithm='apriori')
    with pytest.raises(ConfigValueError):
        build_run_config('mine', ['data.csv'], beam_width=0)


# pylint: disable=W0621
def test_mine_and_evaluate(data_file, temp_dir):
    """Mined models are written and evaluate to the same report."""
    out_dir = os.path.join(temp_dir, 'out')
    assert run_main(['mine', data_file, '--output', out_dir, '--format', 'json']
                    + SEARCH_ARGS) == 0
    model_file = os.path.join(out_dir, 'planted.ssdpp.model.json')
    report_file = os.path.join(out_dir, 'planted.ssdpp.report.json')
    with open(model_file) as input_obj:
        model_json = json.load(input_obj)
    with open(report_file) as input_obj:
        mined_report = json.load(input_obj)
    assert model_json['algorithm'] == 'ssdpp'
    assert len(model_json['subgroups']) == mined_report['num_subgroups'] >= 1
    evaluated_file = os.path.join(temp_dir, 'evaluated.json')
    assert run_main(['evaluate', model_file, data_file, '--format', 'json',
                     '--output', evaluated_file]) == 0
    with open(evaluated_file) as input_obj:
        evaluated_report = json.load(input_obj)
    for field in ('swkl_total', 'num_subgroups', 'compression_ratio', 'total_bits'):
        assert evaluated_report[field] == pytest.approx(mined_report[field], abs=1e-6)


def test_mine_is_deterministic(data_file, temp_dir):
    """Two runs write byte-identical models."""
    contents = []
    for run_number in range(2):
        out_dir = os.path.join(temp_dir, 'run{}'.format(run_number))
        assert run_main(['mine', data_file, '--output', out_dir] + SEARCH_ARGS) == 0
        with open(os.path.join(out_dir, 'planted.ssdpp.model.json'), 'rb') as input_obj:
            contents.append(input_obj.read())
        assert os.path.exists(os.path.join(out_dir, 'planted.ssdpp.report.txt'))
    assert contents[0] == contents[1]


def test_mine_writes_options(data_file, temp_dir):
    """The options of a run are stored and reproduce it."""
    first_dir, second_dir = os.path.join(temp_dir, 'first'), os.path.join(temp_dir, 'second')
    assert run_main(['mine', data_file, '--output', first_dir, '--algorithm', 'seqcover',
                     '--min-coverage', '5', '--max-subgroups', '3'] + SEARCH_ARGS) == 0
    config_file = os.path.join(first_dir, 'planted.seqcover.config.yaml')
    options = load_config(config_file)
    assert options['algorithm'] == 'seqcover'
    assert (options['beam-width'], options['max-depth'], options['n-cut']) == (10, 2, 3)
    assert (options['min-coverage'], options['max-subgroups']) == (5, 3)
    assert options['k'] is None
    assert run_main(['mine', data_file, '--output', second_dir, '--config', config_file]) == 0
    contents = []
    for out_dir in (first_dir, second_dir):
        with open(os.path.join(out_dir, 'planted.seqcover.model.json'), 'rb') as input_obj:
            contents.append(input_obj.read())
    assert contents[0] == contents[1]


@pytest.mark.parametrize('algorithm', ['topk', 'seqcover'])
def test_mine_baselines(data_file, temp_dir, algorithm):
    """The baselines are available from the command line."""
    assert run_main(['mine', data_file, '--output', temp_dir, '--algorithm', algorithm,
                     '--k', '2', '--min-coverage', '5', '--format', 'csv'] + SEARCH_ARGS) == 0
    with open(os.path.join(temp_dir, 'planted.{}.model.json'.format(algorithm))) as input_obj:
        model_json = json.load(input_obj)
    assert model_json['listified'] == (algorithm == 'topk')
    report = pd.read_csv(os.path.join(temp_dir, 'planted.{}.report.csv'.format(algorithm)))
    assert len(report) == 1


def test_synth(temp_dir):
    """Generation writes the data and ground truth, reproducibly."""
    with temp_file(SPEC_YAML, suffix='.yaml') as spec_file:
        contents = []
        for run_number in range(2):
            out_dir = os.path.join(temp_dir, 'run{}'.format(run_number))
            assert run_main(['synth', spec_file, '--output', out_dir, '--seed', '21']) == 0
            with open(os.path.join(out_dir, 'tiny.csv'), 'rb') as input_obj:
                contents.append(input_obj.read())
            with open(os.path.join(out_dir, 'tiny.truth.json')) as input_obj:
                truth = json.load(input_obj)
            assert truth['seed'] == 21
        assert contents[0] == contents[1]
        assert run_main(['synth', spec_file, '--output', os.path.join(temp_dir, 'run2')]) == 0
    with open(os.path.join(temp_dir, 'run2', 'tiny.truth.json')) as input_obj:
        assert json.load(input_obj)['seed'] == 5


def test_compare_algorithms(data_file, temp_dir):
    """The default comparison has one row per algorithm."""
    output = os.path.join(temp_dir, 'comparison.csv')
    assert run_main(['compare', data_file, '--output', output] + SEARCH_ARGS) == 0
    table = pd.read_csv(output)
    assert list(table['algorithm']) == ['ssdpp', 'topk', 'seqcover']
    assert list(table['listified']) == [False, True, False]
    assert {'swkl_per_row', 'compression_ratio', 'runtime_seconds',
            'memory_mib'} <= set(table.columns)
    assert (table['compression_ratio'].iloc[0]) < 1.0


def test_compare_modes(data_file, temp_dir):
    """Gain comparison and parameter sweeps."""
    output = os.path.join(temp_dir, 'gains.csv')
    assert run_main(['compare', data_file, '--gain', 'absolute', '--output', output]
                    + SEARCH_ARGS) == 0
    table = pd.read_csv(output)
    assert len(table) == 1
    assert {'compression_ratio_normalized', 'compression_ratio_absolute'} <= set(table.columns)
    output = os.path.join(temp_dir, 'sweep.csv')
    assert run_main(['compare', data_file, '--sweep', 'depth', '1,2', '--output', output]
                    + SEARCH_ARGS) == 0
    table = pd.read_csv(output)
    assert list(table['value']) == [1, 2]
    assert set(table['parameter']) == {'depth'}


def test_compare_experiment_file(data_file, temp_dir):
    """Datasets can be listed in an experiment file, and bad ones are skipped."""
    experiment = os.path.join(temp_dir, 'experiment.yaml')
    with open(experiment, 'w') as output_obj:
        output_obj.write("datasets:\n    - {source: planted.csv, name: good}\n"
                         "    - {source: missing.csv, name: bad}\n")
    output = os.path.join(temp_dir, 'experiment.csv')
    assert run_main(['compare', experiment, '--output', output] + SEARCH_ARGS) == 2
    table = pd.read_csv(output)
    assert set(table['dataset']) == {'good'}
    assert os.path.basename(data_file) == 'planted.csv'


def test_compare_two_datasets(data_file, temp_dir):
    """Two datasets give one row per dataset and algorithm."""
    spec = planted_spec(seed=8, n_rows=300, marker_levels=5)
    dataset, covers, descriptions = generate_planted(spec)
    second_file = os.path.join(temp_dir, 'second.csv')
    write_planted(spec, dataset, covers, descriptions, second_file,
                  os.path.join(temp_dir, 'second.truth.json'))
    output = os.path.join(temp_dir, 'comparison.csv')
    assert run_main(['compare', data_file, second_file, '--output', output] + SEARCH_ARGS) == 0
    table = pd.read_csv(output)
    assert len(table) == 6
    assert list(table['dataset']) == ['planted'] * 3 + ['second'] * 3
    assert list(table['algorithm']) == ['ssdpp', 'topk', 'seqcover'] * 2
    assert list(table['n_rows']) == [400] * 3 + [300] * 3


@pytest.mark.parametrize('parameter, values', [('beam', [25, 50, 100, 200]),
                                               ('cuts', [2, 3, 5]),
                                               ('depth', [1, 2, 3])])
def test_compare_sweeps(data_file, temp_dir, parameter, values):
    """A sweep has one row per value, in the requested order."""
    output = os.path.join(temp_dir, 'sweep.csv')
    assert run_main(['compare', data_file, '--sweep', parameter,
                     ','.join(str(value) for value in values), '--output', output]
                    + SEARCH_ARGS) == 0
    table = pd.read_csv(output)
    assert list(table['value']) == values
    assert set(table['parameter']) == {parameter}
    assert set(table['dataset']) == {'planted'}
    assert (table['compression_ratio'] <= 1.0 + 1e-9).all()
    assert (table['runtime_seconds'] >= 0.0).all()


def test_compare_dataset_file(data_file, temp_dir):
    """A YAML file can describe a single dataset."""
    dataset_file = os.path.join(temp_dir, 'single.yaml')
    with open(dataset_file, 'w') as output_obj:
        output_obj.write("source: {}\nname: single\n".format(os.path.basename(data_file)))
    output = os.path.join(temp_dir, 'single.csv')
    assert run_main(['compare', dataset_file, '--gain', 'absolute', '--output', output]
                    + SEARCH_ARGS) == 0
    table = pd.read_csv(output)
    assert list(table['dataset']) == ['single']
    with temp_file("format: json\n", suffix='.yaml') as empty_experiment:
        assert run_main(['compare', empty_experiment, '--output', output]) == 1


def test_exit_codes(data_file, temp_dir):
    """Errors are mapped to exit statuses."""
    assert run_main(['mine', os.path.join(temp_dir, 'missing.csv'),
                     '--output', temp_dir]) == 2
    assert run_main(['mine', data_file, '--target', 'nothere', '--output', temp_dir]) == 2
    assert run_main(['mine', data_file, '--beam-width', '0', '--output', temp_dir]) == 1
    assert run_main(['mine', data_file, '--algorithm', 'apriori']) == 1
    assert run_main(['frobnicate']) == 1
    assert run_main(['compare', data_file, '--sweep', 'width', '1,2']) == 1
    with temp_file("{bad yaml: [", suffix='.yaml') as config:
        assert run_main(['mine', data_file, '--config', config, '--output', temp_dir]) == 1
    model_file = os.path.join(temp_dir, 'broken.json')
    with open(model_file, 'w') as output_obj:
        output_obj.write('{"algorithm": "ssdpp"}')
    assert run_main(['evaluate', model_file, data_file]) == 2
    with open(model_file, 'w') as output_obj:
        json.dump({'algorithm': 'ssdpp', 'n-cut': 3, 'default': {}, 'code-lengths': {},
                   'subgroups': [{'n': 10, 'mean': 1.0}]}, output_obj)
    assert run_main(['evaluate', model_file, data_file]) == 2

# EOF
