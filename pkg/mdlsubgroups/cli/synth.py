#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   synth.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Generate a planted synthetic dataset."""
from __future__ import print_function, division, absolute_import

import os

from mdlsubgroups.toys.planted import PlantedSpec, generate_planted, write_planted
from mdlsubgroups.utils.config import load_config
from mdlsubgroups.utils.exceptions import InvalidRequestError
from mdlsubgroups.utils.logging_color import get_logger
from mdlsubgroups.utils.random_numbers import resolve_seed

logger = get_logger('mdlsubgroups.cli.synth')


def run(config):
    """Generate the dataset described in a YAML file.

    Writes `<name>.csv` and `<name>.truth.json` in the output directory.

    Arguments:
        config (`mdlsubgroups.cli.options.RunConfig`): The single input is the
            planted specification; `seed` overrides its seed.

    Return:
        int: Exit status.

    """
    if len(config.inputs) != 1:
        raise InvalidRequestError("synth takes exactly one specification file")
    spec_config = load_config(config.inputs[0], validate=['n-rows'])
    seed = resolve_seed(config.seed, spec_config.get('seed'))
    spec = PlantedSpec.from_config(spec_config, seed)
    logger.info("Generating %s with seed %s", spec.name, seed)
    dataset, covers, descriptions = generate_planted(spec)
    base_name = os.path.join(config.output or os.getcwd(), spec.name)
    write_planted(spec, dataset, covers, descriptions, base_name + '.csv',
                  base_name + '.truth.json')
    return 0

# EOF
