#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   __init__.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Manage datasets."""
from __future__ import print_function, division, absolute_import

import os

from mdlsubgroups import get_global_var
from mdlsubgroups.utils.config import load_config
from mdlsubgroups.utils.exceptions import ConfigError
from mdlsubgroups.utils.logging_color import get_logger

logger = get_logger('mdlsubgroups.data')


def register_file_type(extension, file_type):
    """Register a file type with a given extension.

    Return:
        int: Number of extensions registered with that particular file type.

    """
    if not extension.startswith('.'):
        extension = "." + extension
    logger.debug("Registering file type for extension %s -> %s", extension, file_type)
    get_global_var('FILE_TYPES').update({extension: file_type})
    return sum(1
               for f_type in get_global_var('FILE_TYPES').values()
               if f_type == file_type)


# Register
register_file_type('csv', 'csv')
register_file_type('txt', 'csv')


def load_data(config_file, key=None, **kwargs):
    """Load a dataset described in a YAML file.

    Arguments:
        config_file (str): Name of the configuration file.
        key (str, optional): Key to load in the configuration file. If none is
            given, the root of the YAML file will be used as configuration.
        **kwargs (dict): Dictionary to override keys from the dictionary.

    Return:
        `mdlsubgroups.data.dataset.Dataset`

    Raise:
        OSError: If the config file cannot be loaded.
        ConfigError: If the validation of the configuration fails.

    """
    config_file = os.path.abspath(config_file)
    if not os.path.exists(config_file):
        raise OSError("Cannot find config file -> {}".format(config_file))
    config = load_config(config_file, root=key, validate=['source'])
    return get_data(config, base_dir=os.path.dirname(config_file), **kwargs)


def get_data(data_config, base_dir=None, **kwargs):
    """Get a dataset from its configuration.

    Detects the input file extension and uses the proper loader.

    The required configuration key is `source`, the input file. Relative
    paths are taken with respect to `base_dir`.

    Optional config keys:
        + `target`: target column, the last column by default.
        + `schema`: column kinds, either a mapping or a sidecar file name.
        + `name`: dataset name, the file stem by default.
        + `input-type`: type of input, in case the extension has not been registered.

    Return:
        `mdlsubgroups.data.dataset.Dataset`

    Raise:
        ConfigError: If the configuration is incomplete or the file type unknown.
        OSError: If the input file can't be found.

    """
    import mdlsubgroups.data.loaders as _loaders
    data_config = dict(data_config)
    data_config.update(kwargs)
    if 'source' not in data_config:
        raise ConfigError("Bad data configuration -> 'source' key is missing", ['source'])
    file_name = str(data_config['source'])
    if base_dir and not os.path.isabs(file_name):
        file_name = os.path.join(base_dir, file_name)
    if not os.path.exists(file_name):
        raise OSError("Cannot find input file -> {}".format(file_name))
    input_ext = os.path.splitext(file_name)[1]
    input_type = data_config.get('input-type') or get_global_var('FILE_TYPES').get(input_ext)
    if not input_type:
        raise ConfigError("Unknown file extension -> {}. Cannot load file.".format(input_ext))
    try:
        load_func = getattr(_loaders, 'load_{}'.format(input_type))
    except AttributeError:
        raise ConfigError("No loader available for input type -> {}".format(input_type))
    schema = data_config.get('schema')
    if isinstance(schema, str) and base_dir and not os.path.isabs(schema):
        schema = os.path.join(base_dir, schema)
    logger.debug("Loading data file -> %s", file_name)
    return load_func(file_name,
                     target_column=data_config.get('target'),
                     schema_override=schema,
                     name=data_config.get('name'))

# EOF
