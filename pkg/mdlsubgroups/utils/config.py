#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   config.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Configuration files."""

from __future__ import print_function, division, absolute_import

import os
from collections import OrderedDict

import yaml
import yamlloader

from mdlsubgroups.utils.exceptions import ConfigError, ConfigSyntaxError
from mdlsubgroups.utils.logging_color import get_logger

logger = get_logger('mdlsubgroups.utils.config')

GLOBALS_KEYWORD = 'globals'


def load_config(*file_names, **options):
    """Load configuration from YAML files.

    If more than one is specified, they are loaded in the order given
    in the function call. Therefore, the latter will override the former
    if key overlap exists.
    Currently supported options are:
        - `root` (str), which determines the node that is considered as root.
        - `validate` (list), which gets a list of keys to check. If one of these
            keys is not present, `ConfigError` is raised.

    Additionally, the `load` key inserts the contents of another file, with the
    format `file_name:key`. `file_name` is relative to the file containing the
    `load` entry. The `globals` key can be used to define global variables, which
    are referenced by writing "globals.path_to.myvar" as a value.

    Arguments:
        *file_names (list[str]): Files to load.
        **options (dict): Configuration options. See above for supported
            options.

    Return:
        OrderedDict: Configuration.

    Raise:
        OSError: If some file does not exist.
        ConfigError: If key loading or validation fail.

    """
    unfolded_data = []
    for file_name in file_names:
        if not os.path.exists(file_name):
            raise OSError("Cannot find config file -> {}".format(file_name))
        try:
            with open(file_name) as input_obj:
                content = yaml.load(input_obj, Loader=yamlloader.ordereddict.SafeLoader)
        except yaml.YAMLError as error:
            raise ConfigSyntaxError("Malformed YAML in {} -> {}".format(file_name, error))
        if content is None:
            continue
        if not isinstance(content, dict):
            raise ConfigSyntaxError("Top level of {} is not a mapping".format(file_name))
        base_dir = os.path.dirname(os.path.abspath(file_name))
        for key, val in unfold_config(content):
            if key.split('/')[-1] != 'load':
                unfolded_data.append((key, val))
                continue
            split_val = str(val).split(':')
            if len(split_val) != 2:
                raise ConfigError("Malformed 'load' key -> {}".format(val))
            load_file, required_key = split_val
            if not os.path.isabs(load_file):
                load_file = os.path.join(base_dir, load_file)
            root = key.rsplit('/load', 1)[0] if '/' in key else ''
            try:
                loaded = load_config(load_file, root=required_key)
            except Exception:
                logger.error("Error loading required data in %s", required_key)
                raise
            for new_key, new_val in unfold_config(loaded):
                unfolded_data.append(('{}/{}'.format(root, new_key) if root else new_key,
                                      new_val))
    data = replace_globals(fold_config(unfolded_data, OrderedDict))
    logger.debug('Loaded configuration -> %s', data)
    data_root = options.get('root', '')
    if data_root:
        for root_node in data_root.split('/'):
            try:
                data = data[root_node]
            except (KeyError, TypeError):
                raise ConfigError("Root node {} of {} not found in configuration".format(root_node,
                                                                                     data_root))
    if options.get('validate'):
        data_keys = {'/'.join(key.split('/')[:entry_num + 1])
                     for key, _ in unfold_config(data)
                     for entry_num in range(len(key.split('/')))}
        missing_keys = [key for key in options['validate'] if key not in data_keys]
        if missing_keys:
            raise ConfigError("Failed validation: {} are missing".format(','.join(missing_keys)),
                              missing_keys)
    return data


def replace_globals(folded_data):
    """Replace values referencing to global, remove global.

    Arguments:
        folded_data (dict): The folded config.

    Return:
        OrderedDict: `folded_data` with the global keyword removed and
            every value containing the global keyword replaced by the value.

    Raise:
        ConfigError: If a referenced global does not exist.

    """
    folded_data = folded_data.copy()
    yaml_globals = folded_data.pop(GLOBALS_KEYWORD, {})
    unfolded_data = unfold_config(folded_data)
    for key, val in list(unfolded_data):
        if isinstance(val, str) and val.startswith(GLOBALS_KEYWORD + '.'):
            yaml_global = yaml_globals
            try:
                for glob_key in val.split('.')[1:]:
                    yaml_global = yaml_global[glob_key]
            except (KeyError, TypeError):
                raise ConfigError("Invalid global reference '{}': value {} not found".format(val,
                                                                                         key))
            unfolded_data.append((key, yaml_global))
    return fold_config(unfolded_data, OrderedDict)


def write_config(config, file_name):
    """Write configuration to file, keeping the key order.

    Arguments:
        config (dict): Configuration.
        file_name (str): Output file.

    """
    with open(file_name, 'w') as output_file:
        yaml.dump(config,
                  output_file,
                  Dumper=yamlloader.ordereddict.SafeDumper,
                  default_flow_style=False,
                  allow_unicode=True,
                  indent=4)


def merge_options(config, overrides):
    """Overlay non-`None` command line values on a configuration.

    Keys use the dashed spelling of the configuration files.

    Arguments:
        config (dict): Configuration loaded from files.
        overrides (dict): Values given explicitly, `None` meaning "not given".

    Return:
        OrderedDict: Merged configuration.

    """
    merged = OrderedDict(config)
    for key, value in overrides.items():
        if value is not None:
            merged[key.replace('_', '-')] = value
    return merged


# Helpers
def unfold_config(dictionary):
    """Convert a dictionary to a list of key, value pairs.

    Unfolding is done a la viewitems, but recursively.

    Arguments:
        dictionary (dict): Dictionary to unfold.

    Return:
        list: Unfolded dictionary.

    """
    output_list = []
    for key, val in dictionary.items():
        if isinstance(val, dict) and val:
            for sub_key, sub_val in unfold_config(val):
                if isinstance(sub_val, list):
                    sub_val = tuple(sub_val)
                output_list.append(('{}/{}'.format(key, sub_key), sub_val))
        else:
            output_list.append((key, val))
    return output_list


def fold_config(unfolded_data, dict_class=dict):
    """Convert an unfolded dictionary (a la viewitems) back to a dictionary.

    Tuples are converted to lists. This reflects the inverted behaviour
    to :py:func:`unfold_config`.

    Note:
        If a key is specified more than once, the latest value is taken.

    Arguments:
        unfolded_data (iterable): Data to fold
        dict_class (class): Dictionary-like class used to fold the configuration.

    Return:
        dict: Folded configuration.

    """
    output_dict = dict_class()
    for key, value in unfolded_data:
        if isinstance(value, tuple):
            value = list(value)
        current_level = output_dict
        sub_keys = key.split('/')
        for sub_key in sub_keys[:-1]:
            if not isinstance(current_level.get(sub_key), dict):
                current_level[sub_key] = dict_class()
            current_level = current_level[sub_key]
        current_level[sub_keys[-1]] = value
    return output_dict

# EOF
