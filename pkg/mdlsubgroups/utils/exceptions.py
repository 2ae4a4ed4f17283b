#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   exceptions.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Exceptions of the package.

The command line maps configuration and request errors to status 1 and data
and encoding errors to status 2.

"""
from __future__ import print_function, division, absolute_import


class ConfigError(Exception):
    """Configuration that cannot be used.

    Attributes:
        missing_keys (list[str]): Required keys that were not found.

    """

    def __init__(self, message, missing_keys=None):
        self.missing_keys = list(missing_keys) if missing_keys else []
        super(ConfigError, self).__init__(message)


class ConfigSyntaxError(ConfigError):
    """YAML file that cannot be parsed or is not a mapping."""


class ConfigValueError(ConfigError):
    """Option with a value outside its range."""


class DataError(Exception):
    """Input table, model file or description inconsistent with the data."""


class EncodingError(ValueError):
    """Code length requested outside the domain of the code."""


class InvalidRequestError(Exception):
    """Operation called with arguments it cannot handle, such as too many inputs."""


class NotInitializedError(Exception):
    """Result object used before being filled."""

# EOF
