#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   paths.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Safe handling of output files."""
from __future__ import print_function, division, absolute_import

import os
import tempfile
from contextlib import contextmanager

import fasteners

from mdlsubgroups.utils.logging_color import get_logger

logger = get_logger('mdlsubgroups.utils.paths')


def prepare_path(file_name):
    """Make sure the directory of a file exists.

    Arguments:
        file_name (str): File to prepare.

    Return:
        str: Absolute path of the file.

    Raise:
        OSError: If the directory cannot be created.

    """
    file_name = os.path.abspath(file_name)
    dir_name = os.path.dirname(file_name)
    if not os.path.exists(dir_name):
        os.makedirs(dir_name)
    return file_name


@contextmanager
def work_on_file(file_name):
    """Context manager for writing a file atomically.

    A temporary file in the destination directory is yielded. On a clean exit
    it replaces `file_name`; if the block raises, it is removed and the
    destination is left untouched. The destination is locked during the whole
    process.

    Arguments:
        file_name (str): Final name of the file.

    Yields:
        str: Path of the temporary file to write to.

    Raise:
        OSError: If there is a problem preparing the path.

    """
    try:
        dest_file = prepare_path(file_name)
    except OSError as error:
        raise OSError("Error preparing path -> {}".format(str(error)))
    dir_name, base_name = os.path.split(dest_file)
    lock_file = os.path.join(dir_name, '.{}.lock'.format(base_name))
    with fasteners.InterProcessLock(lock_file):
        logger.debug("Got lock (file: %s)!", lock_file)
        handle, temp_file = tempfile.mkstemp(prefix='.{}.'.format(base_name), dir=dir_name)
        os.close(handle)
        try:
            yield temp_file
            os.replace(temp_file, dest_file)
        finally:
            if os.path.exists(temp_file):
                os.remove(temp_file)
            logger.debug('Releasing lock (file: %s)!', lock_file)
    if os.path.exists(lock_file):
        try:
            os.remove(lock_file)
        except OSError:
            pass


def write_text(file_name, text):
    """Atomically write a text file.

    Arguments:
        file_name (str): Output file.
        text (str): Content.

    """
    with work_on_file(file_name) as temp_file:
        with open(temp_file, 'w', encoding='utf-8', newline='\n') as output_obj:
            output_obj.write(text)
    logger.info("Written output to %s", file_name)

# EOF
