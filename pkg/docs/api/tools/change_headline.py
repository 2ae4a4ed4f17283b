#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   change_headline.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Shorten the headlines of generated API pages to the last module name.

`mdlsubgroups.search.beam module` becomes `beam`, with a matching underline.

"""
from __future__ import print_function, division, absolute_import

import argparse


def shorten_headline(rest_file):
    """Rewrite the headline of a ReST file.

    Return:
        bool: Whether the file was changed.

    """
    with open(rest_file) as input_obj:
        lines = input_obj.read().split('\n')
    if len(lines) < 2 or not lines[0].strip():
        return False
    full_name = lines[0].strip().split()[0]
    if '.' not in full_name:
        return False
    headline = full_name.split('.')[-1]
    lines[:2] = [headline, lines[1][0] * len(headline)]
    with open(rest_file, 'w') as output_obj:
        output_obj.write('\n'.join(lines))
    return True


def main():
    """Shorten the headlines of the files given in the command line."""
    parser = argparse.ArgumentParser(description="Shorten API page headlines")
    parser.add_argument('files', type=str, nargs='*')
    args = parser.parse_args()
    n_files = sum(shorten_headline(rest_file) for rest_file in args.files)
    print("Changed the headline of {} files".format(n_files))


if __name__ == "__main__":
    main()

# EOF
