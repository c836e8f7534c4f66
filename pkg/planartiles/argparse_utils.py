#!/usr/bin/env python
# -*- coding: utf-8 -*-

import argparse
import os

from planartiles import utils

"""Some helpers for argparse."""


def readable(f):
    """Validates if the pathname is a readable file, '-' standing for stdin."""
    if f == '-':
        return f
    f = os.path.normpath(f)
    if not os.access(f, os.F_OK | os.R_OK):
        raise argparse.ArgumentTypeError("%s is not readable." % f)
    return f


def rational(s):
    """Validates a "p/q" rational."""
    try:
        return utils.to_fraction(s)
    except (TypeError, ValueError) as e:
        raise argparse.ArgumentTypeError(str(e))


def positive_int(s):
    try:
        i = int(s)
    except ValueError as e:
        raise argparse.ArgumentTypeError(e)
    if i < 1:
        raise argparse.ArgumentTypeError("%s is not a positive int." % s)
    return i


def int_vector(s):
    """Validates a comma separated integer vector, like 1,1,1"""
    try:
        return tuple(int(x) for x in s.split(','))
    except ValueError:
        raise argparse.ArgumentTypeError("%s is not a comma separated int vector." % s)


def intervals(s):
    """Validates a list of closed rational intervals, like 1/3:1/2,3/4:4/5"""
    ret = []
    for part in s.split(','):
        bounds = part.split(':')
        if len(bounds) == 1:
            bounds = bounds * 2
        if len(bounds) != 2:
            raise argparse.ArgumentTypeError("%s is not an interval a:b." % part)
        a, b = rational(bounds[0]), rational(bounds[1])
        if not 0 <= a <= b <= 1:
            raise argparse.ArgumentTypeError("%s is not an interval of [0, 1]." % part)
        ret.append((a, b))
    return ret
