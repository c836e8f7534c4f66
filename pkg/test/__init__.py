#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Unit test module."""

import unittest


def alltests():
    ret = unittest.TestLoader().discover('test/planartiles/')
    return ret


if __name__ == '__main__':
    unittest.main(verbosity=0)
