#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Unit test module."""

import fractions
import os
import unittest

from planartiles import geometry

# the full desk-scale runs take minutes
SLOW = bool(os.environ.get('PLANARTILES_SLOW'))


def F(x, y=1):
    return fractions.Fraction(x, y)


class PlanarTest(unittest.TestCase):
    """Base class with slope assertions."""

    def assertWithinDistance(self, first, second, bound, tol=fractions.Fraction(1, 10 ** 9)):
        dist = geometry.plane_distance(first, second, tol)
        self.assertLessEqual(dist.lo, bound, '%s and %s are %s apart' % (first, second, dist))

    def assertEnclosed(self, enclosure, value):
        self.assertTrue(enclosure.contains(value), '%s not in %s' % (value, enclosure))
