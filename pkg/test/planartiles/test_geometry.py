#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests planartiles.geometry ."""

import itertools
import logging
import random
import unittest

from planartiles import errors
from planartiles import geometry
from planartiles.geometry import Slope
from test.planartiles import F
from test.planartiles import PlanarTest

log = logging.getLogger("test_geometry")


def random_hyperplane(rnd, n):
    while True:
        normal = [F(rnd.randint(-5, 5), rnd.randint(1, 4)) for _ in range(n)]
        if any(normal):
            return Slope.from_normal(normal)


def random_plane(rnd, n, d):
    while True:
        rows = [[F(rnd.randint(-3, 3), rnd.randint(1, 3)) for _ in range(n)] for _ in range(d)]
        try:
            return Slope.from_basis(rows)
        except ValueError:
            continue


class TestSlope(PlanarTest):

    def test_normal_form(self):
        slope = Slope.from_normal(['-1', '-7/5', '-3/2'])
        self.assertEqual(slope.normal, (10, 14, 15))
        self.assertEqual(slope, Slope.from_normal([10, 14, 15]))
        for row in slope.basis:
            self.assertTrue(slope.contains(row))

    def test_basis_and_normal_agree(self):
        by_basis = Slope.from_basis([[1, 0, -1], [0, 1, -1]])
        by_normal = Slope.from_normal([1, 1, 1])
        self.assertEqual(by_basis, by_normal)
        self.assertEqual(hash(by_basis), hash(by_normal))
        self.assertEqual(by_basis.normal, (1, 1, 1))

    def test_json(self):
        obj = {"n": 3, "d": 2, "normal": ["1", "7/5", "3/2"]}
        slope = Slope.from_json(obj)
        self.assertEqual(slope.to_json(), {"n": 3, "d": 2, "normal": ["10", "14", "15"]})
        plane = Slope(4, 2, basis=[[1, 0, F(1, 2), 0], [0, 1, 0, 3]])
        self.assertEqual(Slope.from_json(plane.to_json()), plane)

    def test_invalid(self):
        self.assertRaises(ValueError, Slope.from_normal, [0, 0, 0])
        self.assertRaises(ValueError, Slope.from_basis, [[1, 1, 0], [2, 2, 0]])
        self.assertRaises(errors.UnsupportedDimension, Slope, 4, 2, normal=[1, 2, 3, 4])
        self.assertRaises(errors.DimensionMismatch, Slope, 3, 2, normal=[1, 2])
        self.assertRaises(TypeError, Slope.from_normal, [0.5, 1, 1])

    def test_grassmann_change_of_basis(self):
        u, v = [1, 2, 3, 5], [0, 1, 4, 1]
        first = Slope.from_basis([u, v])
        second = Slope.from_basis([[a + b for a, b in zip(u, v)], [2 * b for b in v]])
        self.assertEqual(first.grassmann, second.grassmann)
        # proportional to the minors of the raw basis
        raw = [u[i] * v[j] - u[j] * v[i] for i, j in itertools.combinations(range(4), 2)]
        scale = F(raw[0]) / first.grassmann[0]
        self.assertEqual([scale * g for g in first.grassmann], raw)

    def test_is_degenerate(self):
        self.assertTrue(geometry.is_degenerate(Slope.from_basis([[1, 0, 0], [0, 1, 0]])))
        self.assertFalse(geometry.is_degenerate(Slope.from_normal([1, 1, 1])))
        self.assertTrue(geometry.is_degenerate(Slope.from_normal([1, F(2, 3), 0])))
        self.assertFalse(geometry.is_degenerate(Slope.from_normal([1, F(2, 3), F(1, 5)])))


class TestDistance(PlanarTest):

    def test_identity(self):
        E = Slope.from_normal([1, 2, 3])
        self.assertEqual(geometry.plane_distance(E, E), (0, 0))

    def test_orthogonal_planes(self):
        E = Slope.from_basis([[1, 0, 0], [0, 1, 0]])
        G = Slope.from_basis([[1, 0, 0], [0, 0, 1]])
        self.assertEqual(geometry.plane_distance(E, G), (1, 1))
        self.assertEqual(geometry.plane_distance(G, E), (1, 1))

    def test_small_angle(self):
        eps = F(1, 10)
        E = Slope.from_normal([1, 0, 0])
        G = Slope.from_normal([1, eps, 0])
        tol = F(1, 10 ** 9)
        dist = geometry.plane_distance(E, G, tol)
        self.assertLessEqual(dist.width, tol)
        # eps / sqrt(1 + eps^2) squared
        target = eps * eps / (1 + eps * eps)
        self.assertLessEqual(dist.lo * dist.lo, target)
        self.assertGreaterEqual(dist.hi * dist.hi, target)
        self.assertEqual(geometry.sin2_distance(E, G), target)

    def test_general_dimension(self):
        E = Slope.from_basis([[1, 0, 0, 0], [0, 1, 0, 0]])
        G = Slope.from_basis([[1, 0, 1, 0], [0, 1, 0, 0]])
        tol = F(1, 10 ** 6)
        dist = geometry.plane_distance(E, G, tol)
        self.assertLessEqual(dist.width, tol)
        self.assertLessEqual(dist.lo * dist.lo, F(1, 2))
        self.assertGreaterEqual(dist.hi * dist.hi, F(1, 2))
        H = Slope.from_basis([[1, 0, 0, 0], [0, 0, 1, 0]])
        self.assertEnclosed(geometry.plane_distance(E, H, tol), 1)

    def test_dimension_mismatch(self):
        self.assertRaises(errors.DimensionMismatch, geometry.plane_distance,
                          Slope.from_normal([1, 1]), Slope.from_normal([1, 1, 1]))

    def test_metric_hyperplanes(self):
        rnd = random.Random(7)
        tol = F(1, 10 ** 9)
        for _ in range(30):
            a, b, c = [random_hyperplane(rnd, 3) for _ in range(3)]
            dab = geometry.plane_distance(a, b, tol)
            self.assertEqual(dab, geometry.plane_distance(b, a, tol))
            self.assertGreaterEqual(dab.lo, 0)
            self.assertEqual(dab.hi == 0, a == b)
            dbc = geometry.plane_distance(b, c, tol)
            dac = geometry.plane_distance(a, c, tol)
            self.assertLessEqual(dac.lo, dab.hi + dbc.hi)

    def test_metric_planes_of_r4(self):
        rnd = random.Random(11)
        tol = F(1, 10 ** 6)
        for _ in range(5):
            a, b, c = [random_plane(rnd, 4, 2) for _ in range(3)]
            dab = geometry.plane_distance(a, b, tol)
            dba = geometry.plane_distance(b, a, tol)
            # enclosures of the same number overlap
            self.assertLessEqual(dab.lo, dba.hi)
            self.assertLessEqual(dba.lo, dab.hi)
            dbc = geometry.plane_distance(b, c, tol)
            dac = geometry.plane_distance(a, c, tol)
            self.assertLessEqual(dac.lo, dab.hi + dbc.hi)


class TestEnumerator(PlanarTest):

    def test_first_line(self):
        first = next(geometry.rational_slope_enumerator(2, 1))
        self.assertEqual(first, Slope.from_basis([[1, 0]]))

    def test_no_duplicates(self):
        slopes = list(itertools.islice(geometry.rational_slope_enumerator(3, 2), 1000))
        self.assertEqual(len(set(slopes)), 1000)

    def test_completeness(self):
        target = Slope.from_normal([1, 2, 3])
        found = [i for i, s in enumerate(itertools.islice(geometry.rational_slope_enumerator(3, 2), 300))
                 if s == target]
        self.assertEqual(len(found), 1)
        target = Slope.from_basis([[1, 0, F(1, 2), 0], [0, 1, 0, -1]])
        stream = itertools.islice(geometry.rational_slope_enumerator(4, 2), 20000)
        self.assertTrue(any(s == target for s in stream))

    def test_positive(self):
        slopes = list(itertools.islice(geometry.rational_slope_enumerator(3, 2, positive=True), 200))
        for s in slopes:
            self.assertTrue(all(x >= 0 for x in s.normal))
        self.assertIn(Slope.from_normal([1, 1, 1]), slopes)
        with self.assertRaises(errors.UnsupportedDimension):
            next(geometry.rational_slope_enumerator(4, 2, positive=True))


class TestOracle(PlanarTest):

    def test_from_slope(self):
        E = Slope.from_normal([1, 3])
        oracle = geometry.SlopeOracle.from_slope(E)
        self.assertEqual(oracle(5), E)
        self.assertTrue(oracle.check_consistency(1, 100))

    def test_continued_fraction(self):
        # sqrt(2) - 1 = [0; 2, 2, 2, ...]
        convergents = list(itertools.islice(geometry.continued_fraction_convergents(lambda k: 2), 4))
        self.assertEqual(convergents, [(1, 2), (2, 5), (5, 12), (12, 29)])
        oracle = geometry.SlopeOracle.from_continued_fraction(lambda k: 2)
        for m1, m2 in [(1, 2), (3, 50), (10, 1000)]:
            self.assertTrue(oracle.check_consistency(m1, m2))
        self.assertRaises(ValueError, oracle, 0)


if __name__ == '__main__':
    logging.basicConfig(level=logging.INFO)
    unittest.main(verbosity=2)
