#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests planartiles.recognition ."""

import itertools
import logging
import random
import unittest

from planartiles import errors
from planartiles import geometry
from planartiles import recognition
from planartiles import rulesets
from planartiles import tilings
from planartiles.geometry import Slope
from planartiles.tileset import Prototile
from planartiles.tileset import TileSet
from planartiles.tilings import LiftedPatch
from planartiles.words import BinaryWord
from test.planartiles import F
from test.planartiles import PlanarTest
from test.planartiles import SLOW

log = logging.getLogger("test_recognition")


def segment(lo, hi):
    """Normals (1, a) for lo <= a <= hi, offsets in [0, 1]."""
    rows = [[-lo, 1, 0], [hi, -1, 0], [0, 0, 1], [1, 0, -1]]
    return recognition.SlopePolytope(2, 1, [((1, 1), 0, rows)])


def random_signed(rnd):
    """A normal with entries in [-4, 4], none of them zero."""
    return Slope.from_normal([rnd.choice((1, -1)) * rnd.randint(1, 4) for _ in range(3)])


def reflect(patch, axis):
    """The patch seen through x_axis -> -x_axis."""
    tiles = []
    for base, gens in patch:
        x = list(base)
        x[axis] = -x[axis] - (1 if axis in gens else 0)
        tiles.append((tuple(x), gens))
    return LiftedPatch(patch.n, patch.d, tiles)


class TestSlopeSet(PlanarTest):

    def test_single_tile(self):
        tile = LiftedPatch(3, 2, [((0, 0, 0), (0, 1))])
        s = recognition.slope_set(tile, 1)
        self.assertTrue(s.contains(Slope.from_normal([0, 0, 1])))
        self.assertFalse(s.is_empty)
        self.assertEqual(len(s.pieces), 12)

    def test_membership_is_thickness(self):
        patch = tilings.ball_patch(Slope.from_normal([1, 1, 1]), 2)
        for t in (1, 2):
            s = recognition.slope_set(patch, t)
            for slope in itertools.islice(geometry.rational_slope_enumerator(3, 2), 40):
                report = tilings.check_thickness(patch, slope)
                self.assertEqual(s.contains(slope), report.width <= t, slope)

    def test_vertices_fit(self):
        rnd = random.Random(23)
        for _ in range(3):
            slope = random_signed(rnd)
            patch = tilings.ball_patch(slope, 3)
            s = recognition.slope_set(patch, 1)
            self.assertTrue(s.contains(slope))
            for vertex in s.vertex_slopes():
                self.assertLessEqual(tilings.check_thickness(patch, vertex).width, 1)

    def test_reflected_patch(self):
        patch = tilings.ball_patch(Slope.from_normal([1, 1, 2]), 3)
        mirror = reflect(patch, 1)
        self.assertLess(tilings.check_thickness(mirror, Slope.from_normal([1, -1, 2])).width, 1)
        s, t = recognition.slope_set(patch, 1), recognition.slope_set(mirror, 1)
        self.assertTrue(t.contains(Slope.from_normal([1, -1, 2])))
        self.assertFalse(t.contains(Slope.from_normal([1, 1, 2])))
        for slope in itertools.islice(geometry.rational_slope_enumerator(3, 2), 40):
            nu = list(slope.normal)
            nu[1] = -nu[1]
            self.assertEqual(s.contains(slope), t.contains(Slope.from_normal(nu)), slope)

        def flipped(nu):
            ret = (nu[0], -nu[1], nu[2])
            if next(x for x in ret if x != 0) < 0:
                ret = tuple(-x for x in ret)
            return ret
        self.assertEqual(t.normals(), sorted(set(flipped(nu) for nu in s.normals())))
        self.assertEqual(recognition.diameter_sin2(s), recognition.diameter_sin2(t))

    def check_bounds(self, slope, r, t):
        s = recognition.slope_set(tilings.ball_patch(slope, r), t)
        self.assertTrue(s.contains(slope))
        for vertex in s.vertex_slopes():
            self.assertLessEqual(geometry.sin2_distance(vertex, slope), F(t, r) ** 2)
        self.assertLessEqual(recognition.diameter_sin2(s), F(2 * t, r) ** 2)

    def test_distance_bounds(self):
        rnd = random.Random(31)
        slopes = [Slope.from_normal([1, 1, 1])] + [random_signed(rnd) for _ in range(2)]
        for slope in slopes:
            for r in (3, 5):
                for t in (1, 2):
                    self.check_bounds(slope, r, t)

    @unittest.skipUnless(SLOW, 'twenty slopes at radius up to 20')
    def test_distance_bounds_desk_scale(self):
        rnd = random.Random(37)
        for _ in range(20):
            slope = random_signed(rnd)
            for r in (5, 10, 20):
                for t in (1, 2):
                    self.check_bounds(slope, r, t)

    def test_staircases(self):
        down = recognition.slope_set(tilings.lift_word(BinaryWord('00')), 1)
        right = recognition.slope_set(tilings.lift_word(BinaryWord('11')), 1)
        mixed = recognition.slope_set(tilings.lift_word(BinaryWord('01')), 1)
        self.assertEqual(down.normals(), [(1, -1), (1, 0), (1, 1)])
        self.assertEqual(right.normals(), [(0, 1), (1, -1), (1, 1)])
        self.assertTrue(down.contains(Slope.from_normal([2, 1])))
        self.assertFalse(down.contains(Slope.from_normal([1, 2])))
        self.assertTrue(right.contains(Slope.from_normal([1, 2])))
        self.assertFalse(right.contains(Slope.from_normal([2, 1])))
        self.assertTrue(mixed.contains(Slope.from_normal([1, 2])))
        self.assertEqual(mixed.normals(), [(0, 1), (1, -1), (1, 0), (1, 1)])

    def test_lexmin(self):
        s = segment(F(1, 3), F(1, 2))
        self.assertEqual(s.lexmin(), Slope.from_normal([3, 1]))
        empty = segment(F(1, 2), F(1, 3))
        self.assertTrue(empty.is_empty)
        self.assertRaises(errors.EmptyFamily, empty.lexmin)

    def test_json(self):
        obj = segment(F(1, 3), F(1, 2)).to_json()
        self.assertEqual(obj['pieces'][0]['pivot'], 1)
        self.assertEqual(obj['pieces'][0]['signs'], [1, 1])
        self.assertEqual(obj['pieces'][0]['rows'][0], ['-1/3', '1', '0'])

    def test_errors(self):
        self.assertRaises(TypeError, recognition.slope_set, [((0, 0, 0), (0, 1))], 1)
        self.assertRaises(errors.PatchError, recognition.slope_set, LiftedPatch(3, 2, []), 1)
        self.assertRaises(errors.UnsupportedDimension, recognition.slope_set,
                          LiftedPatch(4, 2, [((0, 0, 0, 0), (0, 1))]), 1)
        self.assertRaises(ValueError, recognition.slope_set, LiftedPatch(3, 2, [((0, 0, 0), (0, 1))]), 0)
        s = segment(0, 1)
        self.assertFalse(s.contains(Slope.from_normal([1, -1])))
        self.assertRaises(errors.DimensionMismatch, s.contains, Slope.from_normal([1, 1, 1]))


class TestDiameter(PlanarTest):

    def test_point(self):
        self.assertEqual(recognition.polytope_diameter(segment(F(1, 2), F(1, 2))), (0, 0))

    def test_segment(self):
        tol = F(1, 10 ** 6)
        expected = geometry.plane_distance(Slope.from_normal([3, 1]), Slope.from_normal([2, 1]), tol)
        self.assertEqual(recognition.polytope_diameter(segment(F(1, 3), F(1, 2)), tol), expected)

    def test_union(self):
        both = [segment(F(1, 3), F(1, 2)), segment(1, 1)]
        self.assertEqual(recognition.diameter_sin2(both),
                         geometry.sin2_distance(Slope.from_normal([3, 1]), Slope.from_normal([1, 1])))


class TestSlopeSetDistance(PlanarTest):

    def test_segment(self):
        s = segment(F(1, 3), F(1, 2))
        self.assertEqual(recognition.slope_set_distance(Slope.from_normal([1, 1]), s), F(1, 10))
        self.assertEqual(recognition.slope_set_distance(Slope.from_normal([1, 0]), s), F(1, 10))
        self.assertEqual(recognition.slope_set_distance(Slope.from_normal([5, 2]), s), 0)
        self.assertEqual(recognition.slope_set_distance(Slope.from_normal([1, 1]), []), 1)

    def test_against_vertices(self):
        s = recognition.slope_set(tilings.ball_patch(Slope.from_normal([1, 2, 2]), 2), 1)
        vertices = s.vertex_slopes()
        for slope in itertools.islice(geometry.rational_slope_enumerator(3, 2, positive=True), 25):
            dist = recognition.slope_set_distance(slope, s)
            self.assertGreaterEqual(dist, 0)
            self.assertLessEqual(dist, min(geometry.sin2_distance(slope, v) for v in vertices))
            self.assertEqual(dist == 0, s.contains(slope), slope)


def word_rules(*tiles):
    return recognition.WordRules(TileSet([Prototile(name, 'square', colors, letter)
                                          for name, letter, colors in tiles], name='test'))


class TestPatchFamily(PlanarTest):

    def setUp(self):
        self.alternating = rulesets.get_ruleset('alternating')

    def test_word_patches(self):
        patches = list(self.alternating.legal_patches(2))
        self.assertEqual(len(patches), 2)
        for patch in patches:
            self.assertIn((0, 0), patch.vertices)
            self.assertEqual(tilings.check_thickness(patch, Slope.from_normal([1, 1])).thickness, 1)

    def test_stripe_patches(self):
        rules = rulesets.get_ruleset('checkerboard')
        patches = list(rules.legal_patches(1))
        self.assertEqual(len(patches), 2)
        for patch in patches:
            self.assertIn((0, 0, 0), patch.vertices)
            self.assertEqual(tilings.check_thickness(patch, Slope.from_normal([1, 1, 1])).thickness, 1)

    def test_same_radius(self):
        family = recognition.patch_family(self.alternating, 2, 2)
        self.assertEqual(family.patches, frozenset(self.alternating.legal_patches(2)))

    def test_monotonic(self):
        for rules in (self.alternating, rulesets.get_ruleset('sturmian-third')):
            families = [recognition.patch_family(rules, 1, r2).patches for r2 in (1, 2, 3)]
            self.assertLessEqual(families[1], families[0])
            self.assertLessEqual(families[2], families[1])
        rules = rulesets.get_ruleset('checkerboard')
        self.assertLessEqual(recognition.patch_family(rules, 1, 2).patches,
                             recognition.patch_family(rules, 1, 1).patches)

    def test_single_tile(self):
        rules = word_rules(('A', 1, (0, 0, 0, 0)))
        for r2 in (1, 2, 3):
            self.assertEqual(len(recognition.patch_family(rules, 1, r2)), 1)

    def test_errors(self):
        rules = word_rules(('A', 1, (0, 1, 0, 0)))
        self.assertRaises(errors.EmptyFamily, recognition.patch_family, rules, 1, 1)
        self.assertRaises(ValueError, recognition.patch_family, self.alternating, 3, 2)
        self.assertRaises(ValueError, recognition.patch_family, self.alternating, 0, 2)
        self.assertRaises(errors.BudgetExceeded, recognition.patch_family, self.alternating, 1, 2, 3)
        self.assertRaises(TypeError, recognition.patch_family, 'alternating', 1, 2)
        blank = TileSet([Prototile('A', 'square', (0, 0, 0, 0), None)])
        self.assertRaises(errors.TileSetError, recognition.WordRules, blank)


class TestAlgorithm1(PlanarTest):

    def check(self, name, normal, m):
        found = recognition.algorithm1(rulesets.get_ruleset(name), 1, m)
        self.assertWithinDistance(found, Slope.from_normal(normal), F(1, m))
        return found

    def test_alternating(self):
        for m in (2, 4):
            self.check('alternating', [1, 1], m)

    @unittest.skipUnless(SLOW, 'long rows')
    def test_alternating_fine(self):
        self.check('alternating', [1, 1], 8)

    def test_period_three(self):
        self.check('sturmian-third', [1, 2], 2)

    def test_checkerboard(self):
        self.check('checkerboard', [1, 1, 1], 2)

    @unittest.skipUnless(SLOW, 'large rectangles')
    def test_checkerboard_fine(self):
        self.check('checkerboard', [1, 1, 1], 4)

    def test_unknown_thickness(self):
        t, found = recognition.algorithm1_unknown_thickness(rulesets.get_ruleset('alternating'), 2)
        self.assertEqual(t, 1)
        self.assertWithinDistance(found, Slope.from_normal([1, 1]), F(1, 2))

    def test_errors(self):
        rules = rulesets.get_ruleset('alternating')
        self.assertRaises(errors.BudgetExceeded, recognition.algorithm1, rules, 1, 2, None, 5)
        self.assertRaises(errors.EmptyFamily, recognition.algorithm1, word_rules(('A', 1, (0, 1, 0, 0))), 1, 1)
        self.assertRaises(ValueError, recognition.algorithm1, rules, 1, 0)
        self.assertRaises(ValueError, recognition.algorithm1, rules, 0, 1)


class TestAlgorithm2(PlanarTest):

    def test_soundness(self):
        for name, normal in (('alternating', [1, 1]), ('sturmian-third', [1, 2])):
            enforced = Slope.from_normal(normal)
            stream = recognition.ball_enumeration(rulesets.get_ruleset(name), 1, 4)
            self.assertTrue(stream.complete)
            self.assertTrue(stream.balls)
            for ball in stream.balls:
                self.assertFalse(ball.contains(enforced), ball)

    def test_covers_far_slope(self):
        stream = recognition.ball_enumeration(rulesets.get_ruleset('alternating'), 1, 4)
        # candidates come in the order (0, 1), (1, -1), (1, 1), (1, 0)
        far = Slope.from_normal([1, -1])
        self.assertIn(recognition.Ball(far, F(1, 4), 4), stream.balls)
        self.assertTrue(any(ball.contains(Slope.from_normal([1, 0])) for ball in stream.balls))

    def test_nothing_at_first_round(self):
        stream = recognition.ball_enumeration(rulesets.get_ruleset('alternating'), 1, 1)
        self.assertEqual(stream.balls, ())

    def test_budget(self):
        stream = recognition.ball_enumeration(rulesets.get_ruleset('alternating'), 1, 4, budget=3)
        self.assertFalse(stream.complete)
        self.assertEqual(stream.balls, ())

    def test_json(self):
        ball = recognition.Ball(Slope.from_normal([1, 2]), F(1, 4), 4)
        self.assertEqual(ball.to_json(), {'center': {'n': 2, 'd': 1, 'normal': ['1', '2']},
                                          'radius': '1/4', 'round': 4})


if __name__ == '__main__':
    logging.basicConfig(level=logging.INFO)
    unittest.main(verbosity=2)
