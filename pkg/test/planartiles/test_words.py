#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests planartiles.words ."""

import itertools
import logging
import random
import unittest

from planartiles import errors
from planartiles import words
from planartiles.words import BinaryWord
from planartiles.words import HiddenWord
from planartiles.words import ReplacementCoding
from planartiles.words import SturmianParams
from test.planartiles import F
from test.planartiles import SLOW

log = logging.getLogger("test_words")


def all_words(length):
    for letters in itertools.product((0, 1), repeat=length):
        yield BinaryWord(letters)


def occurs_with_slope(u, p, q):
    """Brute force: is u a factor of the periodic Sturmian word of slope p/q."""
    period = words.sturmian(SturmianParams(F(p, q), 0), 0, q + len(u))
    text = str(period)
    return str(u) in text


class TestSturmian(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(str(words.sturmian(SturmianParams(0, 0), 0, 4)), '11111')
        self.assertEqual(str(words.sturmian(SturmianParams(F(1, 2), 0), 0, 3)), '1010')
        self.assertEqual(str(words.sturmian(SturmianParams(F(1, 3), 0), 0, 5)), '110110')
        self.assertEqual(str(words.sturmian(SturmianParams(1, 0), -2, 2)), '00000')

    def test_origin(self):
        w = words.sturmian(SturmianParams(F(2, 5), F(1, 7)), -3, 6)
        self.assertEqual(w.origin, -3)
        self.assertEqual(len(w), 10)
        longer = words.sturmian(SturmianParams(F(2, 5), F(1, 7)), -10, 10)
        for i in range(-3, 7):
            self.assertEqual(w.at(i), longer.at(i))

    def test_errors(self):
        self.assertRaises(errors.WordError, SturmianParams, F(3, 2), 0)
        self.assertRaises(errors.WordError, SturmianParams, F(1, 2), -1)
        self.assertRaises(errors.WordError, words.sturmian, SturmianParams(F(1, 2)), 3, 2)

    def test_factor_complexity(self):
        # convergent of sqrt(2) - 1 with a deep continued fraction
        alpha = F(408, 985)
        w = words.sturmian(SturmianParams(alpha, 0), 0, 985 + 25)
        for n in range(1, 21):
            self.assertEqual(words.factor_complexity(w, n), n + 1)

    def test_equal_slopes_are_close(self):
        rnd = random.Random(3)
        trials = 10000 if SLOW else 500
        for _ in range(trials):
            q = rnd.randint(1, 60)
            alpha = F(rnd.randint(0, q), q)
            rho1 = F(rnd.randint(0, 97), 97)
            rho2 = F(rnd.randint(0, 89), 89)
            length = rnd.randint(1, 200)
            start = rnd.randint(-50, 50)
            u = words.sturmian(SturmianParams(alpha, rho1), start, start + length - 1)
            v = words.sturmian(SturmianParams(alpha, rho2), start, start + length - 1)
            self.assertLessEqual(words.balance_distance(u, v), 1)


class TestBalance(unittest.TestCase):

    def test_examples(self):
        u = BinaryWord('0110')
        self.assertEqual(words.balance_distance(u, u), 0)
        self.assertEqual(words.balance_distance(BinaryWord('01'), BinaryWord('10')), 1)
        self.assertEqual(words.balance_distance(BinaryWord('00'), BinaryWord('11')), 2)

    def test_misaligned(self):
        self.assertRaises(errors.WordError, words.balance_distance, BinaryWord('01'), BinaryWord('01', 1))
        self.assertRaises(errors.WordError, words.balance_distance, BinaryWord('01'), BinaryWord('011'))

    def test_letters(self):
        self.assertRaises(errors.WordError, BinaryWord, '012')
        self.assertEqual(str(HiddenWord('01T')), '01T')
        self.assertEqual(HiddenWord('01T').letters, (0, 1, 2))


class TestCoding(unittest.TestCase):

    def test_apply(self):
        u = BinaryWord('0110')
        self.assertEqual(words.apply_coding(u, ReplacementCoding('00000')), u)
        self.assertEqual(words.apply_coding(BinaryWord('01'), ReplacementCoding('011')), BinaryWord('11'))
        self.assertRaises(errors.WordError, words.apply_coding, BinaryWord('10'), ReplacementCoding('011'))
        # the coding must reach one letter past the word
        self.assertRaises(errors.WordError, words.apply_coding, BinaryWord('10'), ReplacementCoding('01'))

    def test_coding_of_pair(self):
        u = BinaryWord('0110')
        self.assertEqual(words.coding_of_pair(u, u), ReplacementCoding('00000'))
        self.assertIs(words.coding_of_pair(BinaryWord('00'), BinaryWord('11')), words.NotWithinOne)
        w = words.coding_of_pair(BinaryWord('1001'), BinaryWord('0011'))
        self.assertEqual(w.replacements(), [(0, '10'), (2, '01')])

    def test_equivalence(self):
        # distance <= 1 iff an alternating coding exists, and it round trips
        top = 10 if SLOW else 6
        for length in range(1, top + 1):
            pool = list(all_words(length))
            for u in pool:
                for v in pool:
                    w = words.coding_of_pair(u, v)
                    if words.balance_distance(u, v) <= 1:
                        self.assertIsInstance(w, ReplacementCoding)
                        self.assertEqual(words.apply_coding(u, w), v)
                        kinds = [kind for _, kind in w.replacements()]
                        for a, b in zip(kinds, kinds[1:]):
                            self.assertNotEqual(a, b)
                    else:
                        self.assertIs(w, words.NotWithinOne)


class TestSlopeInterval(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(words.slope_interval(BinaryWord('10')), (0, 1))
        self.assertTrue(words.slope_interval(BinaryWord('0011')).is_empty)
        ones = words.slope_interval(BinaryWord('1111'))
        self.assertEqual(ones.lo, 0)
        self.assertEqual(ones, (0, F(1, 4)))
        self.assertEqual(words.slope_interval(BinaryWord('')), (0, 1))

    def test_against_brute_force(self):
        top = 8 if SLOW else 6
        max_q = 16 if SLOW else 10
        slopes = sorted(set(F(p, q) for q in range(2, max_q + 1) for p in range(1, q)))
        for length in range(1, top + 1):
            for u in all_words(length):
                interval = words.slope_interval(u)
                for alpha in slopes:
                    expected = occurs_with_slope(u, alpha.numerator, alpha.denominator)
                    self.assertEqual(interval.contains(alpha), expected, '%s at %s' % (u, alpha))
                if not interval.is_empty:
                    self.assertLessEqual(interval.lo.denominator, length)
                    self.assertLessEqual(interval.hi.denominator, length)

    def test_long_words_match_pairwise_bounds(self):
        rnd = random.Random(41)
        samples = [words.sturmian(SturmianParams(F(rnd.randint(1, 40), 41), F(rnd.randint(0, 9), 10)), 0, 60)
                   for _ in range(10)]
        samples += [BinaryWord([rnd.randint(0, 1) for _ in range(30)]) for _ in range(10)]
        for u in samples:
            z = [0]
            for x in u.letters:
                z.append(z[-1] + (x == 0))
            lo, hi = F(0), F(1)
            for k in range(len(z)):
                for j in range(k + 1, len(z)):
                    lo = max(lo, F(z[j] - z[k] - 1, j - k))
                    hi = min(hi, F(z[j] - z[k] + 1, j - k))
            interval = words.slope_interval(u)
            if lo >= hi:
                self.assertTrue(interval.is_empty, u)
            else:
                self.assertEqual(interval, (lo, hi), u)

    def test_balanced_iff_nonempty(self):
        for length in range(1, 9):
            count = 0
            for u in all_words(length):
                nonempty = not words.slope_interval(u).is_empty
                self.assertEqual(words.is_balanced(u), nonempty)
                count += nonempty
            self.assertEqual(count, words.sturmian_factor_count(length))
        for n in range(2, 30):
            self.assertLessEqual(words.sturmian_factor_count(n), n ** 3)

    def test_exchange(self):
        for u in all_words(6):
            interval = words.slope_interval(u)
            swapped = words.slope_interval(words.exchange_letters(u))
            if interval.is_empty:
                self.assertTrue(swapped.is_empty)
            else:
                self.assertEqual(swapped, (1 - interval.hi, 1 - interval.lo))

    def test_is_sturmian_factor(self):
        self.assertTrue(words.is_sturmian_factor(BinaryWord('10'), [(F(1, 3), F(1, 2))]))
        self.assertFalse(words.is_sturmian_factor(BinaryWord('0011'), [(0, 1)]))
        # I(11) = (0, 1/2)
        self.assertFalse(words.is_sturmian_factor(BinaryWord('11'), [(F(3, 4), F(4, 5))]))
        self.assertTrue(words.is_sturmian_factor(BinaryWord('11'), [(F(1, 4), F(4, 5))]))
        self.assertFalse(words.is_sturmian_factor(BinaryWord('11'), [(F(1, 2), F(1, 2))]))
        self.assertTrue(words.is_sturmian_factor(BinaryWord('111'), [(0, 0)]))
        self.assertTrue(words.is_sturmian_factor(BinaryWord('00'), [(1, 1)]))

    def test_is_sturmian_factor_dense(self):
        u = BinaryWord('11')
        for a, b in [(F(3, 4), F(4, 5)), (F(1, 10), F(1, 5)), (F(2, 5), F(3, 5))]:
            dense = any(words.is_factor_of_slope(u, a + (b - a) * F(k, 50)) for k in range(51))
            self.assertEqual(words.is_sturmian_factor(u, [(a, b)]), dense)


class TestHiddenWords(unittest.TestCase):

    def test_morphisms(self):
        h = HiddenWord('01T')
        self.assertEqual(str(words.phi(h)), '011')
        self.assertEqual(str(words.psi(h)), '01')
        zeros = HiddenWord('0000')
        self.assertEqual(str(words.phi(zeros)), '0000')
        self.assertEqual(len(words.psi(zeros)), 0)

    def test_lengths(self):
        for letters in itertools.product((0, 1, 2), repeat=5):
            h = HiddenWord(letters)
            self.assertEqual(len(words.phi(h)), 5)
            self.assertEqual(len(words.psi(h)), sum(1 for x in letters if x))

    def test_allowed(self):
        alpha, beta = F(2, 5), F(1, 3)
        first, second = [(alpha, alpha)], [(beta, beta)]
        for length in range(1, 7):
            for letters in itertools.product((0, 1, 2), repeat=length):
                h = HiddenWord(letters)
                expected = (words.is_factor_of_slope(words.phi(h), alpha) and
                            words.is_factor_of_slope(words.psi(h), beta))
                self.assertEqual(words.hidden_word_allowed(h, first, second), expected)


if __name__ == '__main__':
    logging.basicConfig(level=logging.INFO)
    unittest.main(verbosity=2)
