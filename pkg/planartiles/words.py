#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Sturmian and quasisturmian words.

Words are finite windows of bi-infinite words over {0, 1}: each carries the
absolute index of its first letter, so two words can be compared position by
position. The Sturmian word of slope alpha and intercept rho has a 1 at
position k iff (rho + k alpha) mod 1 lies in [0, 1 - alpha).
"""

import collections
import fractions
import logging

import sympy

from planartiles import errors
from planartiles import utils

log = logging.getLogger('words')

Fraction = fractions.Fraction


class SturmianParams(collections.namedtuple('SturmianParams', ['alpha', 'rho'])):
    """Slope alpha and intercept rho of a Sturmian word, both rationals of [0, 1]."""

    __slots__ = ()

    def __new__(cls, alpha, rho=0):
        alpha = utils.to_fraction(alpha)
        rho = utils.to_fraction(rho)
        if not 0 <= alpha <= 1:
            raise errors.WordError('slope %s is out of [0, 1]' % alpha)
        if not 0 <= rho <= 1:
            raise errors.WordError('intercept %s is out of [0, 1]' % rho)
        return super(SturmianParams, cls).__new__(cls, alpha, rho)


class BinaryWord(object):
    """A window of a bi-infinite word over {0, 1}, starting at index origin."""

    alphabet = (0, 1)
    _symbols = '01'

    def __init__(self, letters, origin=0):
        if isinstance(letters, str):
            try:
                letters = [self._symbols.index(c) for c in letters]
            except ValueError:
                raise errors.WordError('%r uses letters outside %s' % (letters, self._symbols))
        letters = tuple(letters)
        if any(x not in self.alphabet for x in letters):
            raise errors.WordError('letters outside %s' % (self.alphabet,))
        if not isinstance(origin, int):
            raise TypeError('Feed me an int origin')
        self.letters = letters
        self.origin = origin

    @property
    def end(self):
        """Index just after the last letter."""
        return self.origin + len(self.letters)

    def at(self, index):
        """The letter at an absolute index."""
        if not self.origin <= index < self.end:
            raise IndexError('index %d out of window [%d, %d)' % (index, self.origin, self.end))
        return self.letters[index - self.origin]

    def count(self, letter):
        return self.letters.count(letter)

    def factors(self, length):
        """The set of distinct factors of the given length, as letter tuples."""
        return set(self.letters[i:i + length] for i in range(len(self.letters) - length + 1))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        if not isinstance(other, BinaryWord):
            return NotImplemented
        return type(self) == type(other) and self.letters == other.letters and self.origin == other.origin

    def __ne__(self, other):
        ret = self.__eq__(other)
        if ret is NotImplemented:
            return ret
        return not ret

    def __hash__(self):
        return hash((type(self).__name__, self.letters, self.origin))

    def __str__(self):
        return ''.join(self._symbols[x] for x in self.letters)

    def __repr__(self):
        return '%s(%r, origin=%d)' % (type(self).__name__, str(self), self.origin)


class ReplacementCoding(BinaryWord):
    """
    Coding of a transformation of a word into another one.

    Reading 01 at positions (i, i+1) replaces a 0 by a 1 at position i of the
    carrier word, reading 10 replaces a 1 by a 0.
    """

    def replacements(self):
        """The (position, kind) list, kind being '01' or '10'."""
        ret = []
        for k in range(len(self.letters) - 1):
            a, b = self.letters[k], self.letters[k + 1]
            if a != b:
                ret.append((self.origin + k, '%d%d' % (a, b)))
        return ret


class HiddenWord(BinaryWord):
    """Word over {0, 1, 1~}. The letter 1~ is stored as 2 and printed as T."""

    alphabet = (0, 1, 2)
    _symbols = '01T'


class _NotWithinOne(object):
    def __repr__(self):
        return 'NotWithinOne'

    def __bool__(self):
        return False

NotWithinOne = _NotWithinOne()


class OpenInterval(collections.namedtuple('OpenInterval', ['lo', 'hi'])):
    """Rational open interval (lo, hi), empty when lo >= hi."""

    __slots__ = ()

    @property
    def is_empty(self):
        return self.lo >= self.hi

    def contains(self, x):
        return self.lo < x < self.hi

    def meets_closed(self, a, b):
        """True iff (lo, hi) meets the closed interval [a, b]."""
        return not self.is_empty and a <= b and a < self.hi and self.lo < b

    def __str__(self):
        if self.is_empty:
            return 'empty'
        return '(%s, %s)' % (self.lo, self.hi)


EMPTY_INTERVAL = OpenInterval(Fraction(1), Fraction(0))


def sturmian(params, start, stop):
    """
    The window [start, stop] (both included) of the Sturmian word s_{alpha, rho}.

    :param params: SturmianParams
    :rtype: BinaryWord
    """
    if not isinstance(params, SturmianParams):
        raise TypeError('Feed me a SturmianParams')
    if start > stop:
        raise errors.WordError('empty window [%d, %d]' % (start, stop))
    alpha, rho = params
    threshold = 1 - alpha
    letters = [1 if (rho + k * alpha) % 1 < threshold else 0 for k in range(start, stop + 1)]
    return BinaryWord(letters, start)


def _check_aligned(u, v):
    if not isinstance(u, BinaryWord) or not isinstance(v, BinaryWord):
        raise TypeError('Feed me two BinaryWord')
    if u.origin != v.origin or len(u) != len(v):
        raise errors.WordError('windows [%d, %d) and [%d, %d) are not aligned' % (u.origin, u.end, v.origin, v.end))


def _balance_path(u, v):
    path = [0]
    for a, b in zip(u.letters, v.letters):
        path.append(path[-1] + (a == 0) - (b == 0))
    return path


def balance_distance(u, v):
    """
    Largest difference of the numbers of 0 in two aligned factors of u and v.

    :rtype: int
    :raise WordError: when the windows are not aligned
    """
    _check_aligned(u, v)
    path = _balance_path(u, v)
    return max(path) - min(path)


def apply_coding(u, w):
    """
    Applies the replacements coded by w to u.

    :param u: BinaryWord
    :param w: ReplacementCoding covering the window of u plus one letter on the right
    :rtype: BinaryWord
    :raise WordError: when w asks for a replacement the letter of u does not allow
    """
    if not isinstance(w, ReplacementCoding):
        raise TypeError('Feed me a ReplacementCoding')
    if w.origin > u.origin or w.end < u.end + 1:
        raise errors.WordError('coding window [%d, %d) does not cover [%d, %d]' % (w.origin, w.end, u.origin, u.end))
    out = []
    for i in range(u.origin, u.end):
        letter = u.at(i)
        a, b = w.at(i), w.at(i + 1)
        if a == b:
            out.append(letter)
        elif letter != a:
            raise errors.WordError('illegal replacement %d->%d at %d holding %d' % (a, b, i, letter))
        else:
            out.append(b)
    return BinaryWord(out, u.origin)


def coding_of_pair(u, v):
    """
    Codes v as a transformation of u when they are at balance distance at most one.

    Replacements then alternate in kind. Equal words get the constant 0 coding.

    :return: a ReplacementCoding with apply_coding(u, w) == v, or NotWithinOne
    """
    _check_aligned(u, v)
    if balance_distance(u, v) > 1:
        return NotWithinOne
    diffs = [k for k in range(len(u)) if u.letters[k] != v.letters[k]]
    first = 0
    if diffs and u.letters[diffs[0]] == 1:
        first = 1
    letters = [first]
    for a, b in zip(u.letters, v.letters):
        letters.append(letters[-1] ^ (a != b))
    return ReplacementCoding(letters, u.origin)


def _zero_counts(u):
    counts = [0]
    for x in u.letters:
        counts.append(counts[-1] + (x == 0))
    return counts


def _cross(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _max_slope_to(ys, shift):
    """
    max over k < j of (ys[j] + shift - ys[k]) / (j - k), None for fewer than two points.

    The best k for a given j lies on the lower hull of the points (k, ys[k]),
    where the slope towards (j, ys[j] + shift) is unimodal.
    """
    hull = []
    best = None
    for j, y in enumerate(ys):
        if hull:
            q = (j, y + shift)
            lo, hi = 0, len(hull) - 1
            while lo < hi:
                mid = (lo + hi) // 2
                if _cross(hull[mid], hull[mid + 1], q) >= 0:
                    lo = mid + 1
                else:
                    hi = mid
            k, yk = hull[lo]
            value = Fraction(q[1] - yk, j - k)
            if best is None or value > best:
                best = value
        p = (j, y)
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    return best


def slope_interval(u):
    """
    The open interval I(u) of slopes alpha in (0, 1) such that u is a factor of a
    Sturmian word of slope alpha.

    With Z_k the number of 0 in the first k letters, u is a factor of slope alpha
    iff Z_j - Z_k - 1 < (j - k) alpha < Z_j - Z_k + 1 for all k < j. Both bounds
    are tangents from a point to the convex hull of the (k, Z_k), found in
    O(|u| log |u|).

    :rtype: OpenInterval
    """
    if not isinstance(u, BinaryWord):
        raise TypeError('Feed me a BinaryWord')
    z = _zero_counts(u)
    lo, hi = Fraction(0), Fraction(1)
    below = _max_slope_to(z, -1)
    if below is not None:
        lo = max(lo, below)
    above = _max_slope_to([-x for x in z], -1)
    if above is not None:
        hi = min(hi, -above)
    if lo >= hi:
        return EMPTY_INTERVAL
    return OpenInterval(lo, hi)


def is_factor_of_slope(u, alpha):
    """True iff u is a factor of a Sturmian word of slope alpha, alpha in [0, 1]."""
    alpha = utils.to_fraction(alpha)
    if alpha == 0:
        return all(x == 1 for x in u.letters)
    if alpha == 1:
        return all(x == 0 for x in u.letters)
    return slope_interval(u).contains(alpha)


def is_sturmian_factor(u, intervals):
    """
    True iff u is a factor of some Sturmian word with slope in A.

    :param u: BinaryWord
    :param intervals: A, a list of closed rational intervals (a, b)
    :rtype: bool
    """
    interval = slope_interval(u)
    for a, b in intervals:
        a, b = utils.to_fraction(a), utils.to_fraction(b)
        if interval.meets_closed(a, b):
            return True
        if a == 0 and is_factor_of_slope(u, 0):
            return True
        if b == 1 and is_factor_of_slope(u, 1):
            return True
    return False


def is_balanced(u):
    """True iff any two factors of u of the same length differ by at most one 0."""
    z = _zero_counts(u)
    for length in range(1, len(u)):
        counts = [z[k + length] - z[k] for k in range(len(u) - length + 1)]
        if max(counts) - min(counts) > 1:
            return False
    return True


def exchange_letters(u):
    """Exchanges 0 and 1. Slope alpha becomes 1 - alpha."""
    return BinaryWord([1 - x for x in u.letters], u.origin)


def factor_complexity(u, length):
    """Number of distinct factors of u of the given length."""
    return len(u.factors(length))


def sturmian_factor_count(length):
    """
    Number of binary words of the given length that are factors of some Sturmian
    word, 1 + sum_{i=1..n} (n - i + 1) phi(i).
    """
    return 1 + sum((length - i + 1) * int(sympy.totient(i)) for i in range(1, length + 1))


def phi(h):
    """Letter-to-letter morphism 0 -> 0, 1 -> 1, 1~ -> 1."""
    if not isinstance(h, HiddenWord):
        raise TypeError('Feed me a HiddenWord')
    return BinaryWord([min(x, 1) for x in h.letters], h.origin)


def psi(h):
    """Erasing morphism 0 -> empty, 1 -> 0, 1~ -> 1, revealing the hidden word."""
    if not isinstance(h, HiddenWord):
        raise TypeError('Feed me a HiddenWord')
    return BinaryWord([x - 1 for x in h.letters if x != 0], 0)


def hidden_word_allowed(h, first, second):
    """
    True iff phi(h) is a Sturmian factor with slope in first and psi(h) one with
    slope in second.
    """
    return is_sturmian_factor(phi(h), first) and is_sturmian_factor(psi(h), second)
