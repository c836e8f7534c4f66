#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Rational helpers shared by all the planartiles modules."""

import collections
import fractions
import functools
import logging
import math

import sympy

log = logging.getLogger('utils')

DEFAULT_TOLERANCE = fractions.Fraction(1, 10 ** 9)


def to_fraction(value):
    """
    Converts an int, a Fraction, a sympy Rational or a "p/q" string into a Fraction.
    Floats are refused: every quantity in planartiles is exact.

    :param value: the value to convert
    :rtype: fractions.Fraction
    """
    if isinstance(value, bool):
        raise TypeError('Feed me a rational, not a bool')
    if isinstance(value, fractions.Fraction):
        return value
    if isinstance(value, int):
        return fractions.Fraction(value)
    if isinstance(value, str):
        try:
            return fractions.Fraction(value.strip())
        except ValueError:
            raise ValueError('%r is not a rational number' % value)
    if isinstance(value, sympy.Rational):
        return fractions.Fraction(int(value.p), int(value.q))
    if isinstance(value, float):
        raise TypeError('Feed me an exact rational, not the float %r' % value)
    raise TypeError('Feed me a rational, got %s' % type(value).__name__)


def fraction_to_str(value):
    """Returns the "p/q" (or "p") form used in every file and JSON output."""
    return str(to_fraction(value))


def to_sympy(value):
    value = to_fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def from_sympy(value):
    if not isinstance(value, sympy.Rational):
        raise ValueError('%s is not rational' % value)
    return fractions.Fraction(int(value.p), int(value.q))


def primitive_vector(vec):
    """
    Scales a nonzero rational vector into the coprime integer vector with the same
    direction (positive multiple).

    :param vec: iterable of rationals
    :rtype: tuple of int
    """
    vec = [to_fraction(x) for x in vec]
    if not any(vec):
        raise ValueError('zero vector has no primitive form')
    lcm = functools.reduce(lambda a, b: a * b // math.gcd(a, b), [x.denominator for x in vec], 1)
    ints = [int(x * lcm) for x in vec]
    g = functools.reduce(math.gcd, [abs(i) for i in ints])
    return tuple(i // g for i in ints)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


class Enclosure(collections.namedtuple('Enclosure', ['lo', 'hi'])):
    """A closed rational interval [lo, hi] enclosing an algebraic quantity."""

    __slots__ = ()

    @property
    def width(self):
        return self.hi - self.lo

    def contains(self, x):
        return self.lo <= x <= self.hi

    def __str__(self):
        return '[%s, %s]' % (self.lo, self.hi)


def _exact_sqrt(x):
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return fractions.Fraction(rn, rd)
    return None


def sqrt_enclosure(x, tol=DEFAULT_TOLERANCE):
    """
    Encloses the square root of a nonnegative rational.

    :param x: nonnegative rational
    :param tol: maximal width of the enclosure
    :rtype: Enclosure
    """
    x = to_fraction(x)
    tol = to_fraction(tol)
    if x < 0:
        raise ValueError('negative radicand %s' % x)
    if tol <= 0:
        raise ValueError('tolerance must be positive')
    exact = _exact_sqrt(x)
    if exact is not None:
        return Enclosure(exact, exact)
    scale = math.ceil(1 / tol)
    # a <= sqrt(x)*scale < a+1
    a = math.isqrt(math.floor(x * scale * scale))
    return Enclosure(fractions.Fraction(a, scale), fractions.Fraction(a + 1, scale))


def sqrt_interval(lo, hi, tol=DEFAULT_TOLERANCE):
    """Encloses sqrt([lo, hi]) for 0 <= lo <= hi, within hi-lo plus tol."""
    lo = max(to_fraction(lo), fractions.Fraction(0))
    low = sqrt_enclosure(lo, to_fraction(tol) / 2)
    high = sqrt_enclosure(to_fraction(hi), to_fraction(tol) / 2)
    return Enclosure(low.lo, high.hi)
