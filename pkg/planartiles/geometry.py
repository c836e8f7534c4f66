#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Exact rational linear algebra on the slopes of planar tilings.

A slope is a linear d-plane of R^n with rational data. Hyperplanes (d = n-1)
are stored by their primitive integer normal vector, every slope also by the
reduced row echelon form of a basis, which is what makes equality decidable.

The distance between two slopes is the largest distance between a unit vector
of one plane and the other plane, that is the sine of their largest principal
angle. It is returned as a rational enclosure.
"""

import fractions
import itertools
import logging

import sympy

from planartiles import errors
from planartiles import utils
from planartiles.abc import interfaces

log = logging.getLogger('geometry')

__author__ = "planartiles developers"

Fraction = fractions.Fraction


def _sign_normalized(vec):
    """Scales an integer vector so that its first nonzero entry is positive."""
    for x in vec:
        if x != 0:
            if x < 0:
                return tuple(-y for y in vec)
            return tuple(vec)
    raise ValueError('zero vector')


def _hyperplane_rref(normal):
    # the free column is the last nonzero coordinate of the normal
    n = len(normal)
    free = max(i for i in range(n) if normal[i] != 0)
    rows = []
    for c in range(n):
        if c == free:
            continue
        row = [Fraction(0)] * n
        row[c] = Fraction(1)
        row[free] = Fraction(-normal[c], normal[free])
        rows.append(tuple(row))
    return tuple(rows)


def _normal_of_rref(basis, n):
    pivots = [row.index(next(x for x in row if x != 0)) for row in basis]
    free = [c for c in range(n) if c not in pivots][0]
    normal = [Fraction(0)] * n
    normal[free] = Fraction(1)
    for c, row in zip(pivots, basis):
        normal[c] = -row[free]
    return _sign_normalized(utils.primitive_vector(normal))


class Slope(interfaces.ISlope):
    """
    A linear d-plane of R^n.

    Build it from a normal vector (hyperplanes only) or from d linearly independent
    rational vectors. Two Slope objects are equal iff they describe the same plane.
    """

    def __init__(self, n, d, normal=None, basis=None):
        if not isinstance(n, int) or not isinstance(d, int):
            raise TypeError('Feed me integer dimensions')
        if not 0 < d < n:
            raise ValueError('plane dimension must satisfy 0 < d < n, got n=%d d=%d' % (n, d))
        self.n = n
        self.d = d
        self._normal = None
        self._grassmann = None
        if normal is not None:
            if d != n - 1:
                raise errors.UnsupportedDimension('a normal vector defines a hyperplane only')
            normal = [utils.to_fraction(x) for x in normal]
            if len(normal) != n:
                raise errors.DimensionMismatch('normal has %d coordinates, expected %d' % (len(normal), n))
            if not any(normal):
                raise ValueError('normal vector must be nonzero')
            self._normal = _sign_normalized(utils.primitive_vector(normal))
            self._basis = _hyperplane_rref(self._normal)
        elif basis is not None:
            rows = [[utils.to_fraction(x) for x in row] for row in basis]
            if len(rows) != d or any(len(row) != n for row in rows):
                raise errors.DimensionMismatch('basis must hold %d vectors of size %d' % (d, n))
            rref, pivots = sympy.Matrix([[utils.to_sympy(x) for x in row] for row in rows]).rref()
            if len(pivots) != d:
                raise ValueError('basis vectors are linearly dependent')
            self._basis = tuple(tuple(utils.from_sympy(rref[i, j]) for j in range(n)) for i in range(d))
            if d == n - 1:
                self._normal = _normal_of_rref(self._basis, n)
        else:
            raise ValueError('Feed me a normal or a basis')

    @classmethod
    def from_normal(cls, normal):
        return cls(len(normal), len(normal) - 1, normal=normal)

    @classmethod
    def from_basis(cls, vectors):
        vectors = list(vectors)
        if not vectors:
            raise ValueError('empty basis')
        return cls(len(vectors[0]), len(vectors), basis=vectors)

    @classmethod
    def from_json(cls, obj):
        n, d = int(obj['n']), int(obj['d'])
        if 'normal' in obj:
            return cls(n, d, normal=obj['normal'])
        return cls(n, d, basis=obj['basis'])

    def to_json(self):
        ret = {'n': self.n, 'd': self.d}
        if self._normal is not None:
            ret['normal'] = [utils.fraction_to_str(x) for x in self._normal]
        else:
            ret['basis'] = [[utils.fraction_to_str(x) for x in row] for row in self._basis]
        return ret

    @property
    def is_hyperplane(self):
        return self._normal is not None

    @property
    def normal(self):
        """The primitive integer normal, first nonzero entry positive. Hyperplanes only."""
        if self._normal is None:
            raise errors.UnsupportedDimension('only hyperplanes have a normal vector')
        return self._normal

    def get_basis(self):
        return self._basis

    basis = property(get_basis)

    def get_grassmann(self):
        if self._grassmann is None:
            mat = sympy.Matrix([[utils.to_sympy(x) for x in row] for row in self._basis])
            rows = list(range(self.d))
            self._grassmann = tuple(utils.from_sympy(mat.extract(rows, list(cols)).det())
                                    for cols in itertools.combinations(range(self.n), self.d))
        return self._grassmann

    grassmann = property(get_grassmann)

    def is_degenerate(self):
        return any(x == 0 for x in self.get_grassmann())

    def contains(self, vector):
        """True when the vector lies in the plane."""
        if self._normal is not None:
            return utils.dot(self._normal, vector) == 0
        mat = sympy.Matrix([[utils.to_sympy(x) for x in row] for row in self._basis])
        ext = mat.col_join(sympy.Matrix([[utils.to_sympy(x) for x in vector]]))
        return ext.rank() == self.d

    def __eq__(self, other):
        if not isinstance(other, Slope):
            return NotImplemented
        return self.n == other.n and self.d == other.d and self._basis == other._basis

    def __ne__(self, other):
        ret = self.__eq__(other)
        if ret is NotImplemented:
            return ret
        return not ret

    def __hash__(self):
        return hash((self.n, self.d, self._basis))

    def __repr__(self):
        if self._normal is not None:
            return 'Slope(normal=(%s))' % ', '.join(str(x) for x in self._normal)
        return 'Slope(basis=%s)' % ([[str(x) for x in row] for row in self._basis])


def _check_same_shape(E, F):
    if not isinstance(E, Slope) or not isinstance(F, Slope):
        raise TypeError('Feed me two Slope')
    if (E.n, E.d) != (F.n, F.d):
        raise errors.DimensionMismatch('slopes of different shapes (%d,%d) and (%d,%d)' % (E.n, E.d, F.n, F.d))


def sin2_of_vectors(u, v):
    """Squared sine of the angle between two nonzero rational vectors."""
    uv = utils.dot(u, v)
    return 1 - Fraction(uv * uv) / (utils.dot(u, u) * utils.dot(v, v))


def sin2_distance(E, F):
    """
    Exact square of plane_distance(E, F), for lines and hyperplanes.

    :param E: Slope
    :param F: Slope
    :rtype: fractions.Fraction
    :raise UnsupportedDimension: when 1 < d < n-1, where the distance is algebraic
    """
    _check_same_shape(E, F)
    if E.is_hyperplane:
        return sin2_of_vectors(E.normal, F.normal)
    if E.d == 1:
        return sin2_of_vectors(E.basis[0], F.basis[0])
    raise errors.UnsupportedDimension('exact distance needs d = 1 or d = n-1')


def sin2_enclosure(E, F, tol=utils.DEFAULT_TOLERANCE):
    """
    Encloses the square of plane_distance(E, F) for any (n, d).

    The squared sine of the largest principal angle is the largest root of
    det(M - x G), with G the Gram matrix of a basis A of E and M = A (I - P_F) A^T,
    P_F the orthogonal projector on F.

    :rtype: utils.Enclosure
    """
    _check_same_shape(E, F)
    if E.is_hyperplane or E.d == 1:
        s = sin2_distance(E, F)
        return utils.Enclosure(s, s)
    A = sympy.Matrix([[utils.to_sympy(x) for x in row] for row in E.basis])
    B = sympy.Matrix([[utils.to_sympy(x) for x in row] for row in F.basis])
    proj = B.T * (B * B.T).inv() * B
    G = A * A.T
    M = A * (sympy.eye(E.n) - proj) * A.T
    x = sympy.Symbol('x')
    poly = sympy.Poly((M - x * G).det(), x)
    roots = poly.intervals(eps=utils.to_sympy(tol))
    (lo, hi), _ = roots[-1]
    log.debug('largest root of %s in [%s, %s]', poly, lo, hi)
    return utils.Enclosure(max(Fraction(0), utils.from_sympy(sympy.Rational(lo))),
                           min(Fraction(1), utils.from_sympy(sympy.Rational(hi))))


def plane_distance(E, F, tol=utils.DEFAULT_TOLERANCE):
    """
    Distance between two planes of the same dimension, as a rational enclosure.

    :param E: Slope
    :param F: Slope
    :param tol: maximal width of the returned enclosure
    :rtype: utils.Enclosure
    :raise DimensionMismatch: when E and F differ in n or d
    """
    tol = utils.to_fraction(tol)
    _check_same_shape(E, F)
    if E == F:
        return utils.Enclosure(Fraction(0), Fraction(0))
    if E.is_hyperplane or E.d == 1:
        return utils.sqrt_enclosure(sin2_distance(E, F), tol)
    # sqrt(b) - sqrt(a) <= sqrt(b - a)
    s2 = sin2_enclosure(E, F, tol * tol / 4)
    return utils.sqrt_interval(s2.lo, s2.hi, tol / 2)


def is_degenerate(E):
    """True iff some Grassmann coordinate of E is zero."""
    if not isinstance(E, Slope):
        raise TypeError('Feed me a Slope')
    return E.is_degenerate()


def _height(value):
    return max(abs(value.numerator), value.denominator)


def _values_of_height(h):
    if h == 1:
        return [Fraction(0), Fraction(1), Fraction(-1)]
    values = set()
    for q in range(1, h + 1):
        for p in range(0, h + 1):
            f = Fraction(p, q)
            if f != 0 and _height(f) == h:
                values.add(f)
                values.add(-f)
    return sorted(values, key=lambda f: (abs(f), f < 0))


def rational_slope_enumerator(n, d, positive=False):
    """
    Enumerates every rational d-plane of R^n exactly once.

    Planes are listed by increasing height, the height of a plane being the
    largest max(|p|, q) over the free entries p/q of its reduced row echelon
    basis. Within a height, pivot columns come in combination order and free
    entries in the order 0, 1, -1, 1/2, -1/2, 2, -2, ...

    :param n: ambient dimension
    :param d: plane dimension
    :param positive: keep only hyperplanes with a nonnegative normal
    :return: an infinite generator of Slope
    """
    if not 0 < d < n:
        raise ValueError('need 0 < d < n')
    if positive and d != n - 1:
        raise errors.UnsupportedDimension('positive enumeration is defined for hyperplanes')
    values = []
    h = 0
    while True:
        h += 1
        new_values = _values_of_height(h)
        values = values + new_values
        for pivots in itertools.combinations(range(n), d):
            free = [(i, j) for i in range(d) for j in range(pivots[i] + 1, n) if j not in pivots]
            if not free:
                if h == 1:
                    yield _from_rref(n, d, pivots, {})
                continue
            for assignment in itertools.product(values, repeat=len(free)):
                if max(_height(v) for v in assignment) != h:
                    continue
                slope = _from_rref(n, d, pivots, dict(zip(free, assignment)))
                if positive and any(x < 0 for x in slope.normal):
                    continue
                yield slope


def _from_rref(n, d, pivots, entries):
    rows = []
    for i, p in enumerate(pivots):
        row = [Fraction(0)] * n
        row[p] = Fraction(1)
        for (r, c), v in entries.items():
            if r == i:
                row[c] = v
        rows.append(tuple(row))
    slope = Slope.__new__(Slope)
    slope.n, slope.d = n, d
    slope._basis = tuple(rows)
    slope._grassmann = None
    slope._normal = _normal_of_rref(slope._basis, n) if d == n - 1 else None
    return slope


class SlopeOracle(object):
    """
    A computable plane: query(m) returns a rational Slope within 1/m of it.

    :param query: callable taking a positive int m
    """

    def __init__(self, query, n, d, name=None):
        if not callable(query):
            raise TypeError('Feed me a callable query')
        self._query = query
        self.n = n
        self.d = d
        self.name = name or 'oracle'
        self._cache = {}

    def __call__(self, m):
        if not isinstance(m, int) or m < 1:
            raise ValueError('precision index must be a positive int')
        if m not in self._cache:
            answer = self._query(m)
            if (answer.n, answer.d) != (self.n, self.d):
                raise errors.DimensionMismatch('oracle %s answered a (%d,%d) slope' % (self.name, answer.n, answer.d))
            self._cache[m] = answer
        return self._cache[m]

    def check_consistency(self, m1, m2, tol=utils.DEFAULT_TOLERANCE):
        """True when the answers at precisions 1/m1 and 1/m2 are within 1/m1 + 1/m2."""
        dist = plane_distance(self(m1), self(m2), tol)
        return dist.lo <= Fraction(1, m1) + Fraction(1, m2)

    @classmethod
    def from_slope(cls, slope):
        return cls(lambda m: slope, slope.n, slope.d, name=repr(slope))

    @classmethod
    def from_continued_fraction(cls, terms, name=None):
        """
        The line of R^2 with normal (alpha, 1 - alpha), alpha in (0, 1) given by
        its continued fraction [0; a1, a2, ...].

        :param terms: callable k -> a_k (k >= 1), positive ints
        """
        def query(m):
            for p, q in continued_fraction_convergents(terms):
                # |alpha - p/q| < 1/q^2 and the distance is at most twice that
                if q * q >= 2 * m:
                    return Slope.from_normal((Fraction(p, q), 1 - Fraction(p, q)))
        return cls(query, 2, 1, name=name or 'continued fraction')


def continued_fraction_convergents(terms):
    """Yields the convergents of [0; a1, a2, ...] as (p, q) pairs."""
    h_prev, h = 1, 0
    k_prev, k = 0, 1
    i = 0
    while True:
        i += 1
        a = terms(i)
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
        yield h, k
