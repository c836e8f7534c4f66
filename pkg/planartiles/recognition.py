#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Slope recognition from the patches allowed by local rules.

s(P) is the set of hyperplanes E such that every lifted vertex of a patch P
lies in E + [0, t]^n. Normals are read in charts: a sign pattern sigma, with
sigma_1 = +1 since nu and -nu give the same hyperplane, and a pivot k. Setting
nu_i = sigma_i mu_i, a piece holds the mu with mu_k = 1 and 0 <= mu_i <= 1.
There |nu|_1 = sum mu_i and the tube condition c <= nu.x <= c + t |nu|_1 is
linear in (mu, c).

A patch family only holds restrictions of legal patches. Nothing here asserts
that a legal patch extends to a tiling of the whole plane.
"""

import collections
import fractions
import itertools
import logging
import math

import numpy
import sympy

from planartiles import errors
from planartiles import geometry
from planartiles import polytope
from planartiles import tileset
from planartiles import tilings
from planartiles import utils
from planartiles import words
from planartiles.abc import interfaces
from planartiles.geometry import Slope

log = logging.getLogger('recognition')

Fraction = fractions.Fraction

# rows of the dominance test done at once
_CHUNK = 256


def _pareto(points, minimal=True):
    """The points with no other point below (or above) them in every coordinate."""
    arr = numpy.asarray(points, dtype=numpy.int64)
    if not minimal:
        arr = -arr
    keep = numpy.ones(len(arr), dtype=bool)
    for start in range(0, len(arr), _CHUNK):
        block = arr[start:start + _CHUNK]
        below = (arr[None, :, :] <= block[:, None, :]).all(axis=2)
        strict = (arr[None, :, :] < block[:, None, :]).any(axis=2)
        keep[start:start + _CHUNK] = ~(below & strict).any(axis=1)
    return [points[i] for i in numpy.flatnonzero(keep)]


def sign_patterns(n):
    """The sign patterns of the charts, first sign +1."""
    return [(1,) + rest for rest in itertools.product((1, -1), repeat=n - 1)]


def _chart_of(nu):
    """(signs, pivot, mu) of a nonzero normal."""
    first = next(x for x in nu if x != 0)
    if first < 0:
        nu = [-x for x in nu]
    signs = tuple(1 if x >= 0 else -1 for x in nu)
    mu = [abs(Fraction(x)) for x in nu]
    top = max(mu)
    k = mu.index(top)
    return signs, k, [x / top for x in mu]


def _canonical(nu):
    first = next(x for x in nu if x != 0)
    return tuple(nu) if first > 0 else tuple(-x for x in nu)


class SlopePolytope(object):
    """
    The slope set of a patch, as a union of chart pieces.

    Each piece is (signs, pivot, rows), a row [b, a_1, ..., a_{n-1}, a_c]
    standing for b + sum a_i mu_i + a_c c >= 0 over the non pivot coordinates
    of the reflected normal mu and the offset c.
    """

    def __init__(self, n, t, pieces):
        self.n = n
        self.d = n - 1
        self.t = t
        self.pieces = tuple((tuple(signs), k, tuple(tuple(row) for row in rows)) for signs, k, rows in pieces)
        self._by_piece = None

    @property
    def constraints(self):
        return self.pieces

    def _vertices_by_piece(self):
        if self._by_piece is None:
            self._by_piece = []
            for signs, k, rows in self.pieces:
                found = set()
                for v in polytope.bounded_vertices(rows):
                    mu = list(v[:-1])
                    mu.insert(k, Fraction(1))
                    found.add((tuple(s * x for s, x in zip(signs, mu)), v[-1]))
                self._by_piece.append((signs, k, sorted(found)))
        return self._by_piece

    def vertices(self):
        """The (normal, offset) vertices of all the pieces, sorted."""
        return sorted(set(v for _, _, found in self._vertices_by_piece() for v in found))

    def normals(self):
        """The vertex normals, first nonzero entry positive."""
        return sorted(set(_canonical(nu) for nu, _ in self.vertices()))

    def normal_cones(self):
        """For each nonempty piece, the normals generating its cone of slopes."""
        ret = []
        for _, _, found in self._vertices_by_piece():
            nus = sorted(set(nu for nu, _ in found))
            if nus:
                ret.append(nus)
        return ret

    def vertex_slopes(self):
        return [Slope.from_normal(nu) for nu in self.normals()]

    @property
    def is_empty(self):
        return not self.vertices()

    def lexmin(self):
        """The lexicographically smallest (normal, offset) vertex, as a Slope."""
        found = self.vertices()
        if not found:
            raise errors.EmptyFamily('no slope fits with thickness %d' % self.t)
        return Slope.from_normal(found[0][0])

    def contains(self, slope):
        """True when some offset c puts every vertex of the patch in the tube of the slope."""
        if not isinstance(slope, Slope):
            raise TypeError('Feed me a Slope')
        if slope.n != self.n:
            raise errors.DimensionMismatch('slope of R^%d, slope set of R^%d' % (slope.n, self.n))
        signs, k, mu = _chart_of(slope.normal)
        rows = None
        for piece_signs, pivot, piece_rows in self.pieces:
            # a zero entry sits in both charts of its sign
            if pivot == k and all(s == p or x == 0 for s, p, x in zip(signs, piece_signs, mu)):
                rows = piece_rows
                break
        if rows is None:
            return False
        others = [i for i in range(self.n) if i != k]
        lo, hi = None, None
        for row in rows:
            rest = row[0] + sum(a * mu[i] for a, i in zip(row[1:-1], others))
            a = row[-1]
            if a == 0:
                if rest < 0:
                    return False
            elif a > 0:
                lo = -rest / a if lo is None else max(lo, -rest / a)
            else:
                hi = rest / -a if hi is None else min(hi, rest / -a)
        return lo is None or hi is None or lo <= hi

    def to_json(self):
        return {'n': self.n, 'd': self.d, 't': self.t,
                'pieces': [{'signs': list(signs), 'pivot': k + 1,
                            'rows': [[utils.fraction_to_str(x) for x in row] for row in rows]}
                           for signs, k, rows in self.pieces]}

    def __repr__(self):
        return '<SlopePolytope n=%d t=%d %d pieces>' % (self.n, self.t, len(self.pieces))


def slope_set(patch, t=1):
    """
    The polytope s(P) of the hyperplanes whose thickness-t tube holds the patch.

    In the chart of signs sigma, each lifted vertex x is read as x'_i = sigma_i x_i
    and gives mu.x' - c >= 0 and c + t |mu|_1 - mu.x' >= 0; only the reflected
    vertices minimal (resp. maximal) for the coordinate order can tighten the
    first (resp. second) inequality, so the others are dropped.

    :param patch: LiftedPatch with d = n - 1
    :param t: thickness, int >= 1
    :rtype: SlopePolytope
    :raise UnsupportedDimension: when d < n - 1
    :raise PatchError: on an empty patch
    """
    if not isinstance(patch, tilings.LiftedPatch):
        raise TypeError('Feed me a LiftedPatch')
    tilings.validate_thickness(t)
    n = patch.n
    if patch.d != n - 1:
        raise errors.UnsupportedDimension('slope sets are linear for hyperplanes only, got %d->%d' % (n, patch.d))
    vertices = sorted(patch.vertices)
    if not vertices:
        raise errors.PatchError('an empty patch has no slope set')
    pieces = []
    for signs in sign_patterns(n):
        reflected = sorted(set(tuple(s * x for s, x in zip(signs, v)) for v in vertices))
        lower = _pareto(reflected, minimal=True)
        upper = _pareto(reflected, minimal=False)
        for k in range(n):
            others = [i for i in range(n) if i != k]
            rows = []
            for x in lower:
                rows.append([Fraction(x[k])] + [Fraction(x[i]) for i in others] + [Fraction(-1)])
            for x in upper:
                rows.append([Fraction(t - x[k])] + [Fraction(t - x[i]) for i in others] + [Fraction(1)])
            for col in range(len(others)):
                low = [Fraction(0)] * (n + 1)
                low[1 + col] = Fraction(1)
                high = [Fraction(0)] * (n + 1)
                high[0], high[1 + col] = Fraction(1), Fraction(-1)
                rows.append(low)
                rows.append(high)
            pieces.append((signs, k, rows))
        log.debug('chart %s: %d lower and %d upper rows', signs, len(lower), len(upper))
    return SlopePolytope(n, t, pieces)


def _as_list(sets):
    if isinstance(sets, SlopePolytope):
        return [sets]
    return list(sets)


def diameter_sin2(sets):
    """
    Exact squared diameter of a union of slope sets.

    For a normal u, the angle to u has convex sublevel sets on each side of
    the hyperplane orthogonal to u. When the generators of a piece lie on both
    sides of it, the piece holds a normal orthogonal to u and the diameter is
    1; otherwise the largest angle is reached on vertices.
    """
    cones = [cone for s in _as_list(sets) for cone in s.normal_cones()]
    for first, second in itertools.product(cones, repeat=2):
        for u in first:
            dots = [utils.dot(u, v) for v in second]
            if any(x > 0 for x in dots) and any(x < 0 for x in dots):
                return Fraction(1)
    normals = sorted(set(nu for s in _as_list(sets) for nu in s.normals()))
    best = Fraction(0)
    for u, v in itertools.combinations(normals, 2):
        best = max(best, geometry.sin2_of_vectors(u, v))
    return best


def polytope_diameter(sets, tol=utils.DEFAULT_TOLERANCE):
    """
    Diameter of a slope set, or of a union of them, under plane_distance.

    :param sets: SlopePolytope or iterable of SlopePolytope
    :rtype: utils.Enclosure
    """
    return utils.sqrt_enclosure(diameter_sin2(sets), tol)


def _cone_cos2(f, gens):
    """Largest squared cosine between the line of f and the cone spanned by gens."""
    norm2 = utils.dot(f, f)
    vec = sympy.Matrix([utils.to_sympy(x) for x in f])
    best = Fraction(0)
    for size in range(1, min(len(f), len(gens)) + 1):
        for subset in itertools.combinations(gens, size):
            A = sympy.Matrix([[utils.to_sympy(g[i]) for g in subset] for i in range(len(f))])
            gram = A.T * A
            if gram.det() == 0:
                continue
            lam = gram.LUsolve(A.T * vec)
            coefs = [utils.from_sympy(x) for x in lam]
            # -f counts as well, a normal has no sign
            if not (all(x >= 0 for x in coefs) or all(x <= 0 for x in coefs)):
                continue
            p = A * lam
            proj2 = utils.from_sympy((p.T * p)[0, 0])
            best = max(best, proj2 / norm2)
    return best


def slope_set_distance(slope, sets):
    """
    Exact squared distance from a slope to a union of slope sets.

    Each chart piece is the cone spanned by its vertex normals; the closest
    direction of a cone is the projection on the span of one of its faces.

    :return: a Fraction, 1 for an empty union
    """
    if not isinstance(slope, Slope):
        raise TypeError('Feed me a Slope')
    f = slope.normal
    best = Fraction(0)
    for s in _as_list(sets):
        if s.n != slope.n:
            raise errors.DimensionMismatch('slope of R^%d, slope set of R^%d' % (slope.n, s.n))
        for gens in s.normal_cones():
            best = max(best, _cone_cos2(f, gens))
            if best == 1:
                return Fraction(0)
    return 1 - best


class PatchFamily(collections.namedtuple('PatchFamily', ['r', 'r2', 'patches'])):
    """
    The restrictions to the radius-r ball of the legal r2-patches.

    A member is only known to be a piece of a legal r2-patch; it may still
    fail to extend to a tiling of the plane.
    """

    __slots__ = ()

    def __len__(self):
        return len(self.patches)


def _check_radius(name, value):
    if not isinstance(value, int) or value < 1:
        raise ValueError('%s must be an int >= 1, got %r' % (name, value))


def as_rules(rules):
    """Wang tile sets stand for their 3->2 stripe rules."""
    if isinstance(rules, interfaces.IRuleSystem):
        return rules
    if isinstance(rules, tileset.TileSet):
        return StripeRules(rules)
    raise TypeError('Feed me a IRuleSystem or a TileSet')


def patch_family(rules, r, r2, budget=None):
    """
    Enumerates every legal r2-patch and restricts it to the radius-r ball.

    :param rules: IRuleSystem or Wang TileSet
    :param budget: search budget of the patch enumeration
    :rtype: PatchFamily
    :raise EmptyFamily: when the rules admit no r2-patch
    :raise BudgetExceeded: when the enumeration needs more than budget steps
    """
    rules = as_rules(rules)
    _check_radius('r', r)
    _check_radius('r2', r2)
    if r > r2:
        raise ValueError('need r <= r2, got %d > %d' % (r, r2))
    patches = set()
    count = 0
    for patch in rules.legal_patches(r2, budget):
        count += 1
        patches.add(tilings.restrict_to_ball(patch, r))
    if not patches:
        raise errors.EmptyFamily('the rules admit no patch of radius %d' % r2)
    log.debug('patch family r=%d r2=%d: %d legal patches, %d restrictions', r, r2, count, len(patches))
    return PatchFamily(r, r2, frozenset(patches))


def family_slope_sets(family, t):
    """The nonempty slope sets of the members of a family."""
    ret = []
    for patch in sorted(family.patches, key=lambda p: p.sorted_tiles()):
        s = slope_set(patch, t)
        if not s.is_empty:
            ret.append(s)
    return ret


def _algorithm1_steps(rules, t, m, budget, max_radius):
    # yields None after each radius that did not converge, then the answer
    r = 3 * t * m
    if max_radius is None:
        max_radius = 4 * r
    bound = Fraction(2, 3 * m) ** 2
    for r2 in range(r, max_radius + 1):
        family = patch_family(rules, r, r2, budget)
        sets = family_slope_sets(family, t)
        if not sets:
            raise errors.EmptyFamily('no slope of thickness %d fits the %d-patches' % (t, r))
        s2 = diameter_sin2(sets)
        log.debug('t=%d m=%d r=%d r2=%d: %d patches, squared diameter %s', t, m, r, r2, len(family), s2)
        if s2 <= bound:
            best = min(v for s in sets for v in s.vertices())
            yield Slope.from_normal(best[0])
            return
        yield None
    log.warning('slope sets of radius %d did not shrink below 2/%d up to radius %d', r, 3 * m, max_radius)
    raise errors.BudgetExceeded('no convergence for r2 <= %d' % max_radius, max_radius)


def algorithm1(rules, t=1, m=1, budget=None, max_radius=None):
    """
    Approximates within 1/m the slope enforced by local rules of thickness t.

    With r = 3tm, r2 grows from r until the slope sets of the family of
    radius (r, r2) have a diameter at most 2/(3m). The lexicographically
    smallest vertex of their union is returned.

    :param rules: IRuleSystem or Wang TileSet
    :param max_radius: largest r2 tried, default 4r
    :rtype: Slope
    :raise BudgetExceeded: when max_radius or the search budget is reached
    :raise EmptyFamily: when the rules tile nothing, or nothing of thickness t
    """
    tilings.validate_thickness(t)
    _check_radius('m', m)
    for answer in _algorithm1_steps(as_rules(rules), t, m, budget, max_radius):
        if answer is not None:
            return answer


def algorithm1_unknown_thickness(rules, m=1, budget=None, max_rounds=8):
    """
    Runs copies of algorithm1 with t = 1, 2, ... side by side.

    Round k starts the copy of thickness k, then advances every live copy by
    one radius. A copy stops when it fails; the first answer wins.

    :return: (t, Slope)
    :raise BudgetExceeded: when no copy answers within max_rounds rounds
    """
    rules = as_rules(rules)
    _check_radius('m', m)
    copies = []
    for rnd in range(1, max_rounds + 1):
        copies.append((rnd, _algorithm1_steps(rules, rnd, m, budget, None)))
        alive = []
        for t, steps in copies:
            try:
                answer = next(steps)
            except (errors.BudgetExceeded, errors.EmptyFamily) as e:
                log.debug('copy t=%d stopped: %s', t, e)
                continue
            if answer is not None:
                log.info('copy t=%d answered in round %d', t, rnd)
                return t, answer
            alive.append((t, steps))
        copies = alive
    raise errors.BudgetExceeded('no copy answered within %d rounds' % max_rounds, max_rounds)


class Ball(collections.namedtuple('Ball', ['center', 'radius', 'round'])):
    """A closed ball of slopes, emitted in some round of the enumeration."""

    __slots__ = ()

    def contains(self, slope):
        return geometry.sin2_distance(self.center, slope) <= self.radius ** 2

    def to_json(self):
        return {'center': self.center.to_json(), 'radius': utils.fraction_to_str(self.radius), 'round': self.round}


class BallStream(collections.namedtuple('BallStream', ['balls', 'rounds', 'complete'])):
    """The balls of a bounded run; complete is False when the budget stopped it."""

    __slots__ = ()


def algorithm2(rules, t=1, rounds=None, budget=None):
    """
    Enumerates closed balls covering slopes the rules do not enforce.

    Round m lists the legal m-patches, then for every r <= m and each of the
    first m slopes F of the enumeration of all rational slopes, emits B(F, t/r) when F is
    further than t/r from the slope sets of the family of radius (r, m).
    A slope enforced with thickness t is never in an emitted ball.

    :param rounds: number of rounds, None for no end
    :return: a generator of Ball
    :raise BudgetExceeded: when a patch enumeration exceeds budget
    """
    rules = as_rules(rules)
    tilings.validate_thickness(t)
    n, d = rules.get_dimensions()
    enumerator = geometry.rational_slope_enumerator(n, d)
    candidates = []
    m = 0
    while rounds is None or m < rounds:
        m += 1
        candidates.append(next(enumerator))
        legal = list(rules.legal_patches(m, budget))
        if not legal:
            raise errors.EmptyFamily('the rules admit no patch of radius %d' % m)
        for r in range(1, m + 1):
            family = PatchFamily(r, m, frozenset(tilings.restrict_to_ball(p, r) for p in legal))
            sets = family_slope_sets(family, t)
            bound = Fraction(t, r) ** 2
            for center in candidates:
                if slope_set_distance(center, sets) > bound:
                    yield Ball(center, Fraction(t, r), m)
        log.debug('round %d done, %d candidate slopes', m, len(candidates))


def ball_enumeration(rules, t=1, rounds=4, budget=None):
    """
    Collects the balls of algorithm2 over a number of rounds.

    :rtype: BallStream
    """
    balls = []
    try:
        for ball in algorithm2(rules, t, rounds, budget):
            balls.append(ball)
    except errors.BudgetExceeded as e:
        log.warning('ball enumeration stopped after %d balls: %s', len(balls), e)
        return BallStream(tuple(balls), rounds, False)
    return BallStream(tuple(balls), rounds, True)


def _check_lettered(ts):
    if not isinstance(ts, tileset.TileSet) or not ts.is_wang:
        raise TypeError('Feed me a Wang TileSet')
    missing = [t.name for t in ts if t.letter is None]
    if missing:
        raise errors.TileSetError('tiles %s carry no letter' % ', '.join(missing))


class WordRules(interfaces.IRuleSystem):
    """
    2->1 rules: the rows a Wang tile set can tile, read through the tile
    letters as staircases.
    """

    def __init__(self, ts, name=None, description=''):
        _check_lettered(ts)
        self.tileset = ts
        self.name = name or ts.name
        self.description = description

    def get_dimensions(self):
        return (2, 1)

    def half_width(self, radius):
        """Cells on each side of column 0; a staircase leaves the ball after 2(r+2) steps."""
        return 2 * radius + 5

    def legal_patches(self, radius, budget=None):
        half = self.half_width(radius)
        seen = set()
        for grid in tileset.tile_rectangle(self.tileset, 1, 2 * half + 1, budget=budget):
            letters = [self.tileset[name].letter for name in grid[0]]
            ones = sum(letters[:half])
            patch = tilings.lift_word(words.BinaryWord(letters, -half))
            # the vertex starting column 0
            start = (ones - half, ones - half)
            patch = tilings.restrict_to_ball(patch.translate((-start[0], -start[1])), radius)
            if patch not in seen:
                seen.add(patch)
                yield patch

    def __repr__(self):
        return '<WordRules %s>' % self.name


class StripeRules(interfaces.IRuleSystem):
    """
    3->2 rules: the rectangles a Wang tile set can tile, lifted row by row
    through their letters.
    """

    def __init__(self, ts, axis='12', name=None, description=''):
        _check_lettered(ts)
        tilings.axis_of(axis)
        self.tileset = ts
        self.axis = axis
        self.name = name or ts.name
        self.description = description

    def get_dimensions(self):
        return (3, 2)

    def extent(self, radius):
        """(H, W): rows -H..H and columns -W..W cover the lifted ball of the radius."""
        reach2 = tilings.ball_radius_squared(3, radius)
        return math.isqrt(reach2) + 2, math.isqrt(2 * reach2) + 3

    def _centering(self, patch):
        i, j, k = tilings.axis_of(self.axis)
        for tile in patch.tiles:
            cell, letter = tilings.cell_of(tile, i, j, k)
            if cell != (0, 0):
                continue
            vertex = list(tile[0])
            if letter == 0:
                vertex[j] += 1
            move = [0, 0, 0]
            move[i] = move[j] = -vertex[i]
            return tuple(move)
        raise errors.PatchError('no tile projects on cell (0, 0)')

    def legal_patches(self, radius, budget=None):
        height, width = self.extent(radius)
        seen = set()
        for grid in tileset.tile_rectangle(self.tileset, 2 * height + 1, 2 * width + 1, budget=budget):
            config = tileset.letters_of(self.tileset, grid, (-height, -width))
            patch = tilings.lift_configuration(config, self.axis)
            patch = tilings.restrict_to_ball(patch.translate(self._centering(patch)), radius)
            if patch not in seen:
                seen.add(patch)
                yield patch

    def __repr__(self):
        return '<StripeRules %s axis %s>' % (self.name, self.axis)
