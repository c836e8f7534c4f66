#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
n->d tilings, handled through their lift in Z^n.

A tile is a pair (base, gens): an integer vertex of Z^n and a sorted tuple of d
generator indices (0-based; JSON files count generators from 1). Tile (x, S)
is the unit face x + sum_{g in S} [0, 1] e_g.
"""

import collections
import fractions
import itertools
import logging
import math

import numpy
import sympy

from planartiles import errors
from planartiles import polytope
from planartiles import utils
from planartiles import words
from planartiles.abc import interfaces
from planartiles.geometry import Slope
from planartiles.subshift import Configuration

log = logging.getLogger('tilings')

Fraction = fractions.Fraction

AXES = {'12': (0, 1, 2), '13': (0, 2, 1), '23': (1, 2, 0)}


def _unit(n, i):
    ret = [0] * n
    ret[i] = 1
    return tuple(ret)


def _add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def _sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def tile_vertices(tile):
    base, gens = tile
    ret = []
    for eps in itertools.product((0, 1), repeat=len(gens)):
        v = list(base)
        for e, g in zip(eps, gens):
            v[g] += e
        ret.append(tuple(v))
    return ret


def tile_faces(tile):
    """The 2d faces of dimension d-1 of a tile."""
    base, gens = tile
    ret = []
    for g in gens:
        rest = tuple(h for h in gens if h != g)
        ret.append((base, rest))
        ret.append((_add(base, _unit(len(base), g)), rest))
    return ret


class LiftedPatch(interfaces.IPatch):
    """
    A finite set of unit d-faces of Z^n.

    Every (d-1)-face belongs to at most two tiles. Connectivity is available
    through is_connected() but not enforced, so that restrictions of patches
    stay patches.
    """

    def __init__(self, n, d, tiles):
        if not 0 < d < n:
            raise ValueError('need 0 < d < n')
        self.n = n
        self.d = d
        checked = set()
        for base, gens in tiles:
            base = tuple(int(x) for x in base)
            gens = tuple(sorted(int(g) for g in gens))
            if len(base) != n:
                raise errors.PatchError('tile base %s is not in Z^%d' % (base, n))
            if len(gens) != d or len(set(gens)) != d or not all(0 <= g < n for g in gens):
                raise errors.PatchError('tile generators %s are not a %d-subset of %d' % (gens, d, n))
            checked.add((base, gens))
        self._tiles = frozenset(checked)
        faces = collections.Counter(f for t in self._tiles for f in tile_faces(t))
        over = [f for f, k in faces.items() if k > 2]
        if over:
            raise errors.PatchError('face %s is shared by more than two tiles' % (over[0],))

    @classmethod
    def from_json(cls, obj):
        try:
            tiles = [(t['base'], [g - 1 for g in t['gens']]) for t in obj['tiles']]
            return cls(int(obj['n']), int(obj['d']), tiles)
        except (KeyError, TypeError) as e:
            raise errors.PatchError('malformed patch: %s' % e)

    def to_json(self):
        return {'n': self.n, 'd': self.d,
                'tiles': [{'base': list(b), 'gens': [g + 1 for g in s]} for b, s in self.sorted_tiles()]}

    def get_tiles(self):
        return self._tiles

    tiles = property(get_tiles)

    def sorted_tiles(self):
        return sorted(self._tiles)

    def get_vertices(self):
        return set(v for t in self._tiles for v in tile_vertices(t))

    vertices = property(get_vertices)

    def translate(self, vector):
        return LiftedPatch(self.n, self.d, [(_add(b, vector), s) for b, s in self._tiles])

    def restrict(self, keep):
        """The sub-patch of the tiles for which keep(tile) is true."""
        return LiftedPatch(self.n, self.d, [t for t in self._tiles if keep(t)])

    def type_counts(self):
        return collections.Counter(s for _, s in self._tiles)

    def is_connected(self):
        if not self._tiles:
            return True
        by_face = collections.defaultdict(list)
        for t in self._tiles:
            for f in tile_faces(t):
                by_face[f].append(t)
        start = next(iter(self._tiles))
        seen = set([start])
        todo = [start]
        while todo:
            t = todo.pop()
            for f in tile_faces(t):
                for u in by_face[f]:
                    if u not in seen:
                        seen.add(u)
                        todo.append(u)
        return len(seen) == len(self._tiles)

    def incidence(self):
        """Maps each vertex to the set of tiles containing it."""
        ret = collections.defaultdict(set)
        for t in self._tiles:
            for v in tile_vertices(t):
                ret[v].add(t)
        return ret

    def __len__(self):
        return len(self._tiles)

    def __iter__(self):
        return iter(self.sorted_tiles())

    def __contains__(self, tile):
        return tile in self._tiles

    def __eq__(self, other):
        if not isinstance(other, LiftedPatch):
            return NotImplemented
        return (self.n, self.d, self._tiles) == (other.n, other.d, other._tiles)

    def __ne__(self, other):
        ret = self.__eq__(other)
        if ret is NotImplemented:
            return ret
        return not ret

    def __hash__(self):
        return hash((self.n, self.d, self._tiles))

    def __repr__(self):
        return '<LiftedPatch %d->%d %d tiles>' % (self.n, self.d, len(self._tiles))


class Box(collections.namedtuple('Box', ['lo', 'hi'])):
    """Integer box prod [lo_i, hi_i] of Z^n, bounds included."""

    __slots__ = ()

    @classmethod
    def cube(cls, n, radius, center=None):
        center = center or (0,) * n
        return cls(tuple(c - radius for c in center), tuple(c + radius for c in center))

    def contains(self, x):
        return all(a <= v <= b for a, v, b in zip(self.lo, x, self.hi))

    @property
    def is_empty(self):
        return any(a > b for a, b in zip(self.lo, self.hi))


def validate_thickness(t):
    if not isinstance(t, int) or t < 1:
        raise ValueError('thickness must be an int >= 1, got %r' % (t,))


def _hyperplane_faces(normal, offset, box):
    """Faces (x, S) with c <= nu.x < c + |nu_j|, j the missing generator, read after reflecting
    the axes where nu is negative."""
    n = len(normal)
    neg = [i for i in range(n) if normal[i] < 0]
    mu = [abs(v) for v in normal]
    # reflected box: x'_i = -x_i on the negative axes
    lo = [-box.hi[i] if i in neg else box.lo[i] for i in range(n)]
    hi = [-box.lo[i] if i in neg else box.hi[i] for i in range(n)]
    solve = max(range(n), key=lambda i: mu[i])
    others = [i for i in range(n) if i != solve]
    a = mu[solve]
    tiles = []
    for j in range(n):
        gens = tuple(g for g in range(n) if g != j)
        low, high = offset, offset + mu[j]
        # the face must fit in the box: base_g <= hi_g - 1 for g in gens
        upper = [hi[i] - (1 if i in gens else 0) for i in range(n)]
        ranges = [range(lo[i], upper[i] + 1) for i in others]
        for values in itertools.product(*ranges):
            rest = sum(mu[i] * v for i, v in zip(others, values))
            first = math.floor((low - rest) / a)
            for x in range(max(first, lo[solve]), min(math.ceil((high - rest) / a), upper[solve]) + 1):
                if not low <= a * x + rest < high:
                    continue
                base = [0] * n
                base[solve] = x
                for i, v in zip(others, values):
                    base[i] = v
                for i in neg:
                    # the lowest corner of the reflected face
                    base[i] = -base[i] - (1 if i in gens else 0)
                tiles.append((tuple(base), gens))
    return tiles


def _general_faces(slope, gamma, box):
    n, d = slope.n, slope.d
    basis = sympy.Matrix([[utils.to_sympy(x) for x in row] for row in slope.basis])
    perp = basis.nullspace()
    N = sympy.Matrix.hstack(*perp).T
    tiles = []
    for gens in itertools.combinations(range(n), d):
        comp = [j for j in range(n) if j not in gens]
        M = N.extract(list(range(n - d)), comp)
        P = M.inv() * N
        proj = [[utils.from_sympy(P[r, c]) for c in range(n)] for r in range(n - d)]
        upper = [box.hi[i] - (1 if i in gens else 0) for i in range(n)]
        for x in itertools.product(*[range(box.lo[i], upper[i] + 1) for i in range(n)]):
            diff = [a - b for a, b in zip(x, gamma)]
            lam = [utils.dot(row, diff) for row in proj]
            if all(0 <= v < 1 for v in lam):
                tiles.append((tuple(x), gens))
    return tiles


def cut_and_project(slope, t=1, region=None, offset=0, flips=()):
    """
    The canonical planar patch of a slope inside an integer box.

    A face (x, S) is kept iff x - gamma lies in E + sum_{j not in S} [0, 1) e_j,
    gamma being the offset point. For hyperplanes, offset is the rational c with
    nu.gamma = c and the rule reads c <= nu.x < c + |nu_j| once the axes
    where nu is negative are reflected.

    :param slope: a non degenerate Slope
    :param t: thickness bound of the result. t > 1 applies the given flips.
    :param region: Box
    :param offset: rational c (hyperplanes) or point gamma
    :param flips: Flip sequence applied when t > 1
    :rtype: LiftedPatch
    :raise DegenerateSlope: when a Grassmann coordinate of the slope is zero
    :raise PatchError: when the region is empty or holds no tile
    """
    if not isinstance(slope, Slope):
        raise TypeError('Feed me a Slope')
    validate_thickness(t)
    if flips and t == 1:
        raise ValueError('flips need a thickness bound t > 1')
    if region is None or region.is_empty:
        raise errors.PatchError('empty region')
    if len(region.lo) != slope.n:
        raise errors.DimensionMismatch('region is not a box of Z^%d' % slope.n)
    if slope.is_degenerate():
        raise errors.DegenerateSlope('%r has a zero Grassmann coordinate' % slope)
    if slope.is_hyperplane:
        tiles = _hyperplane_faces(slope.normal, utils.to_fraction(offset), region)
    else:
        gamma = offset if isinstance(offset, (tuple, list)) else (0,) * slope.n
        tiles = _general_faces(slope, [utils.to_fraction(g) for g in gamma], region)
    if not tiles:
        raise errors.PatchError('no tile of %r fits in %s' % (slope, region))
    patch = LiftedPatch(slope.n, slope.d, tiles)
    log.debug('cut and project %r: %d tiles', slope, len(patch))
    if t > 1:
        for f in flips:
            patch = apply_flip(patch, f)
        report = check_thickness(patch, slope)
        if report.thickness > t:
            raise errors.PatchError('flips raised the thickness to %s > %d' % (report.thickness, t))
    return patch


def ball_radius_squared(n, radius):
    """Squared lift radius of a radius-r patch: n (r + 2)^2."""
    return n * (radius + 2) ** 2


def in_ball(tile, n, radius):
    bound = ball_radius_squared(n, radius)
    return any(sum(x * x for x in v) <= bound for v in tile_vertices(tile))


def restrict_to_ball(patch, radius):
    """Keeps the tiles having a lifted vertex within sqrt(n) (r + 2) of the origin."""
    return patch.restrict(lambda tile: in_ball(tile, patch.n, radius))


def ball_patch(slope, radius, offset=0):
    """
    The thickness-1 patch of radius r around the origin.

    The radius is measured in the lift, in units of sqrt(n): a tile is kept when
    one of its vertices is within sqrt(n) (r + 2) of the origin.
    """
    n = slope.n
    reach = math.isqrt(ball_radius_squared(n, radius)) + 2
    patch = cut_and_project(slope, 1, Box.cube(n, reach), offset)
    return restrict_to_ball(patch, radius)


class ThicknessReport(collections.namedtuple('ThicknessReport', ['width', 'thickness', 'offset'])):
    """
    width: the least t such that the patch fits in E + gamma + [0, t]^n
    thickness: max(1, width), the thickness of the patch seen as a tiling piece
    offset: nu.gamma for hyperplanes, gamma otherwise
    """

    __slots__ = ()

    def is_planar(self, bound):
        return self.thickness <= bound


def check_thickness(patch, slope):
    """
    Measures how thick a patch is with respect to a slope.

    :rtype: ThicknessReport
    """
    if not isinstance(patch, LiftedPatch):
        raise TypeError('Feed me a LiftedPatch')
    if (patch.n, patch.d) != (slope.n, slope.d):
        raise errors.DimensionMismatch('patch and slope shapes differ')
    vertices = sorted(patch.vertices)
    if not vertices:
        return ThicknessReport(Fraction(0), Fraction(1), Fraction(0))
    if slope.is_hyperplane:
        nu = slope.normal
        values = [utils.dot(nu, v) for v in vertices]
        norm1 = sum(abs(x) for x in nu)
        width = Fraction(max(values) - min(values), norm1)
        # E + [0, t]^n projects on nu onto t [sum of negative nu_i, sum of positive nu_i]
        negative = sum(x for x in nu if x < 0)
        offset = Fraction(min(values)) - width * negative
        return ThicknessReport(width, max(Fraction(1), width), offset)
    return _general_thickness(vertices, slope)


def _general_thickness(vertices, slope):
    # variables: gamma (n), t, then one coordinate vector y (d) per vertex
    n, d = slope.n, slope.d
    nv = len(vertices)
    size = n + 1 + d * nv
    rows = []
    for k, x in enumerate(vertices):
        for i in range(n):
            # z_i = x_i - gamma_i - (B^T y)_i in [0, t]
            low = [Fraction(0)] * (size + 1)
            low[0] = Fraction(x[i])
            low[1 + i] = Fraction(-1)
            high = [Fraction(0)] * (size + 1)
            high[0] = Fraction(-x[i])
            high[1 + i] = Fraction(1)
            high[1 + n] = Fraction(1)
            for r in range(d):
                col = 1 + n + 1 + d * k + r
                low[col] = -slope.basis[r][i]
                high[col] = slope.basis[r][i]
            rows.append(low)
            rows.append(high)
    objective = [0] * size
    objective[n] = 1
    value, solution = polytope.solve_lp(rows, objective)
    return ThicknessReport(value, max(Fraction(1), value), tuple(solution[:n]))


def lift_word(word):
    """
    The 2->1 staircase of a binary word: letter 1 is an e1 step, letter 0 a
    backward e2 step. The first letter starts at vertex (origin, 0).
    """
    x = [word.origin, 0]
    tiles = []
    for letter in word.letters:
        if letter == 1:
            tiles.append((tuple(x), (0,)))
            x[0] += 1
        else:
            x[1] -= 1
            tiles.append((tuple(x), (1,)))
    return LiftedPatch(2, 1, tiles)


def word_of_lift(patch):
    """Inverse of lift_word, up to translation along (1, 1)."""
    if (patch.n, patch.d) != (2, 1):
        raise errors.UnsupportedDimension('words are read on 2->1 patches')
    cells = {}
    for base, gens in patch.tiles:
        col = base[0] - base[1] if gens == (0,) else base[0] - base[1] - 1
        if col in cells:
            raise errors.PatchError('two tiles project on column %d' % col)
        cells[col] = 1 if gens == (0,) else 0
    if not cells:
        return words.BinaryWord((), 0)
    lo, hi = min(cells), max(cells)
    if len(cells) != hi - lo + 1:
        raise errors.PatchError('staircase has holes')
    return words.BinaryWord([cells[c] for c in range(lo, hi + 1)], lo)


def axis_of(axis):
    if axis not in AXES:
        raise ValueError('axis must be one of %s' % ', '.join(sorted(AXES)))
    return AXES[axis]


def cell_of(tile, i, j, k):
    """The (row, col) configuration cell of a tile and its letter, or (None, None) for {i, j} tiles."""
    base, gens = tile
    if gens == tuple(sorted((i, k))):
        return (base[k], base[i] - base[j]), 1
    if gens == tuple(sorted((j, k))):
        return (base[k], base[i] - base[j] - 1), 0
    return None, None


def project_to_configuration(patch, axis='12', window=None):
    """
    Projects a 3->2 patch orthogonally along e_i + e_j.

    Tiles {i, k} give a 1 and tiles {j, k} a 0 at row x_k and column x_i - x_j
    (minus one for {j, k}); tiles {i, j} are ignored.

    :param axis: '12', '13' or '23', the pair (i, j)
    :param window: (row, col, height, width) rectangle to read, default the bounding box
    :rtype: Configuration
    :raise PatchError: when cells overlap, or the window is not fully covered
    """
    if (patch.n, patch.d) != (3, 2):
        raise errors.UnsupportedDimension('configurations are read on 3->2 patches')
    i, j, k = axis_of(axis)
    cells = {}
    for tile in patch.tiles:
        cell, letter = cell_of(tile, i, j, k)
        if cell is None:
            continue
        if cell in cells:
            raise errors.PatchError('two tiles project on cell %s' % (cell,))
        cells[cell] = letter
    if not cells:
        raise errors.PatchError('patch has no tile with an e%d edge' % (k + 1))
    if window is None:
        rows = [r for r, _ in cells]
        cols = [c for _, c in cells]
        window = (min(rows), min(cols), max(rows) - min(rows) + 1, max(cols) - min(cols) + 1)
    row0, col0, height, width = window
    grid = []
    for r in range(row0, row0 + height):
        line = []
        for c in range(col0, col0 + width):
            if (r, c) not in cells:
                raise errors.PatchError('cell (%d, %d) is not covered' % (r, c))
            line.append(cells[(r, c)])
        grid.append(line)
    return Configuration(grid, origin=(row0, col0))


def _row_path(letters, start):
    path = [start]
    for letter in letters:
        path.append(path[-1] + (1 if letter == 1 else -1))
    return path


def lift_configuration(config, axis='12'):
    """
    Canonical lift of a binary configuration into a 3->2 patch.

    Row r becomes a stripe of {i, k} and {j, k} tiles at x_k = origin_row + r.
    Each stripe is stacked as close as possible below the previous one, and the
    gap between them is filled with {i, j} tiles. Projecting back along the same
    axis gives the configuration again.
    """
    if set(config.alphabet) - set((0, 1)):
        raise errors.PatchError('only binary configurations lift')
    i, j, k = axis_of(axis)
    row0, col0 = config.origin
    height, width = config.shape
    tiles = []
    previous = None
    for r in range(height):
        letters = [int(x) for x in config.array[r]]
        path = _row_path(letters, col0)
        if previous is not None:
            shift = max(a - b for a, b in zip(path, previous))
            path = [s - shift for s in path]
        level = row0 + r
        for c in range(width):
            col = col0 + c
            s = path[c]
            xi, xj = (s + col) // 2, (s - col) // 2
            base = [0, 0, 0]
            base[k] = level
            if letters[c] == 1:
                base[i], base[j] = xi, xj
                tiles.append((tuple(base), tuple(sorted((i, k)))))
            else:
                base[i], base[j] = xi, xj - 1
                tiles.append((tuple(base), tuple(sorted((j, k)))))
        if previous is not None:
            for c in range(1, width):
                col = col0 + c
                for sigma in range(path[c] + 1, previous[c], 2):
                    base = [0, 0, 0]
                    base[i], base[j], base[k] = (col + sigma - 1) // 2, (sigma - 1 - col) // 2, level
                    tiles.append((tuple(base), tuple(sorted((i, j)))))
        previous = path
    return LiftedPatch(3, 2, tiles)


class Ribbon(collections.namedtuple('Ribbon', ['direction', 'tiles'])):
    """Maximal chain of tiles sharing edges of one direction, ordered along the chain."""

    __slots__ = ()

    def word(self):
        """
        The binary word of a ribbon of a 3->2 patch: with (j, k) the two other
        generators, tiles {i, j} read 1 and tiles {i, k} read 0.
        """
        if len(self.tiles[0][0]) != 3:
            raise errors.UnsupportedDimension('ribbon words are read on 3->2 tilings')
        i = self.direction
        j, k = [g for g in range(3) if g != i]
        letters = []
        origin = None
        for base, gens in self.tiles:
            if gens == tuple(sorted((i, j))):
                col, letter = base[j] - base[k], 1
            else:
                col, letter = base[j] - base[k] - 1, 0
            if origin is None:
                origin = col
            letters.append(letter)
        return words.BinaryWord(letters, origin or 0)

    def __len__(self):
        return len(self.tiles)


def _ribbon_key(tile, i):
    base, gens = tile
    j, k = [g for g in range(len(base)) if g != i][:2]
    if j in gens:
        return base[j] - base[k]
    return base[j] - base[k] - 1


def ribbons(patch, i):
    """
    The v_i-ribbons of a 2-dimensional patch.

    Every tile with an e_i edge lies in exactly one ribbon. For 3->2 patches the
    tiles are ordered by increasing x_j - x_k.
    """
    if patch.d != 2:
        raise errors.UnsupportedDimension('ribbons are defined for 2-dimensional tilings')
    if not 0 <= i < patch.n:
        raise ValueError('no generator %d' % i)
    members = [t for t in patch.tiles if i in t[1]]
    by_edge = collections.defaultdict(list)

    def edges(tile):
        base, gens = tile
        g = [h for h in gens if h != i][0]
        return [(base, i), (_add(base, _unit(patch.n, g)), i)]

    for t in members:
        for e in edges(t):
            by_edge[e].append(t)
    seen = set()
    ret = []
    for start in sorted(members):
        if start in seen:
            continue
        component = []
        todo = [start]
        seen.add(start)
        while todo:
            t = todo.pop()
            component.append(t)
            for e in edges(t):
                for u in by_edge[e]:
                    if u not in seen:
                        seen.add(u)
                        todo.append(u)
        if patch.n == 3:
            component.sort(key=lambda tile: _ribbon_key(tile, i))
        else:
            component.sort()
        ret.append(Ribbon(i, tuple(component)))
    return ret


class Flip(collections.namedtuple('Flip', ['vertex', 'before', 'after', 'gens'])):
    """
    Re-tiling of the d+1 tiles around a vertex.

    gens is the (d+1)-set G; before is either the lower half of the boundary of
    the cube vertex + [0, 1]^G (tiles (p, G - g)) or its upper half (tiles
    (p + e_g, G - g)), after the other half.
    """

    __slots__ = ()

    @property
    def is_lower(self):
        return all(base == self.vertex for base, _ in self.before)

    def reversed(self):
        n = len(self.vertex)
        delta = [0] * n
        for g in self.gens:
            delta[g] = 1
        if self.is_lower:
            vertex = _add(self.vertex, delta)
        else:
            vertex = _sub(self.vertex, delta)
        return Flip(vertex, self.after, self.before, self.gens)


def _lower_tiles(p, G):
    return frozenset((p, tuple(h for h in G if h != g)) for g in G)


def _upper_tiles(p, G):
    n = len(p)
    return frozenset((_add(p, _unit(n, g)), tuple(h for h in G if h != g)) for g in G)


def find_flips(patch):
    """
    All the flips of a patch: vertices belonging to exactly d+1 tiles that form
    the lower or the upper half of a unit (d+1)-cube.

    :rtype: list of Flip, sorted by vertex
    """
    d = patch.d
    ret = []
    for v, tiles in sorted(patch.incidence().items()):
        if len(tiles) != d + 1:
            continue
        G = tuple(sorted(set(g for _, gens in tiles for g in gens)))
        if len(G) != d + 1:
            continue
        if _lower_tiles(v, G) == tiles:
            p = v
            ret.append(Flip(v, frozenset(tiles), _upper_tiles(p, G), G))
            continue
        p = tuple(x - (1 if g in G else 0) for g, x in enumerate(v))
        if _upper_tiles(p, G) == tiles:
            ret.append(Flip(v, frozenset(tiles), _lower_tiles(p, G), G))
    return ret


def apply_flip(patch, flip):
    """
    Performs a flip.

    :raise FlipError: when the flip's before-state is not the star of its vertex
    """
    if not isinstance(flip, Flip):
        raise TypeError('Feed me a Flip')
    star = patch.incidence().get(flip.vertex, set())
    if set(flip.before) != star:
        raise errors.FlipError('flip at %s does not apply' % (flip.vertex,))
    if set(flip.after) & patch.tiles:
        raise errors.FlipError('flip at %s overlaps the patch' % (flip.vertex,))
    tiles = (patch.tiles - flip.before) | flip.after
    return LiftedPatch(patch.n, patch.d, tiles)


def disjoint_flips(flips, lower_only=True):
    """A maximal set of pairwise tile-disjoint flips, chosen greedily by vertex."""
    used = set()
    # the vertex a flip creates must not be the vertex of another chosen flip
    created = set()
    chosen = set()
    ret = []
    for f in sorted(flips, key=lambda f: f.vertex):
        if lower_only and not f.is_lower:
            continue
        target = f.reversed().vertex
        if not used.isdisjoint(f.before) or f.vertex in created or target in chosen:
            continue
        used.update(f.before)
        created.add(target)
        chosen.add(f.vertex)
        ret.append(f)
    return ret


def apply_flips(patch, flips):
    for f in flips:
        patch = apply_flip(patch, f)
    return patch


def tube_decomposition(point, vectors, box):
    """
    Writes point as sum lambda_j vectors_j + h with h in the box, by exact LP.

    :param point: rational vector of R^n
    :param vectors: spanning vectors of the plane
    :param box: list of (lo, hi) pairs, one per coordinate
    :return: the coefficients lambda, or None when no decomposition exists
    """
    rows = []
    for i, (lo, hi) in enumerate(box):
        coords = [utils.to_fraction(v[i]) for v in vectors]
        rows.append([utils.to_fraction(point[i]) - utils.to_fraction(lo)] + [-c for c in coords])
        rows.append([utils.to_fraction(hi) - utils.to_fraction(point[i])] + coords)
    ret = polytope.feasible_point(rows)
    return None if ret is None else list(ret)


FILLS = ('#e8c170', '#7ea6c9', '#a7c47a', '#c98fb3', '#d9866b', '#8fc9c0', '#b8a88f', '#9b9bd1', '#d6d67a', '#c2c2c2')


def generator_vectors(n):
    """
    Planar images of e_1, ..., e_n. For n = 3 they point at 90, 210 and 330
    degrees, the projection along (1, 1, 1).
    """
    step = 2 * math.pi / n if n % 2 else math.pi / n
    angles = [math.pi / 2 + k * step for k in range(n)]
    return numpy.array([[math.cos(a), math.sin(a)] for a in angles])


def render_svg(patch, scale=20, stroke='#333333'):
    """
    Draws a 2-dimensional patch as SVG polygons, one fill per tile type.

    :rtype: str
    :raise PatchError: when the patch is empty
    """
    if not isinstance(patch, LiftedPatch):
        raise TypeError('Feed me a LiftedPatch')
    if patch.d != 2:
        raise errors.UnsupportedDimension('only 2-dimensional tilings are drawn')
    if not len(patch):
        raise errors.PatchError('empty patch, nothing to draw')
    vectors = generator_vectors(patch.n) * scale
    # svg y axis points down
    vectors[:, 1] *= -1
    types = list(itertools.combinations(range(patch.n), 2))
    shapes = []
    for base, (a, b) in patch.sorted_tiles():
        corners = numpy.array([base, _add(base, _unit(patch.n, a)),
                               _add(_add(base, _unit(patch.n, a)), _unit(patch.n, b)),
                               _add(base, _unit(patch.n, b))])
        shapes.append((corners.dot(vectors), FILLS[types.index((a, b)) % len(FILLS)]))
    points = numpy.vstack([p for p, _ in shapes])
    lo, hi = points.min(axis=0) - scale / 2, points.max(axis=0) + scale / 2
    lines = ['<svg xmlns="http://www.w3.org/2000/svg" viewBox="%.3f %.3f %.3f %.3f" width="%d" height="%d">' %
             (lo[0], lo[1], hi[0] - lo[0], hi[1] - lo[1], math.ceil(hi[0] - lo[0]), math.ceil(hi[1] - lo[1]))]
    for corners, fill in shapes:
        coords = ' '.join('%.3f,%.3f' % (x + 0.0, y + 0.0) for x, y in numpy.round(corners, 3))
        lines.append('<polygon points="%s" fill="%s" stroke="%s" stroke-width="%.2f"/>' %
                     (coords, fill, stroke, scale / 20.0))
    lines.append('</svg>')
    log.debug('rendered %d tiles', len(shapes))
    return '\n'.join(lines) + '\n'
