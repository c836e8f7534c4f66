#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Colors of a 3->2 tiling written as flips.

The tiles are grouped into square cells of side k by the first two
coordinates of their base, from a given phase. A cell whose tiles have all
their edges shared with other tiles of the patch is a meta-tile. Its boundary
colors become a number, whose binary digits tell which of its lower flips are
performed. Two more flips, a fixed vector x apart, mark the cell.

The flips of a thickness-1 patch of positive normal nu and offset c are
pairwise disjoint: a lower flip sits on a vertex of value nu.v = c, and the
vertex it creates is the only one of value c + |nu|_1. So the encoded patch
has thickness at most one more than the base. A normal with a negative entry is
refused: reflect those axes of the patch first.
"""

import collections
import logging
import math

from planartiles import errors
from planartiles import tilings
from planartiles import utils
from planartiles.geometry import Slope

log = logging.getLogger('flipcode')

# colors and edge directions share the digits
DIRECTIONS = 3


class MetaTile(collections.namedtuple('MetaTile', ['cell', 'marker', 'positions', 'boundary'])):
    """
    cell: the (a, b) grid index
    marker: the two pivots, x apart, flipped in every encoding
    positions: the pivots carrying one bit each, in reading order
    boundary: the edges shared with another cell, in reading order
    """

    __slots__ = ()

    @property
    def capacity(self):
        return len(self.positions)

    @property
    def size(self):
        return len(self.boundary)

    def fits(self, palette):
        """2^f > (c + n)^p: every boundary word has a flip word."""
        return 2 ** self.capacity > (palette + DIRECTIONS) ** self.size


def _check_slope(slope):
    if not isinstance(slope, Slope):
        raise TypeError('Feed me a Slope')
    if slope.n != 3 or not slope.is_hyperplane:
        raise errors.UnsupportedDimension('colors are encoded in 3->2 tilings')
    if slope.is_degenerate():
        raise errors.DegenerateSlope('%r has a zero Grassmann coordinate' % slope)
    if any(x < 0 for x in slope.normal):
        raise ValueError('flip coding needs a positive normal, got %r' % slope)


def _check_grid(k, phase):
    if not isinstance(k, int) or k < 3:
        raise ValueError('grid spacing must be an int >= 3, got %r' % (k,))
    if len(phase) != 2:
        raise ValueError('phase is a pair of ints')


def marker_vector(slope, k):
    """
    The integer vector of the plane between the two marker flips.

    It is the longest multiple of (nu_2, -nu_1, 0) that fits in a cell.
    """
    _check_slope(slope)
    nu = slope.normal
    g = math.gcd(nu[0], nu[1])
    step = (nu[1] // g, -nu[0] // g)
    scale = (k - 2) // max(abs(step[0]), abs(step[1]))
    if scale < 1:
        raise errors.CapacityError('grid spacing %d is too small for a marker of %r' % (k, slope))
    return (scale * step[0], scale * step[1], 0)


def cell_of(point, k, phase=(0, 0)):
    return ((point[0] - phase[0]) // k, (point[1] - phase[1]) // k)


def _add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def _sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def meta_tiles(base, slope, k, phase=(0, 0)):
    """
    The meta-tiles of a patch, by cell.

    :param base: thickness-1 LiftedPatch of the slope
    :rtype: collections.OrderedDict cell -> MetaTile
    :raise MarkerError: when a complete cell has no pivot pair x apart
    """
    _check_slope(slope)
    _check_grid(k, phase)
    cells = collections.defaultdict(list)
    for tile in base.sorted_tiles():
        cells[cell_of(tile[0], k, phase)].append(tile)
    owners = collections.defaultdict(list)
    for tile in base.tiles:
        for edge in tilings.tile_faces(tile):
            owners[edge].append(cell_of(tile[0], k, phase))
    pivots = collections.defaultdict(list)
    for flip in tilings.find_flips(base):
        if flip.is_lower:
            pivots[cell_of(flip.vertex, k, phase)].append(flip.vertex)
    x = marker_vector(slope, k)
    ret = collections.OrderedDict()
    for cell in sorted(cells):
        tiles = cells[cell]
        edges = set(e for t in tiles for e in tilings.tile_faces(t))
        if any(len(owners[e]) != 2 for e in edges):
            continue
        found = sorted(pivots[cell])
        known = set(found)
        marker = next(((y, _add(y, x)) for y in found if _add(y, x) in known), None)
        if marker is None:
            raise errors.MarkerError('cell %s has no two pivots %s apart' % (cell, x))
        positions = tuple(z for z in found if _add(z, x) not in known and _sub(z, x) not in known)
        boundary = tuple(sorted(e for e in edges if len(set(owners[e])) > 1))
        ret[cell] = MetaTile(cell, marker, positions, boundary)
    log.debug('%d complete cells of side %d', len(ret), k)
    return ret


def _values(patch, slope):
    nu = slope.normal
    return dict((v, utils.dot(nu, v)) for v in patch.vertices)


def _flip_all(patch, flips):
    """Performs pairwise disjoint flips in one pass."""
    removed, added = set(), set()
    for f in flips:
        if not f.before <= patch.tiles:
            raise errors.FlipError('flip at %s does not apply' % (f.vertex,))
        if removed & f.before or added & f.after:
            raise errors.FlipError('flip at %s meets another flip' % (f.vertex,))
        removed.update(f.before)
        added.update(f.after)
    return tilings.LiftedPatch(patch.n, patch.d, (patch.tiles - removed) | added)


def _check_base(base, slope, offset):
    total = sum(slope.normal)
    values = _values(base, slope)
    if not values:
        raise errors.PatchError('empty patch')
    if min(values.values()) < offset or max(values.values()) >= offset + total:
        raise errors.PatchError('the patch is not the thickness-1 patch of %r at offset %s' % (slope, offset))


def _bits(symbols, palette):
    value = 0
    for symbol in reversed(symbols):
        value = value * (palette + DIRECTIONS) + symbol
    return value


def encode(base, slope, colors, k, palette=2, phase=(0, 0), offset=0):
    """
    Writes the boundary colors of every meta-tile as flips.

    The symbols s_0, ..., s_{p-1} of a cell, one per boundary edge in reading
    order, give V = sum s_i (c + 3)^i. Bit i of V flips position i, and both
    marker pivots are always flipped.

    :param base: thickness-1 LiftedPatch of the slope at the given offset
    :param colors: dict cell -> sequence of p symbols in range(palette), one
                   entry per meta-tile
    :param k: grid spacing
    :param palette: number of colors c
    :rtype: LiftedPatch
    :raise CapacityError: when 2^f <= (c + 3)^p for some meta-tile
    :raise DegenerateSlope: when a Grassmann coordinate of the slope is zero
    """
    if not isinstance(base, tilings.LiftedPatch):
        raise TypeError('Feed me a LiftedPatch')
    if not isinstance(palette, int) or palette < 1:
        raise ValueError('palette size must be an int >= 1')
    _check_slope(slope)
    offset = utils.to_fraction(offset)
    _check_base(base, slope, offset)
    metas = meta_tiles(base, slope, k, phase)
    if set(colors) != set(metas):
        raise ValueError('colors are given for cells %s, the meta-tiles are %s' % (sorted(colors), list(metas)))
    lower = dict((f.vertex, f) for f in tilings.find_flips(base) if f.is_lower)
    chosen = []
    for cell, meta in metas.items():
        symbols = list(colors[cell])
        if len(symbols) != meta.size:
            raise ValueError('cell %s has %d boundary edges, got %d colors' % (cell, meta.size, len(symbols)))
        if any(not isinstance(s, int) or not 0 <= s < palette for s in symbols):
            raise ValueError('cell %s has colors outside range(%d)' % (cell, palette))
        if not meta.fits(palette):
            raise errors.CapacityError('cell %s holds %d flips for %d edges of %d colors' %
                                       (cell, meta.capacity, meta.size, palette))
        value = _bits(symbols, palette)
        chosen.extend(lower[y] for y in meta.marker)
        chosen.extend(lower[z] for i, z in enumerate(meta.positions) if (value >> i) & 1)
    log.debug('encoding %d meta-tiles with %d flips', len(metas), len(chosen))
    return _flip_all(base, chosen)


def decode(encoded, slope, k, palette=2, phase=(0, 0), offset=0):
    """
    Reads back the colors written by encode.

    The vertices of value c + |nu|_1 are the tops of the performed flips.
    Undoing them gives the base patch, hence its meta-tiles.

    :rtype: dict cell -> tuple of symbols
    :raise MarkerError: when a meta-tile has no marker, or a flip lies where
                        no bit is written
    :raise TileSetError: when the flips spell no boundary word
    """
    if not isinstance(encoded, tilings.LiftedPatch):
        raise TypeError('Feed me a LiftedPatch')
    _check_slope(slope)
    offset = utils.to_fraction(offset)
    top = offset + sum(slope.normal)
    values = _values(encoded, slope)
    performed = [f for f in tilings.find_flips(encoded) if not f.is_lower and values[f.vertex] >= top]
    base = _flip_all(encoded, [f.reversed() for f in performed])
    flipped = collections.defaultdict(set)
    for f in performed:
        pivot = f.reversed().vertex
        flipped[cell_of(pivot, k, phase)].add(pivot)
    metas = meta_tiles(base, slope, k, phase)
    stray = set(flipped) - set(metas)
    if stray:
        raise errors.MarkerError('flips in cells %s, which are no meta-tiles' % sorted(stray))
    x = marker_vector(slope, k)
    ret = {}
    for cell, meta in metas.items():
        found = flipped[cell]
        pairs = [(y, _add(y, x)) for y in sorted(found) if _add(y, x) in found]
        if pairs != [meta.marker]:
            raise errors.MarkerError('cell %s has %d marker pairs' % (cell, len(pairs)))
        foreign = found - set(meta.marker) - set(meta.positions)
        if foreign:
            raise errors.MarkerError('cell %s has %d flips outside its positions' % (cell, len(foreign)))
        value = sum(1 << i for i, z in enumerate(meta.positions) if z in found)
        symbols = []
        for _ in range(meta.size):
            value, digit = divmod(value, palette + DIRECTIONS)
            if digit >= palette:
                raise errors.TileSetError('cell %s spells the digit %d outside %d colors' % (cell, digit, palette))
            symbols.append(digit)
        if value:
            raise errors.TileSetError('cell %s spells a word longer than its boundary' % (cell,))
        ret[cell] = tuple(symbols)
    return ret
