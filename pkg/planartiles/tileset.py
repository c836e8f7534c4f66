#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Decorated tile sets and their local rules.

A Wang tile is a unit square with one color per edge, listed as
(west, east, south, north). A rhombus tile of a 3->2 tiling has a shape, the
sorted pair (a, b) of its generators, and its colors are listed as
(e_a edge at base, e_a edge at base + e_b, e_b edge at base, e_b edge at base + e_a).
Two tiles may be adjacent only if the edge they share has one color.

Forbidden patterns are lists of ((row, col), names) entries: a placement is
forbidden when every entry's cell holds one of the entry's names.

Rectangle tilings are tuples of rows of tile names, row 0 at the south.
"""

import collections
import logging

from planartiles import errors
from planartiles import tilings
from planartiles.subshift import Configuration

log = logging.getLogger('tileset')

SQUARE = 'square'
SIDES = ('west', 'east', 'south', 'north')
WEST, EAST, SOUTH, NORTH = range(4)


def _step(base, g):
    return tuple(x + 1 if i == g else x for i, x in enumerate(base))


class Prototile(collections.namedtuple('Prototile', ['name', 'shape', 'colors', 'letter'])):
    """
    A decorated prototile.

    shape is 'square' for Wang tiles, a sorted generator pair for rhombi.
    letter is 0, 1 or None.
    """

    __slots__ = ()

    @property
    def is_square(self):
        return self.shape == SQUARE

    @property
    def key(self):
        """What two tiles must share to be paired by a product."""
        if self.is_square:
            return (SQUARE, self.letter)
        return self.shape

    def edges(self, base):
        """The four (edge, color) pairs of this rhombus placed at base, an edge being (vertex, direction)."""
        a, b = self.shape
        base = tuple(base)
        return [((base, a), self.colors[0]),
                ((_step(base, b), a), self.colors[1]),
                ((base, b), self.colors[2]),
                ((_step(base, a), b), self.colors[3])]


def _prototile(obj):
    try:
        name = str(obj['name'])
        shape = obj.get('shape', SQUARE)
        if shape != SQUARE:
            shape = tuple(sorted(int(g) - 1 for g in shape))
        colors = tuple(int(c) for c in obj['colors'])
        letter = obj.get('letter')
        if letter is not None:
            letter = int(letter)
    except (KeyError, TypeError, ValueError) as e:
        raise errors.TileSetError('malformed tile: %s' % e)
    return Prototile(name, shape, colors, letter)


class TileSet(object):
    """
    An immutable list of prototiles plus forbidden patterns.

    All the prototiles are Wang squares, or all are rhombi.
    """

    def __init__(self, tiles, forbidden=(), name=None):
        self.tiles = tuple(tiles)
        self.name = name or 'tileset'
        if not self.tiles:
            raise errors.TileSetError('a tile set needs at least one tile')
        self.by_name = collections.OrderedDict()
        for t in self.tiles:
            if not isinstance(t, Prototile):
                raise TypeError('Feed me Prototile instances')
            if t.name in self.by_name:
                raise errors.TileSetError('tile name %s is used twice' % t.name)
            if len(t.colors) != 4:
                raise errors.TileSetError('tile %s needs four edge colors' % t.name)
            if t.letter not in (None, 0, 1):
                raise errors.TileSetError('tile %s has letter %r outside {0, 1}' % (t.name, t.letter))
            if not t.is_square and (len(t.shape) != 2 or t.shape[0] >= t.shape[1] or t.shape[0] < 0):
                raise errors.TileSetError('tile %s has shape %s' % (t.name, t.shape))
            self.by_name[t.name] = t
        if len(set(t.is_square for t in self.tiles)) != 1:
            raise errors.TileSetError('squares and rhombi do not mix')
        self.forbidden = []
        for pattern in forbidden:
            entries = []
            for offset, names in pattern:
                names = (names,) if isinstance(names, str) else tuple(names)
                unknown = [x for x in names if x not in self.by_name]
                if unknown:
                    raise errors.TileSetError('forbidden pattern uses unknown tiles %s' % ', '.join(unknown))
                entries.append(((int(offset[0]), int(offset[1])), frozenset(names)))
            if not entries:
                raise errors.TileSetError('empty forbidden pattern')
            row0 = min(r for (r, _), _ in entries)
            col0 = min(c for (_, c), _ in entries)
            self.forbidden.append(tuple(((r - row0, c - col0), names) for (r, c), names in entries))
        self.forbidden = tuple(self.forbidden)

    @classmethod
    def from_json(cls, obj):
        try:
            tiles = [_prototile(t) for t in obj['tiles']]
            forbidden = []
            for pattern in obj.get('forbidden', []):
                forbidden.append([(e['offset'], e['tiles'] if 'tiles' in e else e['tile']) for e in pattern])
        except (KeyError, TypeError) as e:
            raise errors.TileSetError('malformed tile set: %s' % e)
        return cls(tiles, forbidden, obj.get('name'))

    def to_json(self):
        tiles = []
        for t in self.tiles:
            shape = t.shape if t.is_square else [g + 1 for g in t.shape]
            tiles.append({'name': t.name, 'shape': shape, 'colors': list(t.colors), 'letter': t.letter})
        forbidden = [[{'offset': list(offset), 'tiles': sorted(names)} for offset, names in pattern]
                     for pattern in self.forbidden]
        return {'name': self.name, 'tiles': tiles, 'forbidden': forbidden}

    @property
    def is_wang(self):
        return self.tiles[0].is_square

    @property
    def palette(self):
        return tuple(sorted(set(c for t in self.tiles for c in t.colors)))

    def __getitem__(self, name):
        return self.by_name[name]

    def __len__(self):
        return len(self.tiles)

    def __iter__(self):
        return iter(self.tiles)

    def __repr__(self):
        kind = 'Wang' if self.is_wang else 'rhombus'
        return '<TileSet %s: %d %s tiles, %d colors>' % (self.name, len(self.tiles), kind, len(self.palette))


def _check_wang(ts):
    if not isinstance(ts, TileSet):
        raise TypeError('Feed me a TileSet')
    if not ts.is_wang:
        raise errors.TileSetError('%s is not a Wang tile set' % ts.name)


def _check_boundary(boundary):
    boundary = dict(boundary or {})
    unknown = set(boundary) - set(SIDES)
    if unknown:
        raise ValueError('boundary sides must be among %s' % ', '.join(SIDES))
    return boundary


def _forbidden_at(ts, grid, width, pos):
    """True when a forbidden pattern lies in the placed cells and uses cell pos."""
    r, c = divmod(pos, width)
    height = -(-len(grid) // width)
    for pattern in ts.forbidden:
        for (dr, dc), _ in pattern:
            row0, col0 = r - dr, c - dc
            hit = True
            for (er, ec), names in pattern:
                rr, cc = row0 + er, col0 + ec
                if not (0 <= rr < height and 0 <= cc < width):
                    hit = False
                    break
                index = rr * width + cc
                if index > pos or grid[index] is None or grid[index].name not in names:
                    hit = False
                    break
            if hit:
                return True
    return False


def tile_rectangle(ts, height, width, periodic=False, boundary=None, budget=None):
    """
    Enumerates the tilings of a height x width rectangle, by backtracking.

    Cells are filled row by row from the south west corner, tiles being tried
    in the order of the tile set, so the enumeration order is deterministic.

    :param ts: Wang TileSet
    :param periodic: when True, the east side must match the west side and the
                     north side the south side
    :param boundary: optional dict side -> color imposed on every edge of that side
    :param budget: maximal number of tile placements tried
    :return: a generator of tilings
    :raise BudgetExceeded: when more than budget placements are tried
    """
    _check_wang(ts)
    if not isinstance(height, int) or not isinstance(width, int) or height < 1 or width < 1:
        raise ValueError('rectangle sides must be positive ints')
    boundary = _check_boundary(boundary)
    cells = height * width
    grid = [None] * cells
    options = [None] * cells
    spent = 0

    def candidates(pos):
        r, c = divmod(pos, width)
        west = grid[pos - 1].colors[EAST] if c > 0 else boundary.get('west')
        south = grid[pos - width].colors[NORTH] if r > 0 else boundary.get('south')
        return iter([t for t in ts.tiles
                     if (west is None or t.colors[WEST] == west) and (south is None or t.colors[SOUTH] == south)])

    def fits(pos, tile):
        r, c = divmod(pos, width)
        if c == width - 1:
            if 'east' in boundary and tile.colors[EAST] != boundary['east']:
                return False
            if periodic and tile.colors[EAST] != grid[r * width].colors[WEST]:
                return False
        if r == height - 1:
            if 'north' in boundary and tile.colors[NORTH] != boundary['north']:
                return False
            if periodic and tile.colors[NORTH] != grid[c].colors[SOUTH]:
                return False
        return not ts.forbidden or not _forbidden_at(ts, grid, width, pos)

    pos = 0
    options[0] = candidates(0)
    while pos >= 0:
        placed = False
        for tile in options[pos]:
            spent += 1
            if budget is not None and spent > budget:
                log.warning('tiling search of %dx%d stopped after %d placements', height, width, budget)
                raise errors.BudgetExceeded('tiling search exceeded %d placements' % budget, spent)
            grid[pos] = tile
            if fits(pos, tile):
                placed = True
                break
        if not placed:
            grid[pos] = None
            pos -= 1
            continue
        if pos == cells - 1:
            yield tuple(tuple(t.name for t in grid[r * width:(r + 1) * width]) for r in range(height))
            continue
        pos += 1
        options[pos] = candidates(pos)
    log.debug('tiling search of %dx%d: %d placements', height, width, spent)


def count_tilings(ts, height, width, periodic=False, boundary=None, budget=None):
    return sum(1 for _ in tile_rectangle(ts, height, width, periodic, boundary, budget))


def is_valid_tiling(ts, grid, periodic=False, boundary=None):
    """
    Scans a rectangle tiling for color mismatches and forbidden patterns.

    :param grid: rows of tile names, row 0 at the south
    :rtype: bool
    """
    _check_wang(ts)
    boundary = _check_boundary(boundary)
    rows = [list(row) for row in grid]
    if not rows or not rows[0] or len(set(len(row) for row in rows)) != 1:
        return False
    if any(name not in ts.by_name for row in rows for name in row):
        return False
    tiles = [[ts[name] for name in row] for row in rows]
    height, width = len(tiles), len(tiles[0])
    for r in range(height):
        for c in range(width):
            t = tiles[r][c]
            if c + 1 < width and t.colors[EAST] != tiles[r][c + 1].colors[WEST]:
                return False
            if r + 1 < height and t.colors[NORTH] != tiles[r + 1][c].colors[SOUTH]:
                return False
    if periodic:
        if any(row[-1].colors[EAST] != row[0].colors[WEST] for row in tiles):
            return False
        if any(tiles[-1][c].colors[NORTH] != tiles[0][c].colors[SOUTH] for c in range(width)):
            return False
    sides = {'west': [row[0].colors[WEST] for row in tiles],
             'east': [row[-1].colors[EAST] for row in tiles],
             'south': [t.colors[SOUTH] for t in tiles[0]],
             'north': [t.colors[NORTH] for t in tiles[-1]]}
    for side, color in boundary.items():
        if any(x != color for x in sides[side]):
            return False
    for pattern in ts.forbidden:
        span_r = max(r for (r, _), _ in pattern)
        span_c = max(c for (_, c), _ in pattern)
        for row0 in range(height - span_r):
            for col0 in range(width - span_c):
                if all(rows[row0 + r][col0 + c] in names for (r, c), names in pattern):
                    return False
    return True


def letters_of(ts, grid, origin=(0, 0)):
    """
    The binary configuration carried by the letters of a rectangle tiling.

    :rtype: Configuration
    :raise TileSetError: when a tile has no letter
    """
    letters = []
    for row in grid:
        line = []
        for name in row:
            letter = ts[name].letter
            if letter is None:
                raise errors.TileSetError('tile %s carries no letter' % name)
            line.append(letter)
        letters.append(line)
    return Configuration(letters, origin)


def transfer_name(a, b):
    return 'transfer:%s:%s' % (a, b)


def shear_to_rhombi(wang, axis='12'):
    """
    Shears Wang tiles into rhombi of a 3->2 tiling.

    With (i, j, k) the axis triple, a tile of letter 1 becomes an {i, k} rhombus
    and a tile of letter 0 a {j, k} rhombus, in the way lift_configuration
    places them: west and east colors go on the e_k edges, south and north
    colors on the e_i (or e_j) edges. One {i, j} transfer tile is added per
    pair (a, b), a a south or north color of a letter 1 tile and b one of a
    letter 0 tile; it carries a on both e_i edges and b on both e_j edges. A
    side without colors uses a fresh neutral color.

    :param wang: Wang TileSet whose tiles all carry a letter
    :rtype: TileSet
    :raise TileSetError: on missing letters or forbidden patterns
    """
    _check_wang(wang)
    i, j, k = tilings.axis_of(axis)
    if wang.forbidden:
        raise errors.TileSetError('forbidden patterns do not survive the shear')
    missing = [t.name for t in wang.tiles if t.letter is None]
    if missing:
        raise errors.TileSetError('tiles %s carry no letter' % ', '.join(missing))
    tiles = []
    for t in wang.tiles:
        west, east, south, north = t.colors
        if t.letter == 1:
            edges = {i: (south, north), k: (west, east)}
        else:
            edges = {j: (south, north), k: (east, west)}
        a, b = sorted(edges)
        tiles.append(Prototile(t.name, (a, b), edges[a] + edges[b], t.letter))
    neutral = max(wang.palette) + 1
    first = sorted(set(c for t in wang.tiles if t.letter == 1 for c in t.colors[SOUTH:])) or [neutral]
    second = sorted(set(c for t in wang.tiles if t.letter == 0 for c in t.colors[SOUTH:])) or [neutral]
    a, b = sorted((i, j))
    for x in first:
        for y in second:
            edges = {i: (x, x), j: (y, y)}
            tiles.append(Prototile(transfer_name(x, y), (a, b), edges[a] + edges[b], None))
    log.debug('sheared %s along axis %s: %d tiles', wang.name, axis, len(tiles))
    return TileSet(tiles, name='%s-sheared' % wang.name)


def check_decoration(ts, patch, assignment):
    """
    True when every tile of the patch has a prototile of its own shape and any
    edge shared by two tiles carries one color.

    :param assignment: dict tile -> prototile name
    """
    colors = {}
    for tile in patch.tiles:
        name = assignment.get(tile)
        if name not in ts.by_name:
            return False
        proto = ts[name]
        if proto.shape != tile[1]:
            return False
        for edge, color in proto.edges(tile[0]):
            if colors.setdefault(edge, color) != color:
                return False
    return True


def decorate_lift(sheared, wang, grid, axis='12', origin=(0, 0)):
    """
    Decorates the canonical lift of a Wang tiling with a sheared tile set.

    Rhombi take the prototile of their Wang cell. Transfer tiles get their
    colors from the ribbons crossing them; a ribbon reaching no rhombus of the
    patch gets the first transfer color.

    :param sheared: the result of shear_to_rhombi(wang, axis)
    :param grid: rows of Wang tile names
    :return: (LiftedPatch, dict tile -> prototile name)
    :raise TileSetError: when two tiles disagree on an edge, which happens when
                         vertical colors do not follow the ribbons
    """
    i, j, k = tilings.axis_of(axis)
    config = letters_of(wang, grid, origin)
    patch = tilings.lift_configuration(config, axis)
    assignment = {}
    colors = {}
    diamonds = []
    for tile in patch.sorted_tiles():
        cell, _ = tilings.cell_of(tile, i, j, k)
        if cell is None:
            diamonds.append(tile)
            continue
        name = grid[cell[0] - origin[0]][cell[1] - origin[1]]
        assignment[tile] = name
        for edge, color in sheared[name].edges(tile[0]):
            if colors.setdefault(edge, color) != color:
                raise errors.TileSetError('edge %s carries colors %s and %s' % (edge, colors[edge], color))
    transfers = dict(((t.colors[0], t.colors[2]) if t.shape[0] == i else (t.colors[2], t.colors[0]), t.name)
                     for t in sheared.tiles if t.letter is None)
    first = sorted(set(x for x, _ in transfers))
    second = sorted(set(y for _, y in transfers))

    def ribbon_edges(tile, g):
        base, gens = tile
        h = [x for x in gens if x != g][0]
        return [(base, g), (_step(base, h), g)]

    known = {}
    todo = list(diamonds)
    while todo:
        progress = False
        pending = []
        for tile in todo:
            for g in (i, j):
                if (tile, g) in known:
                    continue
                found = set(colors[e] for e in ribbon_edges(tile, g) if e in colors)
                if len(found) > 1:
                    raise errors.TileSetError('transfer tile at %s meets colors %s' % (tile[0], sorted(found)))
                if found:
                    color = found.pop()
                    known[(tile, g)] = color
                    for e in ribbon_edges(tile, g):
                        colors[e] = color
                    progress = True
            if (tile, i) not in known or (tile, j) not in known:
                pending.append(tile)
        todo = pending
        if not progress and todo:
            # ribbons that never reach a rhombus of the patch
            tile = todo[0]
            for g, default in ((i, first[0]), (j, second[0])):
                if (tile, g) not in known:
                    for e in ribbon_edges(tile, g):
                        colors[e] = default
    for tile in diamonds:
        pair = (known[(tile, i)], known[(tile, j)])
        if pair not in transfers:
            raise errors.TileSetError('no transfer tile carries colors %s' % (pair,))
        assignment[tile] = transfers[pair]
    if not check_decoration(sheared, patch, assignment):
        raise errors.TileSetError('decorated lift has mismatching edges')
    return patch, assignment


def product(ts1, ts2):
    """
    The cartesian product of two tile sets.

    One tile per pair of tiles with the same key (shape and letter for Wang
    tiles, shape for rhombi). Color pairs are renumbered one-to-one in sorted
    order. A forbidden pattern of either factor forbids every product pattern
    projecting on it.

    :rtype: TileSet
    :raise TileSetError: when no pair of tiles shares a key
    """
    if not isinstance(ts1, TileSet) or not isinstance(ts2, TileSet):
        raise TypeError('Feed me two TileSet')
    if ts1.is_wang != ts2.is_wang:
        raise errors.TileSetError('cannot pair squares with rhombi')
    pairs = [(t1, t2) for t1 in ts1.tiles for t2 in ts2.tiles if t1.key == t2.key]
    if not pairs:
        raise errors.TileSetError('%s and %s share no tile shape' % (ts1.name, ts2.name))
    codes = sorted(set((a, b) for t1, t2 in pairs for a, b in zip(t1.colors, t2.colors)))
    codes = dict((pair, index) for index, pair in enumerate(codes))
    tiles = []
    first, second = collections.defaultdict(list), collections.defaultdict(list)
    for t1, t2 in pairs:
        name = '%s*%s' % (t1.name, t2.name)
        colors = tuple(codes[(a, b)] for a, b in zip(t1.colors, t2.colors))
        tiles.append(Prototile(name, t1.shape, colors, t1.letter))
        first[t1.name].append(name)
        second[t2.name].append(name)
    forbidden = []
    for ts, names in ((ts1, first), (ts2, second)):
        for pattern in ts.forbidden:
            entries = [(offset, [x for n in sorted(allowed) for x in names[n]]) for offset, allowed in pattern]
            if all(allowed for _, allowed in entries):
                forbidden.append(entries)
    log.debug('product of %s and %s: %d tiles', ts1.name, ts2.name, len(tiles))
    return TileSet(tiles, forbidden, name='%s*%s' % (ts1.name, ts2.name))


def split_tiling(grid):
    """The two factor tilings of a tiling by a product tile set."""
    first = tuple(tuple(name.split('*', 1)[0] for name in row) for row in grid)
    second = tuple(tuple(name.split('*', 1)[1] for name in row) for row in grid)
    return first, second
