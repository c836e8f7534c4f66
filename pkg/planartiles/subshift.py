#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Finite windows of two dimensional configurations.

A Configuration is an h x w array of small non negative integers placed at an
origin (row, col) of Z^2. Rows are read as words: on a binary configuration,
row m is the BinaryWord whose first letter sits at index col.

Three families of binary configurations are tested on windows, A being a list
of closed rational intervals of slopes:

 - 'sturmian': every row is the same Sturmian word s_{alpha, rho}, alpha in A
 - 'quasisturmian': every row is at balance distance at most one of the same
   s_{alpha, rho}, alpha in A
 - 'rowwise': every row is a Sturmian factor of the same slope alpha in A,
   intercepts being free row by row

A window is accepted when it is the window of some configuration of the family.
These are consistency tests on finite windows, in the way forbidden patterns
are checked: they never assert that a window extends to the whole plane.
"""

import collections
import fractions
import itertools
import logging
import math

import numpy

from planartiles import errors
from planartiles import utils
from planartiles import words
from planartiles.words import BinaryWord
from planartiles.words import SturmianParams

log = logging.getLogger('subshift')

Fraction = fractions.Fraction

SYMBOLS = '0123456789abcdefghijklmnopqrstuvwxyz'

STURMIAN = 'sturmian'
QUASISTURMIAN = 'quasisturmian'
ROWWISE = 'rowwise'
VARIANTS = (STURMIAN, QUASISTURMIAN, ROWWISE)


class Configuration(object):
    """A rectangular window of a configuration of Z^2."""

    def __init__(self, grid, origin=(0, 0), alphabet=None):
        array = numpy.array(grid, dtype=numpy.int64)
        if array.ndim != 2 or 0 in array.shape:
            raise errors.PatchError('a configuration is a non empty rectangle')
        values = set(int(x) for x in numpy.unique(array))
        if alphabet is None:
            alphabet = (0, 1) if values <= set((0, 1)) else tuple(sorted(values))
        alphabet = tuple(alphabet)
        if not values <= set(alphabet):
            raise errors.PatchError('symbols %s are outside the alphabet %s' % (sorted(values - set(alphabet)), alphabet))
        if any(not 0 <= a < len(SYMBOLS) for a in alphabet):
            raise ValueError('symbols must be in [0, %d)' % len(SYMBOLS))
        self.array = array
        self.origin = (int(origin[0]), int(origin[1]))
        self.alphabet = alphabet

    @classmethod
    def from_text(cls, text, origin=(0, 0), alphabet=None):
        lines = [line.strip() for line in text.splitlines() if line.strip()]
        if not lines:
            raise errors.PatchError('empty configuration')
        try:
            grid = [[SYMBOLS.index(ch) for ch in line] for line in lines]
        except ValueError:
            raise errors.PatchError('unknown symbol in configuration')
        if len(set(len(row) for row in grid)) != 1:
            raise errors.PatchError('configuration rows have different lengths')
        return cls(grid, origin, alphabet)

    def to_text(self):
        return '\n'.join(''.join(SYMBOLS[x] for x in row) for row in self.array.tolist())

    @property
    def shape(self):
        return self.array.shape

    @property
    def is_binary(self):
        return set(self.alphabet) <= set((0, 1))

    def rows(self):
        """The rows as BinaryWord windows, top to bottom."""
        if not self.is_binary:
            raise errors.WordError('rows of a non binary configuration are not words')
        col = self.origin[1]
        return [BinaryWord(row, col) for row in self.array.tolist()]

    def window(self, row, col, height, width):
        """Sub-window, given in absolute coordinates."""
        r, c = row - self.origin[0], col - self.origin[1]
        if r < 0 or c < 0 or r + height > self.shape[0] or c + width > self.shape[1]:
            raise errors.PatchError('window (%d, %d, %d, %d) is out of the configuration' % (row, col, height, width))
        return Configuration(self.array[r:r + height, c:c + width], (row, col), self.alphabet)

    def __eq__(self, other):
        if not isinstance(other, Configuration):
            return NotImplemented
        return (self.origin == other.origin and self.shape == other.shape and
                bool(numpy.array_equal(self.array, other.array)))

    def __ne__(self, other):
        ret = self.__eq__(other)
        if ret is NotImplemented:
            return ret
        return not ret

    def __hash__(self):
        return hash((self.origin, self.array.tobytes()))

    def __repr__(self):
        return '<Configuration %dx%d at %s>' % (self.shape[0], self.shape[1], self.origin)


def _patterns(config, n):
    """Maps each n x n pattern (a bytes key) to its sorted list of (row, col) offsets."""
    h, w = config.shape
    if not isinstance(n, int) or n < 1:
        raise ValueError('pattern size must be a positive int')
    if n > min(h, w):
        raise ValueError('%dx%d patterns do not fit in a %dx%d configuration' % (n, n, h, w))
    view = numpy.lib.stride_tricks.sliding_window_view(config.array, (n, n))
    ret = collections.defaultdict(list)
    for r in range(view.shape[0]):
        for c in range(view.shape[1]):
            ret[view[r, c].tobytes()].append((r, c))
    return ret


DisjointPatterns = collections.namedtuple('DisjointPatterns', ['count', 'positions', 'lower_bound'])
DisjointPatterns.__doc__ = """
Pairwise distinct n x n patterns found at pairwise disjoint positions. count is a
certified lower bound of the maximum, positions are the (row, col) offsets used.
"""


def _disjoint(p, q, n):
    return abs(p[0] - q[0]) >= n or abs(p[1] - q[1]) >= n


def _greedy(candidates, key_of, n, start=()):
    chosen = list(start)
    seen = set(key_of[p] for p in chosen)
    for pos in candidates:
        key = key_of[pos]
        if key in seen:
            continue
        if all(_disjoint(pos, q, n) for q in chosen):
            chosen.append(pos)
            seen.add(key)
    return chosen


def _band_candidates(h, w, n, phase, transpose=False):
    # windows whose top rows are phase + k n, scanned band by band, left to right
    if transpose:
        return [(r, c) for c in range(phase, w - n + 1, n) for r in range(h - n + 1)]
    return [(r, c) for r in range(phase, h - n + 1, n) for c in range(w - n + 1)]


def disjoint_patterns(config, n, hints=()):
    """
    Greedy selection of distinct n x n patterns at pairwise disjoint positions.

    Several scans are tried (row bands of every phase, column bands of every
    phase, rarest patterns first), and the best is kept. The given hint
    positions are taken first when they are disjoint and pairwise distinct.

    :param config: Configuration
    :param n: pattern size
    :param hints: (row, col) offsets to try first
    :rtype: DisjointPatterns
    """
    by_key = _patterns(config, n)
    key_of = dict((pos, key) for key, positions in by_key.items() for pos in positions)
    h, w = config.shape
    start = _greedy([tuple(p) for p in hints if tuple(p) in key_of], key_of, n)
    scans = []
    for phase in range(n):
        scans.append(_band_candidates(h, w, n, phase))
        scans.append(_band_candidates(h, w, n, phase, transpose=True))
    rare = sorted(by_key.items(), key=lambda item: (len(item[1]), item[1][0]))
    scans.append([pos for _, positions in rare for pos in positions])
    best = start
    for candidates in scans:
        chosen = _greedy(candidates, key_of, n, start)
        if len(chosen) > len(best):
            best = chosen
    return DisjointPatterns(len(best), sorted(best), True)


def count_patterns(config, n, disjoint=False, hints=()):
    """
    Counts the distinct n x n patterns of a configuration.

    With disjoint, counts pairwise distinct patterns at pairwise disjoint
    positions instead. That count comes from a greedy selection and is a lower
    bound of the true maximum.

    :rtype: int
    :raise ValueError: when n exceeds the configuration size
    """
    if disjoint:
        return disjoint_patterns(config, n, hints).count
    return len(_patterns(config, n))


MembershipWitness = collections.namedtuple('MembershipWitness', ['variant', 'interval', 'alpha', 'rho'])
MembershipWitness.__doc__ = """
Why a window was accepted. interval is the closed interval of A that was used,
alpha a slope in it, rho an intercept for the 'sturmian' and 'quasisturmian'
variants (None for 'rowwise').
"""


def _intervals(A):
    ret = []
    for a, b in A:
        a, b = utils.to_fraction(a), utils.to_fraction(b)
        if not 0 <= a <= b <= 1:
            raise ValueError('[%s, %s] is not an interval of [0, 1]' % (a, b))
        ret.append((a, b))
    if not ret:
        raise ValueError('empty slope set')
    return ret


def _slope_in(interval, a, b):
    """A slope of the open interval lying in [a, b], or None."""
    if interval.is_empty:
        return None
    lo, hi = max(interval.lo, a), min(interval.hi, b)
    if lo > hi:
        return None
    if interval.lo < lo < interval.hi:
        return lo
    if lo < hi:
        return (lo + hi) / 2
    return None


def _constant_slope(rows, a, b):
    """Slope 0 (all ones) or 1 (all zeros) when every row allows it and [a, b] holds it."""
    if a == 0 and all(all(x == 1 for x in row) for row in rows):
        return Fraction(0)
    if b == 1 and all(all(x == 0 for x in row) for row in rows):
        return Fraction(1)
    return None


def _common_interval(rows):
    lo, hi = Fraction(0), Fraction(1)
    for row in rows:
        interval = words.slope_interval(row)
        if interval.is_empty:
            return words.EMPTY_INTERVAL
        lo, hi = max(lo, interval.lo), min(hi, interval.hi)
    return words.OpenInterval(lo, hi)


def _rowwise(rows, A):
    common = _common_interval(rows)
    for a, b in A:
        alpha = _slope_in(common, a, b)
        if alpha is None:
            alpha = _constant_slope(rows, a, b)
        if alpha is not None:
            return MembershipWitness(ROWWISE, (a, b), alpha, None)
    return None


def _intercept_for(row, alpha):
    """An intercept rho with row a window of s_{alpha, rho}, or None."""
    for rho in _intercept_candidates(alpha, row.origin, row.end - 1):
        if words.sturmian(SturmianParams(alpha, rho), row.origin, row.end - 1) == row:
            return rho
    return None


def _sturmian(rows, A):
    first = rows[0]
    if any(row.letters != first.letters for row in rows[1:]):
        return None
    found = _rowwise([first], A)
    if found is None:
        return None
    rho = _intercept_for(first, found.alpha)
    if rho is None:
        return None
    return MembershipWitness(STURMIAN, found.interval, found.alpha, rho)


def _farey(order, a, b):
    ret = set([a, b])
    for q in range(1, order + 1):
        for p in range(int(math.floor(a * q)), int(math.ceil(b * q)) + 1):
            x = Fraction(p, q)
            if a <= x <= b:
                ret.add(x)
    return sorted(ret)


def _with_midpoints(points):
    ret = list(points)
    ret.extend((x + y) / 2 for x, y in zip(points, points[1:]))
    return sorted(set(ret))


def _intercept_candidates(alpha, start, stop):
    # letters only change when rho crosses some (-k alpha) mod 1 or (1 - alpha - k alpha) mod 1
    marks = set([Fraction(0)])
    for k in range(start, stop + 2):
        marks.add((-k * alpha) % 1)
        marks.add((1 - alpha - k * alpha) % 1)
    marks = sorted(marks)
    return _with_midpoints(marks + [Fraction(1)])[:-1]


def _quasisturmian(rows, A, budget=None):
    start, stop = rows[0].origin, rows[0].end - 1
    width = len(rows[0])
    spent = 0
    for a, b in A:
        for alpha in _with_midpoints(_farey(width + 1, a, b)):
            for rho in _intercept_candidates(alpha, start, stop):
                spent += 1
                if budget is not None and spent > budget:
                    raise errors.BudgetExceeded('quasisturmian search exceeded %d candidates' % budget, spent)
                s = words.sturmian(SturmianParams(alpha, rho), start, stop)
                if all(words.balance_distance(row, s) <= 1 for row in rows):
                    return MembershipWitness(QUASISTURMIAN, (a, b), alpha, rho)
    return None


def window_membership(config, A, variant=ROWWISE, budget=None):
    """
    Tests whether a binary window is a window of some configuration of a family.

    :param config: binary Configuration
    :param A: list of closed rational intervals (a, b) of [0, 1]
    :param variant: 'sturmian', 'quasisturmian' or 'rowwise'
    :param budget: maximal number of (alpha, rho) candidates for 'quasisturmian'
    :return: a MembershipWitness, or None when the window is rejected
    """
    if not isinstance(config, Configuration):
        raise TypeError('Feed me a Configuration')
    if variant not in VARIANTS:
        raise ValueError('variant must be one of %s' % ', '.join(VARIANTS))
    A = _intervals(A)
    rows = config.rows()
    if variant == STURMIAN:
        ret = _sturmian(rows, A)
    elif variant == QUASISTURMIAN:
        ret = _quasisturmian(rows, A, budget)
    else:
        ret = _rowwise(rows, A)
    log.debug('%s window %r: %s', variant, config, ret)
    return ret


def membership_predicate(A, variant=ROWWISE):
    def predicate(config):
        return window_membership(config, A, variant) is not None
    return predicate


StripeWitness = collections.namedtuple('StripeWitness', ['n', 'alpha', 'b', 'positions', 'c', 'dd', 'rows',
                                                         'windows'])
StripeWitness.__doc__ = """
The stacked stripes of shifted Sturmian words that carry n^n distinct disjoint
n x n patterns in every dd x dd window.

 - positions: first occurrences i_0 < ... < i_n of n+1 distinct factors of length n
 - b: max(positions) + n, the prefix length that holds them
 - c: width of a window that holds every anchor pattern in its stripe
 - dd: max(c, n^(n+1) + n)
 - rows: the shifts of the n^(n+1) rows of the large stripe
 - windows: number of dd x dd window positions checked
"""


def _digits(p, n, count):
    if n == 1:
        return [0] * count
    ret = []
    for _ in range(count):
        ret.append(p % n)
        p //= n
    return ret


def _cyclic_gap(starts, period):
    starts = sorted(starts)
    gaps = [b - a for a, b in zip(starts, starts[1:])]
    gaps.append(starts[0] + period - starts[-1])
    return max(gaps)


def _anchor_positions(array, n, stripes, row0, col0, dd):
    """One occurrence of every anchor pattern inside the window, in its own stripe."""
    found = {}
    first = -(-row0 // n)
    for m in range(first, (row0 + dd) // n):
        top = m * n
        if top + n > row0 + dd:
            break
        p = m % stripes
        if p in found:
            continue
        anchor = array[p * n:p * n + n, 0:n]
        for col in range(col0, col0 + dd - n + 1):
            if numpy.array_equal(array[top:top + n, col:col + n], anchor):
                found[p] = (top - row0, col - col0)
                break
    return found


def appendix_witness(n, alpha):
    """
    Builds a binary configuration whose rows are Sturmian words of slope alpha and
    whose dd x dd windows all hold n^n distinct n x n patterns at disjoint places.

    Row k of stripe p (0 <= p < n^n) is w shifted left by i_{digit_k(p)}, w the
    Sturmian word of slope alpha and intercept 0 and digit_k(p) the k-th base n
    digit of p. The n^(n+1) rows of the stripes are stacked periodically.

    :param n: pattern size, n >= 1
    :param alpha: rational slope whose denominator exceeds n
    :return: (StripeWitness, Configuration)
    :raise WordError: when alpha does not have n+1 distinct factors of length n
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError('n must be a positive int')
    alpha = utils.to_fraction(alpha)
    if not 0 < alpha < 1:
        raise errors.WordError('slope %s must lie in (0, 1)' % alpha)
    q = alpha.denominator
    if q <= n:
        raise errors.WordError('slope %s is too shallow for n=%d' % (alpha, n))
    w = words.sturmian(SturmianParams(alpha, 0), 0, 2 * q + n)
    positions = []
    seen = set()
    for i in range(q):
        factor = w.letters[i:i + n]
        if factor not in seen:
            seen.add(factor)
            positions.append(i)
    if len(positions) < n + 1:
        raise errors.WordError('slope %s has only %d factors of length %d' % (alpha, len(positions), n))
    positions = positions[:n + 1]
    b = max(positions) + n
    stripes = n ** n
    height = n ** (n + 1)
    shifts = []
    for p in range(stripes):
        shifts.extend(positions[digit] for digit in _digits(p, n, n))
    # horizontal recurrence of the anchor pattern of each stripe
    period_rows = numpy.array([[w.letters[(j + s) % q] for j in range(q + n)] for s in shifts], dtype=numpy.int64)
    c = 0
    for p in range(stripes):
        block = period_rows[p * n:p * n + n]
        anchor = block[:, 0:n]
        starts = [j for j in range(q) if numpy.array_equal(block[:, j:j + n], anchor)]
        c = max(c, _cyclic_gap(starts, q) + n - 1)
    dd = max(c, height + n)
    reps = -(-dd // height) + 1
    total_rows = reps * height + n
    width = dd + q
    grid = [[w.letters[(j + shifts[r % height]) % q] for j in range(width)] for r in range(total_rows)]
    config = Configuration(grid)
    checked = 0
    for row0 in range(height):
        for col0 in range(q):
            found = _anchor_positions(config.array, n, stripes, row0, col0, dd)
            if len(found) < stripes:
                raise errors.PlanarTilesError('window at (%d, %d) misses %d anchors' % (row0, col0, stripes - len(found)))
            checked += 1
    log.debug('witness n=%d alpha=%s: b=%d c=%d dd=%d, %d windows', n, alpha, b, c, dd, checked)
    witness = StripeWitness(n, alpha, b, tuple(positions), c, dd, tuple(shifts), checked)
    return witness, config


def witness_anchors(witness, config, row0, col0):
    """Offsets of the anchor patterns inside the dd x dd window at (row0, col0)."""
    found = _anchor_positions(config.array, witness.n, witness.n ** witness.n, row0, col0, witness.dd)
    return [found[p] for p in sorted(found)]


EntropyEstimate = collections.namedtuple('EntropyEstimate', ['counts', 'estimates'])
EntropyEstimate.__doc__ = """
counts maps n to the number of admissible n x n windows, estimates maps n to
log(counts[n]) / n^2.
"""


def count_windows(predicate, n, budget=None, alphabet=(0, 1)):
    """
    Counts the n x n windows accepted by a predicate, row by row.

    The predicate is called on partial windows (the first k rows) and must
    reject a partial window whenever it rejects all of its completions, which
    holds for the three window families.

    :raise BudgetExceeded: when more than budget predicate calls are needed
    """
    candidates = [list(row) for row in itertools.product(alphabet, repeat=n)]
    calls = [0]

    def explore(rows):
        if len(rows) == n:
            return 1
        total = 0
        for row in candidates:
            calls[0] += 1
            if budget is not None and calls[0] > budget:
                raise errors.BudgetExceeded('window count for n=%d exceeded %d calls' % (n, budget), calls[0])
            grown = rows + [row]
            if predicate(Configuration(grown, alphabet=alphabet)):
                total += explore(grown)
        return total

    return explore([])


def entropy_estimate(predicate, n_max, budget=None):
    """
    Counts admissible n x n windows for n = 1..n_max.

    :param predicate: Configuration -> bool, see count_windows
    :rtype: EntropyEstimate
    """
    if not isinstance(n_max, int) or n_max < 1:
        raise ValueError('n_max must be a positive int')
    counts = collections.OrderedDict()
    estimates = collections.OrderedDict()
    for n in range(1, n_max + 1):
        counts[n] = count_windows(predicate, n, budget)
        estimates[n] = math.log(counts[n]) / (n * n) if counts[n] else float('-inf')
        log.debug('n=%d: %d windows', n, counts[n])
    return EntropyEstimate(counts, estimates)
