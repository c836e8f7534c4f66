# -*- coding: utf-8 -*-

"""
Named rule systems.

The built-in toys below enforce known rational slopes. Other packages add
theirs through the "planartiles.rulesets" entry point group; an entry point
resolves to a callable returning an IRuleSystem.
"""

import collections
import logging

import pkg_resources

from planartiles import errors
from planartiles import recognition
from planartiles.abc import interfaces
from planartiles.tileset import Prototile
from planartiles.tileset import TileSet

log = logging.getLogger('rulesets')


def _wang(name, letter, west, east, south=0, north=0):
    return Prototile(name, 'square', (west, east, south, north), letter)


def alternating():
    """Rows 1010...: the line of normal (1, 1)."""
    ts = TileSet([_wang('A', 1, 0, 1), _wang('B', 0, 1, 0)], name='alternating')
    return recognition.WordRules(ts, description='2->1 rows alternating 1 and 0, normal (1, 1)')


def sturmian_third():
    """Rows 110110...: the line of normal (1, 2), that is alpha = 1/3."""
    ts = TileSet([_wang('A', 1, 0, 1), _wang('B', 1, 1, 2), _wang('C', 0, 2, 0)], name='sturmian-third')
    return recognition.WordRules(ts, description='2->1 rows of period 110, normal (1, 2)')


def checkerboard():
    """Checkerboard letters; lifted along e1 + e2 they give the plane of normal (1, 1, 1)."""
    ts = TileSet([_wang('A', 1, 0, 1, 0, 1), _wang('B', 0, 1, 0, 1, 0)], name='checkerboard')
    return recognition.StripeRules(ts, description='3->2 checkerboard, normal (1, 1, 1)')


def fullshift():
    """Every row; no slope is enforced."""
    ts = TileSet([_wang('A', 1, 0, 0), _wang('B', 0, 0, 0)], name='fullshift')
    return recognition.WordRules(ts, description='2->1 rows without rules')


RULESETS = collections.OrderedDict([('alternating', alternating),
                                    ('checkerboard', checkerboard),
                                    ('fullshift', fullshift),
                                    ('sturmian-third', sturmian_third)])


def _discover_rulesets():
    for entry_point in pkg_resources.iter_entry_points("planartiles.rulesets"):
        RULESETS[entry_point.name] = entry_point.resolve()


_discover_rulesets()


def names():
    return sorted(RULESETS)


def get_ruleset(name):
    """
    Builds a registered rule system.

    :rtype: IRuleSystem
    :raise ConfigError: for unknown names
    """
    if name not in RULESETS:
        raise errors.ConfigError('unknown rule set %r, choose among %s' % (name, ', '.join(names())))
    rules = RULESETS[name]()
    if not isinstance(rules, interfaces.IRuleSystem):
        raise TypeError('rule set %s did not build a IRuleSystem' % name)
    log.debug('loaded rule set %s: %r', name, rules)
    return rules
