#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Run configuration: tolerances, budgets, output format and seed.

A configuration file is either a JSON object or an INI file with a
[planartiles] section:

    [planartiles]
    tolerance = 1/1000000000
    budget = 1000000
    output = json
    seed = 0
"""

import configparser
import fractions
import json
import logging
import os

from planartiles import errors
from planartiles import utils
from planartiles.abc import interfaces

log = logging.getLogger('config')

SECTION = 'planartiles'
OUTPUTS = ('json', 'text', 'svg')


class RunConfig(object):
    """Tolerance and budgets shared by every subcommand."""

    fields = ('tolerance', 'budget', 'output', 'seed')

    def __init__(self, tolerance=utils.DEFAULT_TOLERANCE, budget=10 ** 6, output='json', seed=0):
        try:
            self.tolerance = utils.to_fraction(tolerance)
        except (TypeError, ValueError) as e:
            raise errors.ConfigError('tolerance: %s' % e)
        if self.tolerance <= 0:
            raise errors.ConfigError('tolerance must be positive, got %s' % self.tolerance)
        if isinstance(budget, bool) or not isinstance(budget, int) or budget < 1:
            raise errors.ConfigError('budget must be a positive int, got %r' % (budget,))
        self.budget = budget
        if output not in OUTPUTS:
            raise errors.ConfigError('output must be one of %s, got %r' % (', '.join(OUTPUTS), output))
        self.output = output
        if isinstance(seed, bool) or not isinstance(seed, int):
            raise errors.ConfigError('seed must be an int, got %r' % (seed,))
        self.seed = seed

    def updated(self, **overrides):
        """A copy with the non None overrides applied."""
        values = self.to_dict()
        values['tolerance'] = self.tolerance
        for key, value in overrides.items():
            if key not in self.fields:
                raise errors.ConfigError('unknown setting %r' % key)
            if value is not None:
                values[key] = value
        return RunConfig(**values)

    def to_dict(self):
        return {'tolerance': utils.fraction_to_str(self.tolerance), 'budget': self.budget,
                'output': self.output, 'seed': self.seed}

    def __eq__(self, other):
        if not isinstance(other, RunConfig):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __ne__(self, other):
        ret = self.__eq__(other)
        if ret is NotImplemented:
            return ret
        return not ret

    def __repr__(self):
        return 'RunConfig(%s)' % ', '.join('%s=%s' % (k, v) for k, v in sorted(self.to_dict().items()))


def _int(name, value):
    try:
        return int(value)
    except ValueError:
        raise errors.ConfigError('%s: %r is not an int' % (name, value))


class RunConfigHandler(interfaces.IConfigHandler):
    """Reads RunConfig files, JSON or INI."""

    def read(self, filename):
        """
        Reads a run configuration.

        :param filename: a .json file, anything else is read as INI
        :rtype: RunConfig
        :raise IOError: when the file does not exist
        :raise ConfigError: on unknown settings or invalid values
        """
        return RunConfig(**self.read_settings(filename))

    def read_settings(self, filename):
        """The settings a file sets, as a dict."""
        if not os.access(filename, os.F_OK):
            raise IOError("File not found: %s" % filename)
        if filename.endswith('.json'):
            values = self._read_json(filename)
        else:
            values = self._read_ini(filename)
        unknown = set(values) - set(RunConfig.fields)
        if unknown:
            raise errors.ConfigError('unknown settings %s in %s' % (', '.join(sorted(unknown)), filename))
        log.debug('config %s: %s', filename, values)
        return values

    def _read_json(self, filename):
        with open(filename) as fin:
            try:
                obj = json.load(fin)
            except ValueError as e:
                raise errors.ConfigError('%s is not JSON: %s' % (filename, e))
        if not isinstance(obj, dict):
            raise errors.ConfigError('%s must hold a JSON object' % filename)
        values = dict(obj)
        if isinstance(values.get('tolerance'), float):
            # keep the decimal digits as written, never the binary float
            values['tolerance'] = fractions.Fraction(str(values['tolerance']))
        return values

    def _read_ini(self, filename):
        parser = configparser.RawConfigParser()
        parser.optionxform = str
        try:
            parser.read(filename)
        except configparser.Error as e:
            raise errors.ConfigError('%s: %s' % (filename, e))
        if not parser.has_section(SECTION):
            raise errors.ConfigError('%s has no [%s] section' % (filename, SECTION))
        values = {}
        for key, value in parser.items(SECTION):
            value = value.strip()
            if key in ('budget', 'seed'):
                value = _int(key, value)
            values[key] = value
        return values
