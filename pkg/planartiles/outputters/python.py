#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
This class produce JSON-ready python objects.

Rationals become "p/q" strings, tuples and sets become lists, and tuple keys
become comma separated strings.
"""

import fractions
import json
import logging
import math

from planartiles import tilings
from planartiles import words
from planartiles.outputters import Outputter
from planartiles.outputters import is_record
from planartiles.subshift import Configuration

log = logging.getLogger('python')


def _key(key):
    if isinstance(key, tuple):
        return ','.join(str(k) for k in key)
    return str(key)


class PythonOutputter(Outputter):

    """ Converts any result into dicts, lists, strings, numbers and None."""

    def parse(self, obj):
        if obj is None or isinstance(obj, (bool, str)):
            return obj
        if obj is words.NotWithinOne:
            return None
        if isinstance(obj, int):
            return obj
        if isinstance(obj, fractions.Fraction):
            return str(obj)
        if isinstance(obj, float):
            # entropy estimates are the only floats; log(0) has no JSON form
            return obj if math.isfinite(obj) else None
        if isinstance(obj, words.BinaryWord):
            return {'word': str(obj), 'origin': obj.origin}
        if isinstance(obj, words.OpenInterval):
            return {'lo': str(obj.lo), 'hi': str(obj.hi), 'empty': obj.is_empty}
        if isinstance(obj, Configuration):
            return {'origin': list(obj.origin), 'rows': obj.to_text().split('\n')}
        if isinstance(obj, tilings.Ribbon):
            return {'direction': obj.direction + 1, 'length': len(obj),
                    'tiles': [{'base': list(b), 'gens': [g + 1 for g in s]} for b, s in obj.tiles]}
        if isinstance(obj, tilings.Flip):
            return {'vertex': list(obj.vertex), 'gens': [g + 1 for g in obj.gens], 'lower': obj.is_lower}
        if hasattr(obj, 'to_json'):
            return obj.to_json()
        if is_record(obj):
            return dict((field, self.parse(getattr(obj, field))) for field in obj._fields)
        if isinstance(obj, dict):
            return dict((_key(k), self.parse(v)) for k, v in obj.items())
        if isinstance(obj, (set, frozenset)):
            return sorted((self.parse(x) for x in obj), key=lambda v: json.dumps(v, sort_keys=True))
        if isinstance(obj, (list, tuple)):
            return [self.parse(x) for x in obj]
        log.warning('no conversion for %s', type(obj).__name__)
        raise TypeError('Feed me a planartiles result, not %s' % type(obj).__name__)
