#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
This class produce a textual output.

"""

import logging

from planartiles import tilings
from planartiles import words
from planartiles.geometry import Slope
from planartiles.outputters import Outputter
from planartiles.outputters import is_record
from planartiles.subshift import Configuration

log = logging.getLogger('text')


class TextOutputter(Outputter):

    """ Human readable text: words and configurations as letters, records as "field: value" lines."""

    def parse(self, obj, prefix=''):
        if obj is None or obj is words.NotWithinOne:
            return prefix + 'none'
        if isinstance(obj, (words.BinaryWord, words.OpenInterval)):
            return prefix + str(obj)
        if isinstance(obj, Configuration):
            return '\n'.join(prefix + line for line in obj.to_text().split('\n'))
        if isinstance(obj, Slope):
            if obj.is_hyperplane:
                return prefix + 'normal %s' % ' '.join(str(x) for x in obj.normal)
            return '\n'.join(prefix + 'basis %s' % ' '.join(str(x) for x in row) for row in obj.basis)
        if isinstance(obj, tilings.LiftedPatch):
            return '\n'.join(prefix + '%s | %s' % (' '.join(str(x) for x in b), ' '.join(str(g + 1) for g in s))
                             for b, s in obj.sorted_tiles())
        if isinstance(obj, tilings.Ribbon):
            return prefix + 'v%d ribbon of %d tiles' % (obj.direction + 1, len(obj))
        if is_record(obj):
            return '\n'.join(self._field(field, getattr(obj, field), prefix) for field in obj._fields)
        if isinstance(obj, dict):
            return '\n'.join(self._field(key, obj[key], prefix) for key in sorted(obj, key=str))
        if isinstance(obj, (set, frozenset)):
            obj = sorted(obj)
        if isinstance(obj, (list, tuple)):
            return '\n'.join(self.parse(x, prefix) for x in obj)
        return prefix + str(obj)

    def _field(self, name, value, prefix):
        if isinstance(name, tuple):
            name = ','.join(str(x) for x in name)
        text = self.parse(value, prefix + '  ')
        if '\n' not in text:
            return '%s%s: %s' % (prefix, name, text.strip())
        return '%s%s:\n%s' % (prefix, name, text)
