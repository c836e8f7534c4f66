#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
This class draws 2-dimensional patches.

"""

import logging

from planartiles import errors
from planartiles import tilings
from planartiles.outputters import Outputter

log = logging.getLogger('svg')


class SvgOutputter(Outputter):

    def __init__(self, scale=20):
        self.scale = scale

    def parse(self, obj):
        if not isinstance(obj, tilings.LiftedPatch):
            raise errors.UnsupportedDimension('only patches are drawn, not %s' % type(obj).__name__)
        return tilings.render_svg(obj, self.scale)
