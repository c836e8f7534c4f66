# -*- coding: utf-8 -*-

"""
Reading inputs and writing results.

Every input file is JSON ('-' reads stdin) except configurations, which are
rows of letters. Every result converts to text, to JSON-ready python objects
and to JSON; patches also draw as SVG.
"""

import json
import logging
import sys

from planartiles import errors
from planartiles.geometry import Slope
from planartiles.outputters import python
from planartiles.outputters import svg
from planartiles.outputters import text
from planartiles.subshift import Configuration
from planartiles.tileset import TileSet
from planartiles.tilings import LiftedPatch

log = logging.getLogger('api')


def _read(filename):
    if filename == '-':
        return sys.stdin.read()
    with open(filename) as fin:
        return fin.read()


def read_json(filename):
    """
    :raise ValueError: on malformed JSON
    """
    content = _read(filename)
    try:
        return json.loads(content)
    except ValueError as e:
        raise ValueError('%s is not JSON: %s' % (filename, e))


def load_patch(filename):
    return LiftedPatch.from_json(read_json(filename))


def load_slope(filename):
    try:
        return Slope.from_json(read_json(filename))
    except (KeyError, TypeError) as e:
        raise errors.DimensionMismatch('malformed slope in %s: %s' % (filename, e))


def load_tileset(filename):
    return TileSet.from_json(read_json(filename))


def load_configuration(filename, origin=(0, 0)):
    return Configuration.from_text(_read(filename), origin)


def colors_from_json(obj):
    """{"a,b": [colors...]} to {(a, b): (colors...)}"""
    if not isinstance(obj, dict):
        raise errors.TileSetError('colors must be a JSON object keyed by "a,b" cells')
    ret = {}
    for key, value in obj.items():
        try:
            cell = tuple(int(x) for x in key.split(','))
            symbols = tuple(int(x) for x in value)
        except (TypeError, ValueError):
            raise errors.TileSetError('malformed colors of cell %r' % key)
        if len(cell) != 2:
            raise errors.TileSetError('cell %r is not a pair' % key)
        ret[cell] = symbols
    return ret


def load_colors(filename):
    return colors_from_json(read_json(filename))


def output_to_python(results):
    """
    Transform results into JSON-ready python objects.

    :param results: any planartiles result
    :rtype: dict, list, str, int, float, bool or None
    """
    return python.PythonOutputter().parse(results)


def output_to_json(results):
    """
    Transform results into JSON text, keys sorted so that outputs compare byte by byte.

    :rtype: str
    """
    return json.dumps(output_to_python(results), indent=2, sort_keys=True)


def output_to_string(results):
    """
    Transform results into human readable text.

    :rtype: str
    """
    return text.TextOutputter().parse(results)


def output_to_svg(results, scale=20):
    """
    Draw a 2-dimensional patch.

    :rtype: str
    :raise UnsupportedDimension: when results is no 2-dimensional patch
    """
    return svg.SvgOutputter(scale).parse(results)
