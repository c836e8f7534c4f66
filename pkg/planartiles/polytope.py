#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Exact H-representation polyhedra, over cdd in fraction mode.

A row [b, a_1, ..., a_k] stands for the inequality b + a.x >= 0 (or the equality
b + a.x = 0 for linear rows).
"""

import fractions
import logging

import cdd

from planartiles import errors
from planartiles import utils

log = logging.getLogger('polytope')

Fraction = fractions.Fraction
NUMBER_TYPE = 'fraction'


def _matrix(rows, linear=()):
    rows = [[utils.to_fraction(x) for x in row] for row in rows]
    linear = [[utils.to_fraction(x) for x in row] for row in linear]
    if not rows and not linear:
        raise ValueError('Feed me at least one row')
    if rows:
        mat = cdd.Matrix(rows, number_type=NUMBER_TYPE)
        if linear:
            mat.extend(linear, linear=True)
    else:
        mat = cdd.Matrix(linear, linear=True, number_type=NUMBER_TYPE)
    mat.rep_type = cdd.RepType.INEQUALITY
    return mat


def generators(rows, linear=()):
    """
    Vertex enumeration.

    :param rows: inequality rows
    :param linear: equality rows
    :return: (vertices, rays) as lists of tuples of Fraction. Lines are reported
             as two opposite rays.
    """
    poly = cdd.Polyhedron(_matrix(rows, linear))
    gens = poly.get_generators()
    vertices, rays = [], []
    for i in range(gens.row_size):
        row = tuple(Fraction(x) for x in gens[i])
        if row[0] == 1:
            vertices.append(row[1:])
        else:
            rays.append(row[1:])
            if i in gens.lin_set:
                rays.append(tuple(-x for x in row[1:]))
    log.debug('%d rows -> %d vertices %d rays', len(rows), len(vertices), len(rays))
    return vertices, rays


def bounded_vertices(rows, linear=()):
    """Vertices of a polytope. Raises UnboundedPolytope when rays exist."""
    vertices, rays = generators(rows, linear)
    if rays:
        raise errors.UnboundedPolytope('polyhedron has %d rays' % len(rays))
    return vertices


def solve_lp(rows, objective, linear=(), minimize=True):
    """
    Optimizes objective . x (objective without constant term) over the polyhedron.

    :return: (value, solution) or None when infeasible
    :raise UnboundedPolytope: when the objective is unbounded
    """
    mat = _matrix(rows, linear)
    mat.obj_type = cdd.LPObjType.MIN if minimize else cdd.LPObjType.MAX
    mat.obj_func = tuple([0] + [utils.to_fraction(x) for x in objective])
    lp = cdd.LinProg(mat)
    lp.solve()
    if lp.status == cdd.LPStatusType.OPTIMAL:
        return Fraction(lp.obj_value), tuple(Fraction(x) for x in lp.primal_solution)
    if lp.status in (cdd.LPStatusType.INCONSISTENT, cdd.LPStatusType.STRUC_INCONSISTENT):
        return None
    if lp.status in (cdd.LPStatusType.DUAL_INCONSISTENT, cdd.LPStatusType.STRUC_DUAL_INCONSISTENT):
        raise errors.UnboundedPolytope('objective is unbounded')
    raise errors.PlanarTilesError('cdd returned LP status %s' % lp.status)


def feasible_point(rows, linear=()):
    """A point of the polyhedron, or None."""
    size = len(rows[0]) if rows else len(linear[0])
    ret = solve_lp(rows, [0] * (size - 1), linear)
    if ret is None:
        return None
    return ret[1]
