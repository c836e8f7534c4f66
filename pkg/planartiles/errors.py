#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Exceptions raised by planartiles."""


class PlanarTilesError(Exception):
    pass


class DimensionMismatch(PlanarTilesError):
    pass


class DegenerateSlope(PlanarTilesError):
    pass


class UnsupportedDimension(PlanarTilesError):
    pass


class WordError(PlanarTilesError):
    """Misaligned windows, illegal replacements or letters outside the alphabet."""
    pass


class PatchError(PlanarTilesError):
    """A lifted patch is not face-to-face, is empty, or cannot be projected."""
    pass


class FlipError(PlanarTilesError):
    pass


class UnboundedPolytope(PlanarTilesError):
    pass


class EmptyFamily(PlanarTilesError):
    """The local rules admit no patch of the requested radius, or no slope fits their patches."""
    pass


class BudgetExceeded(PlanarTilesError):

    def __init__(self, message, spent=None):
        super(BudgetExceeded, self).__init__(message)
        self.spent = spent


class TileSetError(PlanarTilesError):
    pass


class CapacityError(TileSetError):
    """A meta-tile cannot hold the information of its boundary colors."""
    pass


class MarkerError(TileSetError):
    pass


class ConfigError(PlanarTilesError):
    pass
