# -*- coding: utf-8 -*-


class ISlope(object):
    """Interface for a linear d-plane of R^n with exact rational data."""

    def get_basis(self):
        """Returns the canonical basis of the plane.

        :return: d rows of n rationals, in reduced row echelon form
        :rtype: tuple of tuple of fractions.Fraction
        """
        raise NotImplementedError(self)

    def get_grassmann(self):
        """Returns the Grassmann coordinates of the plane.

        :return: the d x d minors of the basis, ordered by column subset
        :rtype: tuple of fractions.Fraction
        """
        raise NotImplementedError(self)

    def is_degenerate(self):
        """Returns True when at least one Grassmann coordinate is zero.

        :rtype: bool
        """
        raise NotImplementedError(self)

    def to_json(self):
        """Returns a JSON-ready dict with rationals written as "p/q" strings.

        :rtype: dict
        """
        raise NotImplementedError(self)


class IPatch(object):
    """Interface for a finite lifted patch of an n->d tiling."""

    def get_tiles(self):
        """Returns the tiles of the patch.

        :return: the (base, gens) pairs, base in Z^n, gens a sorted d-tuple of generator indices
        :rtype: frozenset
        """
        raise NotImplementedError(self)

    def get_vertices(self):
        """Returns every lifted vertex of every tile.

        :rtype: set of tuple of int
        """
        raise NotImplementedError(self)

    def translate(self, vector):
        """Returns the same patch translated by an integer vector.

        :param vector: tuple of n ints
        :rtype: IPatch
        """
        raise NotImplementedError(self)


class IRuleSystem(object):
    """Interface for local rules able to list their legal patches of a given radius."""

    def get_dimensions(self):
        """Returns the (n, d) pair of the tilings these rules constrain.

        :rtype: tuple
        """
        raise NotImplementedError(self)

    def legal_patches(self, radius, budget=None):
        """Enumerates the legal patches of the given radius, centered at the origin.

        A legal patch is a patch satisfying the local rules. It is never asserted
        that it extends to a full tiling.

        :param radius: int
        :param budget: maximal number of search steps, None for unlimited
        :return: an iterator over IPatch
        :raise BudgetExceeded: when the search needs more than budget steps
        """
        raise NotImplementedError(self)


class IConfigHandler(object):
    """Interface for a run configuration file reader."""

    def read(self, filename):
        """Reads a configuration file.

        :param filename: the path of the file
        :rtype: planartiles.config.RunConfig
        """
        raise NotImplementedError(self)


class IOutputter(object):
    """Interface for the conversion of results into an output format."""

    def parse(self, obj):
        """Converts a result.

        :param obj: any result of a planartiles operation
        :return: the converted result, a str or JSON-ready python objects
        """
        raise NotImplementedError(self)
