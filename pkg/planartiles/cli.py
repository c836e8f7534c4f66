#!/usr/bin/env python
# -*- coding: utf-8 -*-

from __future__ import print_function

import argparse
import logging
import os
import random
import sys

from planartiles import api
from planartiles import argparse_utils
from planartiles import config
from planartiles import errors
from planartiles import flipcode
from planartiles import recognition
from planartiles import rulesets
from planartiles import subshift
from planartiles import tileset
from planartiles import tilings
from planartiles import words
from planartiles.geometry import Slope

log = logging.getLogger('cli')

# the description of the function
MAIN_DESC = 'Planar tilings with local rules: words, patches, slope recognition, subshifts and tile sets. '
WORD_DESC = 'Sturmian words, balance distance, replacement codings and slope intervals. '
TILE_DESC = 'Cut and project patches, flips, projections, ribbons and drawings. '
RECOGNIZE_DESC = 'Slope sets of patches and the slope recognition algorithms. '
SUBSHIFT_DESC = 'Pattern counts, window membership, the stripe witness and entropy counts. '
TILESET_DESC = 'Wang tile sets: shear, product, tilings of rectangles and colors written as flips. '
RULESETS_DESC = 'List the registered rule systems. '

EXIT_USAGE = 2
EXIT_BUDGET = 3


def get_output(results, rtype):
    if rtype == 'text':
        ret = api.output_to_string(results)
    elif rtype == 'json':
        ret = api.output_to_json(results)
    elif rtype == 'svg':
        ret = api.output_to_svg(results)
    else:
        raise ValueError('unknown output format')
    return ret


def _word(opts, letters):
    return words.BinaryWord(letters, opts.origin)


def _slope(normal):
    return Slope.from_normal(normal)


def _rules(opts):
    if opts.tileset:
        return recognition.as_rules(api.load_tileset(opts.tileset))
    return rulesets.get_ruleset(opts.rules)


# word

def word_sturmian(opts):
    """ The window [from, to] of the Sturmian word of slope alpha and intercept rho. """
    return words.sturmian(words.SturmianParams(opts.alpha, opts.rho), opts.start, opts.stop)


def word_distance(opts):
    return words.balance_distance(_word(opts, opts.u), _word(opts, opts.v))


def word_coding(opts):
    return words.coding_of_pair(_word(opts, opts.u), _word(opts, opts.v))


def word_apply(opts):
    return words.apply_coding(_word(opts, opts.u), words.ReplacementCoding(opts.w, opts.origin))


def word_interval(opts):
    return words.slope_interval(_word(opts, opts.u))


def word_member(opts):
    return words.is_sturmian_factor(_word(opts, opts.u), opts.intervals)


def word_hidden(opts):
    h = words.HiddenWord(opts.h, opts.origin)
    return {'phi': words.phi(h), 'psi': words.psi(h),
            'allowed': words.hidden_word_allowed(h, opts.first, opts.second)}


def word_exchange(opts):
    return words.exchange_letters(_word(opts, opts.u))


# tile

def tile_generate(opts):
    """ The thickness-1 patch of radius r around the origin. """
    return tilings.ball_patch(_slope(opts.normal), opts.radius, opts.offset)


def tile_flip(opts):
    """ Lists the flips of a patch, or performs the one at a vertex. """
    patch = api.load_patch(opts.patch)
    flips = tilings.find_flips(patch)
    if opts.vertex is None:
        return flips
    for f in flips:
        if f.vertex == opts.vertex:
            return tilings.apply_flip(patch, f)
    raise errors.FlipError('no flip at vertex %s' % (opts.vertex,))


def tile_project(opts):
    return tilings.project_to_configuration(api.load_patch(opts.patch), opts.axis)


def tile_render(opts):
    return api.load_patch(opts.patch)


def tile_thickness(opts):
    return tilings.check_thickness(api.load_patch(opts.patch), _slope(opts.normal))


def tile_ribbons(opts):
    return tilings.ribbons(api.load_patch(opts.patch), opts.direction - 1)


# recognize

def recognize_slope_set(opts):
    """ The polytope s(P) of a patch. """
    polytope = recognition.slope_set(api.load_patch(opts.patch), opts.t)
    return {'polytope': polytope, 'empty': polytope.is_empty, 'normals': polytope.normals(),
            'diameter': recognition.polytope_diameter(polytope, opts.run.tolerance)}


def recognize_algo1(opts):
    rules = _rules(opts)
    if opts.unknown_thickness:
        t, slope = recognition.algorithm1_unknown_thickness(rules, opts.m, opts.run.budget)
        return {'t': t, 'slope': slope}
    return recognition.algorithm1(rules, opts.t, opts.m, opts.run.budget, opts.max_radius)


def recognize_algo2(opts):
    return recognition.ball_enumeration(_rules(opts), opts.t, opts.rounds, opts.run.budget)


# subshift

def _configuration(opts):
    return api.load_configuration(opts.configuration, (opts.row, opts.col))


def subshift_count(opts):
    return subshift.count_patterns(_configuration(opts), opts.n, opts.disjoint)


def subshift_member(opts):
    return subshift.window_membership(_configuration(opts), opts.intervals, opts.variant, opts.run.budget)


def subshift_witness(opts):
    witness, configuration = subshift.appendix_witness(opts.n, opts.alpha)
    return {'witness': witness, 'configuration': configuration}


def subshift_entropy(opts):
    predicate = subshift.membership_predicate(opts.intervals, opts.variant)
    return subshift.entropy_estimate(predicate, opts.n_max, opts.run.budget)


# tileset

def tileset_shear(opts):
    return tileset.shear_to_rhombi(api.load_tileset(opts.tileset), opts.axis)


def tileset_product(opts):
    return tileset.product(api.load_tileset(opts.first), api.load_tileset(opts.second))


def tileset_tile(opts):
    """ Counts the tilings of a rectangle and lists the first ones. """
    ts = api.load_tileset(opts.tileset)
    found = []
    count = 0
    for grid in tileset.tile_rectangle(ts, opts.height, opts.width, opts.periodic, budget=opts.run.budget):
        if count < opts.limit:
            found.append(grid)
        count += 1
    return {'count': count, 'tilings': found}


def _coding_args(opts):
    return _slope(opts.normal), opts.k, opts.palette, opts.phase, opts.offset


def tileset_cells(opts):
    slope, k, _, phase, _ = _coding_args(opts)
    return flipcode.meta_tiles(api.load_patch(opts.patch), slope, k, phase)


def tileset_encode(opts):
    """ Writes boundary colors as flips, from a file or drawn with the seed. """
    patch = api.load_patch(opts.patch)
    slope, k, palette, phase, offset = _coding_args(opts)
    if opts.colors:
        colors = api.load_colors(opts.colors)
    else:
        rnd = random.Random(opts.run.seed)
        colors = {}
        for cell, meta in flipcode.meta_tiles(patch, slope, k, phase).items():
            colors[cell] = tuple(rnd.randrange(palette) for _ in range(meta.size))
    return flipcode.encode(patch, slope, colors, k, palette, phase, offset)


def tileset_decode(opts):
    slope, k, palette, phase, offset = _coding_args(opts)
    return flipcode.decode(api.load_patch(opts.patch), slope, k, palette, phase, offset)


def list_rulesets(opts):
    ret = []
    for name in rulesets.names():
        rules = rulesets.get_ruleset(name)
        n, d = rules.get_dimensions()
        ret.append({'name': name, 'n': n, 'd': d, 'description': getattr(rules, 'description', '')})
    return ret


def base_argparser(program_name, description):
    """ Base options shared by all subcommands """
    rootparser = argparse.ArgumentParser(prog=program_name, description=description)
    verbosity = rootparser.add_mutually_exclusive_group(required=False)
    verbosity.add_argument('--debug', dest='debug', action='store_true', help='Set verbosity to DEBUG')
    verbosity.add_argument('--quiet', dest='quiet', action='store_true', help='Set verbosity to ERROR only')
    rootparser.add_argument('--config', type=argparse_utils.readable, default=None,
                            help='JSON or INI file with tolerance, budget, output and seed')
    rootparser.add_argument('--seed', type=int, default=None, help='Random seed, overrides the config file')
    rootparser.add_argument('--budget', type=argparse_utils.positive_int, default=None,
                            help='Search budget in steps, overrides the config file')
    return rootparser


def output_argparser(rootparser):
    """ Output choices options argument parser """
    output = rootparser.add_mutually_exclusive_group(required=False)
    output.add_argument('--json', dest='output', action='store_const', const='json',
                        help='Print results as json')
    output.add_argument('--text', dest='output', action='store_const', const='text',
                        help='Print results as human readable text')
    output.add_argument('--svg', dest='output', action='store_const', const='svg',
                        help='Draw the resulting patch as svg')
    output.set_defaults(output=None)
    return rootparser


def _word_args(parser, *names):
    for name in names:
        parser.add_argument(name, type=str, help='binary word, like 0110')
    parser.add_argument('--origin', type=int, default=0, help='Absolute index of the first letter')


def word_argparser(word_parser):
    """ Word functions options argument parser """
    sub = word_parser.add_subparsers(dest='action')
    sub.required = True
    p = sub.add_parser('sturmian', help='Window of a Sturmian word')
    p.add_argument('--alpha', type=argparse_utils.rational, required=True, help='Slope, like 1/3')
    p.add_argument('--rho', type=argparse_utils.rational, default=0, help='Intercept')
    p.add_argument('--from', dest='start', type=int, default=0, help='First index')
    p.add_argument('--to', dest='stop', type=int, required=True, help='Last index, included')
    # a config file or a global output option overrides the text default
    p.set_defaults(func=word_sturmian, default_output='text')
    p = sub.add_parser('distance', help='Balance distance of two aligned words')
    _word_args(p, 'u', 'v')
    p.set_defaults(func=word_distance)
    p = sub.add_parser('coding', help='Alternating replacement coding of v from u')
    _word_args(p, 'u', 'v')
    p.set_defaults(func=word_coding)
    p = sub.add_parser('apply', help='Apply a replacement coding w to u')
    _word_args(p, 'u', 'w')
    p.set_defaults(func=word_apply)
    p = sub.add_parser('interval', help='Open interval of the slopes of u')
    _word_args(p, 'u')
    p.set_defaults(func=word_interval)
    p = sub.add_parser('member', help='Is u a Sturmian factor with slope in the intervals')
    _word_args(p, 'u')
    p.add_argument('--intervals', type=argparse_utils.intervals, required=True, help='Like 1/3:1/2,3/4:4/5')
    p.set_defaults(func=word_member)
    p = sub.add_parser('hidden', help='Morphisms phi and psi of a hidden word over 0, 1, T')
    p.add_argument('h', type=str, help='hidden word, T standing for 1~')
    p.add_argument('--origin', type=int, default=0, help='Absolute index of the first letter')
    p.add_argument('--first', type=argparse_utils.intervals, required=True, help='Slopes allowed for phi(h)')
    p.add_argument('--second', type=argparse_utils.intervals, required=True, help='Slopes allowed for psi(h)')
    p.set_defaults(func=word_hidden)
    p = sub.add_parser('exchange', help='Exchange letters 0 and 1')
    _word_args(p, 'u')
    p.set_defaults(func=word_exchange)
    return word_parser


def tile_argparser(tile_parser):
    """ Patch functions options argument parser """
    sub = tile_parser.add_subparsers(dest='action')
    sub.required = True
    p = sub.add_parser('generate', help='Thickness-1 patch around the origin')
    p.add_argument('--normal', type=argparse_utils.int_vector, required=True, help='Normal vector, like 1,1,1')
    p.add_argument('--radius', type=argparse_utils.positive_int, required=True, help='Patch radius')
    p.add_argument('--offset', type=argparse_utils.rational, default=0, help='Offset c of nu.x = c')
    p.set_defaults(func=tile_generate)
    p = sub.add_parser('flip', help='List the flips of a patch, or perform one')
    p.add_argument('patch', type=argparse_utils.readable, help='Patch JSON file')
    p.add_argument('--vertex', type=argparse_utils.int_vector, default=None, help='Vertex of the flip to perform')
    p.set_defaults(func=tile_flip)
    p = sub.add_parser('project', help='Project a 3->2 patch into a configuration')
    p.add_argument('patch', type=argparse_utils.readable, help='Patch JSON file')
    p.add_argument('--axis', choices=sorted(tilings.AXES), default='12', help='Projection along e_i + e_j')
    p.set_defaults(func=tile_project)
    p = sub.add_parser('render', help='Draw a 2-dimensional patch as svg')
    p.add_argument('patch', type=argparse_utils.readable, help='Patch JSON file')
    p.set_defaults(func=tile_render, force_output='svg')
    p = sub.add_parser('thickness', help='Thickness of a patch with respect to a slope')
    p.add_argument('patch', type=argparse_utils.readable, help='Patch JSON file')
    p.add_argument('--normal', type=argparse_utils.int_vector, required=True, help='Normal vector')
    p.set_defaults(func=tile_thickness)
    p = sub.add_parser('ribbons', help='Ribbons of one direction')
    p.add_argument('patch', type=argparse_utils.readable, help='Patch JSON file')
    p.add_argument('--direction', type=argparse_utils.positive_int, required=True, help='Generator, from 1')
    p.set_defaults(func=tile_ribbons)
    return tile_parser


def _rules_args(parser):
    rules = parser.add_mutually_exclusive_group(required=True)
    rules.add_argument('--rules', type=str, help='Registered rule system: %s' % ', '.join(rulesets.names()))
    rules.add_argument('--tileset', type=argparse_utils.readable, help='Wang tile set JSON file')
    parser.add_argument('--t', type=argparse_utils.positive_int, default=1, help='Thickness')


def recognize_argparser(recognize_parser):
    """ Recognition functions options argument parser """
    sub = recognize_parser.add_subparsers(dest='action')
    sub.required = True
    p = sub.add_parser('slope-set', help='Polytope of the slopes fitting a patch')
    p.add_argument('patch', type=argparse_utils.readable, help='Patch JSON file')
    p.add_argument('--t', type=argparse_utils.positive_int, default=1, help='Thickness')
    p.set_defaults(func=recognize_slope_set)
    p = sub.add_parser('algo1', help='Approximate the enforced slope within 1/m')
    _rules_args(p)
    p.add_argument('--m', type=argparse_utils.positive_int, default=1, help='Precision 1/m')
    p.add_argument('--max-radius', dest='max_radius', type=argparse_utils.positive_int, default=None,
                   help='Largest outer radius tried')
    p.add_argument('--unknown-thickness', dest='unknown_thickness', action='store_true',
                   help='Run copies with t = 1, 2, ... and report the first answer')
    p.set_defaults(func=recognize_algo1)
    p = sub.add_parser('algo2', help='Enumerate balls of slopes the rules do not enforce')
    _rules_args(p)
    p.add_argument('--rounds', type=argparse_utils.positive_int, default=4, help='Number of rounds')
    p.set_defaults(func=recognize_algo2)
    return recognize_parser


def _configuration_args(parser):
    parser.add_argument('configuration', type=argparse_utils.readable, help='Text file, one row per line')
    parser.add_argument('--row', type=int, default=0, help='Row of the first line')
    parser.add_argument('--col', type=int, default=0, help='Column of the first letter')


def subshift_argparser(subshift_parser):
    """ Subshift functions options argument parser """
    sub = subshift_parser.add_subparsers(dest='action')
    sub.required = True
    p = sub.add_parser('count', help='Distinct n x n patterns of a configuration')
    _configuration_args(p)
    p.add_argument('--n', type=argparse_utils.positive_int, required=True, help='Pattern size')
    p.add_argument('--disjoint', action='store_true', help='Count distinct patterns at disjoint places')
    p.set_defaults(func=subshift_count)
    p = sub.add_parser('member', help='Is the window one of a configuration of the family')
    _configuration_args(p)
    p.add_argument('--intervals', type=argparse_utils.intervals, required=True, help='Slopes A')
    p.add_argument('--variant', choices=subshift.VARIANTS, default=subshift.ROWWISE, help='Family')
    p.set_defaults(func=subshift_member)
    p = sub.add_parser('witness', help='Stripes holding n^n disjoint patterns in every window')
    p.add_argument('--n', type=argparse_utils.positive_int, required=True, help='Pattern size')
    p.add_argument('--alpha', type=argparse_utils.rational, required=True, help='Slope, like 13/21')
    p.set_defaults(func=subshift_witness)
    p = sub.add_parser('entropy', help='Admissible n x n windows for n up to n-max')
    p.add_argument('--intervals', type=argparse_utils.intervals, required=True, help='Slopes A')
    p.add_argument('--variant', choices=subshift.VARIANTS, default=subshift.ROWWISE, help='Family')
    p.add_argument('--n-max', dest='n_max', type=argparse_utils.positive_int, default=3, help='Largest n')
    p.set_defaults(func=subshift_entropy)
    return subshift_parser


def _coding_argparser(parser, colors=False):
    parser.add_argument('patch', type=argparse_utils.readable, help='Patch JSON file')
    parser.add_argument('--normal', type=argparse_utils.int_vector, required=True, help='Positive normal vector')
    parser.add_argument('--k', type=argparse_utils.positive_int, default=22, help='Grid spacing')
    parser.add_argument('--phase', type=argparse_utils.int_vector, default=(0, 0), help='Grid phase, like --phase=-11,-11')
    parser.add_argument('--palette', type=argparse_utils.positive_int, default=2, help='Number of colors')
    parser.add_argument('--offset', type=argparse_utils.rational, default=0, help='Offset c of the patch')
    if colors:
        parser.add_argument('--colors', type=argparse_utils.readable, default=None,
                            help='JSON object "a,b" -> colors; drawn with the seed when missing')


def tileset_argparser(tileset_parser):
    """ Tile set functions options argument parser """
    sub = tileset_parser.add_subparsers(dest='action')
    sub.required = True
    p = sub.add_parser('shear', help='Sheared rhombus tile set of a Wang tile set')
    p.add_argument('tileset', type=argparse_utils.readable, help='Tile set JSON file')
    p.add_argument('--axis', choices=sorted(tilings.AXES), default='12', help='Lift axis')
    p.set_defaults(func=tileset_shear)
    p = sub.add_parser('product', help='Product of two tile sets')
    p.add_argument('first', type=argparse_utils.readable, help='Tile set JSON file')
    p.add_argument('second', type=argparse_utils.readable, help='Tile set JSON file')
    p.set_defaults(func=tileset_product)
    p = sub.add_parser('tile', help='Tilings of a rectangle')
    p.add_argument('tileset', type=argparse_utils.readable, help='Tile set JSON file')
    p.add_argument('--height', type=argparse_utils.positive_int, required=True, help='Rows')
    p.add_argument('--width', type=argparse_utils.positive_int, required=True, help='Columns')
    p.add_argument('--periodic', action='store_true', help='Match opposite sides')
    p.add_argument('--limit', type=int, default=10, help='Number of tilings listed')
    p.set_defaults(func=tileset_tile)
    p = sub.add_parser('cells', help='Meta-tiles of a patch')
    _coding_argparser(p)
    p.set_defaults(func=tileset_cells)
    p = sub.add_parser('encode', help='Write boundary colors as flips')
    _coding_argparser(p, colors=True)
    p.set_defaults(func=tileset_encode)
    p = sub.add_parser('decode', help='Read boundary colors back from flips')
    _coding_argparser(p)
    p.set_defaults(func=tileset_decode)
    return tileset_parser


def make_argparser(program_name):
    rootparser = base_argparser(program_name, MAIN_DESC)
    output_argparser(rootparser)
    commands = rootparser.add_subparsers(dest='command')
    commands.required = True
    word_argparser(commands.add_parser('word', help=WORD_DESC, description=WORD_DESC))
    tile_argparser(commands.add_parser('tile', help=TILE_DESC, description=TILE_DESC))
    recognize_argparser(commands.add_parser('recognize', help=RECOGNIZE_DESC, description=RECOGNIZE_DESC))
    subshift_argparser(commands.add_parser('subshift', help=SUBSHIFT_DESC, description=SUBSHIFT_DESC))
    tileset_argparser(commands.add_parser('tileset', help=TILESET_DESC, description=TILESET_DESC))
    p = commands.add_parser('rulesets', help=RULESETS_DESC, description=RULESETS_DESC)
    p.set_defaults(func=list_rulesets)
    return rootparser


def set_logging_level(opts):
    level = logging.WARNING
    if opts.debug:
        level = logging.DEBUG
    elif opts.quiet:
        level = logging.ERROR
    # stdout is for results only
    logging.basicConfig(level=level, stream=sys.stderr)
    logging.getLogger().setLevel(level)
    return


def make_config(opts):
    settings = {}
    if opts.config:
        settings = config.RunConfigHandler().read_settings(opts.config)
    default = getattr(opts, 'default_output', None)
    if default and 'output' not in settings:
        settings['output'] = default
    run = config.RunConfig(**settings)
    return run.updated(seed=opts.seed, budget=opts.budget, output=opts.output)


def main(argv=None):
    """
    Runs one subcommand.

    :return: 0 on success, 2 on usage or input errors, 3 when a budget is exhausted
    """
    if argv is None:
        argv = sys.argv[1:]
    rootparser = make_argparser(os.path.basename(sys.argv[0]) or 'planartiles')
    try:
        opts = rootparser.parse_args(argv)
    except SystemExit as e:
        return e.code
    # apply verbosity
    set_logging_level(opts)
    try:
        opts.run = make_config(opts)
        # execute function
        results = opts.func(opts)
        ret = get_output(results, getattr(opts, 'force_output', None) or opts.run.output)
    except errors.BudgetExceeded as e:
        log.debug('budget exhausted', exc_info=True)
        print('%s: budget exhausted: %s' % (rootparser.prog, e), file=sys.stderr)
        return EXIT_BUDGET
    except (errors.PlanarTilesError, TypeError, ValueError, IOError) as e:
        log.debug('%s failed', opts.command, exc_info=True)
        print('%s: error: %s' % (rootparser.prog, e), file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(ret if ret.endswith('\n') else ret + '\n')
    return 0


if '__main__' == __name__:
    sys.exit(main())
