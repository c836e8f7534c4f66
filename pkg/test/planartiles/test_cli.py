#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests the planartiles command line."""

import json
import logging
import os
import shutil
import sys
import tempfile
import unittest

from contextlib import contextmanager
from io import StringIO

from planartiles import api
from planartiles import cli
from planartiles import geometry
from planartiles import tilings
from planartiles.geometry import Slope
from test.planartiles import F

log = logging.getLogger("test_cli")


@contextmanager
def captured_output():
    new_out, new_err = StringIO(), StringIO()
    old_out, old_err = sys.stdout, sys.stderr
    try:
        sys.stdout, sys.stderr = new_out, new_err
        yield sys.stdout, sys.stderr
    finally:
        sys.stdout, sys.stderr = old_out, old_err


class TestCLI(unittest.TestCase):

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def run_cli(self, *args):
        with captured_output() as (out, err):
            code = cli.main(list(args))
        return code, out.getvalue(), err.getvalue()

    def write(self, name, content):
        filename = os.path.join(self.tmpdir, name)
        with open(filename, 'w') as fout:
            fout.write(content)
        return filename

    def test_usage(self):
        code, out, err = self.run_cli('word')
        self.assertEqual(code, 2)
        self.assertEqual(out, '')
        self.assertIn('usage', err)

    def test_sturmian_text(self):
        code, out, _ = self.run_cli('--text', 'word', 'sturmian', '--alpha', '1/3', '--rho', '0',
                                    '--from', '0', '--to', '5')
        self.assertEqual(code, 0)
        self.assertEqual(out, '110110\n')

    def test_sturmian_json(self):
        code, out, _ = self.run_cli('--json', 'word', 'sturmian', '--alpha', '1/3', '--from', '0', '--to', '5')
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out), {'word': '110110', 'origin': 0})

    def test_sturmian_defaults_to_text(self):
        code, out, _ = self.run_cli('word', 'sturmian', '--alpha', '1/3', '--from', '0', '--to', '5')
        self.assertEqual(code, 0)
        self.assertEqual(out, '110110\n')
        # an output set in the config file wins over the command default
        filename = self.write('run.ini', '[planartiles]\noutput = json\n')
        code, out, _ = self.run_cli('--config', filename, 'word', 'sturmian', '--alpha', '1/3', '--to', '5')
        self.assertEqual(json.loads(out)['word'], '110110')
        # a file without an output keeps it
        filename = self.write('seed.ini', '[planartiles]\nseed = 4\n')
        code, out, _ = self.run_cli('--config', filename, 'word', 'sturmian', '--alpha', '1/3', '--to', '5')
        self.assertEqual(out, '110110\n')

    def test_word_errors(self):
        code, out, err = self.run_cli('word', 'distance', '01', '011')
        self.assertEqual(code, 2)
        self.assertEqual(out, '')
        self.assertIn('not aligned', err)
        code, _, _ = self.run_cli('word', 'sturmian', '--alpha', 'x', '--to', '3')
        self.assertEqual(code, 2)

    def test_generate_is_reproducible(self):
        args = ('tile', 'generate', '--normal', '1,1,1', '--radius', '2')
        code, first, _ = self.run_cli(*args)
        self.assertEqual(code, 0)
        _, second, _ = self.run_cli(*args)
        self.assertEqual(first, second)
        expected = api.output_to_json(tilings.ball_patch(Slope.from_normal((1, 1, 1)), 2))
        self.assertEqual(first, expected + '\n')

    def test_render(self):
        patch = tilings.ball_patch(Slope.from_normal((1, 1, 1)), 2)
        filename = self.write('patch.json', json.dumps(patch.to_json()))
        code, out, _ = self.run_cli('tile', 'render', filename)
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith('<svg'))
        self.assertEqual(out.count('<polygon'), len(patch))

    def test_render_empty_patch(self):
        filename = self.write('empty.json', json.dumps({'n': 3, 'd': 2, 'tiles': []}))
        code, out, err = self.run_cli('tile', 'render', filename)
        self.assertEqual(code, 2)
        self.assertEqual(out, '')
        self.assertIn('empty patch', err)

    def test_missing_file(self):
        code, _, err = self.run_cli('tile', 'render', os.path.join(self.tmpdir, 'nope.json'))
        self.assertEqual(code, 2)
        self.assertIn('not readable', err)

    def test_malformed_tileset(self):
        content = {'tiles': [{'name': 'A', 'colors': [0, 0, 0, 0]}],
                   'forbidden': [[{'offset': None, 'tile': 'A'}]]}
        filename = self.write('tiles.json', json.dumps(content))
        code, out, err = self.run_cli('tileset', 'shear', filename)
        self.assertEqual(code, 2)
        self.assertEqual(out, '')
        self.assertIn('error', err)

    def test_rulesets(self):
        code, out, _ = self.run_cli('rulesets')
        self.assertEqual(code, 0)
        found = json.loads(out)
        self.assertIn('alternating', [r['name'] for r in found])
        self.assertIn('checkerboard', [r['name'] for r in found])

    def test_unknown_ruleset(self):
        code, _, err = self.run_cli('recognize', 'algo1', '--rules', 'nope')
        self.assertEqual(code, 2)
        self.assertIn('unknown rule set', err)

    def test_algo1_alternating(self):
        code, out, _ = self.run_cli('recognize', 'algo1', '--rules', 'alternating', '--m', '4')
        self.assertEqual(code, 0)
        found = Slope.from_json(json.loads(out))
        dist = geometry.plane_distance(found, Slope.from_normal((1, 1)))
        self.assertLessEqual(dist.lo, F(1, 4))

    def test_budget_exhausted(self):
        code, out, err = self.run_cli('--budget', '1', 'recognize', 'algo1', '--rules', 'fullshift')
        self.assertEqual(code, 3)
        self.assertEqual(out, '')
        self.assertIn('budget', err)

    def test_config_file(self):
        filename = self.write('run.ini', '[planartiles]\noutput = text\n')
        code, out, _ = self.run_cli('--config', filename, 'word', 'exchange', '0110')
        self.assertEqual(code, 0)
        self.assertEqual(out, '1001\n')
        # the command line wins over the file
        code, out, _ = self.run_cli('--config', filename, '--json', 'word', 'exchange', '0110')
        self.assertEqual(json.loads(out)['word'], '1001')

    def test_bad_config_file(self):
        filename = self.write('run.ini', '[planartiles]\noutput = xml\n')
        code, _, err = self.run_cli('--config', filename, 'word', 'exchange', '0110')
        self.assertEqual(code, 2)
        self.assertIn('output', err)

    def test_subshift_count(self):
        filename = self.write('config.txt', '0101\n1010\n0101\n1010\n')
        code, out, _ = self.run_cli('subshift', 'count', filename, '--n', '2')
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out), 2)

    def test_encode_decode(self):
        base = tilings.ball_patch(Slope.from_normal((1, 1, 1)), 15)
        filename = self.write('base.json', api.output_to_json(base))
        coding = ('--normal', '1,1,1', '--k', '22', '--phase=-11,-11')
        code, first, _ = self.run_cli('--seed', '5', 'tileset', 'encode', filename, *coding)
        self.assertEqual(code, 0)
        _, second, _ = self.run_cli('--seed', '5', 'tileset', 'encode', filename, *coding)
        self.assertEqual(first, second)
        encoded = self.write('encoded.json', first)
        code, out, _ = self.run_cli('tileset', 'decode', encoded, *coding)
        self.assertEqual(code, 0)
        decoded = json.loads(out)
        self.assertEqual(list(decoded), ['0,0'])
        self.assertTrue(set(decoded['0,0']) <= set([0, 1]))


if __name__ == '__main__':
    logging.basicConfig(level=logging.INFO)
    unittest.main(verbosity=2)
