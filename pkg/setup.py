#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Setuptools scripts."""

from setuptools import setup

import distutils.cmd
import distutils.log
import os
import subprocess
import sys


class SlowTestsCommand(distutils.cmd.Command):
    """
    A custom command to run the test suite at full size.
    Sets PLANARTILES_SLOW, which enables the long round trips and radius sweeps.
    """

    description = 'Run the tests with the full size parameters'
    user_options = []

    def initialize_options(self):
        """Set default values for options."""
        pass

    def finalize_options(self):
        """Post-process options."""
        pass

    def run(self):
        """Run command."""
        env = dict(os.environ, PLANARTILES_SLOW='1')
        cmd = [sys.executable, '-m', 'unittest', 'discover', '-s', 'test/planartiles', '-t', '.']
        self.announce('running %s' % ' '.join(cmd), level=distutils.log.INFO)
        p = subprocess.Popen(cmd, stdout=sys.stdout, env=env)
        p.wait()
        return p.returncode


setup(name="planartiles",
      version="0.1",
      description="Planar tilings with local rules: slope recognition, Sturmian subshifts and Wang tile sets",
      long_description=open("README.rst").read(),
      license="GPL",
      classifiers=[
        "Topic :: Scientific/Engineering :: Mathematics",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: GNU General Public License (GPL)",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Development Status :: 3 - Alpha",
      ],
      keywords=["tiling", "cut and project", "local rules", "sturmian", "subshift", "wang tiles", "quasicrystal"],
      packages=["planartiles",
                "planartiles.abc",
                "planartiles.outputters"],
      entry_points={
            'console_scripts': [
                'planartiles = planartiles.cli:main',
            ],
            # rule systems planartiles.abc.interfaces.IRuleSystem
            'planartiles.rulesets': [
                'alternating = planartiles.rulesets:alternating',
                'checkerboard = planartiles.rulesets:checkerboard',
                'fullshift = planartiles.rulesets:fullshift',
                'sturmian-third = planartiles.rulesets:sturmian_third',
            ],
      },
      # pycddlib 3 renamed the whole API
      install_requires=["numpy",
                        "sympy",
                        "pycddlib>=2.1.7,<3.0",
                        "setuptools",
                        ],
      test_suite="test.alltests",
      cmdclass={
          'slowtests': SlowTestsCommand,
      },
      )
