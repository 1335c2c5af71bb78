# Copyright 2026 The symzeta Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#  http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import logging
import os
import random
import unittest
import yaml

from fractions import Fraction
from unittest.mock import patch

from symzeta.core import hookenv
from symzeta.exactalg import (
    Matrix,
    Polynomial,
    block_diagonal,
    det_exact,
    standard_j,
)

FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                        'fixtures')

FIGURE8 = Matrix([[2, 1], [1, 1]])
TREFOIL = Matrix([[1, 1], [-1, 0]])
NEGATIVE_HYPERBOLIC = Matrix([[-2, -1], [-1, -1]])
THURSTON = Matrix([[1, 1], [0, 1]])
ROTATION = Matrix([['3/5', '-4/5'], ['4/5', '3/5']])
MIXED = block_diagonal(FIGURE8, NEGATIVE_HYPERBOLIC)


def load_config():
    '''
    Walk backwords from __file__ looking for symzeta/config.yaml, load and
    return the 'options' section'
    '''
    config = None
    f = __file__
    while config is None:
        d = os.path.dirname(f)
        candidate = os.path.join(d, 'symzeta', 'config.yaml')
        if os.path.isfile(candidate):
            config = candidate
            break
        if d == f:
            break
        f = d

    if not config:
        logging.error('Could not find symzeta/config.yaml in any parent '
                      'directory of %s. ' % __file__)
        raise Exception

    with open(config) as stream:
        return yaml.safe_load(stream.read())['options']


def get_default_config():
    '''
    Load default config from config.yaml return as a dict.
    If no default is set in config.yaml, its value is None.
    '''
    default_config = {}
    config = load_config()
    for k, v in config.items():
        if 'default' in v:
            default_config[k] = v['default']
        else:
            default_config[k] = None
    return default_config


def fixture_path(name):
    return os.path.join(FIXTURES, name)


class SymzetaTestCase(unittest.TestCase):

    def setUp(self, obj=None, patches=()):
        super(SymzetaTestCase, self).setUp()
        self.patches = patches
        self.obj = obj
        self.test_config = TestConfig()
        hookenv.flush_config()
        self.addCleanup(hookenv.flush_config)
        self.patch_all()

    def patch(self, method):
        _m = patch.object(self.obj, method)
        mock = _m.start()
        self.addCleanup(_m.stop)
        return mock

    def patch_all(self):
        for method in self.patches:
            setattr(self, method, self.patch(method))


class TestConfig(object):

    def __init__(self):
        self.config = get_default_config()

    def get(self, attr=None):
        if not attr:
            return self.get_all()
        try:
            return self.config[attr]
        except KeyError:
            return None

    def get_all(self):
        return self.config

    def set(self, attr, value):
        if attr not in self.config:
            raise KeyError
        self.config[attr] = value


def interpolation_charpoly(m):
    '''
    det(I - tM) by evaluating det_exact at t = 0..n and Lagrange
    interpolation; independent of the Faddeev-LeVerrier recurrence.
    '''
    n = m.rows
    points = list(range(n + 1))
    values = [det_exact(Matrix.identity(n) - m.scale(t)) for t in points]
    result = Polynomial()
    for i, xi in enumerate(points):
        basis = Polynomial([1])
        denominator = Fraction(1)
        for j, xj in enumerate(points):
            if j != i:
                basis = basis * Polynomial([-xj, 1])
                denominator *= xi - xj
        result = result + basis * Polynomial([values[i] / denominator])
    return result


def random_integer_matrix(rng, rows, cols=None, bound=9):
    cols = rows if cols is None else cols
    return Matrix([[rng.randint(-bound, bound) for _ in range(cols)]
                   for _ in range(rows)])


def _transvection(v, c, j):
    '''I + c v v^t J, a symplectic transvection.'''
    n = len(v)
    vj = [sum(v[k] * j[k, col] for k in range(n)) for col in range(n)]
    return Matrix([[int(r == col) + c * v[r] * vj[col] for col in range(n)]
                   for r in range(n)])


def random_symplectic_word(rng, genus, length=6):
    '''
    A random word in symplectic transvections of Sp(2g, Z) and its inverse.
    '''
    n = 2 * genus
    j = standard_j(n)
    p = Matrix.identity(n)
    p_inv = Matrix.identity(n)
    for _ in range(length):
        v = [0] * n
        v[rng.randrange(n)] = 1
        if rng.random() < 0.5:
            v[rng.randrange(n)] += 1
        c = rng.choice((-1, 1))
        p = p @ _transvection(v, c, j)
        p_inv = _transvection(v, -c, j) @ p_inv
    return p, p_inv


def random_gated_monodromy(rng, genus, length=4):
    '''
    A random conjugate of a block sum of figure-8 and trefoil monodromies,
    so that det(I - f) = +-1.
    '''
    blocks = [rng.choice((FIGURE8, TREFOIL)) for _ in range(genus)]
    base = block_diagonal(*blocks)
    p, p_inv = random_symplectic_word(rng, genus, length)
    return p @ base @ p_inv


def seeded(seed=20261018):
    return random.Random(seed)
