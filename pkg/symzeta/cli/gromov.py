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

from . import (
    Payload,
    cmdline,
    load_json,
    load_matrix,
    order_or_default,
)
from .knots import (
    add_knot_arguments,
    resolve_knot,
)
from symzeta import codec
from symzeta import manifolds

MANIFOLD_TEMPLATE = 'manifold.txt'


def _record_payload(record):
    payload = Payload(codec.manifold_to_json(record),
                      template=MANIFOLD_TEMPLATE)
    payload['canonical_class'] = manifolds.canonical_class(record)
    return payload


def _load_record(path):
    return codec.manifold_from_json(load_json(path))


def _xf(parser):
    parser.add_argument('--monodromy', dest='monodromy_file', required=True,
                        metavar='FILE')
    parser.add_argument('--genus', type=int, default=None)

    def xf(monodromy_file, genus):
        """Mapping torus X_f"""
        record = manifolds.mapping_torus(load_matrix(monodromy_file), genus)
        payload = _record_payload(record)
        if record.completeness == manifolds.FULL:
            payload['audit'] = manifolds.audit_record(record)
        return payload
    return xf


def _en(parser):
    parser.add_argument('--n', dest='n', type=int, required=True)

    def en(n):
        """Elliptic surface E(n)"""
        return _record_payload(manifolds.elliptic_surface(n))
    return en


def _enk(parser):
    parser.add_argument('--n', dest='n', type=int, required=True)
    add_knot_arguments(parser)

    def enk(n, knot, monodromy_file):
        """Knot surgery E(n,K)"""
        k = resolve_knot(knot, monodromy_file)
        return _record_payload(
            manifolds.knot_surgery(manifolds.elliptic_surface(n), k))
    return enk


def _fiber_sum(parser):
    parser.add_argument('first', metavar='A.json')
    parser.add_argument('second', metavar='B.json')

    def fiber_sum(first, second):
        """Fiber sum of two records along their distinguished fibers"""
        return _record_payload(manifolds.fiber_sum(_load_record(first),
                                                   _load_record(second)))
    return fiber_sum


def _product(parser):
    parser.add_argument('--euler', type=int, default=2,
                        help='Euler characteristic of the surface factor')
    parser.add_argument('record', metavar='M.json')

    def product(euler, record):
        """Product with a surface of the given Euler characteristic"""
        return _record_payload(manifolds.sphere_product(_load_record(record),
                                                        euler))
    return product


GROMOV_COMMANDS = (
    ('xf', _xf),
    ('en', _en),
    ('enk', _enk),
    ('fiber-sum', _fiber_sum),
    ('product', _product),
)


@cmdline.subcommand_builder('gromov', description="Gromov series of "
                                                  "manifold records")
def gromov(subparser):
    group = subparser.add_subparsers(help='Constructions',
                                     dest='construction')
    group.required = True
    for name, builder in GROMOV_COMMANDS:
        parser = group.add_parser(name)
        func = builder(parser)
        parser.description = func.__doc__
        parser.set_defaults(func=func)

    def gromov_command():
        """Gromov series of manifold records"""
        return None
    return gromov_command


@cmdline.subcommand()
def compare(first, second, order: int = None):
    """Distinguish two records by their series"""
    return Payload(
        manifolds.distinguish(_load_record(first), _load_record(second),
                              order_or_default(order)),
        template='compare.txt')
