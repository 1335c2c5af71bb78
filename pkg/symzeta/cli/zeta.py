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
from symzeta import codec
from symzeta import symclass
from symzeta import zeta as zeta_lib
from symzeta.core import hookenv
from symzeta.exactalg import to_interleaved
from symzeta.exceptions import (
    DomainError,
    WallError,
)

DET = 'det'
TRACE = 'trace'
ORBITS = 'orbits'
METHODS = (DET, TRACE, ORBITS)


def _orbit_data(data, order):
    if isinstance(data, dict) and 'orbits' in data:
        return codec.orbits_from_json(data)
    g = codec.graded_map_from_json(data)
    a = g.first_homology
    if g.top_degree != 2 or a is None or a.shape != (2, 2):
        raise DomainError(
            'the orbits method needs orbit data or a torus map')
    return symclass.toral_orbit_data(a, order)


@cmdline.subcommand_builder('zeta', description="Lefschetz zeta function")
def zeta(subparser):
    subparser.add_argument('--map', dest='map_file', required=True,
                           metavar='FILE',
                           help='Graded map, surface monodromy or orbit data')
    subparser.add_argument('--method', choices=METHODS, default=DET)
    subparser.add_argument('--order', type=int, default=None)

    def zeta_command(map_file, method, order):
        order = order_or_default(order)
        data = load_json(map_file)
        payload = Payload({'method': method}, template='zeta.txt')
        if method == ORBITS:
            payload['series'] = symclass.zeta_from_orbits(
                _orbit_data(data, order), order)
            return payload
        g = codec.graded_map_from_json(data)
        if method == DET:
            r = zeta_lib.zeta_det(g)
            payload['rational_function'] = r
            payload['series'] = r.expand(order)
        else:
            payload['series'] = zeta_lib.zeta_trace(g, order)
        return payload
    return zeta_command


@cmdline.subcommand_builder('lefschetz', description="Lefschetz number")
def lefschetz(subparser):
    subparser.add_argument('--map', dest='map_file', required=True,
                           metavar='FILE')
    subparser.add_argument('--power', type=int, default=1)

    def lefschetz_command(map_file, power):
        g = codec.graded_map_from_json(load_json(map_file))
        return Payload({
            'power': power,
            'lefschetz': zeta_lib.lefschetz(g, power),
        })
    return lefschetz_command


@cmdline.subcommand_builder('classify',
                            description="Type of a symplectic matrix")
def classify(subparser):
    subparser.add_argument('--matrix', dest='matrix_file', required=True,
                           metavar='FILE')
    subparser.add_argument('--walls', type=int, default=None,
                           help='Check walls W_m for m up to this bound')
    subparser.add_argument('--powers', type=int, default=None,
                           help='Compare predicted and exact signs of '
                                'det(A^m - I) for m up to this bound')
    subparser.add_argument('--block', action='store_true',
                           help='Input uses (q1..qn, p1..pn) coordinates')

    def classify_command(matrix_file, walls, powers, block):
        a = load_matrix(matrix_file)
        if block:
            a = to_interleaved(a)
        if walls is None:
            walls = hookenv.config('wall-bound')
        profile = symclass.type_profile(a, walls)
        payload = Payload(profile.report(), template='classify.txt')
        if powers:
            rows = []
            for m in range(1, powers + 1):
                predicted = symclass.sign_power_predicted(profile, m)
                try:
                    exact = symclass.sign_power_exact(a, m)
                except WallError:
                    exact = None
                rows.append({'m': m, 'predicted': predicted, 'exact': exact,
                             'agree': predicted == exact})
            payload['powers'] = rows
        return payload
    return classify_command


@cmdline.subcommand_builder('orbits',
                            description="Periodic orbits of a toral map")
def orbits(subparser):
    subparser.add_argument('--matrix', dest='matrix_file', required=True,
                           metavar='FILE')
    subparser.add_argument('--max-period', dest='max_period', type=int,
                           default=None)

    def orbits_command(matrix_file, max_period):
        if max_period is None:
            max_period = hookenv.config('orbit-max-period')
        a = load_matrix(matrix_file)
        data = symclass.toral_orbit_data(a, max_period)
        payload = Payload(codec.orbits_to_json(data))
        payload['max_period'] = max_period
        payload['lefschetz'] = [symclass.lefschetz_from_orbits(data, n)
                                for n in range(1, max_period + 1)]
        return payload
    return orbits_command


@cmdline.subcommand()
def relations(order: int = None, max_k: int = 5):
    """Orbit bifurcation identities"""
    return Payload(
        symclass.bifurcation_relations(order_or_default(order), max_k),
        template='relations.txt')
