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
)
from symzeta import codec
from symzeta import knots
from symzeta.exactalg import Matrix, det_exact
from symzeta.manifolds import first_homology


def add_knot_arguments(subparser):
    group = subparser.add_mutually_exclusive_group(required=True)
    group.add_argument('--knot', default=None,
                       help='Built-in knot: {}'.format(
                           ', '.join(knots.builtin_names())))
    group.add_argument('--monodromy', dest='monodromy_file', default=None,
                       metavar='FILE',
                       help='Knot or monodromy matrix JSON')


def resolve_knot(knot, monodromy_file):
    """A FiberedKnot from a built-in name or a JSON file."""
    if knot is not None:
        return knots.builtin_knot(knot)
    data = load_json(monodromy_file)
    if isinstance(data, dict) and 'monodromy' in data:
        return codec.knot_from_json(data)
    if isinstance(data, list):
        data = {'rows': data}
    m = codec.matrix_from_json(data)
    return knots.FiberedKnot('K', m.rows // 2, m)


@cmdline.subcommand_builder('alexander',
                            description="Alexander polynomial of a knot")
def alexander(subparser):
    add_knot_arguments(subparser)
    subparser.add_argument('--audit', action='store_true')

    def alexander_command(knot, monodromy_file, audit):
        k = resolve_knot(knot, monodromy_file)
        p = knots.alexander(k)
        payload = Payload(codec.polynomial_to_json(p),
                          template='polynomial.txt')
        if audit:
            payload['audit'] = knots.audit_knot(k)
        return payload
    return alexander_command


@cmdline.subcommand_builder('homology-xf',
                            description="First homology of a mapping torus")
def homology_xf(subparser):
    subparser.add_argument('--monodromy', dest='monodromy_file',
                           required=True, metavar='FILE')

    def homology_command(monodromy_file):
        k = resolve_knot(None, monodromy_file)
        report = first_homology(k.monodromy)
        report['det_I_minus_f'] = det_exact(
            Matrix.identity(k.monodromy.rows) - k.monodromy)
        return Payload(report)
    return homology_command
