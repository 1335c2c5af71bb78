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

"""Lefschetz numbers and zeta functions of graded homology maps.

The zeta function is computed two ways, by traces of powers and by
characteristic polynomials, and a third time as the section-class Gromov
series assembled from the numbers RT_m with the Moebius weight F.
"""

from fractions import Fraction

from symzeta.core.hookenv import (
    log,
    DEBUG,
)
from symzeta.exactalg import (
    Matrix,
    Polynomial,
    charpoly_rev,
    det_exact,
    power_trace,
)
from symzeta.exceptions import (
    DimensionError,
    DomainError,
    ValidationError,
)
from symzeta.series import (
    DEFAULT_ORDER,
    RationalFunction,
    TruncatedSeries,
    series_exp,
    series_pow_rational,
    weight_F,
)

ALL_GENERA = 'all'


class GradedMap(object):
    """Induced maps f_{*k} on H_k(X) for k = 0..top_degree.

    A degree of rank zero is stored as None.
    """

    __slots__ = ('top_degree', 'maps')

    def __init__(self, maps, top_degree=None):
        if isinstance(maps, dict):
            if top_degree is None:
                top_degree = max(maps) if maps else -1
            maps = [maps.get(k) for k in range(top_degree + 1)]
        maps = list(maps)
        if top_degree is None:
            top_degree = len(maps) - 1
        if top_degree < 0 or len(maps) != top_degree + 1:
            raise ValidationError(
                'graded map needs one entry per degree 0..{}'.format(
                    top_degree))
        for k, m in enumerate(maps):
            if m is None:
                continue
            if not m.is_square:
                raise DimensionError(
                    'f_{} must be square, got {}x{}'.format(k, m.rows,
                                                           m.cols))
            if not m.integral:
                raise ValidationError('f_{} must be integral'.format(k))
        if maps[0] != Matrix([[1]]):
            raise ValidationError(
                'degree-0 map must be [1]: X is assumed connected')
        self.top_degree = top_degree
        self.maps = tuple(maps)

    @classmethod
    def surface(cls, a):
        """Graded map of a surface diffeomorphism acting by A on H_1."""
        if not a.is_square or a.rows % 2:
            raise DimensionError(
                'surface monodromy must be 2g x 2g, got {}x{}'.format(
                    a.rows, a.cols))
        if not a.integral:
            raise ValidationError('surface monodromy must be integral')
        det = det_exact(a)
        if det != 1:
            raise ValidationError(
                'surface monodromy must preserve orientation: det A = '
                '{}'.format(det))
        return cls([Matrix([[1]]), a, Matrix([[det]])], 2)

    def degree(self, k):
        return self.maps[k]

    def rank(self, k):
        m = self.maps[k]
        return 0 if m is None else m.rows

    @property
    def first_homology(self):
        return self.maps[1] if self.top_degree >= 1 else None

    def __eq__(self, other):
        if not isinstance(other, GradedMap):
            return NotImplemented
        return self.maps == other.maps

    def __hash__(self):
        return hash(self.maps)

    def __repr__(self):
        return 'GradedMap(top_degree={}, ranks={})'.format(
            self.top_degree,
            [self.rank(k) for k in range(self.top_degree + 1)])


def lefschetz(g, n):
    """L(f^n) = sum_k (-1)^k tr(f_{*k}^n)."""
    if n < 1:
        raise DomainError('Lefschetz power must be >= 1, got {}'.format(n))
    total = Fraction(0)
    for k, m in enumerate(g.maps):
        if m is not None:
            total += (-1) ** k * power_trace(m, n)
    return int(total)


def zeta_det(g):
    """prod_{k odd} det(I - t f_k) / prod_{k even} det(I - t f_k)."""
    numerator = Polynomial([1])
    denominator = Polynomial([1])
    for k, m in enumerate(g.maps):
        if m is None:
            continue
        if k % 2:
            numerator = numerator * charpoly_rev(m)
        else:
            denominator = denominator * charpoly_rev(m)
    return RationalFunction(numerator, denominator)


def zeta_trace(g, order=DEFAULT_ORDER):
    """exp(sum_{n <= N} L(f^n) t^n / n)."""
    a = TruncatedSeries([0] + [Fraction(lefschetz(g, n), n)
                               for n in range(1, order + 1)], order)
    return series_exp(a)


def divisors(m):
    return [d for d in range(1, m + 1) if m % d == 0]


def rt_section(g, m):
    """RT_m = sum_{m = kd} d L(f^k)."""
    if m < 1:
        raise DomainError('RT_m needs m >= 1, got {}'.format(m))
    return sum((m // k) * lefschetz(g, k) for k in divisors(m))


def gromov_section(g, order=DEFAULT_ORDER):
    """Gr^T = prod_{m <= N} F(t^m)^(RT_m / m) through t^N."""
    f = weight_F(order)
    result = TruncatedSeries.one(order)
    for m in range(1, order + 1):
        rt = rt_section(g, m)
        if rt:
            result = result * series_pow_rational(f.substitute_power(m),
                                                  Fraction(rt, m))
    log('section Gromov series through t^{} assembled'.format(order),
        level=DEBUG)
    return result


def moduli_dimension(n, g, k, kappa_dot_A):
    """Formal dimension 2(n-3)(1-g) - 2 kappa.A + 2k."""
    if n < 1 or g < 0 or k < 0:
        raise DomainError(
            'need n >= 1, g >= 0, k >= 0; got n={} g={} k={}'.format(n, g, k))
    return 2 * (n - 3) * (1 - g) - 2 * kappa_dot_A + 2 * k


def degree_zero_genus(n, kappa_dot_A):
    """Genus g with kappa.A = (n - 3)(1 - g).

    Returns the genus, None when there is no such g >= 0, or ALL_GENERA in
    complex dimension 3 when kappa.A = 0.
    """
    if n < 1:
        raise DomainError('complex dimension must be >= 1, got {}'.format(n))
    if n == 3:
        return ALL_GENERA if kappa_dot_A == 0 else None
    one_minus_g = Fraction(kappa_dot_A, n - 3)
    if one_minus_g.denominator != 1:
        return None
    genus = 1 - int(one_minus_g)
    return genus if genus >= 0 else None


def graph_intersection_sign(df, k):
    """det of ((I, I), (I, C)) with C the k-block cyclic shift of df.

    For df of even dimension this equals det(df^k - I), the sign carried
    by a k-periodic point in the intersection of the diagonal with the
    graph.
    """
    if not df.is_square:
        raise DimensionError('df must be square')
    if k < 1:
        raise DomainError('period must be >= 1, got {}'.format(k))
    n = df.rows
    size = k * n
    cyclic = [[0] * size for _ in range(size)]
    for block in range(k):
        target = (block + 1) % k
        for i in range(n):
            for j in range(n):
                cyclic[block * n + i][target * n + j] = df[i, j]
    data = []
    for i in range(size):
        data.append([int(i == j) for j in range(size)] +
                    [int(i == j) for j in range(size)])
    for i in range(size):
        data.append([int(i == j) for j in range(size)] + cyclic[i])
    return det_exact(Matrix(data))
