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

"""Classification of symplectic matrices and periodic-orbit bookkeeping.

Types are read off exact real-root counts of the characteristic
polynomial: P counts positive real eigenvalue pairs {l, 1/l}, N counts
negative ones.
"""

from collections import namedtuple
from fractions import Fraction

from symzeta.core.hookenv import (
    config,
    log,
    DEBUG,
    WARNING,
)
from symzeta.exactalg import (
    Matrix,
    NEGATIVE_AXIS,
    POSITIVE_AXIS,
    charpoly_rev,
    det_exact,
    require_square,
    sturm_root_counts,
    symplectic_check,
    to_integer,
)
from symzeta.exceptions import (
    ConsistencyError,
    DimensionError,
    DomainError,
    ValidationError,
    WallError,
)
from symzeta.series import (
    DEFAULT_ORDER,
    TruncatedSeries,
    moebius,
)
from symzeta.zeta import divisors

E = 'E'
H = 'H'
HPRIME = 'Hprime'
MIXED = 'Mixed'

PAIR_COUNTING = 'eigenvalue pairs {l, 1/l}'


def type_tag(p, n):
    """E, H, Hprime or Mixed from the parities of P and N."""
    return {
        (0, 0): E,
        (1, 0): H,
        (0, 1): HPRIME,
        (1, 1): MIXED,
    }[(p % 2, n % 2)]


class TypeProfile(namedtuple('TypeProfile', (
        'P', 'N', 'tag', 'positive_eigenvalues', 'negative_eigenvalues',
        'walls', 'wall_bound'))):
    """Type of a symplectic matrix off the wall W_1.

    P and N count real eigenvalue pairs; positive_eigenvalues and
    negative_eigenvalues are the raw counts with multiplicity. walls lists
    the m <= wall_bound with det(A^m - I) = 0.
    """

    @classmethod
    def from_counts(cls, p, n, walls=(), wall_bound=0):
        return cls(p, n, type_tag(p, n), 2 * p, 2 * n, tuple(walls),
                   wall_bound)

    def report(self):
        return {
            'P': self.P,
            'N': self.N,
            'tag': self.tag,
            'reading': PAIR_COUNTING,
            'eigenvalue_counts': {
                'positive': self.positive_eigenvalues,
                'negative': self.negative_eigenvalues,
            },
            'walls': list(self.walls),
            'wall_bound': self.wall_bound,
        }


def _require_symplectic(a):
    require_square(a)
    if a.rows % 2:
        raise DomainError('symplectic matrices have even dimension')
    if not symplectic_check(a):
        raise ValidationError('matrix is not symplectic: A^t J A != J')


def characteristic_polynomial(a):
    """det(tI - A), by coefficient reversal of det(I - tA)."""
    require_square(a)
    return charpoly_rev(a).reversed(a.rows)


def eigenvalue_counts(a):
    """Individual real eigenvalues with multiplicity: (positive, negative)."""
    p = characteristic_polynomial(a)
    _, positive = sturm_root_counts(p, POSITIVE_AXIS)
    _, negative = sturm_root_counts(p, NEGATIVE_AXIS)
    return positive, negative


def _power_minus_identity_dets(a, bound):
    identity = Matrix.identity(a.rows)
    power = identity
    for m in range(1, bound + 1):
        power = power @ a
        yield m, det_exact(power - identity)


def wall_memberships(a, bound):
    """All m <= bound with det(A^m - I) = 0."""
    if bound < 1:
        raise DomainError('wall bound must be >= 1, got {}'.format(bound))
    require_square(a)
    return [m for m, d in _power_minus_identity_dets(a, bound) if d == 0]


def type_profile(a, wall_bound=None):
    """Classify a symplectic matrix off W_1 as E, H, Hprime or Mixed."""
    _require_symplectic(a)
    if wall_bound is None:
        wall_bound = config('wall-bound')
    identity = Matrix.identity(a.rows)
    if det_exact(a - identity) == 0:
        raise WallError(1, 'type undefined: matrix lies on wall W_1')
    walls = wall_memberships(a, wall_bound)
    if walls:
        log('matrix lies on walls W_m for m in {} (checked m <= {})'.format(
            walls, wall_bound), level=WARNING)
    positive, negative = eigenvalue_counts(a)
    if positive % 2 or negative % 2:
        raise ConsistencyError(
            'real eigenvalues of a symplectic matrix must pair up: '
            '{} positive, {} negative'.format(positive, negative))
    profile = TypeProfile.from_counts(positive // 2, negative // 2, walls,
                                      wall_bound)
    log('type profile {}'.format(profile), level=DEBUG)
    return profile


def sign_power_exact(a, m):
    """sign det(A^m - I); raises WallError on W_m."""
    if m < 1:
        raise DomainError('power must be >= 1, got {}'.format(m))
    require_square(a)
    d = det_exact(a ** m - Matrix.identity(a.rows))
    if d == 0:
        raise WallError(m)
    return 1 if d > 0 else -1


def sign_power_predicted(profile, m):
    """(-1)^(P + N(m + 1)): +1 for E, -1 for H, -(-1)^m for Hprime and
    (-1)^m for Mixed."""
    if m < 1:
        raise DomainError('power must be >= 1, got {}'.format(m))
    return (-1) ** (profile.P + profile.N * (m + 1))


def _require_toral(a):
    if a.shape != (2, 2):
        raise DimensionError('toral maps are 2x2, got {}x{}'.format(*a.shape))
    if not a.integral:
        raise ValidationError('toral maps must be integral')
    if det_exact(a) != 1:
        raise ValidationError('toral maps must have det 1')


def toral_fixed_points(a, n):
    """Fixed points of the induced map of A^n on R^2/Z^2: |det(A^n - I)|."""
    _require_toral(a)
    if n < 1:
        raise DomainError('power must be >= 1, got {}'.format(n))
    d = det_exact(a ** n - Matrix.identity(2))
    if d == 0:
        raise WallError(n)
    return int(abs(d))


class OrbitData(object):
    """Counts (e_k, h_k, h'_k) of periodic orbits of minimal period k."""

    __slots__ = ('counts',)

    def __init__(self, counts=None):
        clean = {}
        for period, values in (counts or {}).items():
            period = to_integer(period, 'orbit period')
            if period < 1:
                raise ValidationError(
                    'orbit periods must be >= 1, got {}'.format(period))
            e, h, hprime = (to_integer(v, 'orbit count') for v in values)
            if min(e, h, hprime) < 0:
                raise ValidationError(
                    'orbit counts must be non-negative at period '
                    '{}'.format(period))
            if e or h or hprime:
                clean[period] = (e, h, hprime)
        self.counts = clean

    def e(self, k):
        return self.counts.get(k, (0, 0, 0))[0]

    def h(self, k):
        return self.counts.get(k, (0, 0, 0))[1]

    def hprime(self, k):
        return self.counts.get(k, (0, 0, 0))[2]

    def periods(self):
        return sorted(self.counts)

    def __eq__(self, other):
        if not isinstance(other, OrbitData):
            return NotImplemented
        return self.counts == other.counts

    def __hash__(self):
        return hash(tuple(sorted(self.counts.items())))

    def __repr__(self):
        return 'OrbitData({})'.format(self.counts)


def toral_orbit_data(a, max_period):
    """Moebius-inverted orbit counts of a hyperbolic toral map."""
    _require_toral(a)
    trace = a[0, 0] + a[1, 1]
    if abs(trace) <= 2:
        raise DomainError(
            'toral orbit counting needs a hyperbolic matrix; trace {} gives '
            'an elliptic or parabolic map'.format(trace))
    fixed = {d: toral_fixed_points(a, d) for d in range(1, max_period + 1)}
    counts = {}
    for k in range(1, max_period + 1):
        total = sum(moebius(k // d) * fixed[d] for d in divisors(k))
        orbits = Fraction(total, k)
        if orbits.denominator != 1 or orbits < 0:
            raise ConsistencyError(
                'orbit count at period {} is {}'.format(k, orbits))
        # A^k has negative eigenvalues only for negative trace and odd k
        if trace > 0 or k % 2 == 0:
            counts[k] = (0, int(orbits), 0)
        else:
            counts[k] = (0, 0, int(orbits))
    return OrbitData(counts)


def f_elliptic(order):
    """f_E(t) = 1/(1 - t)."""
    return TruncatedSeries([1, -1], order).inverse()


def f_hyperbolic(order):
    """f_H(t) = 1 - t."""
    return TruncatedSeries([1, -1], order)


def f_hyperbolic_prime(order):
    """f_H'(t) = 1 + t."""
    return TruncatedSeries([1, 1], order)


def zeta_from_orbits(orbits, order=DEFAULT_ORDER):
    """prod_k (1/(1 - t^k))^(e_k - h_k) (1 + t^k)^(h'_k)."""
    result = TruncatedSeries.one(order)
    for k in orbits.periods():
        if k > order:
            continue
        exponent = orbits.e(k) - orbits.h(k)
        if exponent:
            result = result * f_elliptic(order).substitute_power(k) ** exponent
        if orbits.hprime(k):
            result = result * (f_hyperbolic_prime(order).substitute_power(k) **
                               orbits.hprime(k))
    return result


def lefschetz_from_orbits(orbits, n):
    """L(f^n) = sum_{k | n} k (e_k - h_k - (-1)^(n/k) h'_k)."""
    if n < 1:
        raise DomainError('power must be >= 1, got {}'.format(n))
    return sum(k * (orbits.e(k) - orbits.h(k) -
                    (-1) ** (n // k) * orbits.hprime(k))
               for k in divisors(n))


def bifurcation_relations(order=DEFAULT_ORDER, max_k=5):
    """Check the orbit-bifurcation identities as truncated series.

    An elliptic orbit meeting a hyperbolic one cancels,
    f_E(t^k) f_H(t^k) = 1, and a period-doubling bifurcation trades a
    negative hyperbolic orbit for an elliptic one and a positive hyperbolic
    orbit of twice the period, f_H'(t^k) = f_E(t^k) f_H(t^2k).
    """
    one = TruncatedSeries.one(order)
    rows = []
    for k in range(1, max_k + 1):
        fe = f_elliptic(order).substitute_power(k)
        fh = f_hyperbolic(order).substitute_power(k)
        fh2 = f_hyperbolic(order).substitute_power(2 * k)
        fhp = f_hyperbolic_prime(order).substitute_power(k)
        rows.append({
            'k': k,
            'cancellation': fe * fh == one,
            'period_doubling': fhp == fe * fh2,
        })
    return {
        'order': order,
        'relations': rows,
        'all_hold': all(r['cancellation'] and r['period_doubling']
                        for r in rows),
    }
