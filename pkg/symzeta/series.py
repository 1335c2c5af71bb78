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

"""Truncated power series and rational functions over the rationals."""

from fractions import Fraction

from symzeta.core import strutils
from symzeta.core.hookenv import (
    cached,
    log,
    TRACE,
)
from symzeta.exactalg import (
    Polynomial,
    format_polynomial,
    poly_gcd,
    to_fraction,
)
from symzeta.exceptions import DomainError

DEFAULT_ORDER = 16


class TruncatedSeries(object):
    """Power series known through t^order.

    Arithmetic between series of different orders truncates to the smaller
    order, and equality compares coefficients through the common order.
    """

    __slots__ = ('order', 'coefficients')

    def __init__(self, coefficients, order=None):
        cs = [to_fraction(c) for c in coefficients]
        if order is None:
            order = max(len(cs) - 1, 0)
        if order < 0:
            raise DomainError('series order must be >= 0, got '
                              '{}'.format(order))
        cs = cs[:order + 1]
        cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        self.order = order
        self.coefficients = tuple(cs)

    @classmethod
    def one(cls, order):
        return cls([1], order)

    @classmethod
    def zero(cls, order):
        return cls([], order)

    @classmethod
    def from_polynomial(cls, p, order):
        return cls(p.coefficients, order)

    def __getitem__(self, k):
        if 0 <= k <= self.order:
            return self.coefficients[k]
        raise IndexError('coefficient t^{} beyond order {}'.format(
            k, self.order))

    def constant(self):
        return self.coefficients[0]

    def truncate(self, order):
        return TruncatedSeries(self.coefficients, min(order, self.order))

    def _common(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries([other], self.order)
        return other, min(self.order, other.order)

    def __add__(self, other):
        other, n = self._common(other)
        return TruncatedSeries([self.coefficients[k] + other.coefficients[k]
                                for k in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coefficients], self.order)

    def __sub__(self, other):
        other, _ = self._common(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other, n = self._common(other)
        a, b = self.coefficients, other.coefficients
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            if a[i]:
                for j in range(n + 1 - i):
                    out[i + j] += a[i] * b[j]
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def scale(self, c):
        c = to_fraction(c)
        return TruncatedSeries([c * x for x in self.coefficients], self.order)

    def inverse(self):
        """Multiplicative inverse; needs a nonzero constant term."""
        a0 = self.coefficients[0]
        if a0 == 0:
            raise DomainError('series with zero constant term is not '
                              'invertible')
        n = self.order
        out = [Fraction(0)] * (n + 1)
        out[0] = 1 / a0
        for k in range(1, n + 1):
            acc = sum(self.coefficients[j] * out[k - j]
                      for j in range(1, k + 1))
            out[k] = -acc / a0
        return TruncatedSeries(out, n)

    def __truediv__(self, other):
        other, _ = self._common(other)
        return self * other.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = TruncatedSeries.one(self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def derivative(self):
        """Formal derivative; the order drops by one (floored at 0)."""
        cs = [k * c for k, c in enumerate(self.coefficients)][1:]
        return TruncatedSeries(cs, max(self.order - 1, 0))

    def substitute_power(self, k):
        """Return a(t^k), keeping the same order."""
        if k < 1:
            raise DomainError('substitution power must be >= 1')
        out = [Fraction(0)] * (self.order + 1)
        for i, c in enumerate(self.coefficients):
            if i * k > self.order:
                break
            out[i * k] = c
        return TruncatedSeries(out, self.order)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncatedSeries([other], self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coefficients[:n + 1] == other.coefficients[:n + 1]

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __repr__(self):
        return 'TruncatedSeries({}, order={})'.format(
            [strutils.rational_to_string(c) for c in self.coefficients],
            self.order)

    def __str__(self):
        return '{} + O(t^{})'.format(format_polynomial(self.coefficients),
                                     self.order + 1)


def series_compose_power(a, k):
    """Substitute t -> t^k."""
    return a.substitute_power(k)


def series_exp(a):
    """exp(a) for a with zero constant term, via b' = a' b."""
    if a.constant() != 0:
        raise DomainError('exp needs a zero constant term, got '
                          '{}'.format(a.constant()))
    n = a.order
    b = [Fraction(0)] * (n + 1)
    b[0] = Fraction(1)
    for k in range(1, n + 1):
        b[k] = sum(j * a[j] * b[k - j] for j in range(1, k + 1)) / k
    return TruncatedSeries(b, n)


def series_log(a):
    """log(a) for a with constant term 1, via l' = a'/a."""
    if a.constant() != 1:
        raise DomainError('log needs constant term 1, got '
                          '{}'.format(a.constant()))
    n = a.order
    out = [Fraction(0)] * (n + 1)
    for k in range(1, n + 1):
        acc = k * a[k] - sum(j * out[j] * a[k - j] for j in range(1, k))
        out[k] = acc / k
    return TruncatedSeries(out, n)


def series_pow_rational(a, r):
    """a^r = exp(r log a) for a with constant term 1."""
    r = to_fraction(r)
    if a.constant() != 1:
        raise DomainError('rational powers need constant term 1, got '
                          '{}'.format(a.constant()))
    return series_exp(series_log(a).scale(r))


@cached
def moebius(m):
    """The Moebius function by trial division."""
    if m < 1:
        raise DomainError('moebius is defined for m >= 1, got {}'.format(m))
    result = 1
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def moebius_phi(order):
    """phi(t) = sum_{m <= order} mu(m) t^m."""
    return TruncatedSeries([0] + [moebius(m) for m in range(1, order + 1)],
                           order)


def weight_F(order):
    """The Moebius weight F(t) = exp(phi(t)) through t^order."""
    log('computing weight F through t^{}'.format(order), level=TRACE)
    return series_exp(moebius_phi(order))


def euler_product(order):
    """prod_{k <= order} F(t^k); equals e^t through t^order."""
    f = weight_F(order)
    result = TruncatedSeries.one(order)
    for k in range(1, order + 1):
        result = result * f.substitute_power(k)
    return result


def exponential_series(order):
    """e^t through t^order with exact factorial reciprocals."""
    out = [Fraction(1)]
    for k in range(1, order + 1):
        out.append(out[-1] / k)
    return TruncatedSeries(out, order)


class RationalFunction(object):
    """numerator / denominator with the denominator nonzero at t = 0.

    The canonical form has coprime numerator and denominator and a
    denominator with constant term 1; construct with ``canonical=False``
    to keep a raw pair.
    """

    __slots__ = ('numerator', 'denominator')

    def __init__(self, numerator, denominator=None, canonical=True):
        if not isinstance(numerator, Polynomial):
            numerator = Polynomial(numerator)
        if denominator is None:
            denominator = Polynomial([1])
        elif not isinstance(denominator, Polynomial):
            denominator = Polynomial(denominator)
        if denominator.coefficient(0) == 0:
            raise DomainError(
                'denominator {} vanishes at t = 0'.format(denominator))
        if canonical:
            numerator, denominator = _canonical_pair(numerator, denominator)
        self.numerator = numerator
        self.denominator = denominator

    @classmethod
    def one_minus_t_power(cls, k):
        """(1 - t)^k for any integer k."""
        if k >= 0:
            return cls(Polynomial.one_minus_t(k))
        return cls(Polynomial([1]), Polynomial.one_minus_t(-k))

    def canonical(self):
        return RationalFunction(self.numerator, self.denominator)

    def is_canonical(self):
        c = self.canonical()
        return (c.numerator == self.numerator and
                c.denominator == self.denominator)

    def __mul__(self, other):
        other = _as_ratfun(other)
        return RationalFunction(self.numerator * other.numerator,
                                self.denominator * other.denominator)

    __rmul__ = __mul__

    def inverse(self):
        if self.numerator.coefficient(0) == 0:
            raise DomainError('{} is not invertible at t = 0'.format(self))
        return RationalFunction(self.denominator, self.numerator)

    def __truediv__(self, other):
        return self * _as_ratfun(other).inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction(self.numerator ** n, self.denominator ** n)

    def expand(self, order=DEFAULT_ORDER):
        return ratfun_expand(self, order)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Polynomial)):
            other = _as_ratfun(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        a, b = self.canonical(), other.canonical()
        return (a.numerator == b.numerator and
                a.denominator == b.denominator)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        c = self.canonical()
        return hash((c.numerator, c.denominator))

    def __repr__(self):
        return 'RationalFunction({!r}, {!r})'.format(self.numerator,
                                                     self.denominator)

    def __str__(self):
        if self.denominator == Polynomial([1]):
            return str(self.numerator)
        return '({}) / ({})'.format(self.numerator, self.denominator)


def _as_ratfun(value):
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, Polynomial):
        return RationalFunction(value)
    return RationalFunction(Polynomial([value]))


def _canonical_pair(numerator, denominator):
    if numerator.is_zero():
        return Polynomial(), Polynomial([1])
    g = poly_gcd(numerator, denominator)
    if g.degree() > 0:
        numerator = numerator // g
        denominator = denominator // g
    scale = denominator.coefficient(0)
    return (Polynomial([c / scale for c in numerator.coefficients]),
            Polynomial([c / scale for c in denominator.coefficients]))


def ratfun_expand(r, order=DEFAULT_ORDER):
    """Taylor expansion of R at t = 0 through t^order."""
    if r.denominator.coefficient(0) == 0:
        raise DomainError('denominator vanishes at t = 0')
    num = TruncatedSeries.from_polynomial(r.numerator, order)
    den = TruncatedSeries.from_polynomial(r.denominator, order)
    return num * den.inverse()
