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

"""Exact integer/rational linear algebra.

Dense matrices over the rationals, univariate polynomials, fraction-free
determinants, reversed characteristic polynomials, Smith normal form with
unimodular transforms, the symplectic check and Sturm root counting.
"""

from fractions import Fraction
from functools import reduce
from math import gcd

from symzeta.core import strutils
from symzeta.core.hookenv import (
    log,
    DEBUG,
)
from symzeta.exceptions import (
    DimensionError,
    DomainError,
)

INTERLEAVED = 'interleaved'
BLOCK = 'block'

# Open intervals for sturm_root_counts; None is an infinite endpoint.
REAL_LINE = (None, None)
POSITIVE_AXIS = (0, None)
NEGATIVE_AXIS = (None, 0)


def to_fraction(value):
    """Convert an int, Fraction or "p/q" string to an exact rational."""
    if isinstance(value, bool):
        raise DomainError('boolean {!r} is not a rational entry'.format(value))
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return strutils.rational_from_string(value)
        except ValueError as e:
            raise DomainError(str(e))
    raise DomainError(
        'unsupported entry {!r}: only integers and "p/q" strings are '
        'exact'.format(value))


def to_integer(value, what='value'):
    """Convert an int or integral "n" string to an exact integer."""
    try:
        value = to_fraction(value)
    except DomainError as e:
        raise DomainError('{}: {}'.format(what, e))
    if value.denominator != 1:
        raise DomainError(
            '{} must be an integer, got {}'.format(what, value))
    return value.numerator


def _lcm(a, b):
    return a * b // gcd(a, b)


def _sign(x):
    return (x > 0) - (x < 0)


class Matrix(object):
    """Dense exact-rational matrix.

    Entries are stored row-major as Fractions. The ``integral`` flag is
    always recomputed from the entries.
    """

    __slots__ = ('rows', 'cols', 'entries', 'integral')

    def __init__(self, data):
        data = [list(row) for row in data]
        if not data or not data[0]:
            raise DimensionError('matrix needs at least one row and column')
        cols = len(data[0])
        if any(len(row) != cols for row in data):
            raise DimensionError('ragged matrix rows')
        self.rows = len(data)
        self.cols = cols
        self.entries = tuple(to_fraction(x) for row in data for x in row)
        self.integral = all(x.denominator == 1 for x in self.entries)

    @classmethod
    def from_entries(cls, rows, cols, entries):
        entries = list(entries)
        if rows < 1 or cols < 1 or len(entries) != rows * cols:
            raise DimensionError(
                'expected {}x{} entries, got {}'.format(rows, cols,
                                                        len(entries)))
        return cls([entries[i * cols:(i + 1) * cols] for i in range(rows)])

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows, cols=None):
        cols = rows if cols is None else cols
        return cls([[0] * cols for _ in range(rows)])

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def is_square(self):
        return self.rows == self.cols

    def __getitem__(self, index):
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_lists(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def to_int_lists(self):
        if not self.integral:
            raise DomainError('matrix has non-integral entries')
        return [[int(x) for x in self.row(i)] for i in range(self.rows)]

    def transpose(self):
        return Matrix([[self[i, j] for i in range(self.rows)]
                       for j in range(self.cols)])

    def scale(self, c):
        c = to_fraction(c)
        return Matrix.from_entries(self.rows, self.cols,
                                   [c * x for x in self.entries])

    def trace(self):
        require_square(self)
        return sum((self[i, i] for i in range(self.rows)), Fraction(0))

    def _check_shape(self, other):
        if self.shape != other.shape:
            raise DimensionError(
                'shape mismatch {} vs {}'.format(self.shape, other.shape))

    def __add__(self, other):
        self._check_shape(other)
        return Matrix.from_entries(
            self.rows, self.cols,
            [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._check_shape(other)
        return Matrix.from_entries(
            self.rows, self.cols,
            [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return self.scale(-1)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise DimensionError(
                'cannot multiply {} by {}'.format(self.shape, other.shape))
        return Matrix(_mul(self.to_lists(), other.to_lists()))

    def __pow__(self, n):
        require_square(self)
        if n < 0:
            raise DomainError('negative matrix powers are not supported')
        return Matrix(_power(self.to_lists(), n))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return 'Matrix({})'.format(
            [[strutils.rational_to_string(x) for x in self.row(i)]
             for i in range(self.rows)])


def require_square(m):
    if not m.is_square:
        raise DimensionError(
            'square matrix required, got {}x{}'.format(m.rows, m.cols))


def _identity_lists(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def _mul(a, b):
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols]
            for row in a]


def _power(a, n):
    result = _identity_lists(len(a))
    base = a
    while n:
        if n & 1:
            result = _mul(result, base)
        n >>= 1
        if n:
            base = _mul(base, base)
    return result


def block_diagonal(*blocks):
    """Direct sum of square matrices."""
    n = sum(b.rows for b in blocks)
    data = [[0] * n for _ in range(n)]
    offset = 0
    for b in blocks:
        require_square(b)
        for i in range(b.rows):
            for j in range(b.cols):
                data[offset + i][offset + j] = b[i, j]
        offset += b.rows
    return Matrix(data)


class Polynomial(object):
    """Univariate polynomial with exact rational coefficients.

    Coefficients are in ascending order (constant term first) with trailing
    zeros trimmed; the zero polynomial has no coefficients.
    """

    __slots__ = ('coefficients',)

    def __init__(self, coefficients=()):
        cs = [to_fraction(c) for c in coefficients]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coefficients = tuple(cs)

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def one_minus_t(cls, power=1):
        return cls([1, -1]) ** power

    def degree(self):
        """Index of the last nonzero coefficient; -1 for zero."""
        return len(self.coefficients) - 1

    def is_zero(self):
        return not self.coefficients

    def coefficient(self, k):
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return Fraction(0)

    @property
    def leading(self):
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def __call__(self, x):
        x = to_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        other = _as_polynomial(other)
        n = max(len(self.coefficients), len(other.coefficients))
        return Polynomial([self.coefficient(k) + other.coefficient(k)
                           for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coefficients])

    def __sub__(self, other):
        return self + (-_as_polynomial(other))

    def __rsub__(self, other):
        return _as_polynomial(other) - self

    def __mul__(self, other):
        other = _as_polynomial(other)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coefficients) +
                               len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise DomainError('negative polynomial powers are not supported')
        result = Polynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        other = _as_polynomial(other)
        if other.is_zero():
            raise DomainError('polynomial division by zero')
        remainder = list(self.coefficients)
        dd = other.degree()
        lead = other.leading
        if len(remainder) - 1 < dd:
            return Polynomial(), Polynomial(remainder)
        quotient = [Fraction(0)] * (len(remainder) - dd)
        for k in range(len(remainder) - 1, dd - 1, -1):
            c = remainder[k] / lead
            quotient[k - dd] = c
            if c:
                for j, b in enumerate(other.coefficients):
                    remainder[k - dd + j] -= c * b
        return Polynomial(quotient), Polynomial(remainder[:dd])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def derivative(self):
        return Polynomial([k * c for k, c in enumerate(self.coefficients)][1:])

    def monic(self):
        if self.is_zero():
            return self
        lead = self.leading
        return Polynomial([c / lead for c in self.coefficients])

    def reversed(self, n=None):
        """Return t^n P(1/t); n defaults to the degree."""
        n = self.degree() if n is None else n
        if n < self.degree():
            raise DomainError(
                'cannot reverse degree {} polynomial in degree {}'.format(
                    self.degree(), n))
        padded = list(self.coefficients) + [0] * (n + 1 - len(
            self.coefficients))
        return Polynomial(reversed(padded))

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coefficients)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial([other])
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return 'Polynomial({})'.format(
            [strutils.rational_to_string(c) for c in self.coefficients])

    def __str__(self):
        return format_polynomial(self.coefficients)


def _as_polynomial(value):
    if isinstance(value, Polynomial):
        return value
    return Polynomial([value])


def format_polynomial(coefficients, var='t'):
    """Render ascending coefficients like ``1 - 3t + t^2``."""
    terms = []
    for k, c in enumerate(coefficients):
        c = to_fraction(c)
        if c == 0:
            continue
        magnitude = abs(c)
        if k == 0:
            body = strutils.rational_to_string(magnitude)
        else:
            power = var if k == 1 else '{}^{}'.format(var, k)
            if magnitude == 1:
                body = power
            elif magnitude.denominator == 1:
                body = '{}{}'.format(magnitude.numerator, power)
            else:
                body = '({}){}'.format(
                    strutils.rational_to_string(magnitude), power)
        if not terms:
            terms.append(body if c > 0 else '-' + body)
        else:
            terms.append(('+ ' if c > 0 else '- ') + body)
    return ' '.join(terms) if terms else '0'


def poly_gcd(a, b):
    """Monic greatest common divisor over the rationals."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def _bareiss(rows):
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                m[i][j] = (pivot * m[i][j] - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def det_exact(m):
    """Exact determinant.

    Integral input goes through fraction-free Bareiss elimination; rational
    input has each row scaled to integers first and the scale divided back
    out at the end.
    """
    require_square(m)
    if m.integral:
        return Fraction(_bareiss(m.to_int_lists()))
    rows = []
    scale = 1
    for i in range(m.rows):
        row = m.row(i)
        d = reduce(_lcm, (x.denominator for x in row), 1)
        scale *= d
        rows.append([int(x * d) for x in row])
    return Fraction(_bareiss(rows), scale)


def charpoly_rev(m):
    """det(I - tM) by the Faddeev-LeVerrier recurrence.

    With p(x) = det(xI - M) = sum c_k x^k, the reversed polynomial
    det(I - tM) has c_{n-j} as the coefficient of t^j.
    """
    require_square(m)
    n = m.rows
    a = m.to_lists()
    c = [Fraction(0)] * (n + 1)
    c[n] = Fraction(1)
    aux = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        aux = _mul(a, aux)
        for i in range(n):
            aux[i][i] += c[n - k + 1]
        prod = _mul(a, aux)
        c[n - k] = -sum(prod[i][i] for i in range(n)) / k
    return Polynomial(reversed(c))


def power_trace(m, n):
    """tr(M^n) by binary powering; n = 0 gives dim M."""
    require_square(m)
    if n < 0:
        raise DomainError('power must be non-negative, got {}'.format(n))
    if n == 0:
        return Fraction(m.rows)
    p = _power(m.to_lists(), n)
    return sum((p[i][i] for i in range(m.rows)), Fraction(0))


class SmithDecomposition(object):
    """U * M * V = diag(D) with U, V unimodular."""

    __slots__ = ('D', 'U', 'V')

    def __init__(self, D, U, V):
        self.D = tuple(D)
        self.U = U
        self.V = V

    def diagonal_matrix(self):
        data = [[0] * self.V.rows for _ in range(self.U.rows)]
        for i, d in enumerate(self.D):
            data[i][i] = d
        return Matrix(data)

    def __repr__(self):
        return 'SmithDecomposition(D={})'.format(list(self.D))


def _swap_rows(a, i, j):
    a[i], a[j] = a[j], a[i]


def _swap_cols(a, i, j):
    for row in a:
        row[i], row[j] = row[j], row[i]


def _add_row(a, target, source, q):
    a[target] = [x + q * y for x, y in zip(a[target], a[source])]


def _add_col(a, target, source, q):
    for row in a:
        row[target] += q * row[source]


def _min_nonzero(a, t):
    best = None
    for i in range(t, len(a)):
        for j in range(t, len(a[0])):
            if a[i][j] and (best is None or abs(a[i][j]) < best[0]):
                best = (abs(a[i][j]), i, j)
    return best


def smith_normal_form(m):
    """Smith normal form with explicit unimodular transforms."""
    if not m.integral:
        raise DomainError('Smith normal form needs an integral matrix')
    a = m.to_int_lists()
    rows, cols = m.rows, m.cols
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]
    steps = 0
    for t in range(min(rows, cols)):
        found = _min_nonzero(a, t)
        if found is None:
            break
        _, pi, pj = found
        _swap_rows(a, t, pi)
        _swap_rows(u, t, pi)
        _swap_cols(a, t, pj)
        _swap_cols(v, t, pj)
        while True:
            steps += 1
            changed = False
            for i in range(t + 1, rows):
                q = a[i][t] // a[t][t]
                if q:
                    _add_row(a, i, t, -q)
                    _add_row(u, i, t, -q)
                if a[i][t]:
                    _swap_rows(a, i, t)
                    _swap_rows(u, i, t)
                    changed = True
            for j in range(t + 1, cols):
                q = a[t][j] // a[t][t]
                if q:
                    _add_col(a, j, t, -q)
                    _add_col(v, j, t, -q)
                if a[t][j]:
                    _swap_cols(a, j, t)
                    _swap_cols(v, j, t)
                    changed = True
            if changed:
                continue
            bad = next((i for i in range(t + 1, rows)
                        for j in range(t + 1, cols)
                        if a[i][j] % a[t][t]), None)
            if bad is None:
                break
            _add_row(a, t, bad, 1)
            _add_row(u, t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    diagonal = [a[i][i] for i in range(min(rows, cols))]
    log('Smith form of {}x{} matrix: D={} after {} passes'.format(
        rows, cols, diagonal, steps), level=DEBUG)
    return SmithDecomposition(diagonal, Matrix(u), Matrix(v))


def cokernel_decomposition(m):
    """Free rank and torsion coefficients of Z^rows / M Z^cols."""
    snf = smith_normal_form(m)
    nonzero = [d for d in snf.D if d != 0]
    free_rank = m.rows - len(nonzero)
    torsion = [d for d in nonzero if d > 1]
    return free_rank, torsion


def standard_j(dim, convention=INTERLEAVED):
    """The symplectic form matrix J in the requested coordinate order."""
    if dim % 2:
        raise DomainError('symplectic form needs even dimension, got '
                          '{}'.format(dim))
    n = dim // 2
    data = [[0] * dim for _ in range(dim)]
    if convention == INTERLEAVED:
        for k in range(n):
            data[2 * k][2 * k + 1] = -1
            data[2 * k + 1][2 * k] = 1
    elif convention == BLOCK:
        for k in range(n):
            data[k][n + k] = -1
            data[n + k][k] = 1
    else:
        raise DomainError('unknown J convention {!r}'.format(convention))
    return Matrix(data)


def to_interleaved(m):
    """Reorder a matrix from (q1..qn, p1..pn) to (q1, p1, ..., qn, pn)."""
    require_square(m)
    if m.rows % 2:
        raise DomainError('odd dimension {}'.format(m.rows))
    n = m.rows // 2
    perm = []
    for k in range(n):
        perm.extend((k, n + k))
    return Matrix([[m[perm[a], perm[b]] for b in range(m.cols)]
                   for a in range(m.rows)])


def symplectic_check(m, convention=INTERLEAVED):
    """True iff M^t J M = J exactly."""
    require_square(m)
    if m.rows % 2:
        raise DomainError('symplectic check needs even dimension, got '
                          '{}'.format(m.rows))
    if convention == BLOCK:
        m = to_interleaved(m)
    j = standard_j(m.rows)
    return m.transpose() @ j @ m == j


def squarefree_decomposition(p):
    """Yun's algorithm: monic factors Q_i with P = lc * prod Q_i^i."""
    p = p.monic()
    if p.degree() <= 0:
        return []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p // a
    c = dp // a
    d = c - b.derivative()
    factors = []
    i = 1
    while b.degree() > 0:
        a = poly_gcd(b, d)
        if a.degree() > 0:
            factors.append((a, i))
        b = b // a
        c = d // a
        d = c - b.derivative()
        i += 1
    return factors


def sturm_sequence(p):
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        seq.append(-(seq[-2] % seq[-1]))
    return seq[:-1]


def _sign_at(p, point, infinity_sign):
    if point is not None:
        return _sign(p(point))
    if p.is_zero():
        return 0
    lead = _sign(p.leading)
    if infinity_sign < 0 and p.degree() % 2:
        return -lead
    return lead


def _variations(signs):
    signs = [s for s in signs if s]
    return sum(1 for x, y in zip(signs, signs[1:]) if x != y)


def _count_distinct(p, lo, hi):
    """Distinct real roots of a square-free p in the open interval."""
    if p.degree() <= 0:
        return 0
    seq = sturm_sequence(p)
    v_lo = _variations([_sign_at(q, lo, -1) for q in seq])
    v_hi = _variations([_sign_at(q, hi, +1) for q in seq])
    count = v_lo - v_hi
    # v_lo - v_hi counts (lo, hi]
    if hi is not None and p(hi) == 0:
        count -= 1
    return count


def sturm_root_counts(p, interval=REAL_LINE):
    """Count real roots of P in an open interval.

    :param p: nonzero polynomial
    :param interval: (lo, hi) with None for an infinite endpoint
    :returns: (distinct, with_multiplicity)
    """
    if p.is_zero():
        raise DomainError('root counting needs a nonzero polynomial')
    lo, hi = interval
    lo = None if lo is None else to_fraction(lo)
    hi = None if hi is None else to_fraction(hi)
    if lo is not None and hi is not None and lo >= hi:
        raise DomainError('empty interval ({}, {})'.format(lo, hi))
    distinct = 0
    with_multiplicity = 0
    for factor, multiplicity in squarefree_decomposition(p):
        count = _count_distinct(factor, lo, hi)
        distinct += count
        with_multiplicity += multiplicity * count
    return distinct, with_multiplicity
