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

import re
from fractions import Fraction

RATIONAL_RE = re.compile(r'^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$')


def rational_from_string(value):
    """Interpret a string of the form "p" or "p/q" as an exact rational.

    Returns Fraction
    """
    if not isinstance(value, str):
        msg = "Unable to interpret non-string value '%s' as rational" % (value)
        raise ValueError(msg)
    matches = RATIONAL_RE.match(value)
    if not matches:
        msg = "Unable to interpret string value '%s' as rational" % (value)
        raise ValueError(msg)
    numerator, denominator = matches.groups()
    if denominator is not None and int(denominator) == 0:
        msg = "Zero denominator in rational '%s'" % (value)
        raise ValueError(msg)
    return Fraction(int(numerator), int(denominator or 1))


def rational_to_string(value):
    """Render an exact rational as "p" or "p/q"."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '{}/{}'.format(value.numerator, value.denominator)
