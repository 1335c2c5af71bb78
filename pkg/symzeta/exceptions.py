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


class SymzetaError(Exception):
    """Use docstring as default message for exception."""

    def __init__(self, message=None):
        self.message = message or self.__doc__
        super(SymzetaError, self).__init__(self.message)

    def __repr__(self):
        return self.message

    def __str__(self):
        return self.message


class ValidationError(SymzetaError, ValueError):
    """Input failed validation."""
    pass


class DimensionError(ValidationError):
    """Matrix dimensions are incompatible with the operation."""
    pass


class DomainError(ValidationError):
    """Value lies outside the domain of the operation."""
    pass


class WallError(DomainError):
    """Matrix lies on a wall: some power has eigenvalue 1."""

    def __init__(self, m, message=None):
        self.m = m
        super(WallError, self).__init__(
            message or 'matrix lies on wall W_{}: det(A^{} - I) = 0'.format(
                m, m))


class HypothesisError(ValidationError):
    """Gluing hypothesis det(I - f_1) = +-1 is not satisfied."""
    pass


class IncompatibleFibersError(ValidationError):
    """Fibers being glued have different genus."""
    pass


class LookupFailure(ValidationError, KeyError):
    """Requested catalog entry does not exist."""

    def __str__(self):
        return self.message


class InvariantViolation(ValidationError):
    """Computed value violates an invariant of its input."""
    pass


class UsageError(ValidationError):
    """Command line could not be parsed."""
    pass


class ConsistencyError(SymzetaError):
    """Internal arithmetic consistency check failed."""
    pass
