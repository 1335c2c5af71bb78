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

"Interactions with the runtime environment: logging and configuration."

import logging
import os
import sys
from functools import wraps

import yaml


CRITICAL = "CRITICAL"
ERROR = "ERROR"
WARNING = "WARNING"
INFO = "INFO"
DEBUG = "DEBUG"
TRACE = "TRACE"

_LEVELS = {
    CRITICAL: logging.CRITICAL,
    ERROR: logging.ERROR,
    WARNING: logging.WARNING,
    INFO: logging.INFO,
    DEBUG: logging.DEBUG,
    TRACE: 5,
}

ENV_PREFIX = 'SYMZETA_'
CONFIG_FILE_NAME = 'config.yaml'

_logger = logging.getLogger('symzeta')

cache = {}


def cached(func):
    """Cache return values for multiple executions of func + args

    For example::

        @cached
        def moebius(m):
            pass

        moebius(6)

    will cache the result of moebius + 6 for future calls.
    """
    @wraps(func)
    def wrapper(*args, **kwargs):
        key = (func.__module__, func.__name__, args,
               tuple(sorted(kwargs.items())))
        try:
            return cache[key]
        except KeyError:
            pass  # Drop out of the exception handler scope.
        res = func(*args, **kwargs)
        cache[key] = res
        return res
    wrapper._wrapped = func
    return wrapper


def _ensure_handler():
    if _logger.handlers:
        return
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter('%(levelname)s: %(message)s'))
    _logger.addHandler(handler)
    _logger.propagate = False
    logging.addLevelName(_LEVELS[TRACE], TRACE)


def log(message, level=None):
    """Write a message to the symzeta log on stderr"""
    _ensure_handler()
    if not isinstance(message, str):
        message = repr(message)
    threshold = _LEVELS.get(str(config('log-level')).upper(), logging.WARNING)
    _logger.setLevel(threshold)
    _logger.log(_LEVELS.get(level or INFO, logging.INFO), message)


def package_dir():
    """Return the root directory of the installed package"""
    return os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def load_options(path=None):
    """Load the ``options`` section of config.yaml."""
    path = path or os.path.join(package_dir(), CONFIG_FILE_NAME)
    with open(path) as f:
        return yaml.safe_load(f.read())['options']


def _coerce(value, kind):
    if kind == 'int':
        return int(value)
    return str(value)


class Config(dict):
    """A dictionary representation of the options in config.yaml, with
    environment overrides applied.

    Each option ``some-option`` may be overridden by the environment
    variable ``SYMZETA_SOME_OPTION``. Values are coerced to the type
    declared in config.yaml.

    NOTE: Do not instantiate this object directly - instead call
    ``hookenv.config()``, which will return a cached instance.

    Example usage::

        >>> from symzeta.core import hookenv
        >>> hookenv.config('order')
        16
        >>> # SYMZETA_ORDER=20 in the environment
        >>> hookenv.config('order')
        20
    """

    def __init__(self, options, environ=None):
        super(Config, self).__init__()
        self.options = options
        environ = os.environ if environ is None else environ
        for name, spec in options.items():
            value = spec.get('default')
            env_name = ENV_PREFIX + name.replace('-', '_').upper()
            if env_name in environ:
                value = environ[env_name]
            if value is not None:
                try:
                    value = _coerce(value, spec.get('type', 'string'))
                except ValueError as e:
                    raise ValueError(
                        'Invalid value for {} from {}: {}'.format(
                            name, env_name, str(e)))
            self[name] = value


_cache_config = None


def config(scope=None):
    """
    Get the symzeta configuration (scope==None) or individual key,
    (scope=str).

    :param scope: If set, return the value for the specified key.
    :type scope: Optional[str]
    :returns: Either the whole config as a Config, or a key from it.
    :rtype: Any
    """
    global _cache_config
    if _cache_config is None:
        _cache_config = Config(load_options())
    if scope is not None:
        return _cache_config.get(scope)
    return _cache_config


def flush_config():
    """Drop the cached configuration so the next call re-reads it."""
    global _cache_config
    _cache_config = None
