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

import argparse
import inspect
import sys

import simplejson as json
import yaml

from symzeta import codec
from symzeta.core import hookenv
from symzeta.core import templating
from symzeta.exactalg import format_polynomial
from symzeta.exceptions import (
    SymzetaError,
    UsageError,
    ValidationError,
)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_VALIDATION = 2

DEFAULT_TEMPLATE = 'report.txt'


class Payload(dict):
    """Command output; ``template`` names the pretty-mode template."""

    def __init__(self, *args, template=DEFAULT_TEMPLATE, **kwargs):
        super(Payload, self).__init__(*args, **kwargs)
        self.template = template


def poly_filter(coefficients, var='t'):
    """Jinja2 filter: JSON coefficient list to "1 - 3t + t^2"."""
    return format_polynomial([codec.decode_entry(c) for c in coefficients],
                             var)


def ratfun_filter(data, var='t'):
    """Jinja2 filter: {"numerator", "denominator"} to "num / den"."""
    numerator = poly_filter(data['numerator'], var)
    if [codec.decode_entry(c) for c in data['denominator']] == [1]:
        return numerator
    return '({}) / ({})'.format(numerator,
                                poly_filter(data['denominator'], var))


FILTERS = {
    'poly': poly_filter,
    'ratfun': ratfun_filter,
}


class OutputFormatter(object):
    def __init__(self, outfile=None):
        self.formats = (
            "json",
            "pretty",
            "yaml",
        )
        self._outfile = outfile

    @property
    def outfile(self):
        return self._outfile or sys.stdout

    def add_arguments(self, argument_parser):
        formatgroup = argument_parser.add_mutually_exclusive_group()
        choices = self.supported_formats
        formatgroup.add_argument("--format", metavar='FMT',
                                 help="Select output format for returned "
                                      "data, where FMT is one of: "
                                      "{}".format(choices),
                                 choices=choices, default=None)
        for fmt in self.formats:
            fmtfunc = getattr(self, fmt)
            formatgroup.add_argument("-{}".format(fmt[0]),
                                     "--{}".format(fmt), action='store_const',
                                     const=fmt, dest='format',
                                     help=fmtfunc.__doc__)

    @property
    def supported_formats(self):
        return self.formats

    def json(self, output):
        """Output data in JSON format (default)"""
        self.outfile.write(codec.dumps(output))
        self.outfile.write('\n')

    def pretty(self, output):
        """Output data as human-readable text"""
        template = getattr(output, 'template', DEFAULT_TEMPLATE)
        text = templating.render(template, {'data': codec.to_jsonable(output)},
                                 filters=FILTERS)
        self.outfile.write(text)

    def yaml(self, output):
        """Output data in YAML format"""
        yaml.safe_dump(codec.to_jsonable(output), self.outfile,
                       default_flow_style=False)

    def format_output(self, output, fmt=None):
        fmt = fmt or hookenv.config('output-format')
        if fmt not in self.formats:
            raise UsageError('unknown output format {!r}'.format(fmt))
        fmtfunc = getattr(self, fmt)
        fmtfunc(output)


class ArgumentParser(argparse.ArgumentParser):
    """Parser reporting usage problems as UsageError instead of exiting."""

    def error(self, message):
        raise UsageError(message)


class CommandLine(object):
    argument_parser = None
    subparsers = None
    formatter = None
    errfile = None

    def __init__(self, outfile=None, errfile=None):
        if not self.argument_parser:
            self.argument_parser = ArgumentParser(
                prog='symzeta',
                description='Exact zeta functions, Alexander polynomials '
                            'and Gromov series')
        if not self.formatter:
            self.formatter = OutputFormatter(outfile)
            self.formatter.add_arguments(self.argument_parser)
        if not self.subparsers:
            self.subparsers = self.argument_parser.add_subparsers(
                help='Commands', dest='command')
        self.errfile = errfile

    def subcommand(self, command_name=None):
        """
        Decorate a function as a subcommand. Use its arguments as the
        command-line arguments"""
        def wrapper(decorated):
            cmd_name = command_name or decorated.__name__
            subparser = self.subparsers.add_parser(
                cmd_name, description=decorated.__doc__)
            for args, kwargs in describe_arguments(decorated):
                subparser.add_argument(*args, **kwargs)
            subparser.set_defaults(func=decorated)
            return decorated
        return wrapper

    def subcommand_builder(self, command_name, description=None):
        """
        Decorate a function that builds a subcommand. Builders should accept a
        single argument (the subparser instance) and return the function to be
        run as the command."""
        def wrapper(decorated):
            subparser = self.subparsers.add_parser(command_name)
            func = decorated(subparser)
            subparser.set_defaults(func=func)
            subparser.description = description or func.__doc__
            return decorated
        return wrapper

    def _report_error(self, error):
        errfile = self.errfile or sys.stderr
        errfile.write(json.dumps({
            'error': type(error).__name__,
            'message': str(error),
        }, sort_keys=True))
        errfile.write('\n')

    def run(self, argv=None):
        "Run cli, processing arguments and executing subcommands."
        try:
            arguments = self.argument_parser.parse_args(argv)
            func = getattr(arguments, 'func', None)
            if func is None:
                raise UsageError('a command is required')
            argspec = inspect.getfullargspec(func)
            vargs = []
            for arg in argspec.args:
                vargs.append(getattr(arguments, arg))
            output = func(*vargs)
            self.formatter.format_output(output, arguments.format)
        except SystemExit as e:
            # --help
            return e.code or EXIT_OK
        except ValidationError as e:
            self._report_error(e)
            return EXIT_VALIDATION
        except SymzetaError as e:
            self._report_error(e)
            return EXIT_INTERNAL
        except Exception as e:
            hookenv.log('unexpected failure: {!r}'.format(e),
                        level=hookenv.DEBUG)
            self._report_error(e)
            return EXIT_INTERNAL
        return EXIT_OK


cmdline = CommandLine()


def describe_arguments(func):
    """
    Analyze a function's signature and return a data structure suitable for
    passing in as arguments to an argparse parser's add_argument() method.

    Keyword arguments become dashed options and annotations become the
    argument type."""

    argspec = inspect.getfullargspec(func)
    annotations = argspec.annotations
    if argspec.defaults:
        positional_args = argspec.args[:-len(argspec.defaults)]
        keyword_names = argspec.args[-len(argspec.defaults):]
        for arg, default in zip(keyword_names, argspec.defaults):
            option = '--{}'.format(arg.replace('_', '-'))
            kwargs = {'dest': arg, 'default': default}
            if arg in annotations:
                kwargs['type'] = annotations[arg]
            yield (option,), kwargs
    else:
        positional_args = argspec.args

    for arg in positional_args:
        kwargs = {}
        if arg in annotations:
            kwargs['type'] = annotations[arg]
        yield (arg,), kwargs


def load_json(path):
    return codec.load_file(path)


def load_matrix(path):
    """A matrix from {"rows": ...}, a knot object or a bare list of rows."""
    data = load_json(path)
    if isinstance(data, list):
        return codec.matrix_from_json({'rows': data})
    if isinstance(data, dict) and 'monodromy' in data:
        return codec.knot_from_json(data).monodromy
    return codec.matrix_from_json(data)


def order_or_default(order):
    return hookenv.config('order') if order is None else order
