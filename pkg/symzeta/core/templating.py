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

import os

from jinja2 import Environment, FileSystemLoader, exceptions

from symzeta.core import hookenv


def render(source, context, templates_dir=None, filters=None,
           config_template=None):
    """
    Render a template.

    The `source` path, if not absolute, is relative to the `templates_dir`.

    The context should be a dict containing the values to be replaced in the
    template.

    `filters` is an optional mapping of extra Jinja2 filters made available
    to the template.

    config_template may be provided to render from a provided template instead
    of loading from a file.

    If omitted, `templates_dir` defaults to the `templates` folder in the
    package.

    The rendered template is returned as a string.
    """
    if templates_dir is None:
        templates_dir = os.path.join(hookenv.package_dir(), 'templates')
    template_env = Environment(loader=FileSystemLoader(templates_dir),
                               keep_trailing_newline=True,
                               trim_blocks=True, lstrip_blocks=True)
    template_env.filters.update(filters or {})

    # load from a string if provided explicitly
    if config_template is not None:
        template = template_env.from_string(config_template)
    else:
        try:
            template = template_env.get_template(source)
        except exceptions.TemplateNotFound as e:
            hookenv.log('Could not load template %s from %s.' %
                        (source, templates_dir),
                        level=hookenv.ERROR)
            raise e
    return template.render(context)
