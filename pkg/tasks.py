# -*- coding: utf-8 -*-

# This file is part of hyperflow.
#
# hyperflow is free software: you can redistribute it and/or modify
# it under the terms of the GNU Affero General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# hyperflow is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU Affero General Public License


import os
import sys
import logging
from invoke import task

import django
from django.core.management import call_command

logger = logging.getLogger(__name__)

ROOT = os.path.dirname(os.path.abspath(__file__))


@task(help={'settings-path': 'Settings module to use. Leave empty for default',
            'labels': 'Test labels, e.g. "hyperflow.refine". Default: all',
            'verbosity': 'Verbosity of the test runner. Default: 1'})
def test(context, settings_path=None, labels='', verbosity=1):
    '''
    Runs the test-suite
    '''
    setup_django_environment(settings_path)
    call_command('test', *labels.split(), verbosity=int(verbosity))


@task(help={'settings-path': 'Settings module to use. Leave empty for default',
            'case': 'Run only this reference case. Default: all'})
def selftest(context, settings_path=None, case=None):
    '''
    Recomputes the built-in reference values
    '''
    setup_django_environment(settings_path)
    call_command('selftest', cases=[case] if case else None)


@task(help={'builder': 'Sphinx builder. Default: html'})
def docs(context, builder='html'):
    '''
    Builds the documentation
    '''
    source = os.path.join(ROOT, 'docs')
    context.run('sphinx-build -b {0} {1} {2}'.format(builder, source,
                                                    os.path.join(source, '_build', builder)))


@task
def config_location(context):
    '''
    Returns the location of the program corpus and the settings in use
    '''
    setup_django_environment(None)
    from hyperflow.utils.helpers import hyperflow_setting
    print('Default locations:')
    print('* settings:  {0}'.format(os.environ[django.conf.ENVIRONMENT_VARIABLE]))
    print('* corpus:    {0}'.format(hyperflow_setting('CORPUS_DIR')))


#
#
# Helper functions
#


def setup_django_environment(settings_path):
    '''
    Setup the django environment
    '''

    # Use default settings if the user didn't specify something else
    if settings_path is None:
        settings_path = 'hyperflow.settings'
        print('*** No settings given, using {0}'.format(settings_path))

    if settings_path.endswith('.py'):
        settings_module_dir, settings_file = os.path.split(settings_path)
        settings_path = settings_file[:-3]
        if '.' in settings_path:
            print("'.' is not an allowed character in the settings-file")
            sys.exit(1)
        sys.path.append(settings_module_dir)

    sys.path.insert(0, ROOT)
    os.environ[django.conf.ENVIRONMENT_VARIABLE] = settings_path
    django.setup()
