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

'''
Console entry point. All arguments are handed to the management commands,
e.g. "hyperflow compare threebox_S threebox_I1 --init 'v=0;h~uniform'".
'''

import os
import sys

import django
from django.core.management import ManagementUtility

from hyperflow.utils.constants import EXIT_USAGE

DEFAULT_SETTINGS = 'hyperflow.settings'


class HyperflowUtility(ManagementUtility):
    '''
    Django's command dispatcher, with unknown commands counted as usage errors
    '''

    def fetch_command(self, subcommand):
        try:
            return super(HyperflowUtility, self).fetch_command(subcommand)
        except SystemExit:
            raise SystemExit(EXIT_USAGE)


def run(argv):
    '''
    Runs one command

    :param argv: arguments without the program name
    :return: the exit code
    '''
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', DEFAULT_SETTINGS)
    django.setup()
    try:
        HyperflowUtility(['hyperflow'] + list(argv)).execute()
    except SystemExit as error:
        return error.code if isinstance(error.code, int) else 0
    return 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
