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

from hyperflow.core.management.base import HyperflowCommand
from hyperflow.lang.agents import project_view
from hyperflow.lang.printer import pretty_print


class Command(HyperflowCommand):
    '''
    Prints the program as one agent sees it
    '''

    help = 'Projects a multi-agent program to the view of one agent'
    json_option = False

    def add_arguments(self, parser):
        parser.add_argument('program', help='Program file or corpus name')
        parser.add_argument('--agent',
                            dest='agent',
                            required=True,
                            help='Agent name, or "external"')

    def process(self, **options):
        program = self.load(options['program'])
        self.stdout.write(pretty_print(project_view(program, options['agent'])), ending='')
