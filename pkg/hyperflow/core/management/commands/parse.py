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
from hyperflow.lang.printer import pretty_print
from hyperflow.lang.validator import validate


class Command(HyperflowCommand):
    '''
    Parses and validates a program, printing it in canonical form
    '''

    help = 'Parses and validates a program. Warnings are written to stderr.'

    def add_arguments(self, parser):
        parser.add_argument('program', help='Program file or corpus name')
        super(Command, self).add_arguments(parser)

    def process(self, **options):
        program = self.load(options['program'])
        diagnostics = validate(program)
        if options['json']:
            self.write_json({'program': pretty_print(program),
                             'diagnostics': [d.to_json() for d in diagnostics]})
            return
        for diagnostic in diagnostics:
            self.stderr.write('warning: {0!r}'.format(diagnostic))
        self.stdout.write(pretty_print(program), ending='')
