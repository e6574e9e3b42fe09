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
from hyperflow.core.services import as_initial, evaluate
from hyperflow.probcore.values import format_value
from hyperflow.utils.helpers import format_rational


class Command(HyperflowCommand):
    '''
    Evaluates a program from the given initial state
    '''

    help = 'Evaluates a program and prints the final hyper-distribution'

    def add_arguments(self, parser):
        parser.add_argument('program', help='Program file or corpus name')
        self.add_init_arguments(parser)
        super(Command, self).add_arguments(parser)

    def process(self, **options):
        program = self.load(options['program'])
        init = self.init_spec(program, options)
        results = [evaluate(program, as_initial(hyper)) for hyper in init.hypers()]

        if options['json']:
            self.write_json({'init': init.to_json(),
                             'results': [result.to_json() for result in results]})
            return

        for number, result in enumerate(results):
            if init.is_sampled:
                self.stdout.write('# prior {0}'.format(number + 1))
            for state, p in result.items():
                inner = ', '.join('{0}@{1}'.format(format_value(h), format_rational(q))
                                  for h, q in state.delta.items())
                self.stdout.write('{0}  {1}  {{{2}}}'.format(format_rational(p),
                                                             format_value(state.v), inner))
