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
from hyperflow.measures.measures import MeasureKind, format_measure


class Command(HyperflowCommand):
    '''
    Evaluates a program and applies a measure to the result
    '''

    help = 'Prints a measure of the final hyper-distribution: bayes, shannon, ' \
           'gentropy or guesswork:A'

    def add_arguments(self, parser):
        parser.add_argument('program', help='Program file or corpus name')
        self.add_init_arguments(parser)
        parser.add_argument('--measure',
                            dest='measure',
                            default='bayes',
                            help='Measure to compute (default: bayes)')
        parser.add_argument('--precision',
                            dest='precision',
                            type=int,
                            default=None,
                            help='Working precision in bits for shannon')
        super(Command, self).add_arguments(parser)

    def process(self, **options):
        program = self.load(options['program'])
        measure = MeasureKind.parse(options['measure'])
        init = self.init_spec(program, options)
        values = [measure.value(evaluate(program, as_initial(hyper)), options['precision'])
                  for hyper in init.hypers()]

        if options['json']:
            self.write_json({'measure': str(measure),
                             'init': init.to_json(),
                             'values': [format_measure(value) for value in values]})
            return
        for value in values:
            self.stdout.write(str(format_measure(value)))
