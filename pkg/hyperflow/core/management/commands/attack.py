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

import logging

from hyperflow.attack.synthesis import METHOD_AUTO, METHODS, synthesize_and_verify
from hyperflow.core.management.base import HyperflowCommand
from hyperflow.core.services import as_initial, initial_hyper
from hyperflow.utils.constants import EXIT_INTERNAL


logger = logging.getLogger(__name__)


class Command(HyperflowCommand):
    '''
    Synthesizes a context that makes a non-refining implementation leak
    more than its specification
    '''

    help = 'Builds and checks an attack context for a failed refinement. The report ' \
           'is written to stdout as JSON, the context to the --output file.'
    json_option = False

    def add_arguments(self, parser):
        parser.add_argument('spec', help='Specification program')
        parser.add_argument('impl', help='Implementation program')
        self.add_init_arguments(parser)
        parser.add_argument('-o', '--output',
                            dest='output',
                            default=None,
                            help='Write the context program to this file')
        parser.add_argument('--method',
                            dest='method',
                            choices=METHODS,
                            default=METHOD_AUTO,
                            help='How to find the separating direction (default: auto)')
        parser.add_argument('--cap',
                            dest='cap',
                            type=int,
                            default=None,
                            help='Maximum number of vertices to enumerate')

    def process(self, **options):
        spec = self.load(options['spec'])
        impl = self.load(options['impl'])
        init = as_initial(initial_hyper(self.init_spec(spec, options)))
        report = synthesize_and_verify(spec, impl, init, options['method'], options['cap'])

        if options['output']:
            with open(options['output'], 'w') as context_file:
                context_file.write(report.source)
            logger.info('context written to {0}'.format(options['output']))
        self.write_json(report.to_json())

        if not report.verdict:
            self.fail('the synthesized context does not separate the programs',
                      returncode=EXIT_INTERNAL)
