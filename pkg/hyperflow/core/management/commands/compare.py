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

from hyperflow.core.management.base import HyperflowCommand
from hyperflow.core.services import ORDER_REFINE, compare_programs, parse_order


logger = logging.getLogger(__name__)


class Command(HyperflowCommand):
    '''
    Compares a specification and an implementation, pointwise over the
    initial split-states
    '''

    help = 'Checks refinement ("refine") or an elementary order ' \
           '("elementary:MEASURE") between two programs. Exits with 1 if it fails.'

    def add_arguments(self, parser):
        parser.add_argument('spec', help='Specification program')
        parser.add_argument('impl', help='Implementation program')
        self.add_init_arguments(parser)
        parser.add_argument('--order',
                            dest='order',
                            default=ORDER_REFINE,
                            help='refine or elementary:MEASURE (default: refine)')
        super(Command, self).add_arguments(parser)

    def process(self, **options):
        order = parse_order(options['order'])
        spec = self.load(options['spec'])
        impl = self.load(options['impl'])
        init = self.init_spec(spec, options)
        results = compare_programs(spec, impl, init, order)
        holds = all(result.holds for result in results)
        logger.info('{0} checked from {1} initial states'.format(options['order'], len(results)))

        if options['json']:
            self.write_json({
                'order': options['order'],
                'init': init.to_json(),
                'holds': holds,
                'results': [dict(result.result.to_json(), state=init.describe(result.state))
                            for result in results],
            })
        else:
            for result in results:
                self.stdout.write('{0}: {1}'.format(init.describe(result.state),
                                                    'holds' if result.holds else 'fails'))
                self.write_json(result.result.to_json())

        if not holds:
            self.fail('{0} does not hold'.format(options['order']))
