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
from hyperflow.core.services import evaluate
from hyperflow.semantics.normal_form import eval_via_normal_form, normal_form
from hyperflow.semantics.state import Scope
from hyperflow.utils.exceptions import InternalAssertion


logger = logging.getLogger(__name__)


class Command(HyperflowCommand):
    '''
    Evaluates a program both directly and through its normal form
    '''

    help = 'Cross-checks the direct evaluation against the normal form. ' \
           'Exits with 3 if they disagree.'

    def add_arguments(self, parser):
        parser.add_argument('program', help='Program file or corpus name')
        self.add_init_arguments(parser)
        super(Command, self).add_arguments(parser)

    def process(self, **options):
        program = self.load(options['program'])
        init = self.init_spec(program, options)
        form = normal_form(program, Scope.from_decls(program))

        states = sorted(init.split_states(), key=lambda s: s.sort_key())
        for state in states:
            direct = evaluate(program, state)
            via_form = eval_via_normal_form(form, state)
            if direct != via_form:
                raise InternalAssertion('normal form disagrees from {0}: {1!r} != {2!r}'
                                        .format(init.describe(state), via_form, direct))
            logger.debug('normal form agrees from {0}'.format(init.describe(state)))

        if options['json']:
            self.write_json({'size': form.size, 'states': len(states), 'agree': True})
        else:
            self.stdout.write('normal form of size {0} agrees on {1} initial states'
                              .format(form.size, len(states)))
