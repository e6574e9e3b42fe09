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

from django.core.management.base import BaseCommand, CommandError

from hyperflow.attack.exceptions import PreconditionViolated
from hyperflow.core.initspec import InitSpec
from hyperflow.core.services import load_program
from hyperflow.semantics.state import Scope
from hyperflow.utils.constants import EXIT_INTERNAL, EXIT_USAGE, EXIT_VERDICT_FAILS
from hyperflow.utils.exceptions import HyperflowError, InternalAssertion
from hyperflow.utils.helpers import dump_json

logger = logging.getLogger(__name__)


def exit_code(error):
    '''
    The exit code an error maps to
    '''
    if isinstance(error, InternalAssertion):
        return EXIT_INTERNAL
    if isinstance(error, PreconditionViolated):
        return EXIT_VERDICT_FAILS
    return EXIT_USAGE


class HyperflowCommand(BaseCommand):
    '''
    Base class of the hyperflow commands. Subclasses implement process();
    project errors are turned into CommandErrors carrying the exit code.
    '''

    json_option = True
    requires_system_checks = []

    def add_arguments(self, parser):
        if self.json_option:
            parser.add_argument('--json',
                                action='store_true',
                                dest='json',
                                default=False,
                                help='Write the result as JSON')

    def add_init_arguments(self, parser):
        parser.add_argument('--init',
                            dest='init',
                            required=True,
                            help='Initial state, e.g. "v=bot;h~uniform"')
        parser.add_argument('--seed',
                            dest='seed',
                            type=int,
                            default=None,
                            help='Seed for sampled priors')

    def handle(self, **options):
        try:
            self.process(**options)
        except HyperflowError as error:
            raise CommandError(error.message, returncode=exit_code(error))
        except ValueError as error:
            raise CommandError(str(error), returncode=EXIT_USAGE)

    def process(self, **options):
        raise NotImplementedError

    def load(self, name):
        return load_program(name)

    def init_spec(self, program, options):
        return InitSpec(options['init'], Scope.from_decls(program), options['seed'])

    def write_json(self, data):
        self.stdout.write(dump_json(data))

    def fail(self, message, returncode=EXIT_VERDICT_FAILS):
        '''
        Ends the command with a failing verdict, after the result was written
        '''
        raise CommandError(message, returncode=returncode)
