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

from django.core.cache import cache
from django.core.management.base import CommandError

from hyperflow.core.management.base import HyperflowCommand
from hyperflow.core.services import as_initial, corpus_key, load_program
from hyperflow.lang.printer import pretty_print
from hyperflow.utils.cache import reset_evaluation
from hyperflow.utils.constants import EXIT_USAGE


class Command(HyperflowCommand):
    '''
    Clears cached evaluations and parsed corpus programs
    '''

    help = 'Clears the application cache. You *must* pass an option selecting ' \
           'what exactly you want to clear. See available options.'
    json_option = False

    def add_arguments(self, parser):
        parser.add_argument('--program',
                            dest='programs',
                            action='append',
                            default=[],
                            help='Clear the parsed form of this corpus program, '
                                 'or with --init its evaluation')
        parser.add_argument('--init',
                            dest='init',
                            default=None,
                            help='Together with --program, clear one evaluation')
        parser.add_argument('--seed',
                            dest='seed',
                            type=int,
                            default=None,
                            help='Seed of the sampled prior to clear')
        parser.add_argument('--clear-all',
                            action='store_true',
                            dest='clear_all',
                            default=False,
                            help='Clear ALL cached entries')

    def process(self, **options):
        if not options['programs'] and not options['clear_all']:
            raise CommandError('Please select what cache you need to delete, see help',
                               returncode=EXIT_USAGE)
        if options['init'] and not options['programs']:
            raise CommandError('--init needs a --program', returncode=EXIT_USAGE)

        for name in options['programs']:
            if int(options['verbosity']) >= 2:
                self.stdout.write('* Processing program {0}'.format(name))
            if options['init']:
                program = load_program(name)
                init = self.init_spec(program, options)
                source = pretty_print(program)
                for state in init.split_states():
                    reset_evaluation(source, repr(state))
                for hyper in init.hypers():
                    reset_evaluation(source, repr(as_initial(hyper)))
            else:
                cache.delete(corpus_key(name))

        # Nuclear option, clear all
        if options['clear_all']:
            cache.clear()
