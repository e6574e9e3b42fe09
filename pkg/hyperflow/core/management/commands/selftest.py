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

from hyperflow.core.golden import registry, run_case
from hyperflow.core.management.base import HyperflowCommand
from hyperflow.utils.constants import EXIT_INTERNAL


class Command(HyperflowCommand):
    '''
    Recomputes the published reference values
    '''

    help = 'Runs the built-in reference cases. Exits with 3 if a value differs.'

    def add_arguments(self, parser):
        parser.add_argument('--case',
                            dest='cases',
                            action='append',
                            choices=list(registry),
                            help='Run only this case, may be repeated')
        super(Command, self).add_arguments(parser)

    def process(self, **options):
        names = options['cases'] or list(registry)
        results = [(name, run_case(name)) for name in names]
        failed = [name for name, checks in results if not all(c.passed for c in checks)]

        if options['json']:
            self.write_json({'cases': {name: [check.to_json() for check in checks]
                                       for name, checks in results},
                             'passed': not failed})
        else:
            for name, checks in results:
                for check in checks:
                    self.stdout.write('{0:5} {1}: {2}'.format('ok' if check.passed else 'FAIL',
                                                              name, check.label))
                    if int(options['verbosity']) >= 2 and not check.passed:
                        shown = check.to_json()
                        self.stdout.write('      expected {0}, got {1}'
                                          .format(shown['expected'], shown['actual']))

        if failed:
            self.fail('reference values differ in {0}'.format(', '.join(failed)),
                      returncode=EXIT_INTERNAL)
