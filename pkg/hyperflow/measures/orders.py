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

'''
The elementary testing orders: S is refined by I under a measure when both
have the same functional behaviour and I leaves an attacker no better off
than S.
'''

import logging

from hyperflow.measures.exceptions import DomainMismatch
from hyperflow.measures.measures import MeasureKind, ft, format_measure
from hyperflow.utils.constants import MEASURE_BAYES

logger = logging.getLogger(__name__)

HOLDS = 'holds'
FAILS_FUNCTIONAL = 'fails-functional'
FAILS_MEASURE = 'fails-measure'
INCONCLUSIVE = 'inconclusive'


class Verdict(object):
    '''
    Outcome of comparing two hyper-distributions under a measure
    '''

    def __init__(self, outcome, measure, spec_value=None, impl_value=None):
        self.outcome = outcome
        self.measure = measure
        self.spec_value = spec_value
        self.impl_value = impl_value

    @property
    def holds(self):
        return self.outcome == HOLDS

    def __eq__(self, other):
        return isinstance(other, Verdict) and self.outcome == other.outcome

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    def __repr__(self):
        return 'Verdict({0}, {1})'.format(self.outcome, self.measure)

    def to_json(self):
        data = {'verdict': self.outcome, 'measure': str(self.measure)}
        if self.spec_value is not None:
            data['spec'] = format_measure(self.spec_value)
            data['impl'] = format_measure(self.impl_value)
        return data


def check_same_domains(spec, impl):
    if spec.scope != impl.scope:
        raise DomainMismatch('cannot compare hyper-distributions over {0!r} and {1!r}'
                             .format(spec.scope, impl.scope))


def elementary_compare(spec, impl, measure=None, precision=None, tolerance=None):
    '''
    Decides whether spec is refined by impl in the elementary testing order
    of a measure

    :param spec: HyperDist of the specification
    :param impl: HyperDist of the implementation
    :param measure: MeasureKind or its name, Bayes vulnerability by default
    :return: Verdict
    :raise DomainMismatch: the hypers are over different scopes
    '''
    if measure is None:
        measure = MeasureKind(MEASURE_BAYES)
    elif not isinstance(measure, MeasureKind):
        measure = MeasureKind.parse(measure)
    check_same_domains(spec, impl)

    if ft(spec) != ft(impl):
        return Verdict(FAILS_FUNCTIONAL, measure)
    if spec == impl:
        value = measure.value(spec, precision)
        return Verdict(HOLDS, measure, value, value)

    spec_value = measure.value(spec, precision)
    impl_value = measure.value(impl, precision)
    if measure.is_vulnerability:
        holds = impl_value <= spec_value
    elif measure.is_exact:
        holds = impl_value >= spec_value
    else:
        order = impl_value.compare(spec_value, tolerance)
        if order is None:
            logger.debug('shannon comparison inside the tolerance band')
            return Verdict(INCONCLUSIVE, measure, spec_value, impl_value)
        holds = order >= 0
    return Verdict(HOLDS if holds else FAILS_MEASURE, measure, spec_value, impl_value)
