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
Uncertainty measures of hyper-distributions.

All measures are exact rationals except Shannon entropy, which is computed
with interval arithmetic and reported as a ``BigFloat`` enclosing the true
value.
'''

import logging
from fractions import Fraction

import mpmath
from mpmath import iv

from hyperflow.probcore.dist import expected_value
from hyperflow.semantics.hyper import split_state_joint
from hyperflow.utils.constants import (
    MEASURE_BAYES,
    MEASURE_SHANNON,
    MEASURE_GUESSING_ENTROPY,
    MEASURE_GUESSWORK,
    SPACE_JOINT
)
from hyperflow.utils.helpers import hyperflow_setting, parse_rational, format_rational
from hyperflow.measures.exceptions import UnknownMeasure

logger = logging.getLogger(__name__)

MIN_PRECISION = 64


class BigFloat(object):
    '''
    An arbitrary precision value known to lie in [lower, upper]
    '''
    __slots__ = ('lower', 'upper', 'precision')

    def __init__(self, lower, upper, precision):
        self.lower = lower
        self.upper = upper
        self.precision = precision

    @classmethod
    def from_interval(cls, interval, precision):
        with mpmath.workprec(precision):
            return cls(mpmath.mpf(interval.a), mpmath.mpf(interval.b), precision)

    @property
    def value(self):
        with mpmath.workprec(self.precision):
            return (self.lower + self.upper) / 2

    @property
    def width(self):
        with mpmath.workprec(self.precision):
            return self.upper - self.lower

    def compare(self, other, tolerance=None):
        '''
        Compares with another BigFloat or a rational

        :return: -1, 0 or 1, or None when the enclosures are closer than
                 tolerance without being ordered
        '''
        if tolerance is None:
            tolerance = hyperflow_setting('SHANNON_TOLERANCE')
        if not isinstance(other, BigFloat):
            with mpmath.workprec(self.precision):
                value = _mpf(other)
            other = BigFloat(value, value, self.precision)
        with mpmath.workprec(max(self.precision, other.precision)):
            gap = _mpf(tolerance)
            if self.upper < other.lower and other.value - self.value > gap:
                return -1
            if other.upper < self.lower and self.value - other.value > gap:
                return 1
            if self.lower == self.upper == other.lower == other.upper:
                return 0
        return None

    def __float__(self):
        return float(self.value)

    def __str__(self):
        return mpmath.nstr(self.value, max(15, self.precision // 4), min_fixed=-10, max_fixed=10)

    def __repr__(self):
        return 'BigFloat({0}, {1} bits)'.format(mpmath.nstr(self.value, 20), self.precision)

    def to_json(self):
        return str(self)


def _mpf(value):
    value = Fraction(value)
    return mpmath.mpf(value.numerator) / value.denominator


def _interval(value):
    value = Fraction(value)
    return iv.mpf(value.numerator) / value.denominator


def hidden_size(hyper):
    '''
    Number of hidden states, the N the inner distributions are padded to
    '''
    return len(hyper.scope.hidden_states())


def ft(hyper):
    '''
    The functional projection: the overall distribution of final (v, h)
    pairs, forgetting which split-state they came from
    '''
    return expected_value(hyper.outer, split_state_joint).with_space(SPACE_JOINT)


def bayes_vuln(hyper):
    '''
    Bayes vulnerability: the chance of guessing the hidden state in one try,
    averaged over the split-states
    '''
    return expected_value(hyper.outer, lambda state: state.delta.max_weight)


def shannon_entropy(hyper, precision=None):
    '''
    Conditional Shannon entropy in bits

    :param hyper: HyperDist
    :param precision: working precision in bits, defaults to PRECISION_BITS
    :return: BigFloat
    '''
    if precision is None:
        precision = hyperflow_setting('PRECISION_BITS')
    precision = max(int(precision), MIN_PRECISION)

    saved = iv.prec
    iv.prec = precision
    try:
        log2 = iv.log(2)
        total = iv.mpf(0)
        for state, outer in hyper.items():
            inner = iv.mpf(0)
            for h, p in state.delta.items():
                if p != 1:
                    x = _interval(p)
                    inner -= x * iv.log(x) / log2
            total += _interval(outer) * inner
        result = BigFloat.from_interval(total, precision)
    finally:
        iv.prec = saved
    logger.debug('shannon entropy {0!r}'.format(result))
    return result


def _padded(delta, size):
    weights = sorted(delta.values(), reverse=True)
    return weights + [Fraction(0)] * (size - len(weights))


def guesswork_profile(hyper):
    '''
    Success probabilities of the best guessing strategy

    :return: list whose i-th entry is the expected probability of finding the
             hidden state within i + 1 guesses
    '''
    size = hidden_size(hyper)
    profile = [Fraction(0)] * size
    for state, outer in hyper.items():
        running = Fraction(0)
        for i, weight in enumerate(_padded(state.delta, size)):
            running += weight
            profile[i] += outer * running
    return profile


def guessing_entropy(hyper):
    '''
    Expected number of guesses needed when guessing in order of decreasing
    probability
    '''
    size = hidden_size(hyper)
    total = Fraction(0)
    for state, outer in hyper.items():
        ascending = list(reversed(_padded(state.delta, size)))
        running = Fraction(0)
        for weight in ascending:
            running += weight
            total += outer * running
    return total


def marginal_guesswork(hyper, alpha):
    '''
    Least number of guesses reaching success probability alpha

    :param alpha: rational in (0, 1]
    :return: int
    '''
    alpha = Fraction(alpha)
    if not 0 < alpha <= 1:
        raise ValueError('alpha must lie in (0, 1], got {0}'.format(alpha))
    for i, probability in enumerate(guesswork_profile(hyper)):
        if probability >= alpha:
            return i + 1
    return hidden_size(hyper)


class MeasureKind(object):
    '''
    One of the four measures, with alpha for marginal guesswork
    '''
    __slots__ = ('name', 'alpha')

    def __init__(self, name, alpha=None):
        if name not in (MEASURE_BAYES, MEASURE_SHANNON, MEASURE_GUESSING_ENTROPY,
                        MEASURE_GUESSWORK):
            raise UnknownMeasure('unknown measure {0}'.format(name))
        if name == MEASURE_GUESSWORK:
            alpha = Fraction(alpha)
            if not 0 < alpha <= 1:
                raise UnknownMeasure('guesswork needs alpha in (0, 1], got {0}'.format(alpha))
        elif alpha is not None:
            raise UnknownMeasure('{0} takes no parameter'.format(name))
        self.name = name
        self.alpha = alpha

    @classmethod
    def parse(cls, text):
        '''
        Reads "bayes", "shannon", "gentropy" or "guesswork:A"
        '''
        name, _, parameter = text.strip().partition(':')
        if name == MEASURE_GUESSWORK:
            if not parameter:
                raise UnknownMeasure('guesswork needs a parameter, e.g. guesswork:1/2')
            try:
                return cls(name, parse_rational(parameter))
            except (ValueError, ZeroDivisionError):
                raise UnknownMeasure('"{0}" is not a rational'.format(parameter))
        if parameter:
            raise UnknownMeasure('{0} takes no parameter'.format(name))
        return cls(name)

    @property
    def is_vulnerability(self):
        '''
        Bayes vulnerability grows with leakage, the other measures shrink
        '''
        return self.name == MEASURE_BAYES

    @property
    def is_exact(self):
        return self.name != MEASURE_SHANNON

    def value(self, hyper, precision=None):
        if self.name == MEASURE_BAYES:
            return bayes_vuln(hyper)
        if self.name == MEASURE_SHANNON:
            return shannon_entropy(hyper, precision)
        if self.name == MEASURE_GUESSING_ENTROPY:
            return guessing_entropy(hyper)
        return marginal_guesswork(hyper, self.alpha)

    def __eq__(self, other):
        return isinstance(other, MeasureKind) and \
            (self.name, self.alpha) == (other.name, other.alpha)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.name, self.alpha))

    def __str__(self):
        if self.alpha is not None:
            return '{0}:{1}'.format(self.name, format_rational(self.alpha))
        return self.name

    def __repr__(self):
        return 'MeasureKind({0})'.format(self)


def format_measure(value):
    '''
    JSON form of a measure value
    '''
    if isinstance(value, BigFloat):
        return str(value)
    if isinstance(value, int):
        return value
    return format_rational(value)
