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
From a separating direction to a channel.

The channel D overwrites the hidden state: row h is the distribution of the
new value when the old state is h. The new values are integer labels, the
values themselves for a single integer variable and positions otherwise.
Transposing the direction, shifting it to nonnegative entries and scaling
it gives the rows their real columns; a zero column makes every row add up
to one. When the zero column could win
an attacker's guess it is spread over several fresh values instead.
'''

import logging
import math
from fractions import Fraction

from hyperflow.probcore.values import format_value, sort_key, value_kind
from hyperflow.refine.matrices import RatMatrix
from hyperflow.utils.exceptions import InternalAssertion
from hyperflow.utils.helpers import format_rational

logger = logging.getLogger(__name__)


def is_integer_variable(hidden_states):
    '''
    True when the hidden state is a single variable with integer values
    '''
    return all(len(h) == 1 and value_kind(h[0]) == 'num' and int(h[0]) == h[0]
               for h in hidden_states)


def hidden_labels(hidden_states):
    '''
    Integer labels of the hidden states: the values themselves for a single
    integer variable, positions in canonical order for anything else
    '''
    if is_integer_variable(hidden_states):
        return [int(h[0]) for h in hidden_states]
    return list(range(len(hidden_states)))


def format_hidden_state(h):
    if len(h) == 1:
        return format_value(h[0])
    return '({0})'.format(', '.join(format_value(x) for x in h))


class AttackChannel(object):
    '''
    A channel matrix, rows indexed by the old hidden states and columns by
    integer output labels

    :param matrix: RatMatrix
    :param states: the hidden state of every row
    :param columns: the output label of every column, in canonical order
    :param extended: indices of the columns added for one-summing
    :param relevant: indices of the rows that can occur at the trigger
    :param fallback: indices of rows copied from the last relevant row
    '''

    def __init__(self, matrix, states, columns, extended=(), relevant=(), fallback=(),
                 split_count=0, trigger=None):
        self.matrix = matrix
        self.states = list(states)
        self.columns = list(columns)
        self.extended = frozenset(extended)
        self.relevant = tuple(relevant)
        self.fallback = frozenset(fallback)
        self.split_count = split_count
        self.trigger = trigger

    def row_pairs(self, index):
        '''
        (output value, weight) of one row, zero weights left out
        '''
        return [(value, weight) for value, weight in zip(self.columns, self.matrix.row(index))
                if weight]

    @property
    def relabels(self):
        '''
        True when the output labels are not values of the hidden variable
        '''
        return not is_integer_variable(self.states)

    def is_valid(self):
        '''
        Every entry nonnegative and every row adding up to one
        '''
        return self.matrix.is_nonnegative() and all(total == 1
                                                    for total in self.matrix.row_sums())

    def outputs(self, partition, hidden_states):
        '''
        The partition pushed through the channel, one row per fraction
        '''
        return (partition.matrix(hidden_states) * self.matrix).as_lists()

    def attracts(self, partition, hidden_states):
        '''
        True when some fraction that puts weight on a real column would have
        an extended column as its best guess
        '''
        real = [j for j in range(len(self.columns)) if j not in self.extended]
        for row in self.outputs(partition, hidden_states):
            best_real = max(row[j] for j in real) if real else Fraction(0)
            if best_real and any(row[j] > best_real for j in self.extended):
                return True
        return False

    def __repr__(self):
        return 'AttackChannel({0}, {1!r})'.format([format_value(x) for x in self.columns],
                                                   self.matrix)

    def to_json(self):
        return {
            'rows': [format_hidden_state(h) for h in self.states],
            'columns': [format_value(x) for x in self.columns],
            'D': [[format_rational(x) for x in row] for row in self.matrix.as_lists()],
            'extended': [format_value(self.columns[j]) for j in sorted(self.extended)],
            'split': self.split_count,
        }


def _relevant_rows(direction):
    support = set()
    for partition in (direction.spec_partition, direction.impl_partition):
        for fraction in partition:
            support |= set(fraction.support)
    return [i for i, h in enumerate(direction.hidden_states) if h in support]


def _split_count(direction, real, zero, relevant):
    '''
    Smallest number of fresh values such that no share of the zero column
    beats the best real column of a fraction. Specification fractions
    without weight on any real column must stay below the separation gap.
    '''
    spec = direction.spec_matrix().as_lists()
    impl = direction.impl_matrix().as_lists()

    def row_outputs(fraction):
        reals = [sum((fraction[i] * real[i][j] for i in relevant), Fraction(0))
                 for j in range(len(real[0]))]
        share = sum((fraction[i] * zero[i] for i in relevant), Fraction(0))
        return reals, share

    count = 1
    stranded = Fraction(0)
    spec_best = Fraction(0)
    for fraction in spec:
        reals, share = row_outputs(fraction)
        spec_best += max(reals)
        if share and max(reals):
            count = max(count, math.ceil(share / max(reals)))
        elif share:
            stranded += share
    impl_trace = Fraction(0)
    for j, fraction in enumerate(impl):
        reals, share = row_outputs(fraction)
        impl_trace += reals[j]
        if share and max(reals):
            count = max(count, math.ceil(share / max(reals)))
    if stranded:
        gap = impl_trace - spec_best
        if gap <= 0:
            raise InternalAssertion('channel lost the separation gap')
        count = max(count, math.floor(stranded / gap) + 1)
        logger.warning('zero column carries {0} without a real competitor, split {1} ways'
                       .format(stranded, count))
    return count


def build_attack_channel(direction, trigger=None):
    '''
    Turns a separating direction into a channel whose Bayes vulnerability
    tells the two partitions apart

    :param direction: SeparatingDirection, in either orientation
    :param trigger: visible state the channel is meant for, kept for reports
    :return: AttackChannel
    '''
    direction = direction.oriented()
    values = hidden_labels(direction.hidden_states)
    transposed = direction.matrix.transpose().as_lists()
    width = len(transposed[0])
    relevant = _relevant_rows(direction)

    shift = max(Fraction(0), -min(x for i in relevant for x in transposed[i]))
    top = max(sum(transposed[i]) + shift * width for i in relevant)
    if top <= 0:
        raise InternalAssertion('direction is constant on the relevant rows')
    scale = 1 / top

    # a row that cannot occur at the trigger and is no sub-distribution
    # copies the last relevant row
    real = [[(x + shift) * scale for x in row] for row in transposed]
    fallback = [index for index, row in enumerate(real)
                if index not in relevant and (min(row) < 0 or sum(row) > 1)]
    for index in fallback:
        real[index] = list(real[relevant[-1]])
    zero = [1 - sum(row) for row in real]

    real_values = [values[j] if j < len(values) else max(values) + 1 + j - len(values)
                   for j in range(width)]
    columns = [(value, [real[i][j] for i in range(len(real))])
               for j, value in enumerate(real_values)]
    extended_values = []
    split = 0
    if any(zero):
        split = _split_count(direction, real, zero, relevant)
        floor = min(set(real_values) | {0})
        if split == 1 and 0 not in real_values:
            extended_values = [0]
        else:
            extended_values = [floor - k for k in range(1, split + 1)]
        share = Fraction(1, len(extended_values))
        columns.extend((value, [z * share for z in zero]) for value in extended_values)
        logger.debug('zero column split over {0} values'.format(len(extended_values)))

    columns.sort(key=lambda column: sort_key(column[0]))
    matrix = RatMatrix([[column[1][i] for column in columns] for i in range(len(real))],
                       len(columns))
    channel = AttackChannel(
        matrix, direction.hidden_states, [column[0] for column in columns],
        extended=[j for j, column in enumerate(columns) if column[0] in extended_values],
        relevant=relevant, fallback=fallback, split_count=split, trigger=trigger)

    if not channel.is_valid():
        raise InternalAssertion('channel rows do not add up to one')
    for partition in (direction.spec_partition, direction.impl_partition):
        if channel.attracts(partition, direction.hidden_states):
            raise InternalAssertion('a fresh value attracts the best guess')
    return channel
