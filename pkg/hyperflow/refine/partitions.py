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
Partitions of fractions.

For a visible value v, the split-states of a hyper-distribution with that
visible part, each scaled by its outer probability, are sub-distributions
over the hidden states called fractions. The collection of them is the
partition of the hyper at v.
'''

import logging
from collections import OrderedDict
from fractions import Fraction

from hyperflow.probcore.dist import FiniteDist, normalize
from hyperflow.probcore.values import sort_key, format_value
from hyperflow.refine.matrices import RatMatrix
from hyperflow.semantics.hyper import reduce_hyper
from hyperflow.semantics.state import SplitState
from hyperflow.utils.constants import SPACE_HIDDEN

logger = logging.getLogger(__name__)


class Partition(object):
    '''
    A multiset of fractions, stored in canonical order
    '''
    __slots__ = ('fractions',)

    def __init__(self, fractions=()):
        self.fractions = tuple(sorted((f.with_space(SPACE_HIDDEN) for f in fractions),
                                      key=sort_key))

    def __iter__(self):
        return iter(self.fractions)

    def __len__(self):
        return len(self.fractions)

    def __getitem__(self, index):
        return self.fractions[index]

    def __eq__(self, other):
        return isinstance(other, Partition) and self.fractions == other.fractions

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.fractions)

    def __repr__(self):
        return '<' + ', '.join(repr(f) for f in self.fractions) + '>'

    @property
    def weight(self):
        return sum((f.weight for f in self.fractions), Fraction(0))

    @property
    def is_reduced(self):
        if any(f.weight == 0 for f in self.fractions):
            return False
        shapes = [normalize(f) for f in self.fractions]
        return len(set(shapes)) == len(shapes)

    def total(self):
        '''
        Sum of all fractions
        '''
        return FiniteDist((pair for f in self.fractions for pair in f.items()), space=SPACE_HIDDEN)

    def matrix(self, hidden_states):
        '''
        The partition as a matrix, one row per fraction, one column per
        hidden state
        '''
        return RatMatrix([[f.prob(h) for h in hidden_states] for f in self.fractions],
                         len(hidden_states))

    @classmethod
    def from_matrix(cls, matrix, hidden_states):
        return cls(FiniteDist(zip(hidden_states, matrix.row(i)), space=SPACE_HIDDEN)
                   for i in range(matrix.rows))

    def to_json(self):
        return [[{'h': format_value(h), 'p': p} for h, p in f.items()] for f in self.fractions]


def extract_partition(hyper, v):
    '''
    The partition of hyper at the visible value v

    :param hyper: canonical HyperDist
    :param v: visible state tuple
    :return: Partition, empty if v does not occur
    '''
    return Partition(state.delta.scale(p) for state, p in hyper.items() if state.v == v)


def reduce_partition(partition):
    '''
    Adds up similar fractions, those with equal normalisations, and drops
    fractions of weight zero
    '''
    groups = OrderedDict()
    for fraction in partition:
        if fraction.weight == 0:
            continue
        groups.setdefault(normalize(fraction), []).append(fraction)
    return Partition(
        FiniteDist((pair for f in group for pair in f.items()), space=SPACE_HIDDEN)
        for group in groups.values())


def similar(first, second):
    return reduce_partition(first) == reduce_partition(second)


def bv_partition(partition):
    '''
    Bayes vulnerability of a partition, the sum of the largest weight of
    each fraction
    '''
    return sum((f.max_weight for f in partition), Fraction(0))


def hyper_from_partitions(partitions, scope):
    '''
    Builds a hyper-distribution from its partitions

    :param partitions: mapping visible state -> Partition
    :param scope: Scope of the result
    :return: HyperDist
    '''
    entries = []
    for v, partition in partitions.items():
        for fraction in partition:
            if fraction.weight:
                entries.append((SplitState(v, normalize(fraction)), fraction.weight))
    return reduce_hyper(entries, scope)


def apply_refinement(matrix, partition, hidden_states):
    '''
    The partition R x P: row j of the result mixes the fractions of P with
    the weights in row j of R
    '''
    return Partition.from_matrix(matrix * partition.matrix(hidden_states), hidden_states)
