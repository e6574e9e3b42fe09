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
from collections import defaultdict
from fractions import Fraction

from hyperflow.probcore.dist import FiniteDist, mk_dist, normalize, point
from hyperflow.semantics.state import SplitState
from hyperflow.utils.constants import SPACE_HIDDEN, SPACE_HYPER, SPACE_JOINT
from hyperflow.utils.helpers import format_rational

logger = logging.getLogger(__name__)


class HyperDist(object):
    '''
    A distribution over split-states, together with the scope its states
    are read in

    The outer distribution is a canonical FiniteDist, so equal split-states
    are always merged and the entries sorted by visible state first.
    '''
    __slots__ = ('outer', 'scope')

    def __init__(self, outer, scope):
        self.outer = outer if outer.space == SPACE_HYPER else outer.with_space(SPACE_HYPER)
        self.scope = scope

    @classmethod
    def point(cls, split_state, scope):
        return cls(point(split_state, space=SPACE_HYPER), scope)

    def items(self):
        return self.outer.items()

    @property
    def split_states(self):
        return self.outer.support

    @property
    def weight(self):
        return self.outer.weight

    @property
    def visible_values(self):
        '''
        The visible states occurring in the support, in canonical order
        '''
        seen = []
        for state in self.outer:
            if state.v not in seen:
                seen.append(state.v)
        return seen

    def __iter__(self):
        return iter(self.outer)

    def __len__(self):
        return len(self.outer)

    def __eq__(self, other):
        return isinstance(other, HyperDist) and self.scope == other.scope \
            and self.outer == other.outer

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.outer)

    def __repr__(self):
        return repr(self.outer)

    def to_json(self):
        entries = []
        for state, p in self.outer.items():
            entry = state.to_json(self.scope)
            entry['p'] = format_rational(p)
            entries.append(entry)
        return {'hyper': entries}


def reduce_hyper(entries, scope):
    '''
    Builds the canonical hyper-distribution from weighted split-states

    Split-states with equal visible state and equal inner distribution are
    merged, zero weights dropped. Split-states that are merely similar stay
    apart.

    :param entries: iterable of (SplitState, weight), or a HyperDist
    :param scope: the scope of the states
    :return: HyperDist
    '''
    if isinstance(entries, HyperDist):
        entries = entries.items()
    return HyperDist(mk_dist(entries, space=SPACE_HYPER), scope)


def hide_embed(joint, scope):
    '''
    Groups a distribution over (v, h) pairs by its visible part

    Every visible value v' of the support gives one split-state whose inner
    distribution is the joint distribution conditioned on v'.

    :param joint: full FiniteDist over (v, h) pairs
    :param scope: scope of the states
    :return: HyperDist
    '''
    groups = defaultdict(list)
    for (v, h), p in joint.items():
        groups[v].append((h, p))

    entries = []
    for v, pairs in groups.items():
        fraction = FiniteDist(pairs, space=SPACE_HIDDEN)
        entries.append((SplitState(v, normalize(fraction)), fraction.weight))
    return reduce_hyper(entries, scope)


def split_state_joint(state):
    '''
    The split-state as a distribution over (v, h) pairs
    '''
    return state.delta.map(lambda h: (state.v, h), space=SPACE_JOINT)


def mix(parts, scope):
    '''
    Weighted sum of hyper-distributions

    :param parts: iterable of (weight, HyperDist)
    '''
    entries = []
    for weight, hyper in parts:
        weight = Fraction(weight)
        entries.extend((state, weight * p) for state, p in hyper.items())
    return reduce_hyper(entries, scope)
