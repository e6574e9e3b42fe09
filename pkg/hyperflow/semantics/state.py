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
States of the split-state semantics.

A state is a pair (v, h) of tuples holding the values of the visible and of
the hidden variables, in declaration order. The ``Scope`` knows which
variable sits where.
'''

import itertools

from hyperflow.lang.ast import VarDecl, Hprog
from hyperflow.probcore.dist import point
from hyperflow.probcore.values import sort_key, format_value
from hyperflow.utils.constants import SPACE_HIDDEN
from hyperflow.utils.helpers import format_rational


class Scope(object):
    '''
    The visible and the hidden variables in scope, each in declaration order

    Agent annotated variables count as hidden; project a program on an
    agent first to make that agent's variables visible.
    '''
    __slots__ = ('visible', 'hidden', '_vis_index', '_hid_index')

    def __init__(self, visible=(), hidden=()):
        self.visible = tuple(visible)
        self.hidden = tuple(hidden)
        self._vis_index = {decl.name: i for i, decl in enumerate(self.visible)}
        self._hid_index = {decl.name: i for i, decl in enumerate(self.hidden)}

    @classmethod
    def from_decls(cls, decls):
        if isinstance(decls, Hprog):
            decls = decls.decls
        visible = [decl for decl in decls if decl.visibility.is_visible]
        hidden = [decl for decl in decls if not decl.visibility.is_visible]
        return cls(visible, hidden)

    @property
    def decls(self):
        return self.visible + self.hidden

    @property
    def visible_names(self):
        return tuple(decl.name for decl in self.visible)

    @property
    def hidden_names(self):
        return tuple(decl.name for decl in self.hidden)

    def declaration(self, name):
        if name in self._vis_index:
            return self.visible[self._vis_index[name]]
        return self.hidden[self._hid_index[name]]

    def is_visible(self, name):
        return name in self._vis_index

    def __contains__(self, name):
        return name in self._vis_index or name in self._hid_index

    def env(self, v, h):
        '''
        Variable name -> value mapping of the state (v, h)
        '''
        env = dict(zip(self.visible_names, v))
        env.update(zip(self.hidden_names, h))
        return env

    def update(self, v, h, name, value):
        '''
        The state (v, h) with name set to value
        '''
        if name in self._vis_index:
            i = self._vis_index[name]
            return v[:i] + (value,) + v[i + 1:], h
        i = self._hid_index[name]
        return v, h[:i] + (value,) + h[i + 1:]

    def extend(self, decl):
        '''
        A scope with decl appended to its visible or hidden variables
        '''
        if decl.visibility.is_visible:
            return Scope(self.visible + (decl,), self.hidden)
        return Scope(self.visible, self.hidden + (decl,))

    def with_domain(self, name, domain):
        '''
        This scope with the domain of one variable replaced
        '''
        def replace(decl):
            if decl.name != name:
                return decl
            return VarDecl(decl.name, domain, decl.visibility, line=decl.line)
        return Scope([replace(d) for d in self.visible], [replace(d) for d in self.hidden])

    def visible_states(self):
        return list(itertools.product(*[decl.domain.values for decl in self.visible]))

    def hidden_states(self):
        return list(itertools.product(*[decl.domain.values for decl in self.hidden]))

    def joint_states(self):
        '''
        All (v, h) pairs in canonical order
        '''
        return [(v, h) for v in self.visible_states() for h in self.hidden_states()]

    def format_visible(self, v):
        return {name: format_value(value) for name, value in zip(self.visible_names, v)}

    def format_hidden(self, h):
        return {name: format_value(value) for name, value in zip(self.hidden_names, h)}

    def __eq__(self, other):
        return isinstance(other, Scope) and self.signature() == other.signature()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.signature())

    def signature(self):
        '''
        Names and domains, what decides whether two hypers can be compared
        '''
        return (tuple((d.name, d.domain) for d in self.visible),
                tuple((d.name, d.domain) for d in self.hidden))

    def __repr__(self):
        return 'Scope(vis={0}, hid={1})'.format(list(self.visible_names), list(self.hidden_names))


class SplitState(object):
    '''
    An exactly known visible state v together with a full distribution delta
    over the hidden states
    '''
    __slots__ = ('v', 'delta', '_hash')

    def __init__(self, v, delta):
        self.v = tuple(v)
        self.delta = delta.with_space(SPACE_HIDDEN) if delta.space is None else delta
        self._hash = None

    @classmethod
    def point(cls, v, h):
        return cls(v, point(tuple(h), space=SPACE_HIDDEN))

    def __eq__(self, other):
        return isinstance(other, SplitState) and self.v == other.v and self.delta == other.delta

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.v, self.delta))
        return self._hash

    def sort_key(self):
        return (sort_key(self.v), self.delta.sort_key())

    def __repr__(self):
        return '({0}, {1!r})'.format(format_value(self.v), self.delta)

    def __reduce__(self):
        return (SplitState, (self.v, self.delta))

    def to_json(self, scope):
        return {
            'v': scope.format_visible(self.v),
            'delta': [{'h': scope.format_hidden(h), 'p': format_rational(p)}
                      for h, p in self.delta.items()],
        }
