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
Abstract syntax of the program language.

Nodes compare structurally and ignore source positions, so a program parsed
from its own printout equals the original.
'''

from hyperflow.probcore.values import Atom, value_kind, sort_key, format_value


class AST(object):
    _fields = ()

    def __init__(self, *args, line=None, column=None):
        if len(args) != len(self._fields):
            raise TypeError('{0} expects {1} fields, got {2}'.format(
                type(self).__name__, len(self._fields), len(args)))
        self.line = line
        self.column = column
        for n, x in zip(self._fields, args):
            setattr(self, n, x)
            if self.line is None:
                if isinstance(x, list):
                    if len(x) != 0:
                        self.line = getattr(x[0], "line", None)
                else:
                    self.line = getattr(x, "line", None)

    def __repr__(self):
        return "{0}({1})".format(type(self).__name__,
                                 ", ".join(repr(getattr(self, n)) for n in self._fields))

    def __eq__(self, other):
        return type(self) is type(other) and all(getattr(self, n) == getattr(other, n)
                                                 for n in self._fields)

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    def children(self):
        '''
        The AST nodes directly below this one
        '''
        for n in self._fields:
            x = getattr(self, n)
            if isinstance(x, list):
                for y in x:
                    if isinstance(y, AST):
                        yield y
            elif isinstance(x, AST):
                yield x

    def map_children(self, function):
        '''
        A copy of this node with function applied to every child node
        '''
        def do(x):
            if isinstance(x, list):
                return [do(y) for y in x]
            elif isinstance(x, AST):
                return function(x)
            else:
                return x
        return type(self)(*[do(getattr(self, n)) for n in self._fields],
                          line=self.line, column=self.column)

    def walk(self):
        '''
        All nodes of the tree, this one first
        '''
        yield self
        for child in self.children():
            for node in child.walk():
                yield node


#
# Expressions
#

class Literal(AST):
    _fields = ("value",)


class Var(AST):
    _fields = ("name",)


class Unary(AST):
    '''
    op is 'neg' or 'not'
    '''
    _fields = ("op", "operand")


class Binary(AST):
    _fields = ("op", "left", "right")


class IfElse(AST):
    '''
    then if cond else otherwise
    '''
    _fields = ("then", "cond", "otherwise")


ARITHMETIC_OPS = ('+', '-', '*', '/', 'div', 'mod')
COMPARISON_OPS = ('=', '!=', '<', '<=', '>', '>=')
BOOLEAN_OPS = ('and', 'or', 'xor')


#
# Distribution expressions
#

class Uniform(AST):
    _fields = ("items",)


class UniformDomain(AST):
    '''
    Uniform over the whole declared domain of the target variable
    '''
    _fields = ()


class Weighted(AST):
    _fields = ("value", "prob")


class Explicit(AST):
    _fields = ("entries",)


#
# Statements
#

class Skip(AST):
    _fields = ()


class Assign(AST):
    '''
    x := e. Whether this is a visible or a hidden assignment depends on the
    declaration of x, see Scope.is_visible.
    '''
    _fields = ("target", "expr")


class Choose(AST):
    '''
    x <- d, visible or hidden depending on the declaration of x
    '''
    _fields = ("target", "dist")


class XorAssign(AST):
    '''
    (x xor y) := e, macro expanded by desugar
    '''
    _fields = ("left", "right", "expr")


class Seq(AST):
    _fields = ("first", "second")


class Choice(AST):
    '''
    left [prob] right, left is taken with probability prob
    '''
    _fields = ("left", "prob", "right")


class Cond(AST):
    _fields = ("guard", "then", "otherwise")


class Atomic(AST):
    _fields = ("body",)


class Reveal(AST):
    _fields = ("expr",)


class LocalDecl(AST):
    '''
    A local declaration with its initialiser (an expression, a distribution
    expression or None)
    '''
    _fields = ("decl", "init")


class Local(AST):
    _fields = ("decls", "body")


#
# Declarations
#

class Visibility(object):
    '''
    Global visibility ('vis' or 'hid') or the set of agents that see a variable
    '''
    __slots__ = ('kind', 'agents')

    def __init__(self, kind, agents=()):
        if kind not in ('vis', 'hid', 'agents'):
            raise ValueError('unknown visibility {0!r}'.format(kind))
        self.kind = kind
        self.agents = frozenset(agents)

    @property
    def is_global(self):
        return self.kind != 'agents'

    @property
    def is_visible(self):
        '''
        Visibility for the plain two-level reading, agent sets count as hidden
        '''
        return self.kind == 'vis'

    def __eq__(self, other):
        return isinstance(other, Visibility) and \
            (self.kind, self.agents) == (other.kind, other.agents)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.kind, self.agents))

    def __repr__(self):
        if self.kind == 'agents':
            return 'vis{' + ','.join(sorted(self.agents)) + '}'
        return self.kind


VISIBLE = Visibility('vis')
HIDDEN = Visibility('hid')


class Domain(object):
    '''
    A finite, ordered, non-empty set of values
    '''
    __slots__ = ('values', '_index')

    def __init__(self, values):
        self.values = tuple(values)
        self._index = {}
        for i, value in enumerate(self.values):
            self._index.setdefault(value, i)

    @classmethod
    def from_range(cls, low, high):
        return cls(range(low, high + 1))

    @property
    def kind(self):
        kinds = {value_kind(value) for value in self.values}
        if len(kinds) == 1:
            return kinds.pop()
        return 'mixed' if kinds else 'empty'

    @property
    def has_duplicates(self):
        return len(self._index) != len(self.values)

    @property
    def is_range(self):
        '''
        True for three or more consecutive integers in increasing order
        '''
        if len(self.values) < 3 or self.kind != 'num':
            return False
        if any(not isinstance(value, int) for value in self.values):
            return False
        return list(self.values) == list(range(self.values[0], self.values[0] + len(self.values)))

    def index(self, value):
        return self._index[value]

    def extended(self, values):
        '''
        This domain plus values, in canonical value order
        '''
        merged = set(self.values) | set(values)
        return Domain(sorted(merged, key=sort_key))

    def __contains__(self, value):
        return value in self._index

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __eq__(self, other):
        return isinstance(other, Domain) and self.values == other.values

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return '{' + ', '.join(format_value(value) for value in self.values) + '}'


class VarDecl(AST):
    _fields = ("name", "domain", "visibility")

    @property
    def kind(self):
        return self.domain.kind


class Hprog(AST):
    '''
    A complete program: global declarations and the body
    '''
    _fields = ("decls", "body")

    def declaration(self, name):
        for decl in self.decls:
            if decl.name == name:
                return decl
        raise KeyError(name)

    @property
    def agents(self):
        '''
        All agent names mentioned in visibility annotations, locals included
        '''
        agents = set()
        for decl in self.all_decls():
            agents |= decl.visibility.agents
        return agents

    def all_decls(self):
        '''
        Global declarations followed by every local declaration of the body
        '''
        decls = list(self.decls)
        for node in self.body.walk():
            if isinstance(node, LocalDecl):
                decls.append(node.decl)
        return decls

    def atoms(self):
        '''
        Every atom appearing in a declared domain, by name
        '''
        atoms = {}
        for decl in self.all_decls():
            for value in decl.domain:
                if isinstance(value, Atom):
                    atoms.setdefault(value.name, value)
        return atoms


def count_nodes(node):
    '''
    Number of AST nodes in the tree below node, node included
    '''
    return sum(1 for n in node.walk())
