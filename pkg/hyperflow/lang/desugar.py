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
Rewrites the surface sugar into core constructs:

* ``reveal e`` becomes a local block with a fresh visible variable assigned e,
  or skip inside an atomic block where the published value is re-hidden at once
* ``(x xor y) := e`` becomes a uniform choice of the variable declared first
  followed by assigning the other one the xor of both
'''

import itertools

from hyperflow.lang.ast import (
    Hprog,
    VarDecl,
    Domain,
    VISIBLE,
    Literal,
    Var,
    Binary,
    Uniform,
    Skip,
    Assign,
    Choose,
    XorAssign,
    Seq,
    Atomic,
    Reveal,
    LocalDecl,
    Local
)
from hyperflow.lang.exceptions import ExpressionError
from hyperflow.lang.expressions import evaluate, free_vars
from hyperflow.probcore.values import Atom, sort_key, value_kind


def expression_range(expr, scope):
    '''
    All values expr can take when its variables range over their domains

    :param expr: expression
    :param scope: mapping name -> VarDecl
    :return: Domain
    '''
    names = sorted(free_vars(expr))
    values = set()
    for combination in itertools.product(*[scope[name].domain.values for name in names]):
        try:
            values.add(evaluate(expr, dict(zip(names, combination))))
        except (ExpressionError, ArithmeticError):
            continue
    if values and all(value_kind(value) == 'bool' for value in values):
        return Domain((False, True))
    return Domain(sorted(values, key=sort_key))


class Desugarer(object):

    def __init__(self, taken):
        self.taken = set(taken)
        self.counter = 0

    def fresh(self):
        while True:
            name = '_r{0}'.format(self.counter)
            self.counter += 1
            if name not in self.taken:
                self.taken.add(name)
                return name

    def rewrite(self, node, scope, order, in_atomic=False):
        '''
        :param scope: name -> VarDecl of the variables in scope
        :param order: name -> declaration position
        '''
        if isinstance(node, Reveal):
            if in_atomic:
                return Skip(line=node.line)
            domain = expression_range(node.expr, scope)
            name = self.fresh()
            decl = VarDecl(name, domain, VISIBLE, line=node.line)
            init = Literal(domain.values[0], line=node.line)
            return Local([LocalDecl(decl, init, line=node.line)],
                         Assign(name, node.expr, line=node.line), line=node.line)
        if isinstance(node, XorAssign):
            first, second = node.left, node.right
            if order.get(second, 0) < order.get(first, 0):
                first, second = second, first
            coin = Choose(first, Uniform([Literal(False), Literal(True)]), line=node.line)
            rest = Assign(second, Binary('xor', Var(first), node.expr), line=node.line)
            return Seq(coin, rest, line=node.line)
        if isinstance(node, Atomic):
            return Atomic(self.rewrite(node.body, scope, order, True), line=node.line)
        if isinstance(node, Local):
            inner, inner_order = dict(scope), dict(order)
            decls = []
            for local_decl in node.decls:
                decls.append(local_decl)
                inner[local_decl.decl.name] = local_decl.decl
                inner_order[local_decl.decl.name] = len(inner_order)
            return Local(decls, self.rewrite(node.body, inner, inner_order, in_atomic),
                         line=node.line)
        return node.map_children(lambda child: self.rewrite(child, scope, order, in_atomic))


def desugar(program):
    '''
    Removes reveal and xor assignments from a program

    :param program: Hprog
    :return: Hprog without Reveal and XorAssign nodes
    '''
    scope = {decl.name: decl for decl in program.decls}
    order = {decl.name: i for i, decl in enumerate(program.decls)}
    taken = {decl.name for decl in program.all_decls()} | set(program.atoms())
    body = Desugarer(taken).rewrite(program.body, scope, order)
    return Hprog(program.decls, body, line=program.line)


def desugar_statement(node, decls, in_atomic=False):
    '''
    Desugars a single statement given the declarations in scope, for
    evaluators meeting sugar at run time

    :param node: statement
    :param decls: VarDecls in scope, in declaration order
    :param in_atomic: whether node sits inside an atomic block
    '''
    decls = list(decls)
    scope = {decl.name: decl for decl in decls}
    order = {decl.name: i for i, decl in enumerate(decls)}
    taken = set(scope)
    for decl in decls:
        taken |= {value.name for value in decl.domain if isinstance(value, Atom)}
    for inner in node.walk():
        if isinstance(inner, LocalDecl):
            taken.add(inner.decl.name)
    return Desugarer(taken).rewrite(node, scope, order, in_atomic)
