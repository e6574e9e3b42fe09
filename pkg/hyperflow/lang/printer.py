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
Pretty printer. The output parses back to an equal AST.
'''

from fractions import Fraction

from hyperflow.lang.ast import (
    Hprog,
    VarDecl,
    Literal,
    Var,
    Unary,
    Binary,
    IfElse,
    Uniform,
    UniformDomain,
    Explicit,
    Skip,
    Assign,
    Choose,
    XorAssign,
    Seq,
    Choice,
    Cond,
    Atomic,
    Reveal,
    Local
)
from hyperflow.probcore.values import format_value

INDENT = '    '

# binding strength, loosest first
IF, OR, XOR, AND, NOT, CMP, SUM, PROD, UNARY, ATOM = range(1, 11)

LEVELS = {
    'or': OR,
    'xor': XOR,
    'and': AND,
    '=': CMP, '!=': CMP, '<': CMP, '<=': CMP, '>': CMP, '>=': CMP,
    '+': SUM, '-': SUM,
    '*': PROD, '/': PROD, 'div': PROD, 'mod': PROD,
}


def _literal(value):
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        return format_value(value), ATOM
    if isinstance(value, Fraction) and value.denominator != 1:
        return format_value(value), PROD
    return format_value(value), ATOM if value >= 0 else UNARY


def _wrap(expr, minimum):
    text, level = _expr(expr)
    if level < minimum:
        return '(' + text + ')'
    return text


def _expr(expr):
    '''
    :return: (text, binding level)
    '''
    if isinstance(expr, Literal):
        return _literal(expr.value)
    if isinstance(expr, Var):
        return expr.name, ATOM
    if isinstance(expr, Unary):
        if expr.op == 'not':
            return 'not ' + _wrap(expr.operand, NOT), NOT
        return '-' + _wrap(expr.operand, UNARY), UNARY
    if isinstance(expr, Binary):
        level = LEVELS[expr.op]
        if level == CMP:
            left, right = _wrap(expr.left, SUM), _wrap(expr.right, SUM)
        else:
            left, right = _wrap(expr.left, level), _wrap(expr.right, level + 1)
        return '{0} {1} {2}'.format(left, expr.op, right), level
    if isinstance(expr, IfElse):
        return '{0} if {1} else {2}'.format(_wrap(expr.then, OR), _wrap(expr.cond, OR),
                                           _wrap(expr.otherwise, IF)), IF
    raise TypeError('not an expression: {0!r}'.format(expr))


def print_expr(expr):
    return _expr(expr)[0]


def print_dist(dist):
    if isinstance(dist, UniformDomain):
        return 'uniform'
    if isinstance(dist, Uniform):
        return 'uniform{' + ', '.join(print_expr(item) for item in dist.items) + '}'
    if isinstance(dist, Explicit):
        return '{' + ', '.join('{0} @ {1}'.format(print_expr(entry.value), print_expr(entry.prob))
                               for entry in dist.entries) + '}'
    return print_expr(dist)


def print_domain(domain):
    if domain.is_range:
        return '{{{0}..{1}}}'.format(domain.values[0], domain.values[-1])
    return '{' + ', '.join(format_value(value) for value in domain.values) + '}'


def print_decl(decl):
    return '{0} {1} : {2}'.format(repr(decl.visibility), decl.name, print_domain(decl.domain))


def _flatten_seq(node):
    items = []
    while isinstance(node, Seq):
        items.append(node.second)
        node = node.first
    items.append(node)
    return list(reversed(items))


def _stmt(node, indent):
    inner = indent + INDENT
    if isinstance(node, Skip):
        return 'skip'
    if isinstance(node, Assign):
        return '{0} := {1}'.format(node.target, print_expr(node.expr))
    if isinstance(node, Choose):
        return '{0} <- {1}'.format(node.target, print_dist(node.dist))
    if isinstance(node, XorAssign):
        return '({0} xor {1}) := {2}'.format(node.left, node.right, print_expr(node.expr))
    if isinstance(node, Reveal):
        return 'reveal ' + print_expr(node.expr)
    if isinstance(node, Seq):
        parts = []
        for item in _flatten_seq(node):
            text = _stmt(item, indent)
            parts.append('(' + text + ')' if isinstance(item, Seq) else text)
        return (';\n' + indent).join(parts)
    if isinstance(node, Choice):
        left = _stmt(node.left, indent)
        if isinstance(node.left, (Seq, Choice)):
            left = '(' + left + ')'
        right = _stmt(node.right, indent)
        if isinstance(node.right, Seq):
            right = '(' + right + ')'
        return '{0} [{1}] {2}'.format(left, print_expr(node.prob), right)
    if isinstance(node, Cond):
        text = 'if {0} then\n{1}{2}\n'.format(print_expr(node.guard), inner,
                                             _stmt(node.then, inner))
        if not isinstance(node.otherwise, Skip):
            text += '{0}else\n{1}{2}\n'.format(indent, inner, _stmt(node.otherwise, inner))
        return text + indent + 'fi'
    if isinstance(node, Atomic):
        return 'atomic {{\n{0}{1}\n{2}}}'.format(inner, _stmt(node.body, inner), indent)
    if isinstance(node, Local):
        decls = []
        for local_decl in node.decls:
            text = print_decl(local_decl.decl)
            if local_decl.init is not None:
                text += ' := ' + print_dist(local_decl.init)
            decls.append(text)
        return 'local {0} in {{\n{1}{2}\n{3}}}'.format('; '.join(decls), inner,
                                                       _stmt(node.body, inner), indent)
    raise TypeError('not a statement: {0!r}'.format(node))


def pretty_print(node):
    '''
    Renders a program, statement or expression as source text

    :param node: Hprog, statement, declaration or expression
    :return: source string
    '''
    if isinstance(node, Hprog):
        lines = [print_decl(decl) + ';' for decl in node.decls]
        lines.append(_stmt(node.body, ''))
        return '\n'.join(lines) + '\n'
    if isinstance(node, VarDecl):
        return print_decl(node)
    if isinstance(node, (Literal, Var, Unary, Binary, IfElse)):
        return print_expr(node)
    return _stmt(node, '')
