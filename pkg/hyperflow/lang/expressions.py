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
Evaluation, constant folding and kind inference for expressions
'''

import operator
from fractions import Fraction

from hyperflow.lang.ast import (
    Literal,
    Var,
    Unary,
    Binary,
    IfElse,
    ARITHMETIC_OPS,
    COMPARISON_OPS,
    BOOLEAN_OPS
)
from hyperflow.lang.exceptions import ExpressionError, TypeMismatch
from hyperflow.probcore.values import canonical_number, value_kind


def _divide(left, right):
    if right == 0:
        raise ExpressionError('division by zero')
    return canonical_number(Fraction(left) / Fraction(right))


def _floor_divide(left, right):
    if right == 0:
        raise ExpressionError('div by zero')
    return canonical_number(Fraction(left) // Fraction(right))


def _modulo(left, right):
    if right == 0:
        raise ExpressionError('mod by zero')
    return canonical_number(Fraction(left) % Fraction(right))


BINARY_FUNCTIONS = {
    '+': lambda a, b: canonical_number(Fraction(a) + Fraction(b)),
    '-': lambda a, b: canonical_number(Fraction(a) - Fraction(b)),
    '*': lambda a, b: canonical_number(Fraction(a) * Fraction(b)),
    '/': _divide,
    'div': _floor_divide,
    'mod': _modulo,
    '=': operator.eq,
    '!=': operator.ne,
    '<': operator.lt,
    '<=': operator.le,
    '>': operator.gt,
    '>=': operator.ge,
    'and': lambda a, b: a and b,
    'or': lambda a, b: a or b,
    'xor': operator.ne,
}


def evaluate(expr, env):
    '''
    Evaluates an expression

    :param expr: expression AST
    :param env: mapping from variable names to values
    :return: bool, int, Fraction or Atom
    '''
    if isinstance(expr, Literal):
        return expr.value
    if isinstance(expr, Var):
        return env[expr.name]
    if isinstance(expr, Unary):
        value = evaluate(expr.operand, env)
        if expr.op == 'not':
            return not value
        return canonical_number(-Fraction(value))
    if isinstance(expr, Binary):
        left = evaluate(expr.left, env)
        right = evaluate(expr.right, env)
        if expr.op in ('=', '!='):
            # values of different kinds never compare equal (True == 1 in Python)
            same = value_kind(left) == value_kind(right) and left == right
            return same if expr.op == '=' else not same
        return BINARY_FUNCTIONS[expr.op](left, right)
    if isinstance(expr, IfElse):
        if evaluate(expr.cond, env):
            return evaluate(expr.then, env)
        return evaluate(expr.otherwise, env)
    raise TypeError('not an expression: {0!r}'.format(expr))


def free_vars(expr):
    '''
    Names of the variables an expression reads
    '''
    return {node.name for node in expr.walk() if isinstance(node, Var)}


def fold_constants(expr):
    '''
    Replaces every variable free sub-expression by its value

    Sub-expressions that fail to evaluate (e.g. a division by the constant
    zero) are left alone so the validator can report them.
    '''
    if not isinstance(expr, (Unary, Binary, IfElse)):
        return expr
    folded = expr.map_children(fold_constants)
    if all(isinstance(child, Literal) for child in folded.children()):
        try:
            return Literal(evaluate(folded, {}), line=expr.line, column=expr.column)
        except (ExpressionError, TypeError, ArithmeticError):
            return folded
    if isinstance(folded, IfElse) and isinstance(folded.cond, Literal) \
            and isinstance(folded.cond.value, bool):
        return folded.then if folded.cond.value else folded.otherwise
    return folded


def infer_kind(expr, kinds):
    '''
    Infers the kind ('bool', 'num' or 'atom') of an expression

    :param expr: expression AST
    :param kinds: mapping from variable names to kinds
    :return: the kind
    :raise TypeMismatch: on ill-typed expressions
    :raise KeyError: on unknown variables
    '''
    if isinstance(expr, Literal):
        return value_kind(expr.value)
    if isinstance(expr, Var):
        return kinds[expr.name]
    if isinstance(expr, Unary):
        operand = infer_kind(expr.operand, kinds)
        expected = 'bool' if expr.op == 'not' else 'num'
        if operand != expected:
            raise TypeMismatch('operand of {0} must be {1}, not {2}'
                               .format(expr.op, expected, operand), line=expr.line)
        return expected
    if isinstance(expr, Binary):
        left = infer_kind(expr.left, kinds)
        right = infer_kind(expr.right, kinds)
        if expr.op in ('=', '!='):
            if left != right:
                raise TypeMismatch('cannot compare {0} with {1}'.format(left, right),
                                   line=expr.line)
            return 'bool'
        if expr.op in ARITHMETIC_OPS or expr.op in COMPARISON_OPS:
            if left != 'num' or right != 'num':
                raise TypeMismatch('{0} needs numbers, got {1} and {2}'
                                   .format(expr.op, left, right), line=expr.line)
            return 'num' if expr.op in ARITHMETIC_OPS else 'bool'
        if expr.op in BOOLEAN_OPS:
            if left != 'bool' or right != 'bool':
                raise TypeMismatch('{0} needs booleans, got {1} and {2}'
                                   .format(expr.op, left, right), line=expr.line)
            return 'bool'
        raise TypeMismatch('unknown operator {0}'.format(expr.op), line=expr.line)
    if isinstance(expr, IfElse):
        if infer_kind(expr.cond, kinds) != 'bool':
            raise TypeMismatch('condition must be boolean', line=expr.line)
        then = infer_kind(expr.then, kinds)
        otherwise = infer_kind(expr.otherwise, kinds)
        if then != otherwise:
            raise TypeMismatch('branches have kinds {0} and {1}'.format(then, otherwise),
                               line=expr.line)
        return then
    raise TypeError('not an expression: {0!r}'.format(expr))
