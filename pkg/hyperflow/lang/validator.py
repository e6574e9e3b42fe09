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

from hyperflow.lang.ast import (
    Hprog,
    Literal,
    Var,
    Binary,
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
from hyperflow.lang.exceptions import (
    UndeclaredVariable,
    TypeMismatch,
    ValidationFailed
)
from hyperflow.lang.expressions import infer_kind
from hyperflow.probcore.values import value_kind
from hyperflow.utils.constants import EXTERNAL_AGENT
from hyperflow.utils.helpers import hyperflow_setting

logger = logging.getLogger(__name__)

ERROR = 'error'
WARNING = 'warning'

EXCEPTION_CLASSES = {
    'UndeclaredVariable': UndeclaredVariable,
    'TypeMismatch': TypeMismatch,
}


class Diagnostic(object):
    '''
    One finding of the validator
    '''

    def __init__(self, code, message, line=None, severity=ERROR):
        self.code = code
        self.message = message
        self.line = line
        self.severity = severity

    @property
    def is_error(self):
        return self.severity == ERROR

    def __eq__(self, other):
        return isinstance(other, Diagnostic) and \
            (self.code, self.message, self.severity) == (other.code, other.message, other.severity)

    def __repr__(self):
        if self.line is not None:
            return '{0} (line {1}): {2}'.format(self.code, self.line, self.message)
        return '{0}: {1}'.format(self.code, self.message)

    def to_json(self):
        return {'code': self.code, 'message': self.message, 'line': self.line,
                'severity': self.severity}


def raise_for_errors(diagnostics):
    '''
    Raises the exception matching the first error, warnings are logged

    :param diagnostics: result of validate
    '''
    for diagnostic in diagnostics:
        if not diagnostic.is_error:
            logger.warning(repr(diagnostic))
    errors = [d for d in diagnostics if d.is_error]
    if errors:
        first = errors[0]
        exception_class = EXCEPTION_CLASSES.get(first.code, ValidationFailed)
        message = first.message if first.code in EXCEPTION_CLASSES else \
            '{0}: {1}'.format(first.code, first.message)
        raise exception_class(message, line=first.line, diagnostics=errors)


class Validator(object):
    '''
    Collects diagnostics for a program, walking it with the variables in scope
    '''

    def __init__(self, allow_uniform_init):
        self.allow_uniform_init = allow_uniform_init
        self.diagnostics = []
        self.atom_names = set()

    def report(self, code, message, node=None, severity=ERROR):
        line = getattr(node, 'line', None)
        self.diagnostics.append(Diagnostic(code, message, line=line, severity=severity))

    def check_decl(self, decl, scope):
        domain = decl.domain
        if len(domain) == 0:
            self.report('EmptyDomain', 'domain of {0} is empty'.format(decl.name), decl)
        elif domain.kind == 'mixed':
            self.report('TypeMismatch', 'domain of {0} mixes kinds'.format(decl.name), decl)
        if domain.has_duplicates:
            self.report('DuplicateDomainValue', 'domain of {0} repeats a value'.format(decl.name),
                        decl)
        if decl.name in scope:
            self.report('DuplicateDeclaration', '{0} is declared twice'.format(decl.name), decl)
        if decl.name in self.atom_names:
            self.report('NameClash', '{0} is both a variable and a domain value'.format(decl.name),
                        decl)
        if EXTERNAL_AGENT in decl.visibility.agents:
            self.report('ReservedAgent', '"{0}" is reserved for the outside observer'
                        .format(EXTERNAL_AGENT), decl)

    def check_expr(self, expr, scope):
        '''
        :return: the kind of expr, or None if it is invalid
        '''
        missing = False
        for node in expr.walk():
            if isinstance(node, Var) and node.name not in scope:
                self.report('UndeclaredVariable', 'undeclared variable {0}'.format(node.name), node)
                missing = True
            if isinstance(node, Binary) and node.op in ('/', 'div', 'mod') \
                    and isinstance(node.right, Literal) and node.right.value == 0 \
                    and not isinstance(node.right.value, bool):
                self.report('DivisionByZero', '{0} by the constant 0'.format(node.op), node)
                missing = True
        if missing:
            return None
        try:
            return infer_kind(expr, {name: decl.kind for name, decl in scope.items()})
        except TypeMismatch as error:
            self.report('TypeMismatch', error.message, expr)
            return None

    def check_value(self, expr, decl, node):
        '''
        The kind of expr must match the declaration, constants must lie in the domain
        '''
        kind = self.check_expr(expr, self.scope)
        if kind is None:
            return
        if kind != decl.kind:
            self.report('TypeMismatch',
                        '{0} expects {1}, got {2}'.format(decl.name, decl.kind, kind), node)
        elif isinstance(expr, Literal) and expr.value not in decl.domain:
            self.report('ValueOutsideDomain', '{0} is not in the domain of {1}'
                        .format(expr.value, decl.name), node)

    def check_probability(self, expr, node):
        kind = self.check_expr(expr, self.scope)
        if kind is None:
            return
        if kind != 'num':
            self.report('TypeMismatch', 'probability must be a number, got {0}'.format(kind), node)
        elif isinstance(expr, Literal) and not 0 <= expr.value <= 1:
            self.report('ProbabilityOutOfRange', 'probability {0} outside [0,1]'.format(expr.value),
                        node)

    def check_dist(self, dist, decl, node):
        if isinstance(dist, UniformDomain):
            return
        if isinstance(dist, Uniform):
            for item in dist.items:
                self.check_value(item, decl, node)
            return
        if isinstance(dist, Explicit):
            for entry in dist.entries:
                self.check_value(entry.value, decl, node)
                kind = self.check_expr(entry.prob, self.scope)
                if kind is not None and kind != 'num':
                    self.report('TypeMismatch', 'weight must be a number, got {0}'.format(kind),
                                node)
            probs = [entry.prob for entry in dist.entries]
            if all(isinstance(p, Literal) and value_kind(p.value) == 'num' for p in probs):
                if any(p.value < 0 for p in probs):
                    self.report('NegativeWeight', 'negative weight in distribution', node)
                elif sum(p.value for p in probs) != 1:
                    self.report('WeightsNotOneSumming', 'weights add up to {0}'
                                .format(sum(p.value for p in probs)), node)
            return
        # an initialiser given as a plain expression
        self.check_value(dist, decl, node)

    def lookup(self, name, node):
        decl = self.scope.get(name)
        if decl is None:
            self.report('UndeclaredVariable', 'undeclared variable {0}'.format(name), node)
        return decl

    def check(self, node, in_atomic=False):
        if isinstance(node, Skip):
            return
        if isinstance(node, Assign):
            decl = self.lookup(node.target, node)
            if decl is not None:
                self.check_value(node.expr, decl, node)
            else:
                self.check_expr(node.expr, self.scope)
        elif isinstance(node, Choose):
            decl = self.lookup(node.target, node)
            if decl is not None:
                self.check_dist(node.dist, decl, node)
        elif isinstance(node, XorAssign):
            left = self.lookup(node.left, node)
            right = self.lookup(node.right, node)
            if node.left == node.right:
                self.report('TypeMismatch', 'xor assignment needs two distinct variables', node)
            for decl in (left, right):
                if decl is not None and decl.kind != 'bool':
                    self.report('TypeMismatch', '{0} is not boolean'.format(decl.name), node)
            kind = self.check_expr(node.expr, self.scope)
            if kind is not None and kind != 'bool':
                self.report('TypeMismatch', 'xor assignment needs a boolean expression', node)
        elif isinstance(node, Seq):
            self.check(node.first, in_atomic)
            self.check(node.second, in_atomic)
        elif isinstance(node, Choice):
            self.check_probability(node.prob, node)
            self.check(node.left, in_atomic)
            self.check(node.right, in_atomic)
        elif isinstance(node, Cond):
            kind = self.check_expr(node.guard, self.scope)
            if kind is not None and kind != 'bool':
                self.report('TypeMismatch', 'condition must be boolean', node)
            self.check(node.then, in_atomic)
            self.check(node.otherwise, in_atomic)
        elif isinstance(node, Atomic):
            self.check(node.body, True)
        elif isinstance(node, Reveal):
            self.check_expr(node.expr, self.scope)
        elif isinstance(node, Local):
            if in_atomic:
                self.report('LocalInAtomic', 'local blocks are not allowed inside atomic', node)
            outer = self.scope
            self.scope = dict(outer)
            for local_decl in node.decls:
                decl = local_decl.decl
                self.check_decl(decl, self.scope)
                if local_decl.init is None:
                    if self.allow_uniform_init:
                        self.report('UninitializedLocal', '{0} starts uniform'.format(decl.name),
                                    local_decl, severity=WARNING)
                    else:
                        self.report('UninitializedLocal', '{0} needs an initialiser'
                                    .format(decl.name), local_decl)
                else:
                    self.check_dist(local_decl.init, decl, local_decl)
                self.scope[decl.name] = decl
            self.check(node.body, in_atomic)
            self.scope = outer
        else:
            self.report('UnknownNode', 'unexpected node {0}'.format(type(node).__name__), node)


def validate(program, decls=None, allow_uniform_init=None):
    '''
    Checks a program and returns the list of diagnostics, empty when the
    program is well formed

    :param program: Hprog, or a statement together with decls
    :param decls: global declarations when program is a bare statement
    :param allow_uniform_init: accept locals without initialiser (with a
                               warning); defaults to ALLOW_UNIFORM_LOCAL_INIT
    :return: list of Diagnostic
    '''
    if isinstance(program, Hprog):
        decls, body = program.decls, program.body
        atoms = program.atoms()
    else:
        body = program
        atoms = Hprog(list(decls or []), body).atoms()
    if allow_uniform_init is None:
        allow_uniform_init = hyperflow_setting('ALLOW_UNIFORM_LOCAL_INIT')

    validator = Validator(allow_uniform_init)
    validator.atom_names = set(atoms)
    scope = {}
    for decl in decls or []:
        validator.check_decl(decl, scope)
        scope[decl.name] = decl
    validator.scope = scope
    validator.check(body)
    return validator.diagnostics
