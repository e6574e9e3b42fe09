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
from fractions import Fraction

import lark
from lark import Transformer, v_args

from hyperflow.lang.ast import (
    Hprog,
    VarDecl,
    Domain,
    Visibility,
    VISIBLE,
    HIDDEN,
    Literal,
    Var,
    Unary,
    Binary,
    IfElse,
    Uniform,
    UniformDomain,
    Weighted,
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
    LocalDecl,
    Local
)
from hyperflow.lang.exceptions import HprogSyntaxError
from hyperflow.lang.expressions import fold_constants
from hyperflow.lang.grammar import GRAMMAR
from hyperflow.probcore.values import Atom, canonical_number

logger = logging.getLogger(__name__)

EXPRESSION_NODES = (Literal, Var, Unary, Binary, IfElse)


def _pos(meta):
    '''
    Source position of a rule, if lark could determine one
    '''
    if getattr(meta, 'empty', True):
        return {}
    return {'line': getattr(meta, 'line', None), 'column': getattr(meta, 'column', None)}


def _binary(op):
    @v_args(meta=True)
    def build(self, meta, children):
        left, right = children
        return Binary(op, left, right, **_pos(meta))
    return build


class HprogTransformer(Transformer):
    '''
    Turns the lark parse tree into AST nodes
    '''

    # declarations
    @v_args(meta=True)
    def start(self, meta, children):
        decls = []
        for child in children[:-1]:
            decls.extend(child)
        return Hprog(decls, children[-1], **_pos(meta))

    @v_args(meta=True)
    def decl(self, meta, children):
        visibility, domain = children[0], children[-1]
        return [VarDecl(str(name), domain, visibility, line=name.line, column=name.column)
                for name in children[1:-1]]

    def vis_global(self, children):
        return VISIBLE

    def hid_global(self, children):
        return HIDDEN

    def vis_agents(self, children):
        return Visibility('agents', [str(name) for name in children])

    def domain_list(self, children):
        values = []
        for rank, value in enumerate(children):
            if isinstance(value, tuple) and value[0] == 'atom':
                value = Atom(value[1], rank)
            values.append(value)
        return Domain(values)

    def domain_range(self, children):
        low, high = children
        return Domain.from_range(low, high)

    def int_value(self, children):
        return children[0]

    def rational_value(self, children):
        numerator, denominator = children
        return canonical_number(Fraction(numerator, int(denominator)))

    def true_value(self, children):
        return True

    def false_value(self, children):
        return False

    def atom_value(self, children):
        return ('atom', str(children[0]))

    def pos_int(self, children):
        return int(children[0])

    def neg_int(self, children):
        return -int(children[0])

    # statements
    @v_args(meta=True)
    def seq(self, meta, children):
        return Seq(children[0], children[1], **_pos(meta))

    @v_args(meta=True)
    def pchoice(self, meta, children):
        return Choice(children[0], children[1], children[2], **_pos(meta))

    @v_args(meta=True)
    def skip(self, meta, children):
        return Skip(**_pos(meta))

    @v_args(meta=True)
    def assign(self, meta, children):
        return Assign(str(children[0]), children[1], **_pos(meta))

    @v_args(meta=True)
    def choose(self, meta, children):
        return Choose(str(children[0]), children[1], **_pos(meta))

    @v_args(meta=True)
    def xor_assign(self, meta, children):
        return XorAssign(str(children[0]), str(children[1]), children[2], **_pos(meta))

    @v_args(meta=True)
    def cond(self, meta, children):
        return Cond(children[0], children[1], children[2], **_pos(meta))

    @v_args(meta=True)
    def cond_then(self, meta, children):
        return Cond(children[0], children[1], Skip(), **_pos(meta))

    @v_args(meta=True)
    def reveal(self, meta, children):
        return Reveal(children[0], **_pos(meta))

    @v_args(meta=True)
    def atomic(self, meta, children):
        return Atomic(children[0], **_pos(meta))

    @v_args(meta=True)
    def local(self, meta, children):
        return Local(list(children[:-1]), children[-1], **_pos(meta))

    @v_args(meta=True)
    def local_decl(self, meta, children):
        visibility, name, domain = children[:3]
        init = children[3] if len(children) > 3 else None
        decl = VarDecl(str(name), domain, visibility, line=name.line, column=name.column)
        return LocalDecl(decl, init, **_pos(meta))

    # distributions
    @v_args(meta=True)
    def uniform_dist(self, meta, children):
        return Uniform(list(children), **_pos(meta))

    @v_args(meta=True)
    def uniform_domain(self, meta, children):
        return UniformDomain(**_pos(meta))

    @v_args(meta=True)
    def explicit_dist(self, meta, children):
        return Explicit(list(children), **_pos(meta))

    @v_args(meta=True)
    def infix_dist(self, meta, children):
        first, prob, second = children
        rest = Binary('-', Literal(1), prob)
        return Explicit([Weighted(first, prob), Weighted(second, rest)], **_pos(meta))

    @v_args(meta=True)
    def weighted(self, meta, children):
        return Weighted(children[0], children[1], **_pos(meta))

    # expressions
    @v_args(meta=True)
    def if_expr(self, meta, children):
        return IfElse(children[0], children[1], children[2], **_pos(meta))

    or_op = _binary('or')
    xor_op = _binary('xor')
    and_op = _binary('and')
    eq = _binary('=')
    ne = _binary('!=')
    lt = _binary('<')
    le = _binary('<=')
    gt = _binary('>')
    ge = _binary('>=')
    add = _binary('+')
    sub = _binary('-')
    mul = _binary('*')
    truediv = _binary('/')
    floordiv = _binary('div')
    mod = _binary('mod')

    @v_args(meta=True)
    def not_op(self, meta, children):
        return Unary('not', children[0], **_pos(meta))

    @v_args(meta=True)
    def neg(self, meta, children):
        return Unary('neg', children[0], **_pos(meta))

    def int_lit(self, children):
        token = children[0]
        return Literal(int(token), line=token.line, column=token.column)

    @v_args(meta=True)
    def true_lit(self, meta, children):
        return Literal(True, **_pos(meta))

    @v_args(meta=True)
    def false_lit(self, meta, children):
        return Literal(False, **_pos(meta))

    def name(self, children):
        token = children[0]
        return Var(str(token), line=token.line, column=token.column)


def _build_parser():
    return lark.Lark(GRAMMAR, parser='earley', lexer='basic', propagate_positions=True)


_parser = None


def get_parser():
    global _parser
    if _parser is None:
        _parser = _build_parser()
    return _parser


def resolve_names(node, scope, atoms):
    '''
    Turns names that are not variables in scope but declared atoms into
    literals. Unknown names stay variables, the validator reports them.
    '''
    if isinstance(node, Var):
        if node.name not in scope and node.name in atoms:
            return Literal(atoms[node.name], line=node.line, column=node.column)
        return node
    if isinstance(node, Local):
        inner = set(scope)
        decls = []
        for local_decl in node.decls:
            init = local_decl.init
            if init is not None:
                init = resolve_names(init, inner, atoms)
            decls.append(LocalDecl(local_decl.decl, init, line=local_decl.line))
            inner.add(local_decl.decl.name)
        return Local(decls, resolve_names(node.body, inner, atoms), line=node.line)
    return node.map_children(lambda child: resolve_names(child, scope, atoms))


def fold_program(node):
    '''
    Folds the constant sub-expressions of every expression in a program
    '''
    if isinstance(node, EXPRESSION_NODES):
        return fold_constants(node)
    return node.map_children(fold_program)


def parse_source(text):
    '''
    Parses program text into an Hprog without validating it

    :param text: the source
    :return: Hprog with names resolved and constants folded
    :raise HprogSyntaxError: on malformed input
    '''
    try:
        tree = get_parser().parse(text)
    except lark.exceptions.UnexpectedCharacters as error:
        raise HprogSyntaxError('unexpected character {0!r}'.format(text[error.pos_in_stream]),
                               line=error.line, column=error.column)
    except lark.exceptions.UnexpectedEOF as error:
        raise HprogSyntaxError('unexpected end of input')
    except lark.exceptions.UnexpectedToken as error:
        raise HprogSyntaxError('unexpected {0!r}'.format(str(error.token)),
                               line=error.line, column=error.column)
    except lark.exceptions.UnexpectedInput as error:
        raise HprogSyntaxError('syntax error', line=getattr(error, 'line', None),
                               column=getattr(error, 'column', None))

    try:
        program = HprogTransformer().transform(tree)
    except lark.exceptions.VisitError as error:
        raise error.orig_exc

    atoms = program.atoms()
    globals_ = {decl.name for decl in program.decls}
    body = fold_program(resolve_names(program.body, globals_, atoms))
    return Hprog(program.decls, body, line=program.line)


def parse(text, check=True):
    '''
    Parses and validates a program

    :param text: the source
    :param check: validate and raise on the first error
    :return: Hprog
    :raise HprogSyntaxError: malformed input
    :raise UndeclaredVariable, TypeMismatch, ValidationFailed: invalid program
    '''
    from hyperflow.lang.validator import validate, raise_for_errors

    program = parse_source(text)
    if check:
        raise_for_errors(validate(program))
    return program


def parse_expression(text, program):
    '''
    Parses a single expression in the context of a program's declarations,
    as used by command line options
    '''
    source = '__e := ' + text
    try:
        tree = get_parser().parse(source)
    except lark.exceptions.UnexpectedInput as error:
        raise HprogSyntaxError('cannot parse expression {0!r}'.format(text),
                               line=getattr(error, 'line', None))
    expr = HprogTransformer().transform(tree).body.expr
    scope = {decl.name for decl in program.decls}
    return fold_constants(resolve_names(expr, scope, program.atoms()))
