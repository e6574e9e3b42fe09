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
Concrete syntax of .hprog programs, see docs/grammar.md
'''

GRAMMAR = r"""
start: decl* stmt ";"?

decl: visibility NAME ("," NAME)* ":" domain ";"

visibility: "vis"                           -> vis_global
          | "hid"                           -> hid_global
          | "vis" "{" NAME ("," NAME)* "}"  -> vis_agents

domain: "{" value ("," value)* "}"          -> domain_list
      | "{" signed ".." signed "}"          -> domain_range

value: signed                               -> int_value
     | signed "/" INT                       -> rational_value
     | "true"                               -> true_value
     | "false"                              -> false_value
     | NAME                                 -> atom_value

signed: INT                                 -> pos_int
      | "-" INT                             -> neg_int

?stmt: choice
     | stmt ";" choice                      -> seq

?choice: simple
       | simple "[" expr "]" choice         -> pchoice

?simple: "skip"                             -> skip
       | NAME ":=" expr                     -> assign
       | NAME "<-" distexpr                 -> choose
       | "(" NAME "xor" NAME ")" ":=" expr  -> xor_assign
       | "if" expr "then" stmt "else" stmt "fi" -> cond
       | "if" expr "then" stmt "fi"         -> cond_then
       | "reveal" expr                      -> reveal
       | "atomic" "{" stmt "}"              -> atomic
       | "local" local_decl (";" local_decl)* "in" "{" stmt "}" -> local
       | "(" stmt ")"

local_decl: visibility NAME ":" domain (":=" local_init)?

?local_init: distexpr
           | expr

distexpr: "uniform" "{" expr ("," expr)* "}"  -> uniform_dist
        | "uniform"                           -> uniform_domain
        | "{" weighted ("," weighted)* "}"    -> explicit_dist
        | expr "[" expr "]" expr              -> infix_dist

weighted: expr "@" expr

?expr: ifexpr

?ifexpr: orexpr
       | orexpr "if" orexpr "else" ifexpr   -> if_expr

?orexpr: xorexpr
       | orexpr "or" xorexpr                -> or_op

?xorexpr: andexpr
        | xorexpr "xor" andexpr             -> xor_op

?andexpr: notexpr
        | andexpr "and" notexpr             -> and_op

?notexpr: comparison
        | "not" notexpr                     -> not_op

?comparison: sum
           | sum "=" sum                    -> eq
           | sum "!=" sum                   -> ne
           | sum "<" sum                    -> lt
           | sum "<=" sum                   -> le
           | sum ">" sum                    -> gt
           | sum ">=" sum                   -> ge

?sum: product
    | sum "+" product                       -> add
    | sum "-" product                       -> sub

?product: unary
        | product "*" unary                 -> mul
        | product "/" unary                 -> truediv
        | product "div" unary               -> floordiv
        | product "mod" unary               -> mod

?unary: atom
      | "-" unary                           -> neg

?atom: INT                                  -> int_lit
     | "true"                               -> true_lit
     | "false"                              -> false_lit
     | NAME                                 -> name
     | "(" expr ")"

COMMENT: /#[^\n]*/

%import common.CNAME -> NAME
%import common.INT
%import common.WS

%ignore WS
%ignore COMMENT
"""

KEYWORDS = frozenset([
    'vis', 'hid', 'skip', 'if', 'then', 'else', 'fi', 'reveal', 'atomic', 'local', 'in',
    'uniform', 'true', 'false', 'and', 'or', 'xor', 'not', 'div', 'mod',
])
