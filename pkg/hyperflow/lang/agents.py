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

from hyperflow.lang.ast import Hprog, LocalDecl, VarDecl, VISIBLE, HIDDEN
from hyperflow.lang.exceptions import UnknownAgent
from hyperflow.utils.constants import EXTERNAL_AGENT


def view_visibility(visibility, agent):
    '''
    The global visibility a variable has for agent
    '''
    if visibility.is_global:
        return visibility
    return VISIBLE if agent in visibility.agents else HIDDEN


def _project(node, agent):
    if isinstance(node, LocalDecl):
        decl = node.decl
        projected = VarDecl(decl.name, decl.domain, view_visibility(decl.visibility, agent),
                            line=decl.line, column=decl.column)
        init = _project(node.init, agent) if node.init is not None else None
        return LocalDecl(projected, init, line=node.line, column=node.column)
    return node.map_children(lambda child: _project(child, agent))


def project_view(program, agent):
    '''
    The program as agent sees it: variables whose agent set contains agent
    become visible, all other agent-annotated variables hidden

    The reserved agent "external" sees only the globally visible variables.
    A program without agent annotations is returned unchanged.

    :param program: Hprog
    :param agent: agent name
    :return: Hprog with only global annotations
    :raise UnknownAgent: agent appears in no annotation
    '''
    agents = program.agents
    if agents and agent != EXTERNAL_AGENT and agent not in agents:
        raise UnknownAgent('unknown agent {0}, the program knows {1}'
                           .format(agent, ', '.join(sorted(agents)) or 'none'))

    decls = [VarDecl(decl.name, decl.domain, view_visibility(decl.visibility, agent),
                     line=decl.line, column=decl.column) for decl in program.decls]
    return Hprog(decls, _project(program.body, agent), line=program.line)
