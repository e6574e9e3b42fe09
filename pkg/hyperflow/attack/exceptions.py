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

from hyperflow.utils.exceptions import HyperflowError, InternalAssertion


class AttackError(HyperflowError):
    pass


class PreconditionViolated(AttackError):
    '''
    No attack can be built: the programs refine each other, already differ
    functionally, or the state space has a shape the construction does not
    cover
    '''
    pass


class NotSeparable(InternalAssertion):
    '''
    The implementation's partition lies inside the convex set of refinements
    of the specification's, contradicting a failed refinement check
    '''
    pass


class VertexBudgetExceeded(AttackError):
    '''
    Enumerating the simple refinement matrices would exceed VERTEX_CAP
    '''

    def __init__(self, message, count=None, **details):
        self.count = count
        super(VertexBudgetExceeded, self).__init__(message, **details)
