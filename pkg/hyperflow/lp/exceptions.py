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


class Unbounded(HyperflowError):
    '''
    The objective of a maximisation problem is unbounded
    '''
    pass


class LPInternalError(InternalAssertion):
    '''
    A returned point or certificate did not verify, or the pivoting
    exceeded its iteration cap
    '''
    pass


class InfeasibleError(HyperflowError):
    '''
    Raised by solve_max when the constraints admit no point. The Farkas
    certificate is kept in ``infeasible``.
    '''

    def __init__(self, message, infeasible):
        self.infeasible = infeasible
        super(InfeasibleError, self).__init__(message)
