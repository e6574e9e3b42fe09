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

from hyperflow.utils.exceptions import HyperflowError


class InvalidInitSpec(HyperflowError):
    '''
    The initial state specification can't be read, or doesn't cover the
    declared variables
    '''
    pass


class UnknownProgram(HyperflowError):
    '''
    No such file, and no corpus program of that name
    '''
    pass
