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
Hyper-distribution workbench for quantitative information flow
'''

VERSION = (0, 1, 0, 'alpha', 1)
RELEASE = False


def get_version(version=None, release=None):
    '''
    Derives a PEP 440 version number from VERSION
    '''
    version = version or VERSION
    release = RELEASE if release is None else release
    assert version[3] in ('alpha', 'beta', 'rc', 'final')

    main = '.'.join(str(x) for x in version[:2 if version[2] == 0 else 3])
    if version[3] != 'final':
        main += {'alpha': 'a', 'beta': 'b', 'rc': 'rc'}[version[3]] + str(version[4])
    if not release:
        main += '.dev0'
    return main
