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

from hyperflow.settings_global import *  # noqa

'''
Default settings, used by manage.py, the console script and the tests.
Copy this file and point DJANGO_SETTINGS_MODULE at it to change them.
'''

DEBUG = False

# Only used by the JSON API
SECRET_KEY = 'hyperflow-local-development-key'

ALLOWED_HOSTS = ['localhost', '127.0.0.1', 'testserver']

# Uncomment to see the reductions, pivots and vertex counts
# LOGGING['loggers']['hyperflow']['level'] = 'DEBUG'
