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

import os
import tempfile
from fractions import Fraction

'''
This file contains the global settings that don't usually need to be changed.
For a full list of options, visit:
    https://docs.djangoproject.com/en/4.2/ref/settings/
'''

# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
BASE_DIR = os.path.abspath(os.path.dirname(__file__))

#
# Application definition
#
ROOT_URLCONF = 'hyperflow.urls'

INSTALLED_APPS = (
    'django.contrib.auth',
    'django.contrib.contenttypes',

    # Apps from hyperflow proper
    'hyperflow.probcore',
    'hyperflow.lang',
    'hyperflow.semantics',
    'hyperflow.measures',
    'hyperflow.refine',
    'hyperflow.lp',
    'hyperflow.attack',
    'hyperflow.core',
    'hyperflow.utils',

    # REST-API
    'rest_framework',
)

MIDDLEWARE = (
    'django.middleware.common.CommonMiddleware',
)

# No database, programs and states are passed in every request
DATABASES = {}

USE_TZ = True
USE_I18N = False


#
# Logging
# See http://docs.python.org/library/logging.config.html
#
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'simple': {
            'format': '%(levelname)s %(asctime)s %(module)s %(message)s'
        },
    },
    'handlers': {
        'console': {
            'level': 'DEBUG',
            'class': 'logging.StreamHandler',
            'formatter': 'simple'
        },
    },
    'loggers': {
        'hyperflow': {
            'handlers': ['console'],
            'level': 'WARNING',
        }
    }
}


#
# Cache
#
CACHES = {
    'default': {
        'BACKEND': 'django.core.cache.backends.filebased.FileBasedCache',
        'LOCATION': os.environ.get('HYPERFLOW_CACHE_DIR',
                                   os.path.join(tempfile.gettempdir(), 'hyperflow-cache')),
        'TIMEOUT': 30 * 24 * 60 * 60,  # Cache for a month
    }
}


#
# Django Rest Framework
#
REST_FRAMEWORK = {
    'DEFAULT_PERMISSION_CLASSES': ('rest_framework.permissions.AllowAny',),
    'DEFAULT_AUTHENTICATION_CLASSES': (),
    'UNAUTHENTICATED_USER': None,
    'DEFAULT_RENDERER_CLASSES': ('rest_framework.renderers.JSONRenderer',),
    'TEST_REQUEST_DEFAULT_FORMAT': 'json',
}


#
# Application specific configuration options
#
# Consult docs/settings.rst for more information
#
HYPERFLOW_SETTINGS = {
    'PRECISION_BITS': int(os.environ.get('HYPERFLOW_PRECISION_BITS', 128)),
    'SHANNON_TOLERANCE': Fraction(1, 10 ** 9),
    'VERTEX_CAP': 2 ** 20,
    'DEFAULT_SEED': 1,
    'ALLOW_UNIFORM_LOCAL_INIT': False,
    'CORPUS_DIR': os.path.join(os.path.dirname(BASE_DIR), 'corpus'),
    'CACHE_EVALUATIONS': True,
}
