# Test collection wiring for pytest: mirror manage.py's default settings
import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "hyperflow.settings")
django.setup()
