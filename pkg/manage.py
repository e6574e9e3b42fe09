#!/usr/bin/env python
import os
import sys

from django.core.management import execute_from_command_line

if __name__ == "__main__":

    # If user passed the settings flag ignore the default hyperflow settings
    if not any('--settings' in s for s in sys.argv):
        os.environ.setdefault("DJANGO_SETTINGS_MODULE", "hyperflow.settings")

    execute_from_command_line(sys.argv)
