import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "knot_algebra.settings")
django.setup()
