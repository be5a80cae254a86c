from django.apps import AppConfig


class KnotgraphConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "knotgraph"
    verbose_name = "Directed knot matrices"
