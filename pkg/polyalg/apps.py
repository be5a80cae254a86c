from django.apps import AppConfig


class PolyalgConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "polyalg"
    verbose_name = "Integer polynomial algebra"
