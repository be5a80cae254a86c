from django.apps import AppConfig


class ConwayConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "conway"
    verbose_name = "Conway functions and catalog"
