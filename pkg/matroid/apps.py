from django.apps import AppConfig


class MatroidConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "matroid"
    verbose_name = "Reflection matroid"
