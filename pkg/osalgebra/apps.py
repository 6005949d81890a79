from django.apps import AppConfig


class OsalgebraConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "osalgebra"
    verbose_name = "Orlik-Solomon algebra"
