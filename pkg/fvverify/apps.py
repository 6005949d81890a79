from django.apps import AppConfig


class FvverifyConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "fvverify"
    verbose_name = "Invariant verification"
