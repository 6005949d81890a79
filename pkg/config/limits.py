from pathlib import Path

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured
from platformdirs import user_cache_dir


DEFAULT_GROUP_SIZE_GUARD = 10**6
DEFAULT_FULL_VERIFY_LIMIT = 1152
DEFAULT_THREADS = 1


def _setting(name, default):
    # The kernel is importable without a configured Django project
    try:
        return getattr(settings, name, default)
    except ImproperlyConfigured:
        return default


def get_group_size_guard() -> int:
    return int(_setting("GROUP_SIZE_GUARD", DEFAULT_GROUP_SIZE_GUARD))


def get_full_verify_limit() -> int:
    return int(_setting("FULL_VERIFY_LIMIT", DEFAULT_FULL_VERIFY_LIMIT))


def get_thread_count() -> int:
    return max(1, int(_setting("THREADS", DEFAULT_THREADS)))


def get_cache_dir(override=None) -> Path:
    if override:
        return Path(override)
    return Path(_setting("CACHE_DIR", None) or user_cache_dir("osinvariants"))
