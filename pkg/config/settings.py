import os
from pathlib import Path
from dotenv import load_dotenv
from platformdirs import user_cache_dir

# Build paths inside the project
BASE_DIR = Path(__file__).resolve().parent.parent

# Always load .env if present (for local runs)
load_dotenv(BASE_DIR / ".env")

# Nothing here is served over HTTP, the key only satisfies Django's checks
SECRET_KEY = os.getenv("SECRET_KEY", "osinvariants-insecure-fallback-key")

DEBUG = os.getenv("DEBUG", "False").lower() == "true"

# Application definition
INSTALLED_APPS = [
    "scalars",
    "coxeter",
    "matroid",
    "osalgebra",
    "fvverify",
    "cli",
]

# No database: every computation is in memory, caches are plain files
DATABASES = {}

# Internationalization
LANGUAGE_CODE = "en-us"
TIME_ZONE = "UTC"
USE_I18N = False
USE_TZ = True

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

# Brute-force enumeration of W refuses above this many elements
GROUP_SIZE_GUARD = int(os.getenv("OS_GROUP_SIZE_GUARD", "1000000"))

# Largest |W| for the full verification pipeline (F4 has 1152)
FULL_VERIFY_LIMIT = int(os.getenv("OS_FULL_VERIFY_LIMIT", "1152"))

# Where serialized basis graphs are kept
CACHE_DIR = Path(os.getenv("OS_CACHE_DIR") or user_cache_dir("osinvariants"))

# Worker cap for averaging and audits
THREADS = int(os.getenv("OS_THREADS", "1"))

LOG_LEVEL = os.getenv("OS_LOG_LEVEL", "INFO").upper()

# Logging goes to stderr, stdout carries reports, JSON and DOT
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "plain": {
            "format": "%(asctime)s %(levelname)s %(name)s %(message)s",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "formatter": "plain",
        },
    },
    "root": {
        "handlers": ["console"],
        "level": LOG_LEVEL,
    },
}
