from pathlib import Path
from typing import Any, Dict, List

from decouple import config

BASE_DIR: Path = Path(__file__).resolve().parent.parent

SECRET_KEY: str = config(
    "DJANGO_SECRET_KEY", default="residue-local-development-key"
)

DEBUG: bool = config("DJANGO_DEBUG", default=False, cast=bool)

ALLOWED_HOSTS: List[str] = []

INSTALLED_APPS: List[str] = [
    "apps.core",
    "apps.linalg",
    "apps.cones",
    "apps.structure",
    "apps.mellin",
    "apps.pairing",
    "apps.oracle",
]

TEMPLATES: List[Dict[str, Any]] = [
    {
        "BACKEND": "django.template.backends.django.DjangoTemplates",
        "DIRS": [BASE_DIR / "templates"],
        "APP_DIRS": True,
        "OPTIONS": {
            "context_processors": [],
        },
    },
]

DATABASES: Dict[str, Any] = {}

TIME_ZONE: str = "UTC"
USE_I18N: bool = True
USE_TZ: bool = True
LANGUAGE_CODE: str = "en-us"

DEFAULT_AUTO_FIELD: str = "django.db.models.BigAutoField"

RESIDUE_CASES_DIR: Path = Path(
    config("RESIDUE_CASES_DIR", default=str(BASE_DIR / "fixtures" / "cases"))
)

RESIDUE_MB_TOLERANCE: float = config(
    "RESIDUE_MB_TOLERANCE", default=1e-10, cast=float
)
RESIDUE_MB_INITIAL_STEP: float = config(
    "RESIDUE_MB_INITIAL_STEP", default=0.25, cast=float
)
RESIDUE_MB_MIN_STEP: float = config(
    "RESIDUE_MB_MIN_STEP", default=0.01, cast=float
)
RESIDUE_MB_INITIAL_HEIGHT: float = config(
    "RESIDUE_MB_INITIAL_HEIGHT", default=8.0, cast=float
)
RESIDUE_MB_MAX_HEIGHT: float = config(
    "RESIDUE_MB_MAX_HEIGHT", default=40.0, cast=float
)

RESIDUE_RADIAL_EPSREL: float = config(
    "RESIDUE_RADIAL_EPSREL", default=1e-9, cast=float
)
RESIDUE_RADIAL_INITIAL_STEP: float = config(
    "RESIDUE_RADIAL_INITIAL_STEP", default=0.2, cast=float
)
RESIDUE_RADIAL_LIMIT: int = config(
    "RESIDUE_RADIAL_LIMIT", default=5, cast=int
)
RESIDUE_RADIAL_MAX_NODES: int = config(
    "RESIDUE_RADIAL_MAX_NODES", default=20_000_000, cast=int
)
RESIDUE_RADIAL_LOG_MARGIN: float = config(
    "RESIDUE_RADIAL_LOG_MARGIN", default=36.0, cast=float
)

RESIDUE_TAU_RATIO: float = config(
    "RESIDUE_TAU_RATIO", default=0.25, cast=float
)
RESIDUE_TAU_COUNT: int = config("RESIDUE_TAU_COUNT", default=6, cast=int)

RESIDUE_ORACLE_LOG_STEP: float = config(
    "RESIDUE_ORACLE_LOG_STEP", default=0.1, cast=float
)
RESIDUE_ORACLE_LOG_MARGIN: float = config(
    "RESIDUE_ORACLE_LOG_MARGIN", default=22.0, cast=float
)
RESIDUE_ORACLE_MAX_NODES: int = config(
    "RESIDUE_ORACLE_MAX_NODES", default=60_000_000, cast=int
)

RESIDUE_CONTOUR_HEIGHT: float = config(
    "RESIDUE_CONTOUR_HEIGHT", default=12.0, cast=float
)
RESIDUE_CONTOUR_STEP: float = config(
    "RESIDUE_CONTOUR_STEP", default=0.04, cast=float
)

RESIDUE_VERIFY_TOLERANCE: float = config(
    "RESIDUE_VERIFY_TOLERANCE", default=0.01, cast=float
)
RESIDUE_SEED: int = config("RESIDUE_SEED", default=0, cast=int)

RESIDUE_LOG_LEVEL: str = config("RESIDUE_LOG_LEVEL", default="WARNING")

LOGGING: Dict[str, Any] = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{asctime} {levelname} {name} {message}",
            "style": "{",
        },
    },
    "handlers": {
        "stderr": {
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "formatter": "verbose",
        },
    },
    "loggers": {
        "apps": {
            "handlers": ["stderr"],
            "level": RESIDUE_LOG_LEVEL,
            "propagate": False,
        },
    },
}

CELERY_BROKER_URL = config(
    "CELERY_BROKER_URL", default="redis://127.0.0.1:6379/1"
)
CELERY_RESULT_BACKEND = config(
    "CELERY_RESULT_BACKEND", default="redis://127.0.0.1:6379/1"
)
CELERY_TIMEZONE: str = TIME_ZONE
CELERY_ACCEPT_CONTENT = ["json"]
CELERY_TASK_SERIALIZER = "json"
CELERY_RESULT_SERIALIZER = "json"
CELERY_TASK_ALWAYS_EAGER: bool = config(
    "CELERY_TASK_ALWAYS_EAGER", default=True, cast=bool
)
CELERY_TASK_EAGER_PROPAGATES: bool = True
CELERY_TASK_SOFT_TIME_LIMIT: int = 600
CELERY_TASK_TIME_LIMIT: int = 900
CELERY_TASK_ACKS_LATE: bool = True
CELERY_TASK_REJECT_ON_WORKER_LOST: bool = True
CELERY_WORKER_MAX_TASKS_PER_CHILD: int = 100
CELERY_WORKER_MAX_MEMORY_PER_CHILD: int = 2_000_000
