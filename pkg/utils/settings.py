# utils/settings.py
"""Runtime settings read from the environment or a local `.env` file.

None of the values is required; every setting falls back to a default.
"""
from decouple import config

from utils.constants import DEFAULT_DISPLAY_ORDER

DEFAULT_ORDER: int = config("BLOWZETA_DEFAULT_ORDER", default=DEFAULT_DISPLAY_ORDER, cast=int)
LOG_LEVEL: str = config("BLOWZETA_LOG_LEVEL", default="WARNING")
CATALOG_WORKERS: int = config("BLOWZETA_CATALOG_WORKERS", default=1, cast=int)
# 0 means: derive the exponent search cap from the truncation order.
RECOVERY_RMAX: int = config("BLOWZETA_RECOVERY_RMAX", default=0, cast=int)
