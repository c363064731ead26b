"""
Central place for project-wide constants and lightweight type aliases.
Keep this module dependency-free to avoid circular imports.
"""

from enum import Enum, IntEnum
from typing import Dict, List, Literal, Tuple

# --- Serialization ------------------------------------------------------------

SCHEMA_VERSION: int = 1

# --- Orders -------------------------------------------------------------------

# Display order used by `zeta` when neither the flag nor the setting is given.
DEFAULT_DISPLAY_ORDER: int = 64

# Expansion order used by resolution-based Fukui/zeta cross checks.
RESOLUTION_CHECK_ORDER: int = 60

# --- Exit codes ---------------------------------------------------------------

class ExitCode(IntEnum):
    OK = 0
    EQUIVALENT = 0
    NOT_EQUIVALENT = 1
    UNRESOLVED = 2
    ERROR = 3

# --- Verdicts and witnesses ---------------------------------------------------

class VerdictKind(str, Enum):
    EQUIVALENT = "equivalent"
    NOT_EQUIVALENT = "not_equivalent"
    UNRESOLVED = "unresolved"

InvariantName = Literal[
    "fukui_total", "fukui_plus", "fukui_minus",
    "zeta_plus", "zeta_minus", "zeta_total",
]

# Witness search order: Fukui sets first, zeta second.
FUKUI_INVARIANTS: Tuple[InvariantName, ...] = ("fukui_total", "fukui_plus", "fukui_minus")
ZETA_INVARIANTS: Tuple[InvariantName, ...] = ("zeta_plus", "zeta_minus", "zeta_total")

EQUIVALENCE_REASONS: Dict[str, str] = {
    "identical": "identical after normalization",
    "exceptional-rule": "sign immaterial at an even multiple of an odd exponent",
    "same-invariants": "same Fukui and zeta invariants",
}

# --- Germs --------------------------------------------------------------------

# Variable names used when rendering germs of dimension <= 4.
VARIABLE_NAMES: List[str] = ["x", "y", "z", "w"]

# --- Tables -------------------------------------------------------------------

TableName = Literal["fukui-2var", "table7"]
TABLE_NAMES: Tuple[str, ...] = ("fukui-2var", "table7")

# Tail shapes of the three-variable fingerprint table.
# Each entry: (label, y signs, y exponent kind, z signs, z exponent kind).
# Exponent kinds: "kp", "kp+1", "kp+2", "r" (any r > kp+2).
FINGERPRINT_ROWS: List[Tuple[str, Tuple[int, ...], str, Tuple[int, ...], str]] = [
    ("±y^{kp} ± z^{kp}",        (1, -1), "kp",   (1, -1), "kp"),
    ("±y^{kp} + z^{kp+1}",      (1, -1), "kp",   (1,),    "kp+1"),
    ("±y^{kp} - z^{kp+1}",      (1, -1), "kp",   (-1,),   "kp+1"),
    ("±y^{kp} ± z^{kp+2}",      (1, -1), "kp",   (1, -1), "kp+2"),
    ("±y^{kp} ± z^r, r>kp+2",   (1, -1), "kp",   (1, -1), "r"),
    ("y^{kp+1} + z^{kp+1}",     (1,),    "kp+1", (1,),    "kp+1"),
    ("y^{kp+1} - z^{kp+1}",     (1,),    "kp+1", (-1,),   "kp+1"),
    ("-y^{kp+1} - z^{kp+1}",    (-1,),   "kp+1", (-1,),   "kp+1"),
    ("y^{kp+1} ± z^{kp+2}",     (1,),    "kp+1", (1, -1), "kp+2"),
    ("-y^{kp+1} ± z^{kp+2}",    (-1,),   "kp+1", (1, -1), "kp+2"),
    ("y^{kp+1} ± z^r, r>kp+2",  (1,),    "kp+1", (1, -1), "r"),
    ("-y^{kp+1} ± z^r, r>kp+2", (-1,),   "kp+1", (1, -1), "r"),
]

# Offsets above kp+2 tried for the free exponent r.
FINGERPRINT_R_OFFSETS: Tuple[int, ...] = (3, 4)

# --- Logging ------------------------------------------------------------------

LOG_FORMAT: str = "%(asctime)s %(levelname)s %(name)s: %(message)s"
