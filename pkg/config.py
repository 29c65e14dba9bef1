import os
from typing import Mapping

from errors import ValidationError


def env_int(name: str, default: int, environ: Mapping = os.environ, minimum: int = 0) -> int:
    raw = environ.get(name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValidationError(f"Environment variable {name} must be an integer, got {raw!r}") from None
    if value < minimum:
        raise ValidationError(f"Environment variable {name} must be at least {minimum}, got {value}")
    return value


# ========== Config ==========
# Alphabets in scope are tiny; the cap keeps every order table dense.
MAX_POSET_SIZE = 64

# Largest |v| + |w| the brute-force oracle will enumerate.
ORACLE_MAX_TOTAL_LEN = env_int("WORDORDERS_ORACLE_CAP", 12)

# Largest number of words a word-poset window may hold.
NODE_CAP = env_int("WORDORDERS_NODE_CAP", 20000, minimum=1)

# Processes used to fill a word-poset order table (1 = in-process).
WORKERS = env_int("WORDORDERS_WORKERS", 1, minimum=1)

# Letter names of the two-letter chronological alphabet.
CHRON_PAST = os.environ.get("WORDORDERS_PAST", "pi")
CHRON_FUTURE = os.environ.get("WORDORDERS_FUTURE", "phi")

# ========== Rendering ==========
EPSILON_TOKEN = "@"
EPSILON_LABEL = "ε"
WORD_SEPARATOR = "."

# ========== Logging ==========
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
