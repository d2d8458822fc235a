"""Default search caps, overridable through environment variables."""

import os


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None


# max |R| for element enumeration
ENUM_CAP = _env_int("IRNG_ENUM_CAP", 1 << 16)
# max |EL_n(R)| for BFS generation
GROUP_CAP = _env_int("IRNG_GROUP_CAP", 10 ** 6)
# max closures/joins examined by weight searches
SUBSET_CAP = _env_int("IRNG_SUBSET_CAP", 10 ** 5)
# max monomials in a membership certificate
TERM_BUDGET = _env_int("IRNG_TERM_BUDGET", 10 ** 6)
