import os


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return default
    return int(raw.replace("_", ""))


# Census: ordered pairs of 2-matchings classified per run
PAIR_CAP = _env_int("CROSSINGS_PAIR_CAP", 10**9)

# Matchings yielded by one enumeration, subproblems visited by one count
ENUMERATION_CAP = _env_int("CROSSINGS_ENUMERATION_CAP", 10**7)

# Largest vertex count for which all n! embeddings are enumerated
EXACT_LIMIT = _env_int("CROSSINGS_EXACT_LIMIT", 10)
EXACT_LIMIT_DEFAULT = 10

# Monte Carlo
SAMPLE_BLOCK_SIZE = 8192  # samples per seeded substream; part of the output contract
WORKERS = _env_int("CROSSINGS_WORKERS", 1)

# Upper bound on (rows x 2-matchings) cells evaluated at once by the vectorized crossing test
CROSSING_CHUNK_CELLS = 1 << 21

DEBUG = os.environ.get("CROSSINGS_DEBUG", "").strip() not in ("", "0", "false")
LOG_LEVEL = os.environ.get("CROSSINGS_LOG_LEVEL", "INFO").upper()
