"""
Configuration file for the Yokonuma-Hecke kernel.
Contains all global constants, defaults, and paths.
"""

import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()


def _env_flag(name, default=False):
    value = os.getenv(name)
    if value is None:
        return default
    return value.strip().lower() in ('1', 'true', 'yes', 'on')


# ============== PROJECT PATHS ==============
BASE_DIR = Path(__file__).resolve().parent.parent.parent
DATA_DIR = BASE_DIR / "data"
LOGS_DIR = Path(os.getenv('YH_LOG_DIR', str(DATA_DIR / "logs")))
GOLDEN_DIR = DATA_DIR / "golden"

# ============== ALGEBRA DEFAULTS ==============
# The deformation parameter u is always kept symbolic (Laurent polynomials)
MIN_STRANDS = 1
MIN_MODULUS = 1

# Text symbols used by the canonical renderings
U_SYMBOL = "u"
Z_SYMBOL = "z"
X_PREFIX = "x_"

# ============== PROPERTY SUITES ==============
DEFAULT_SEED = int(os.getenv('YH_SEED', '20240601'))
DEFAULT_SAMPLES = 100
RANDOM_ELEMENT_TERMS = 3  # Basis terms per random algebra element
RANDOM_WORD_LENGTH = 12  # Longest random framed braid word
RANDOM_EXPONENT_RANGE = (-3, 3)  # Framing exponents drawn from this range
RANDOM_COEFF_RANGE = (-3, 3)  # Integer parts of random Laurent coefficients

# Largest d^n * n! basis the sampling suites are allowed to run on
MAX_SUITE_DIMENSION = 5000

# ============== CACHING ==============
BASIS_PRODUCT_CACHE_SIZE = int(os.getenv('YH_CACHE_SIZE', '200000'))
BASIS_TRACE_CACHE_SIZE = 100000

# ============== OUTPUT ==============
OUTPUT_FORMATS = ['pretty', 'json']
DEFAULT_OUTPUT_FORMAT = 'pretty'
JSON_SCHEMA_VERSION = 1

# CLI exit codes
EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_PARAMETER_ERROR = 3

# ============== DEVELOPMENT & DEBUGGING ==============
DEBUG_MODE = _env_flag('YH_DEBUG')
VERBOSE_LOGGING = _env_flag('YH_VERBOSE')
LOG_TO_FILE = _env_flag('YH_LOG_TO_FILE')

if LOG_TO_FILE:
    LOGS_DIR.mkdir(parents=True, exist_ok=True)

# ============== VERSION INFO ==============
APP_VERSION = "1.0.0"
APP_NAME = "yhkernel"
APP_DESCRIPTION = "Exact Yokonuma-Hecke algebras, framed braids and p-adic Markov traces"


# ============== HELPER FUNCTIONS ==============
def is_prime(p):
    """Trial-division primality test (moduli stay small)."""
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def prime_power_exponent(d, p):
    """
    Return r with d == p**r, or None when d is not a power of p.
    """
    if d < 1 or p < 2:
        return None
    r = 0
    while d % p == 0:
        d //= p
        r += 1
    return r if d == 1 else None


def suite_is_feasible(d, n):
    """Check the basis size d^n * n! against MAX_SUITE_DIMENSION."""
    size = d ** n
    for k in range(2, n + 1):
        size *= k
    return size <= MAX_SUITE_DIMENSION


if __name__ == "__main__":
    print(f"{APP_NAME} v{APP_VERSION}")
    print(f"Base Directory: {BASE_DIR}")
    print("Configuration loaded successfully!")
