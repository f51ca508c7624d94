"""
Centralized configuration for searches, numeric routines and run manifests.
"""

# ===== REPRODUCIBILITY =====
# Identifier written into every run manifest
FORMAT_REVISION = "2024.1"
RNG_ALGORITHM = "numpy.PCG64"
DEFAULT_SEED = 0

# ===== EXACT SEARCH BUDGETS =====
DEFAULT_MAX_NODES = 10**8
DEFAULT_MAX_SECONDS = 900.0
LOG_EVERY_NODES = 250_000
# Largest number of candidate sets remembered by the sequence search
SEARCH_MEMO_LIMIT = 2_000_000
PREK_MAX_N = 6

# is_uv_free node budget
UV_FREE_MAX_NODES = 5 * 10**7

# ===== VALIDATION =====
MAX_STORED_FAILURES = 100

# ===== CONTINUOUS OPTIMIZATION =====
OPTIMIZE_SCAN_POINTS = 10_000
OPTIMIZE_TOL = 1e-10
ALPHA_BRACKET = (0.5, 1.0)
SHIFT_MAX_HALVINGS = 60

# Denominator cap used when snapping a float optimum to a rational endpoint
RATIONAL_SNAP_DENOMINATOR = 10**6

# ===== MANIFESTS =====
MANIFEST_SUFFIX = ".manifest.json"
