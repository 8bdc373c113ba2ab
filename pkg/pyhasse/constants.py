"""Constants for the PyHasse Module."""

# Class number enumeration
DEFAULT_CLASS_NUMBER_BUDGET = 10**8
FORM_GRID_CHUNK = 1 << 20
CLASS_NUMBER_CACHE_SIZE = 1 << 16

# Heegner levels: squarefree N with h(Q(sqrt(-N))) = 1, N = 1 excluded.
CLASS_NUMBER_ONE_LEVELS = (2, 3, 7, 11, 19, 43, 67, 163)
LARGEST_CLASS_NUMBER_ONE_LEVEL = 163

# Largest squarefree N with genus(X0+(N)) <= 1.
LARGEST_LOW_GENUS_PLUS_LEVEL = 131

# Levels for which Shih's strategy is decided without further input.
SHIH_SUCCESS_LEVELS = (2, 3, 7)
SHIH_BSD_LEVELS = (11, 19)

# Twist conditions
RESIDUE_MODULUS = 8
RESIDUE_CLASS = 1
SMALLEST_SHIMURA_DISCRIMINANT = 6

# JSON
JSON_SAFE_INTEGER = 2**53
CERTIFICATE_FORMAT_VERSION = "1"

KEY_CAVEATS = "caveats"
KEY_CONDITIONS = "conditions"
KEY_DENSITY = "density"
KEY_DESCRIPTOR = "descriptor"
KEY_HYPOTHESES = "hypotheses"
KEY_PRIMES = "primes"
KEY_VERSION = "version"

# Condition trace names
TRACE_PRIME = "prime"
TRACE_RESIDUE = "p_mod_8"
TRACE_ABOVE_THRESHOLD = "p_gt_M"
TRACE_NOT_EXCLUDED = "p_not_condition_prime"
TRACE_SPLITTING = "splitting"
TRACE_QR_PREFIX = "qr_"

# Hypothesis items
HYPOTHESIS_ITEMS = ("h1", "h2", "h3", "h4")

# Output formats
FORMAT_TABLE = "table"
FORMAT_JSON = "json"
FORMAT_CSV = "csv"
OUTPUT_FORMATS = (FORMAT_TABLE, FORMAT_JSON, FORMAT_CSV)

CONF_WORKERS = "workers"
CONF_CLASS_NUMBER_BUDGET = "class_number_budget"
CONF_OUTPUT_FORMAT = "output_format"
CONF_OUTPUT = "output"

DEFAULT_CONFIGURATION = {
    CONF_WORKERS: 1,
    CONF_CLASS_NUMBER_BUDGET: DEFAULT_CLASS_NUMBER_BUDGET,
    CONF_OUTPUT_FORMAT: FORMAT_TABLE,
    CONF_OUTPUT: None,
}

# CLI exit codes
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_HYPOTHESIS = 2
EXIT_INTERNAL = 3

CAVEAT_INEFFECTIVE = (
    "Global nonexistence of rational points on C_p holds for all but finitely "
    "many listed primes p; no effective bound is known, so no individual p is "
    "certified to violate the Hasse principle."
)
CAVEAT_CITED_LOCAL = (
    "Local solvability of X^{D+} everywhere is a cited fact, not verified here."
)
CAVEAT_INERT_READING = (
    "Inert variant: the CM point condition is realized by the Frobenius class with "
    "nontrivial restriction to Q(sqrt(-N)); h(-N) is odd, so p has a degree-one "
    "prime in Q(P0) rather than splitting completely."
)
CAVEAT_SPARSE = (
    "Expected number of qualifying primes up to the bound is {expected}, below "
    "one; an empty prime list is the predicted outcome."
)
