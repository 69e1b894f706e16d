"""Constants for the tripos surd toolkit."""

from fractions import Fraction

NAME = "tripos-surd"

# Decimal digits shown for error quantities. The 1886 error sits at 10^-18,
# so 24 digits leave six guard digits on screen.
DEFAULT_DIGITS = 24
# Extra digits used internally for power enclosures.
GUARD_DIGITS = 10
# Width of the enclosure of the upper end of the overestimation window.
WINDOW_TOLERANCE = Fraction(1, 10**8)
# Highest power of t matched by the surd template.
MATCHED_ORDER = 3
DEFAULT_ROOT = 4

# The 1886 instance: M = N^4 + x with N = 10, x = 1.
TRIPOS_ROOT = 4
TRIPOS_N = Fraction(10)
TRIPOS_X = Fraction(1)
TRIPOS_FRACTION = Fraction(1920160001, 192011200)
# Published figures, as (truncated significant digits, decimal exponent).
TRIPOS_ERROR_FIGURE = ("5695655", -18)
TRIPOS_BOUND_FIGURE = ("5698475", -18)
TRIPOS_ACCURATE_PLACES = 16
TRIPOS_ERROR_CEILING = Fraction(1, 10**16)
TRIPOS_ERROR_FLOOR = Fraction(5, 10**18)
TRIPOS_COINCIDENCE = Fraction(1, 10**20)
# Published percent-bound figures for p = 1, as divisors of N.
PERCENT_POSITIVE_DIVISOR = 17000000000
PERCENT_NEGATIVE_DIVISOR = 14600000000

SIGN_POSITIVE = "pos"
SIGN_NEGATIVE = "neg"

# The printed expansion ends its remainder with x/N^4 where the
# consistent remainder carries (x/N^4)^4; likewise C/(D+E) is 9/56.
NOTE_REMAINDER_POWER = (
    "remainder term of the fourth-root expansion uses (x/N^4)^4; "
    "a printed factor x/N^4 is a typo"
)
NOTE_CORRECTION_RATIO = (
    "C/(D+E) = 9/56 solves the coefficient system; "
    "a printed 5/56 is a typo (B = 5/56 is unaffected)"
)

# Record keys for serialized surd forms.
KEY_ROOT = "k"
SURD_RECORD_KEYS = ("A", "B", "C", "D", "E")

OUTPUT_TEXT = "text"
OUTPUT_JSON = "json"
OUTPUT_CSV = "csv"

COL_T = "t"
COL_TAYLOR = "taylor_error"
COL_SURD = "surd_error"
COL_RATIO = "ratio"
COL_WINDOW = "in_window"

# Sweep CSV columns, in output order.
SWEEP_COLUMNS = (COL_T, COL_TAYLOR, COL_SURD, COL_RATIO, COL_WINDOW)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_ARGUMENT_ERROR = 2

OPT_ROOT = "root"
OPT_N = "n"
OPT_X = "x"
OPT_DIGITS = "digits"
OPT_PERCENT = "percent"
OPT_SIGN = "sign"
OPT_T_MIN = "t_min"
OPT_T_MAX = "t_max"
OPT_STEPS = "steps"
