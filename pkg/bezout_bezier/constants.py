# bezout_bezier/constants.py

# Largest supported lattice coordinate; products such as a*q stay inside int64.
MAX_COORDINATE = 2**31

# Tolerance is TOLERANCE_SCALE * max(1, ||(p,q)||).
TOLERANCE_SCALE = 1e-9

# Theorem: p > MIN_THEOREM_P and 0 <= q < p.
MIN_THEOREM_P = 3

REAL_FORMAT = ".12g"

CSV_COLUMNS = [
    "r",
    "s",
    "a_rs",
    "b_rs",
    "a_sr",
    "b_sr",
    "t_contact",
    "x1",
    "y1",
    "x2",
    "y2",
    "gap_alpha",
    "gap_beta",
    "deviation",
    "bound_ok",
]

AUDIT_COLUMNS = [
    "p",
    "q",
    "epsilon",
    "neighbor_count",
    "max_deviation",
    "bound_slack",
    "all_ok",
]

# SVG styling; the figure's exact colors are not recoverable, these are ours.
SVG_PADDING_FRACTION = 0.05
SEGMENT_COLOR = "#1f4e9c"
CURVE_COLOR = "#d1495b"
CONTROL_COLOR = "#222222"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_VERIFICATION_FAILED = 3

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
