"""
Shared defaults, budgets and report column names.
"""

# --- Budgets ---
DEFAULT_POINT_BUDGET = 10**7
DEFAULT_SOLUTION_BUDGET = 2 * 10**6
DEFAULT_NODE_BUDGET = 10**5
DEFAULT_DIGIT_BUDGET = 10**5
DEFAULT_LAMBDA_BUDGET = 4096
DEFAULT_MATRIX_BUDGET = 512

# --- Series and precision ---
DEFAULT_KMAX = 8
DEFAULT_THREADS = 1
DEFAULT_CHUNK_SIZE = 2**18

# --- Run options ---
EMPTY_CORRECTION_AUTO = "auto"
EMPTY_CORRECTION_ON = "on"
EMPTY_CORRECTION_OFF = "off"
EMPTY_CORRECTION_MODES = (
    EMPTY_CORRECTION_AUTO, EMPTY_CORRECTION_ON, EMPTY_CORRECTION_OFF
)

SIGN_PROOF = "proof"
SIGN_LITERAL = "literal"
SIGN_BOTH = "both"
SIGN_CONVENTIONS = (SIGN_PROOF, SIGN_LITERAL, SIGN_BOTH)

# --- Exit codes ---
EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT_ERROR = 2
EXIT_BUDGET_ERROR = 3
EXIT_PRECISION_ERROR = 4

# --- Reports ---
REPORT_SCHEMA_VERSION = "1.0"
THRESHOLD_NOTE = (
    "v_q(a_k - b_k) > delta*k  <=>  v_varpi(a_k - b_k) >= m*u*k + 1, "
    "where (p-1)*delta = u/v in lowest terms and varpi^v = pi"
)

DEGREE = "k"
LHS_COEFFICIENT = "LHS"
RHS_COEFFICIENT = "RHS"
DIFFERENCE_VALUATION = "v(LHS-RHS)"
THRESHOLD = "threshold"
PASSED = "pass"

CHECK_SUITE = "suite"
CHECK_CASE = "case"
CHECK_DETAIL = "detail"
CHECK_FLAGGED = "flagged"
