import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Configuration
PRIME_BOUND = int(os.getenv('SPEH_PRIME_BOUND', 10000))  # classify_on_Z prime search
DEFAULT_TRIALS = int(os.getenv('SPEH_DEFAULT_TRIALS', 1000))
DEFAULT_SEED = int(os.getenv('SPEH_DEFAULT_SEED', 0))
DEFAULT_PRECISION = int(os.getenv('SPEH_PRECISION', 8))  # p-adic digits / dyadic bits
TRIAL_DIVISION_LIMIT = int(os.getenv('SPEH_TRIAL_DIVISION_LIMIT', 10**12))
TEMPERED_CHECK_BOUND = 1000  # n range for tempered witness checks
ACCEPTANCE_SAMPLES = 10 ** 4  # fixed sample size for the equivalence and Ostrowski checks


def prime_bound() -> int:
    """Current prime search bound, re-read so tests can patch the environment."""
    return int(os.getenv('SPEH_PRIME_BOUND', PRIME_BOUND))
