import os
from os.path import dirname, join

from dotenv import load_dotenv

# Load environment variables from .env files
repo_root = dirname(__file__)
dotenv_path = join(repo_root, ".env")

if os.path.exists(dotenv_path):
    load_dotenv(dotenv_path)


# Set up environment variables
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
# Working q-truncation (integral orders) for every series computation.
MODHECKE_ORDER = int(os.getenv("MODHECKE_ORDER", "60"))
MODHECKE_SEED = int(os.getenv("MODHECKE_SEED", "7"))
# Entry bound for randomly sampled integer matrices.
MODHECKE_MAX_ENTRY = int(os.getenv("MODHECKE_MAX_ENTRY", "10"))
# Largest cyclotomic order that mixed-order arithmetic may embed into.
MODHECKE_CYCLOTOMIC_CAP = int(os.getenv("MODHECKE_CYCLOTOMIC_CAP", "720"))
# Largest exponent denominator a q-series may carry.
MODHECKE_MAX_EXP_DENOMINATOR = int(os.getenv("MODHECKE_MAX_EXP_DENOMINATOR", "144"))
MODHECKE_QUAD_TOL = float(os.getenv("MODHECKE_QUAD_TOL", "1e-9"))
