import os

# tests run with the reduced sampling counts of the test profile
os.environ.setdefault("EJA_PROFILES_ACTIVE", "test")
