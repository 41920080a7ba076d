# verification/__init__.py
# Corpus harness, reduction composition and brute-force oracles.
