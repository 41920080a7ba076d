# symbolic/__init__.py
# Hash-consed formulas and fixed-width word algebra.
