# cnf/__init__.py
# Tseitin encoding and DIMACS input/output.
