# interpreter/__init__.py
# Symbolic execution of parsed programs.
