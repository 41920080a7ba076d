# core/__init__.py
# Shared errors, settings and logging setup.
