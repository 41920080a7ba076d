# database/__init__.py
# Persisted solve jobs (SQLAlchemy).
