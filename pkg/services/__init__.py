# services/__init__.py
# Run pipeline, reports, stored jobs and their scheduler.
