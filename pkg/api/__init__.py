# api/__init__.py
# HTTP routes for solving, queued jobs and the corpus.
