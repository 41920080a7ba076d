# solvers/__init__.py
# SAT engines: embedded CDCL, pycosat and external processes.
