# language/__init__.py
# Tokenizer, AST, parser and pretty-printer for the constraint language.
