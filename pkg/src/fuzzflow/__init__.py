"""Fuzzing workflow automation toolkit.

Stages: codebase indexing, target ranking, seed generation, harness
synthesis, campaign execution, crash triage, and patch validation, glued by
a checkpointed pipeline and driven either from the CLI or as a library.
"""

__version__ = "0.1.0"
