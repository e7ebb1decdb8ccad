"""Culturally-configurable retrieval-augmented health chat engine.

Pipeline per turn: normalize the query, translate to English, retrieve
from the curated knowledge base, draft with guardrails and a length
cap, translate back to the user's language, then swap formal terms for
locally understood ones.
"""

__version__ = "0.1.0"
