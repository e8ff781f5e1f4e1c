"""Corpus generation and the claim registry."""

from .claims import CLAIMS, REGISTRY, ClaimReport, list_claims, registry_self_test, scan_open_problem, verify_claim
from .corpus import Corpus, CorpusEntry, default_corpus

__all__ = [
    "CLAIMS", "REGISTRY", "ClaimReport", "Corpus", "CorpusEntry",
    "default_corpus", "list_claims", "registry_self_test", "scan_open_problem", "verify_claim",
]
