"""
chordspec.verifiers

One verifier class per campaign, plus report export and notification
"""

from .report import VerificationReport, PASS, FAIL, EXPLORATORY, merge_partials
from .theorem import TheoremVerifier, PosaVerifier, GammaVerifier
from .lemmas import LemmaVerifier
from .properties import PropertyVerifier
from .exporter import ReportExporter, write_json
from .notifier import ReportNotifier

__all__ = [
    'VerificationReport',
    'PASS',
    'FAIL',
    'EXPLORATORY',
    'merge_partials',
    'TheoremVerifier',
    'PosaVerifier',
    'GammaVerifier',
    'LemmaVerifier',
    'PropertyVerifier',
    'ReportExporter',
    'write_json',
    'ReportNotifier'
]
