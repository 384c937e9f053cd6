"""
Verification reports with a fixed JSON field order
"""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List

PASS = "pass"
FAIL = "fail"
EXPLORATORY = "exploratory"

FIELD_ORDER = [
    'claim', 'n', 'classes_scanned', 'condition_hits', 'exceptional',
    'counterexamples', 'tolerance', 'runtime_ms', 'verdict', 'extra',
]


@dataclass
class VerificationReport:
    claim: str
    n: Any
    classes_scanned: int = 0
    condition_hits: int = 0
    exceptional: List[str] = field(default_factory=list)
    counterexamples: List[str] = field(default_factory=list)
    tolerance: float = 0.0
    runtime_ms: int = 0
    verdict: str = PASS
    extra: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict != FAIL

    def to_dict(self, include_runtime: bool = True) -> Dict[str, Any]:
        data = {name: getattr(self, name) for name in FIELD_ORDER}
        if not include_runtime:
            data.pop('runtime_ms')
        return data

    def to_json(self, include_runtime: bool = True) -> str:
        return json.dumps(self.to_dict(include_runtime), indent=2, default=str)


def merge_partials(partials: Iterable[Dict[str, Any]]) -> Dict[str, Any]:
    """Sum counters and concatenate-then-sort graph6 lists of subtree results"""
    merged: Dict[str, Any] = {'classes_scanned': 0, 'condition_hits': 0, 'exceptional': [], 'counterexamples': []}
    for part in partials:
        for key, value in part.items():
            if isinstance(value, list):
                merged.setdefault(key, []).extend(value)
            elif key.startswith('max_'):
                merged[key] = max(merged.get(key, value), value)
            else:
                merged[key] = merged.get(key, 0) + value
    for key, value in merged.items():
        if isinstance(value, list):
            merged[key] = sorted(set(value))
    return merged
