"""
Report notifier - terminal summary of a verification run
"""

import logging
import sys
from datetime import datetime
from typing import Dict, List, TextIO

from .report import EXPLORATORY, FAIL, VerificationReport

MARKS = {FAIL: "❌", EXPLORATORY: "🔍"}


class ReportNotifier:
    def __init__(self, config: Dict):
        self.config = config
        self.logger = logging.getLogger(__name__)

    def print_summary(self, reports: List[VerificationReport], export_files: List[str] = (),
                      stream: TextIO = sys.stderr) -> None:
        """Summary table on stderr; stdout stays free for JSON"""
        def out(line: str = "") -> None:
            print(line, file=stream)

        failed = [r for r in reports if r.verdict == FAIL]
        out("\n" + "=" * 60)
        out("CHORDSPEC - VERIFICATION RUN COMPLETE")
        out("=" * 60)

        out("📊 SUMMARY:")
        out(f"   • Claims checked: {len(reports)}")
        out(f"   • Failed: {len(failed)}")
        out(f"   • Classes scanned: {sum(r.classes_scanned for r in reports)}")

        out("\n📋 CLAIMS:")
        for r in reports:
            mark = MARKS.get(r.verdict, "✅")
            out(f"   {mark} {r.claim:<9} n={str(r.n):<10} hits={r.condition_hits:<8} "
                f"{r.verdict} ({r.runtime_ms} ms)")
            for g6 in r.counterexamples[:5]:
                out(f"      counterexample {g6}")
            if len(r.counterexamples) > 5:
                out(f"      ... {len(r.counterexamples) - 5} more")

        if export_files:
            out("\n📤 EXPORTED FILES:")
            for file_path in export_files:
                out(f"   • {file_path}")

        out("\n" + "=" * 60)
        out(f"Finished at: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}")
        out("=" * 60 + "\n")
        self.logger.info(f"📢 Summary printed for {len(reports)} report(s), {len(failed)} failed")
