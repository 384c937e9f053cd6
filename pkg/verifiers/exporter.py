"""
Report exporter - writes verification reports to JSON, CSV, Excel and Markdown
"""

import logging
from datetime import datetime
from pathlib import Path
from typing import Dict, List, Optional

import pandas as pd

from utils.config_utils import PROJECT_ROOT
from .report import VerificationReport

SUMMARY_COLUMNS = ['Claim', 'n', 'Classes Scanned', 'Condition Hits', 'Exceptional',
                   'Counterexamples', 'Tolerance', 'Runtime (ms)', 'Verdict']


def write_json(report: VerificationReport, path, include_runtime: bool = True) -> str:
    """Write one report; '-' means stdout"""
    text = report.to_json(include_runtime) + "\n"
    if str(path) == "-":
        print(text, end="")
        return "-"
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    return str(path)


class ReportExporter:
    def __init__(self, config: Dict):
        self.config = config
        self.logger = logging.getLogger(__name__)

        export_dir = Path(config['export']['dir'])
        self.export_dir = export_dir if export_dir.is_absolute() else PROJECT_ROOT / export_dir
        self.formats = config['export']['formats']

    def export_reports(self, reports: List[VerificationReport], stamp: Optional[str] = None) -> List[str]:
        """Export a multi-claim run in every configured format"""
        self.logger.info(f"📤 Exporting {len(reports)} report(s)...")
        self.export_dir.mkdir(parents=True, exist_ok=True)
        stamp = stamp or datetime.now().strftime("%Y-%m-%d-%H%M%S")
        rows = self._summary_rows(reports)

        writers = {
            'json': lambda: self._export_json(reports, stamp),
            'csv': lambda: self._export_csv(rows, stamp),
            'xlsx': lambda: self._export_excel(rows, reports, stamp),
            'md': lambda: self._export_markdown(rows, reports, stamp),
        }
        exported = []
        for fmt in self.formats:
            if fmt not in writers:
                self.logger.warning(f"⚠️ Unknown export format {fmt!r}, skipped")
                continue
            exported.extend(writers[fmt]())

        self.logger.info(f"✅ Exported {len(exported)} files")
        return exported

    def _summary_rows(self, reports: List[VerificationReport]) -> List[Dict]:
        return [{
            'Claim': r.claim,
            'n': str(r.n),
            'Classes Scanned': r.classes_scanned,
            'Condition Hits': r.condition_hits,
            'Exceptional': len(r.exceptional),
            'Counterexamples': len(r.counterexamples),
            'Tolerance': r.tolerance,
            'Runtime (ms)': r.runtime_ms,
            'Verdict': r.verdict,
        } for r in reports]

    def _export_json(self, reports: List[VerificationReport], stamp: str) -> List[str]:
        files = []
        for r in reports:
            name = f"{r.claim}-{str(r.n).replace('..', '-')}-{stamp}.json"
            files.append(write_json(r, self.export_dir / name))
        self.logger.info(f"✅ JSON reports exported: {len(files)}")
        return files

    def _export_csv(self, rows: List[Dict], stamp: str) -> List[str]:
        file_path = self.export_dir / f"summary-{stamp}.csv"
        pd.DataFrame(rows, columns=SUMMARY_COLUMNS).to_csv(file_path, index=False)
        self.logger.info(f"✅ CSV exported: {file_path}")
        return [str(file_path)]

    def _export_excel(self, rows: List[Dict], reports: List[VerificationReport], stamp: str) -> List[str]:
        file_path = self.export_dir / f"summary-{stamp}.xlsx"
        listed = [{'Claim': r.claim, 'n': str(r.n), 'Kind': kind, 'graph6': g6}
                  for r in reports
                  for kind, graphs in (('exceptional', r.exceptional), ('counterexample', r.counterexamples))
                  for g6 in graphs]

        with pd.ExcelWriter(file_path, engine='openpyxl') as writer:
            pd.DataFrame(rows, columns=SUMMARY_COLUMNS).to_excel(writer, sheet_name='Summary', index=False)
            pd.DataFrame(listed, columns=['Claim', 'n', 'Kind', 'graph6']).to_excel(
                writer, sheet_name='Listed Graphs', index=False)

            for worksheet in writer.sheets.values():
                for column in worksheet.columns:
                    longest = max(len(str(cell.value)) for cell in column if cell.value is not None)
                    worksheet.column_dimensions[column[0].column_letter].width = min(longest + 2, 50)

        self.logger.info(f"✅ Excel exported: {file_path}")
        return [str(file_path)]

    def _export_markdown(self, rows: List[Dict], reports: List[VerificationReport], stamp: str) -> List[str]:
        file_path = self.export_dir / f"summary-{stamp}.md"
        with open(file_path, 'w') as f:
            f.write(f"# Verification run - {stamp}\n\n")
            f.write("| " + " | ".join(SUMMARY_COLUMNS) + " |\n")
            f.write("|" + "---|" * len(SUMMARY_COLUMNS) + "\n")
            for row in rows:
                f.write("| " + " | ".join(str(row[c]) for c in SUMMARY_COLUMNS) + " |\n")

            for r in reports:
                if not (r.exceptional or r.counterexamples):
                    continue
                f.write(f"\n## {r.claim} (n = {r.n})\n\n")
                for g6 in r.exceptional:
                    f.write(f"- exceptional: `{g6}`\n")
                for g6 in r.counterexamples:
                    f.write(f"- counterexample: `{g6}`\n")

        self.logger.info(f"✅ Markdown exported: {file_path}")
        return [str(file_path)]
