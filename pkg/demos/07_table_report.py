"""Regenerate every reference table and settle the 593 question, as the CLI does.

Run: python3 demos/07_table_report.py   (same as: edsf report-paper)
"""

from edsf import load_registry
from edsf.tables import adjudicate_593, report_paper

reg = load_registry()
report = report_paper(reg)
print(report.to_text())

adj = adjudicate_593(reg)
print()
print(f"F_2^(3) = {adj.f2}; P has order {adj.order_mod_q} mod 593, not 9")
print("verdict:", adj.verdict)
