from apps.core.dataclasses import ReportTemplate

ANALYZE_REPORT: ReportTemplate = ReportTemplate(
    title="reports/analyze_title.txt",
    body="reports/analyze.txt",
)

STRUCTURE_REPORT: ReportTemplate = ReportTemplate(
    title="reports/structure_title.txt",
    body="reports/structure.txt",
)

EVAL_REPORT: ReportTemplate = ReportTemplate(
    title="reports/eval_title.txt",
    body="reports/eval.txt",
)

VERIFY_REPORT: ReportTemplate = ReportTemplate(
    title="reports/verify_title.txt",
    body="reports/verify.txt",
)

MB_REPORT: ReportTemplate = ReportTemplate(
    title="reports/mb_title.txt",
    body="reports/mb.txt",
)

SELFCHECK_REPORT: ReportTemplate = ReportTemplate(
    title="reports/selfcheck_title.txt",
    body="reports/selfcheck.txt",
)
