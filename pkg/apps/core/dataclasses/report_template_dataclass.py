from dataclasses import dataclass


@dataclass(frozen=True)
class ReportTemplate:
    title: str
    body: str
