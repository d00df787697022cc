from apps.oracle.selectors.case_selector import CaseSelector

__all__ = [
    "CaseSelector",
]
