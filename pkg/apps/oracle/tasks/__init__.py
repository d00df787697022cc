from apps.oracle.tasks.verify_case_task import verify_case_task

__all__ = [
    "verify_case_task",
]
