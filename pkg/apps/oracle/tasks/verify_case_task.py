import logging
from typing import Any, Dict, List, Optional

from celery import shared_task

from apps.core.exceptions import NumericalNonconvergenceError
from apps.oracle.dataclasses import CaseResult, VerificationCase
from apps.oracle.selectors import CaseSelector
from apps.oracle.services import VerificationService

logger = logging.getLogger(__name__)


@shared_task(bind=True, acks_late=True)
def verify_case_task(
    self,
    *,
    case: Dict[str, Any],
    tolerance: float,
    taus: Optional[List[float]] = None,
) -> Dict[str, Any]:
    verification: VerificationService = VerificationService()
    parsed: VerificationCase = CaseSelector().parse_case(document=case)
    try:
        result: CaseResult = verification.verify_case(
            case=parsed, tolerance=tolerance, taus=taus
        )
    except NumericalNonconvergenceError as exc:
        logger.warning("Case %s did not converge: %s", parsed.name, exc)
        result = verification.failed_case(
            name=parsed.name,
            error=f"{type(exc).__name__}: {exc}",
            tolerance=parsed.tolerance or tolerance,
        )
    return verification.case_to_document(result=result)
