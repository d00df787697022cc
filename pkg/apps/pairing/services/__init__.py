from apps.pairing.services.pairing_service import PairingService
from apps.pairing.services.profile_service import ProfileService
from apps.pairing.services.radial_quadrature_service import (
    RadialQuadratureService,
)
from apps.pairing.services.test_form_document_service import (
    TestFormDocumentService,
)

__all__ = [
    "PairingService",
    "ProfileService",
    "RadialQuadratureService",
    "TestFormDocumentService",
]
