from ..services.verification_service import VerificationService

# Dependency for the verification service
def get_verification_service() -> VerificationService:
    return VerificationService()
