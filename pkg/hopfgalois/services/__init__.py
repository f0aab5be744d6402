"""Engine services.

Import services directly from their modules:
    from hopfgalois.services.bundle_service import BundleService
    from hopfgalois.services.differential_service import DifferentialService
"""
