"""Universal first-order calculus, horizontal forms and the Galois cross-check."""

from functools import cached_property
from typing import Optional

from hopfgalois.core.exceptions import EngineDefectError
from hopfgalois.linalg import ONE, Mat, Subspace, kernel, kron, rank
from hopfgalois.linalg.matrix import SparseRow, axpy
from hopfgalois.models import Bundle, UniversalFODC, VerticalSplit
from hopfgalois.schemas.reports import BmMdReport, CrossCheckReport, FODCReport, VerticalSplitReport
from hopfgalois.services.bundle_service import BundleService
from hopfgalois.utils.logger import get_logger, log_timer
from hopfgalois.utils.telemetry import add_span_attributes, get_tracer

logger = get_logger(__name__)
tracer = get_tracer()


def leibniz_holds(p: Bundle, d: Mat) -> bool:
    """d(bb′) = d(b)·b′ + b·d(b′) as an identity of maps B⊗B → B⊗B."""
    eye = Mat.identity(p.total_dim)
    lhs = d @ p.mult
    rhs = kron(eye, p.mult) @ kron(d, eye) + kron(p.mult, eye) @ kron(eye, d)
    return lhs == rhs


class DifferentialService:
    """Service for the first-order differential side of one bundle."""

    def __init__(self, bundle: Bundle, bundle_service: Optional[BundleService] = None):
        """
        Initialize service.

        Args:
            bundle: Comodule algebra to analyse
            bundle_service: Existing service to share cached objects with
        """
        self.bundle = bundle
        self.bundle_service = bundle_service or BundleService(bundle)

    @cached_property
    def universal_fodc(self) -> UniversalFODC:
        """
        Ω¹ = ker(m: B⊗B → B) with d(b) = 1⊗b − b⊗1.

        Raises:
            EngineDefectError: If dim Ω¹ ≠ n² − n, d(1) ≠ 0 or Leibniz fails
        """
        p = self.bundle
        n = p.total_dim
        eye = Mat.identity(n)
        with tracer.start_as_current_span("differential.universal_fodc"):
            space = kernel(p.mult)
            d = kron(p.unit, eye) - kron(eye, p.unit)
            if space.dim != n * n - n:
                raise EngineDefectError(f"dim Ω¹ = {space.dim}, expected {n * n - n} for {p.name}")
            if d.apply_sparse(p.unit_vector()):
                raise EngineDefectError(f"d(1) ≠ 0 for {p.name}")
            if not all(space.contains(column) for column in d.sparse_columns()):
                raise EngineDefectError(f"d does not land in Ω¹ for {p.name}")
            if not leibniz_holds(p, d):
                raise EngineDefectError(f"Leibniz rule fails for {p.name}")

            add_span_attributes(**{"bundle.name": p.name, "omega1.dim": space.dim})
            logger.info("Built universal calculus", extra={"bundle": p.name, "omega1_dim": space.dim})
            return UniversalFODC(bundle=p, space=space, d=d)

    def fodc_report(self) -> FODCReport:
        o = self.universal_fodc
        p = self.bundle
        return FODCReport(
            name=p.name,
            bundle_dim=p.total_dim,
            omega1_dim=o.dim,
            d_unit_is_zero=not o.d.apply_sparse(p.unit_vector()),
            leibniz=leibniz_holds(p, o.d),
        )

    def _omega_hor1(self, d: Mat) -> Subspace:
        """Span of b_c·d(v)·b_r over basis elements b_c, b_r and a basis of V."""
        p = self.bundle
        n = p.total_dim
        products = p.mult.sparse_columns()
        vectors: list[SparseRow] = []
        for v in self.bundle_service.fixed_subalgebra.space.sparse_basis():
            dv = d.apply_sparse(v)
            for c in range(n):
                for r in range(n):
                    form: SparseRow = {}
                    for index, value in dv.items():
                        left, right = divmod(index, n)
                        for i, x in products[c * n + left].items():
                            scaled = {i * n + j: value * x * y for j, y in products[right * n + r].items()}
                            axpy(form, ONE, scaled)
                    vectors.append(form)
        return Subspace(n * n, vectors)

    @cached_property
    def vertical_split(self) -> VerticalSplit:
        """
        Vertical map b⊗b′ ↦ b·b′⁽⁰⁾⊗(b′⁽¹⁾ − ε(b′⁽¹⁾)1) on Ω¹, hor¹ and Ω¹_hor.

        hor¹ is the kernel of the vertical map on Ω¹; Ω¹_hor is generated
        by B·dV·B.
        """
        p = self.bundle
        a = p.hopf
        n = p.total_dim
        o = self.universal_fodc
        with tracer.start_as_current_span("differential.vertical_split"), log_timer("vertical_split", logger):
            augmentation = Mat.identity(a.dim) - a.unit @ a.counit
            vertical_full = kron(Mat.identity(n), augmentation) @ self.bundle_service.canonical_map.full
            vertical_map = vertical_full @ o.space.as_columns()
            vertical_rank = rank(vertical_map)
            hor1 = kernel(Mat.vstack(p.mult, vertical_full))
            omega_hor1 = self._omega_hor1(o.d)

            result = VerticalSplit(
                fodc=o,
                vertical_map=vertical_map,
                vertical_rank=vertical_rank,
                vertical_target_dim=n * (a.dim - 1),
                hor1=hor1,
                omega_hor1=omega_hor1,
            )
            add_span_attributes(
                **{
                    "vertical.rank": vertical_rank,
                    "hor1.dim": hor1.dim,
                    "omega_hor1.dim": omega_hor1.dim,
                }
            )
            logger.info(
                "Split first-order forms",
                extra={
                    "bundle": p.name,
                    "vertical_rank": vertical_rank,
                    "vertical_target_dim": result.vertical_target_dim,
                    "hor1_dim": hor1.dim,
                    "omega_hor1_dim": omega_hor1.dim,
                },
            )
            if not omega_hor1.is_subspace_of(hor1):
                logger.error("Ω¹_hor is not contained in hor¹", extra={"bundle": p.name})
            return result

    def vertical_split_report(self) -> VerticalSplitReport:
        v = self.vertical_split
        return VerticalSplitReport(
            name=self.bundle.name,
            vertical_rank=v.vertical_rank,
            vertical_target_dim=v.vertical_target_dim,
            vertical_surjective=v.vertical_surjective,
            hor1_dim=v.hor1.dim,
            omega_hor1_dim=v.omega_hor1.dim,
            omega_hor1_in_hor1=v.omega_hor1.is_subspace_of(v.hor1),
            exact_sequence_law=v.fodc.dim == v.hor1.dim + v.vertical_target_dim,
        )

    def check_bm_md(self) -> BmMdReport:
        """Ω¹_hor = hor¹, with the vertical sequence exact."""
        v = self.vertical_split
        with tracer.start_as_current_span("differential.check_bm_md"):
            subspaces_equal = v.omega_hor1 == v.hor1
            report = BmMdReport(
                name=self.bundle.name,
                holds=subspaces_equal and v.vertical_surjective,
                subspaces_equal=subspaces_equal,
                vertical_surjective=v.vertical_surjective,
                gap_dim=v.hor1.dim - v.omega_hor1.dim,
                vertical_deficit=v.vertical_target_dim - v.vertical_rank,
            )
            add_span_attributes(
                **{
                    "bm_md.holds": report.holds,
                    "bm_md.subspaces_equal": subspaces_equal,
                    "bm_md.gap_dim": report.gap_dim,
                }
            )
            return report

    def cross_check_galois(self) -> CrossCheckReport:
        """Whether the Galois verdict and the horizontal-form verdict agree."""
        p = self.bundle
        with tracer.start_as_current_span("differential.cross_check_galois"):
            bijective = self.bundle_service.galois_check().bijective
            holds = self.check_bm_md().holds
            report = CrossCheckReport(
                name=p.name,
                consistent=bijective == holds,
                bijective=bijective,
                bm_md_holds=holds,
            )
            add_span_attributes(**{"cross_check.consistent": report.consistent})
            if report.consistent:
                logger.info(
                    "Galois and horizontal-form verdicts agree",
                    extra={"bundle": p.name, "bijective": bijective},
                )
            else:
                logger.error(
                    "Galois and horizontal-form verdicts disagree",
                    extra={"bundle": p.name, "bijective": bijective, "bm_md_holds": holds},
                )
            return report
