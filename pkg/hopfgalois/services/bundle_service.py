"""Comodule algebras: base, canonical map, isotypic decomposition and translation map."""

import contextvars
from concurrent.futures import ThreadPoolExecutor
from functools import cached_property
from typing import Callable, Mapping, Optional, Sequence, TypeVar

from hopfgalois.config import settings
from hopfgalois.core.exceptions import (
    EngineDefectError,
    IncompleteIrrepsError,
    NotGaloisError,
    NotPrincipalError,
    PreconditionError,
)
from hopfgalois.linalg import ONE, Mat, Scalar, Subspace, kernel, kron, quotient, rank, solve_many, swap
from hopfgalois.linalg.matrix import SparseRow, accumulate, axpy, sparse_vector
from hopfgalois.models import (
    Bundle,
    CanonicalMap,
    Corep,
    DualBases,
    FixedSubalgebra,
    IntertwinerSpace,
    IsotypicComponent,
    PeterWeylDecomposition,
    TensorOverBase,
    TranslationTable,
)
from hopfgalois.schemas.reports import (
    AxiomViolation,
    BundleReport,
    FreenessReport,
    GaloisReport,
    PeterWeylComponent,
    PeterWeylReport,
    InverseReport,
)
from hopfgalois.services.hopf_service import check_corep, compare_maps, corep_dual
from hopfgalois.utils.context import operation_context
from hopfgalois.utils.logger import get_logger, log_timer
from hopfgalois.utils.telemetry import add_span_attributes, add_span_event, get_tracer

logger = get_logger(__name__)
tracer = get_tracer()

T = TypeVar("T")
R = TypeVar("R")


# Helper functions
def map_ordered(func: Callable[[T], R], items: Sequence[T], threads: Optional[int] = None) -> list[R]:
    """
    Apply ``func`` to every item, on a thread pool when configured.

    Results come back in input order, and each task runs in a copy of the
    caller's logging context.

    Args:
        func: Function to apply
        items: Inputs
        threads: Worker count (defaults to settings.THREADS)
    """
    workers = threads or settings.THREADS
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = [
            executor.submit(contextvars.copy_context().run, func, item) for item in items
        ]
        return [future.result() for future in futures]


def _outer(x: Mapping[int, Scalar], y: Mapping[int, Scalar], width: int) -> SparseRow:
    """x⊗y on the lexicographic basis, ``width`` = dim of the second factor."""
    return {i * width + j: a * b for i, a in x.items() for j, b in y.items()}


def _flatten(rows: Sequence[Mapping[int, Scalar]], width: int) -> SparseRow:
    return {i * width + b: v for i, row in enumerate(rows) for b, v in row.items()}


class BundleService:
    """Service for the Galois-theoretic operations on one bundle.

    Derived objects (base, quotient, canonical map, intertwiner spaces)
    are computed once and cached on the instance.
    """

    def __init__(self, bundle: Bundle, threads: Optional[int] = None):
        """
        Initialize service.

        Args:
            bundle: Comodule algebra to analyse
            threads: Worker count for per-irrep work (defaults to settings.THREADS)
        """
        self.bundle = bundle
        self.threads = threads
        self._intertwiners: dict[int, tuple[Corep, IntertwinerSpace]] = {}
        self._dual_bases: dict[int, tuple[Corep, DualBases]] = {}

    # Axioms

    def check_bundle(self) -> BundleReport:
        """
        Verify the comodule-algebra axioms exactly.

        Returns:
            Report listing each violated axiom with its first witness
        """
        p = self.bundle
        a = p.hopf
        n, dim_a = p.total_dim, a.dim
        eye_b, eye_a = Mat.identity(n), Mat.identity(dim_a)
        f = p.coaction

        def coaction_multiplicative() -> tuple[Mat, Mat]:
            middle = kron(kron(eye_b, swap(dim_a, n)), eye_a)
            return f @ p.mult, kron(p.mult, a.mult) @ middle @ kron(f, f)

        identities = [
            ("associativity", lambda: (p.mult @ kron(p.mult, eye_b), p.mult @ kron(eye_b, p.mult)), (n, n, n), (n,)),
            ("left_unit", lambda: (p.mult @ kron(p.unit, eye_b), eye_b), (n,), (n,)),
            ("right_unit", lambda: (p.mult @ kron(eye_b, p.unit), eye_b), (n,), (n,)),
            ("coaction_multiplicative", coaction_multiplicative, (n, n), (n, dim_a)),
            ("coaction_unital", lambda: (f @ p.unit, kron(p.unit, a.unit)), (), (n, dim_a)),
            (
                "coaction_coassociativity",
                lambda: (kron(eye_b, a.comult) @ f, kron(f, eye_a) @ f),
                (n,),
                (n, dim_a, dim_a),
            ),
            ("coaction_counit", lambda: (kron(eye_b, a.counit) @ f, eye_b), (n,), (n,)),
        ]

        with tracer.start_as_current_span("bundle.check_bundle"):
            add_span_attributes(**{"bundle.name": p.name, "bundle.dim": n})
            violations: list[AxiomViolation] = []
            for axiom, build, in_dims, out_dims in identities:
                lhs, rhs = build()
                violation = compare_maps(axiom, lhs, rhs, in_dims, out_dims)
                if violation is not None:
                    violations.append(violation)

            report = BundleReport(
                name=p.name,
                hopf=a.name,
                total_dim=n,
                ok=not violations,
                base_dim=None if violations else self.fixed_subalgebra.dim,
                violations=violations,
            )
            if violations:
                logger.warning(
                    "Bundle axioms violated",
                    extra={"bundle": p.name, "axioms": [v.axiom for v in violations]},
                )
            else:
                logger.info("Bundle axioms hold", extra={"bundle": p.name, "base_dim": report.base_dim})
            return report

    # Base and tensor product over the base

    @cached_property
    def fixed_subalgebra(self) -> FixedSubalgebra:
        """
        V = {b : F(b) = b⊗1} with its induced multiplication.

        Raises:
            EngineDefectError: If V does not contain 1 or is not closed under products
        """
        p = self.bundle
        with tracer.start_as_current_span("bundle.fixed_subalgebra"):
            space = kernel(p.coaction - kron(Mat.identity(p.total_dim), p.hopf.unit))
            basis = space.sparse_basis()
            unit = space.coordinates(p.unit_vector())
            if unit is None:
                raise EngineDefectError(f"1 is not F-invariant in {p.name}")

            columns: list[SparseRow] = []
            for x in basis:
                for y in basis:
                    coordinates = space.coordinates(p.multiply(x, y))
                    if coordinates is None:
                        raise EngineDefectError(f"Fixed points of {p.name} are not closed under products")
                    columns.append(sparse_vector(coordinates))
            mult = Mat.from_sparse_columns(space.dim, columns)

            add_span_attributes(**{"bundle.name": p.name, "base.dim": space.dim})
            logger.info("Computed base algebra", extra={"bundle": p.name, "base_dim": space.dim})
            return FixedSubalgebra(space=space, mult=mult, unit=unit)

    @cached_property
    def tensor_over_base(self) -> TensorOverBase:
        """
        B⊗_V B as the quotient of B⊗B by bv⊗b′ − b⊗vb′.

        Raises:
            EngineDefectError: If multiplication does not descend to the quotient
        """
        p = self.bundle
        n = p.total_dim
        eye = Mat.identity(n)
        with tracer.start_as_current_span("bundle.tensor_over_base"), log_timer("tensor_over_base", logger):
            blocks = [
                kron(p.right_matrix(v), eye) - kron(eye, p.left_matrix(v))
                for v in self.fixed_subalgebra.space.sparse_basis()
            ]
            relations = Subspace.column_span(Mat.hstack(*blocks))
            q = quotient(n * n, relations)
            if not (p.mult @ relations.as_columns()).is_zero():
                raise EngineDefectError(f"Multiplication of {p.name} does not descend to B⊗_V B")

            add_span_attributes(**{"tensor.dim": q.dim, "relations.dim": relations.dim})
            logger.info(
                "Built tensor product over the base",
                extra={"bundle": p.name, "tensor_dim": q.dim, "relations_dim": relations.dim},
            )
            return TensorOverBase(
                bundle=p, dim=q.dim, project=q.project, section=q.section, relations=relations
            )

    # Canonical map

    @cached_property
    def canonical_map(self) -> CanonicalMap:
        """
        X(q⊗b) = q·F(b) on B⊗B and on B⊗_V B.

        Raises:
            EngineDefectError: If X∘project differs from the undescended map
        """
        p = self.bundle
        t = self.tensor_over_base
        with tracer.start_as_current_span("bundle.canonical_map"):
            full = kron(p.mult, Mat.identity(p.hopf.dim)) @ kron(Mat.identity(p.total_dim), p.coaction)
            descended = full @ t.section
            if descended @ t.project != full:
                raise EngineDefectError(f"Canonical map of {p.name} does not descend to B⊗_V B")
            return CanonicalMap(tensor=t, full=full, descended=descended)

    @cached_property
    def canonical_rank(self) -> int:
        with tracer.start_as_current_span("bundle.canonical_rank"):
            value = rank(self.canonical_map.descended)
            add_span_attributes(**{"canonical_map.rank": value})
            return value

    def freeness_check(self) -> FreenessReport:
        """Whether X is surjective, and by how much it misses B⊗A."""
        p = self.bundle
        with tracer.start_as_current_span("bundle.freeness_check"):
            r = self.canonical_rank
            target = p.target_dim
            report = FreenessReport(
                name=p.name,
                surjective=r == target,
                rank=r,
                target_dim=target,
                cokernel_dim=target - r,
            )
            add_span_attributes(**{"freeness.surjective": report.surjective})
            logger.info(
                "Freeness checked",
                extra={"bundle": p.name, "rank": r, "target_dim": target, "surjective": report.surjective},
            )
            return report

    def galois_check(self) -> GaloisReport:
        """Whether X: B⊗_V B → B⊗A is bijective."""
        p = self.bundle
        with tracer.start_as_current_span("bundle.galois_check"):
            r = self.canonical_rank
            tensor_dim = self.tensor_over_base.dim
            target = p.target_dim
            report = GaloisReport(
                name=p.name,
                bijective=r == tensor_dim == target,
                base_dim=self.fixed_subalgebra.dim,
                tensor_dim=tensor_dim,
                target_dim=target,
                rank=r,
                kernel_dim=tensor_dim - r,
                cokernel_dim=target - r,
            )
            add_span_attributes(**{"galois.bijective": report.bijective, "galois.rank": r})
            if report.bijective:
                logger.info("Canonical map is bijective", extra={"bundle": p.name, "rank": r})
            else:
                logger.warning(
                    "Canonical map is not bijective",
                    extra={
                        "bundle": p.name,
                        "rank": r,
                        "kernel_dim": report.kernel_dim,
                        "cokernel_dim": report.cokernel_dim,
                    },
                )
            return report

    # Intertwiners and the isotypic decomposition

    def _require_same_hopf(self, u: Corep) -> None:
        if u.hopf != self.bundle.hopf:
            raise PreconditionError(
                f"Corepresentation {u.name} is over {u.hopf.name}, bundle {self.bundle.name} over {self.bundle.hopf.name}"
            )

    @cached_property
    def s_squared_is_id(self) -> bool:
        s = self.bundle.hopf.antipode
        return s @ s == Mat.identity(s.rows)

    def _require_s_squared(self) -> None:
        if not self.s_squared_is_id:
            raise PreconditionError(
                f"S² ≠ id on {self.bundle.hopf.name}; dual bases need an involutive antipode, "
                "use the solve method for the translation map"
            )

    def intertwiner_space(self, u: Corep) -> IntertwinerSpace:
        """
        bim(u): all φ: H_u → B with F∘φ = (φ⊗id)∘u.

        The unknown φ is the dim H_u × dim B grid with row i = φ(e_i).

        Raises:
            PreconditionError: If u is over another Hopf algebra
            EngineDefectError: If the space is not a V-bimodule
        """
        cached = self._intertwiners.get(id(u))
        if cached is not None and cached[0] is u:
            return cached[1]
        self._require_same_hopf(u)

        p = self.bundle
        n, dim_a = p.total_dim, p.hopf.dim
        nu = u.dim_carrier
        block = n * dim_a

        with operation_context("bundle.intertwiner_space", object_name=p.name, irrep=u.name), \
                tracer.start_as_current_span("bundle.intertwiner_space"):
            coaction_columns = p.coaction.sparse_columns()
            grid = u.grid()
            rows: list[SparseRow] = [{} for _ in range(nu * block)]
            for j in range(nu):
                base = j * block
                for b in range(n):
                    for r, value in coaction_columns[b].items():
                        accumulate(rows[base + r], j * n + b, value)
                for i in range(nu):
                    for x, value in grid[i][j].items():
                        for b in range(n):
                            accumulate(rows[base + b * dim_a + x], i * n + b, -value)
            space = kernel(Mat.from_sparse_rows(len(rows), nu * n, rows))

            basis = []
            for vector in space.sparse_basis():
                split: list[SparseRow] = [{} for _ in range(nu)]
                for index, value in vector.items():
                    i, b = divmod(index, n)
                    split[i][b] = value
                basis.append(Mat.from_sparse_rows(nu, n, split))

            for v in self.fixed_subalgebra.space.sparse_basis():
                for phi in basis:
                    left = [p.multiply(v, phi.row(i)) for i in range(nu)]
                    right = [p.multiply(phi.row(i), v) for i in range(nu)]
                    if not (space.contains(_flatten(left, n)) and space.contains(_flatten(right, n))):
                        raise EngineDefectError(f"bim({u.name}) is not a V-bimodule over {p.name}")

            result = IntertwinerSpace(corep=u, space=space, basis=tuple(basis))
            add_span_attributes(**{"intertwiners.dim": result.dim})
            logger.info(
                "Computed intertwiner space",
                extra={"bundle": p.name, "corep": u.name, "intertwiners_dim": result.dim},
            )
            self._intertwiners[id(u)] = (u, result)
            return result

    def peter_weyl_decompose(self, irreps: Sequence[Corep]) -> PeterWeylDecomposition:
        """
        Decompose B into the blocks bim(α)⊗H_α of the given irreducibles.

        Completeness is verified: the summed evaluation φ⊗x ↦ φ(x) must be
        a bijection onto B.

        Raises:
            PreconditionError: If an irrep fails the corepresentation laws
        """
        p = self.bundle
        n = p.total_dim
        with tracer.start_as_current_span("bundle.peter_weyl_decompose"):
            for u in irreps:
                if not check_corep(u):
                    raise PreconditionError(f"{u.name} is not a corepresentation")
            # shared by every worker
            self.fixed_subalgebra
            spaces = map_ordered(self.intertwiner_space, list(irreps), self.threads)

            components = []
            evaluations: list[SparseRow] = []
            for u, space in zip(irreps, spaces):
                images = [dict(phi.row(x)) for phi in space.basis for x in range(u.dim_carrier)]
                evaluations.extend(images)
                components.append(
                    IsotypicComponent(corep=u, intertwiners=space, image=Subspace(n, images))
                )
            result = PeterWeylDecomposition(
                bundle=p,
                components=tuple(components),
                evaluation_rank=Subspace(n, evaluations).dim,
            )
            add_span_attributes(**{"peter_weyl.complete": result.complete, "peter_weyl.total": result.total})
            if result.complete:
                logger.info("Isotypic decomposition complete", extra={"bundle": p.name, "total": result.total})
            else:
                logger.warning(
                    "Isotypic decomposition incomplete",
                    extra={
                        "bundle": p.name,
                        "total": result.total,
                        "evaluation_rank": result.evaluation_rank,
                        "bundle_dim": n,
                    },
                )
            return result

    def peter_weyl_report(self, irreps: Sequence[Corep]) -> PeterWeylReport:
        decomposition = self.peter_weyl_decompose(irreps)
        return PeterWeylReport(
            name=self.bundle.name,
            bundle_dim=self.bundle.total_dim,
            total=decomposition.total,
            evaluation_rank=decomposition.evaluation_rank,
            complete=decomposition.complete,
            components=[
                PeterWeylComponent(
                    irrep=c.corep.name,
                    carrier_dim=c.corep.dim_carrier,
                    multiplicity=c.intertwiners.dim,
                    image_dim=c.image.dim,
                )
                for c in decomposition.components
            ],
        )

    # Dual bases and the translation map

    def dual_bases(self, u: Corep) -> DualBases:
        """
        Pairs (ν_k ∈ bim(ǔ), μ_k ∈ bim(u)) with Σ_k ν_k(e_i^*)μ_k(e_j) = δ_ij·1.

        Solves for T = Σ c_st ν_s⊗μ_t in bim(ǔ)⊗bim(u) and splits T by rows
        of c into rank-one pairs.

        Raises:
            PreconditionError: If S² ≠ id or u is over another Hopf algebra
            NotPrincipalError: If no such pairs exist
            EngineDefectError: If the pairs fail the identity after splitting
        """
        cached = self._dual_bases.get(id(u))
        if cached is not None and cached[0] is u:
            return cached[1]
        self._require_s_squared()
        self._require_same_hopf(u)

        p = self.bundle
        n = p.total_dim
        nu = u.dim_carrier
        unit = p.unit_vector()

        with operation_context("bundle.dual_bases", object_name=p.name, irrep=u.name), \
                tracer.start_as_current_span("bundle.dual_bases"):
            mus = self.intertwiner_space(u).basis
            nus = self.intertwiner_space(corep_dual(u)).basis

            columns: list[SparseRow] = []
            for nu_s in nus:
                for mu_t in mus:
                    column: SparseRow = {}
                    for i in range(nu):
                        for j in range(nu):
                            base = (i * nu + j) * n
                            for b, value in p.multiply(nu_s.row(i), mu_t.row(j)).items():
                                column[base + b] = value
                    columns.append(column)
            system = Mat.from_sparse_columns(nu * nu * n, columns)
            target = {(i * nu + i) * n + b: value for i in range(nu) for b, value in unit.items()}
            solution = solve_many(system, [target])[0]
            if solution is None:
                add_span_event("dual_bases.not_principal", {"corep": u.name, "bundle": p.name})
                logger.warning(
                    "Dual bases do not exist",
                    extra={"bundle": p.name, "corep": u.name, "unknowns": len(columns)},
                )
                raise NotPrincipalError(
                    f"No dual bases for {u.name} over {p.name}: the isotypic block is not free"
                )

            pairs = []
            width = len(mus)
            for s, nu_s in enumerate(nus):
                mu = Mat.zeros(nu, n)
                for t, mu_t in enumerate(mus):
                    c = solution.get(s * width + t)
                    if c is not None:
                        mu = mu + mu_t.scale(c)
                if not mu.is_zero():
                    pairs.append((nu_s, mu))

            for i in range(nu):
                for j in range(nu):
                    total: SparseRow = {}
                    for nu_k, mu_k in pairs:
                        axpy(total, ONE, p.multiply(nu_k.row(i), mu_k.row(j)))
                    if total != (unit if i == j else {}):
                        raise EngineDefectError(
                            f"Dual bases for {u.name} fail Σ ν(e_{i}^*)μ(e_{j}) = δ·1"
                        )

            result = DualBases(corep=u, pairs=tuple(pairs))
            add_span_attributes(**{"dual_bases.pairs": len(pairs)})
            logger.info("Computed dual bases", extra={"bundle": p.name, "corep": u.name, "pairs": len(pairs)})
            self._dual_bases[id(u)] = (u, result)
            return result

    def _one_tensor(self, a: int) -> SparseRow:
        """1⊗h_a in B⊗A."""
        dim_a = self.bundle.hopf.dim
        return {b * dim_a + a: value for b, value in self.bundle.unit_vector().items()}

    def _checked_table(self, method: str, values: Sequence[SparseRow]) -> TranslationTable:
        x = self.canonical_map.descended
        for a, value in enumerate(values):
            if x.apply_sparse(value) != self._one_tensor(a):
                raise EngineDefectError(
                    f"X(τ(h_{a})) ≠ 1⊗h_{a} for the {method} table of {self.bundle.name}"
                )
        return TranslationTable(tensor=self.tensor_over_base, method=method, values=tuple(values))

    def translation_map_pw(self, irreps: Sequence[Corep]) -> TranslationTable:
        """
        τ from dual bases: τ(u_ij) = Σ_k ν_k(e_i^*)⊗μ_k(e_j), moved to the basis of A.

        Raises:
            PreconditionError: If S² ≠ id
            IncompleteIrrepsError: If the decomposition is incomplete or the
                matrix coefficients do not span A
            NotPrincipalError: If dual bases fail for some irrep
        """
        self._require_s_squared()
        p = self.bundle
        n, dim_a = p.total_dim, p.hopf.dim

        with tracer.start_as_current_span("bundle.translation_map_pw"), log_timer("translation_map_pw", logger):
            decomposition = self.peter_weyl_decompose(irreps)
            if not decomposition.complete:
                raise IncompleteIrrepsError(
                    f"Irreducibles cover {decomposition.total} (evaluation rank "
                    f"{decomposition.evaluation_rank}) of dim B = {n} for {p.name}"
                )

            coefficients = Mat.hstack(*(u.coeffs for u in irreps))
            if rank(coefficients) < dim_a:
                raise IncompleteIrrepsError(
                    f"Matrix coefficients span less than {p.hopf.name} (dim {dim_a})"
                )

            duals = map_ordered(self.dual_bases, list(irreps), self.threads)
            images: list[SparseRow] = []
            for u, db in zip(irreps, duals):
                for i in range(u.dim_carrier):
                    for j in range(u.dim_carrier):
                        value: SparseRow = {}
                        for nu_k, mu_k in db.pairs:
                            axpy(value, ONE, _outer(nu_k.row(i), mu_k.row(j), n))
                        images.append(value)

            expansions = solve_many(coefficients, [{a: ONE} for a in range(dim_a)])
            values = []
            for expansion in expansions:
                full: SparseRow = {}
                for c, x in expansion.items():
                    axpy(full, x, images[c])
                values.append(self.tensor_over_base.project.apply_sparse(full))

            table = self._checked_table("pw", values)
            logger.info("Translation map from dual bases", extra={"bundle": p.name, "irreps": len(irreps)})
            return table

    def translation_map_solve(self) -> TranslationTable:
        """
        τ(h) = X⁻¹(1⊗h) by exact solving.

        Raises:
            NotGaloisError: If X is not bijective
        """
        p = self.bundle
        with tracer.start_as_current_span("bundle.translation_map_solve"), log_timer("translation_map_solve", logger):
            verdict = self.galois_check()
            if not verdict.bijective:
                raise NotGaloisError(
                    f"{p.name} is not Galois (kernel {verdict.kernel_dim}, cokernel {verdict.cokernel_dim})"
                )
            targets = [self._one_tensor(a) for a in range(p.hopf.dim)]
            values = solve_many(self.canonical_map.descended, targets)
            if any(v is None for v in values):
                raise EngineDefectError(f"Bijective canonical map of {p.name} missed 1⊗h")
            return self._checked_table("solve", values)

    # Mutual inverseness

    def tau_extension(self, table: TranslationTable) -> Mat:
        """τ on B⊗A by left B-linearity: τ(b⊗h) = (b⊗1)·τ(h), as a matrix into B⊗_V B."""
        p = self.bundle
        n, dim_a = p.total_dim, p.hopf.dim
        t = self.tensor_over_base
        lifted = (t.section @ table.as_matrix()).sparse_columns()
        eye = Mat.identity(n)
        columns: list[SparseRow] = []
        for c in range(n):
            left = kron(p.left_matrix({c: ONE}), eye)
            for a in range(dim_a):
                columns.append(t.project.apply_sparse(left.apply_sparse(lifted[a])))
        return Mat.from_sparse_columns(t.dim, columns)

    def verify_inverse(self, table: TranslationTable, irreps: Optional[Sequence[Corep]] = None) -> InverseReport:
        """
        Check X∘τ = id on B⊗A and τ∘X = id on B⊗_V B exactly.

        When irreps are given and S² = id, also checks that every
        Σ_j μ(e_j)·ν_k(e_j^*) (μ ∈ bim(u), ν_k from the dual bases) is F-invariant.
        """
        p = self.bundle
        with tracer.start_as_current_span("bundle.verify_inverse"):
            x = self.canonical_map.descended
            tau = self.tau_extension(table)
            x_tau = (x @ tau).first_difference(Mat.identity(x.rows))
            tau_x = (tau @ x).first_difference(Mat.identity(tau.rows))

            lemma = "skipped"
            failures: list[str] = []
            if irreps is not None and self.s_squared_is_id:
                base = self.fixed_subalgebra.space
                for u in irreps:
                    db = self.dual_bases(u)
                    for m, mu in enumerate(self.intertwiner_space(u).basis):
                        for k, (nu_k, _) in enumerate(db.pairs):
                            z: SparseRow = {}
                            for j in range(u.dim_carrier):
                                axpy(z, ONE, p.multiply(mu.row(j), nu_k.row(j)))
                            if not base.contains(z):
                                failures.append(f"{u.name}: intertwiner {m}, pair {k}")
                lemma = "failed" if failures else "passed"

            report = InverseReport(
                name=p.name,
                method=table.method,
                x_tau_is_id=x_tau is None,
                tau_x_is_id=tau_x is None,
                x_tau_witness=list(x_tau) if x_tau else None,
                tau_x_witness=list(tau_x) if tau_x else None,
                lemma=lemma,
                lemma_failures=failures,
            )
            add_span_attributes(**{"inverse.holds": report.holds, "inverse.lemma": lemma})
            if report.holds:
                logger.info("X and τ are mutually inverse", extra={"bundle": p.name, "method": table.method})
            else:
                logger.warning(
                    "X and τ are not mutually inverse",
                    extra={
                        "bundle": p.name,
                        "method": table.method,
                        "x_tau_witness": report.x_tau_witness,
                        "tau_x_witness": report.tau_x_witness,
                        "lemma": lemma,
                    },
                )
            return report
