"""Hopf algebra axiom suite and matrix corepresentations."""

from typing import Callable, Optional, Sequence

from hopfgalois.core.exceptions import PreconditionError
from hopfgalois.linalg import ONE, Mat, Subspace, kernel, kron, rank, swap
from hopfgalois.linalg.matrix import SparseRow, accumulate
from hopfgalois.models import Comodule, Corep, HopfAlgebra
from hopfgalois.schemas.reports import AxiomViolation, CorepReport, HopfReport
from hopfgalois.utils.logger import get_logger, log_duration
from hopfgalois.utils.telemetry import add_span_attributes, get_tracer

logger = get_logger(__name__)
tracer = get_tracer()


# Helper functions
def _decode(index: int, dims: Sequence[int]) -> list[int]:
    """Split a lexicographic tensor index into its factor indices."""
    digits = []
    for d in reversed(dims):
        digits.append(index % d)
        index //= d
    return digits[::-1]


def compare_maps(
    axiom: str,
    lhs: Mat,
    rhs: Mat,
    in_dims: Sequence[int],
    out_dims: Sequence[int],
) -> Optional[AxiomViolation]:
    """
    Compare two linear maps entry by entry.

    Args:
        axiom: Name reported on failure
        lhs: Left-hand side of the identity
        rhs: Right-hand side of the identity
        in_dims: Tensor factors of the domain (for decoding the witness)
        out_dims: Tensor factors of the codomain

    Returns:
        None when the maps agree, otherwise the violation with the input
        basis indices followed by the output basis indices as witness
    """
    diff = lhs.first_difference(rhs)
    if diff is None:
        return None
    row, col = diff
    inputs, outputs = _decode(col, in_dims), _decode(row, out_dims)
    return AxiomViolation(
        axiom=axiom,
        witness=inputs + outputs,
        detail=f"input {tuple(inputs)} output {tuple(outputs)}: {lhs[row, col]} != {rhs[row, col]}",
    )


def _hopf_identities(h: HopfAlgebra) -> list[tuple[str, Callable[[], tuple[Mat, Mat]], tuple, tuple]]:
    n = h.dim
    eye = Mat.identity(n)
    m, eta, delta, eps, s = h.mult, h.unit, h.comult, h.counit, h.antipode
    one_by_one = Mat.identity(1)

    def comult_multiplicative() -> tuple[Mat, Mat]:
        middle = kron(kron(eye, swap(n, n)), eye)
        return delta @ m, kron(m, m) @ middle @ kron(delta, delta)

    identities = [
        ("associativity", lambda: (m @ kron(m, eye), m @ kron(eye, m)), (n, n, n), (n,)),
        ("left_unit", lambda: (m @ kron(eta, eye), eye), (n,), (n,)),
        ("right_unit", lambda: (m @ kron(eye, eta), eye), (n,), (n,)),
        (
            "coassociativity",
            lambda: (kron(delta, eye) @ delta, kron(eye, delta) @ delta),
            (n,),
            (n, n, n),
        ),
        ("left_counit", lambda: (kron(eps, eye) @ delta, eye), (n,), (n,)),
        ("right_counit", lambda: (kron(eye, eps) @ delta, eye), (n,), (n,)),
        ("comult_multiplicative", comult_multiplicative, (n, n), (n, n)),
        ("comult_unital", lambda: (delta @ eta, kron(eta, eta)), (), (n, n)),
        ("counit_multiplicative", lambda: (eps @ m, kron(eps, eps)), (n, n), ()),
        ("counit_unital", lambda: (eps @ eta, one_by_one), (), ()),
        ("antipode_left", lambda: (m @ kron(s, eye) @ delta, eta @ eps), (n,), (n,)),
        ("antipode_right", lambda: (m @ kron(eye, s) @ delta, eta @ eps), (n,), (n,)),
        ("antipode_unital", lambda: (s @ eta, eta), (), (n,)),
        ("antipode_counit", lambda: (eps @ s, eps), (n,), ()),
    ]
    if h.involution is not None:
        j = h.involution
        identities += [
            ("involution_involutive", lambda: (j @ j.conjugate(), eye), (n,), (n,)),
            (
                "involution_antimultiplicative",
                lambda: (j @ m.conjugate(), m @ kron(j, j) @ swap(n, n)),
                (n, n),
                (n,),
            ),
            (
                "involution_comultiplicative",
                lambda: (delta @ j, kron(j, j) @ delta.conjugate()),
                (n,),
                (n, n),
            ),
        ]
    return identities


@log_duration("check_hopf")
def check_hopf(h: HopfAlgebra) -> HopfReport:
    """
    Verify every Hopf algebra axiom exactly.

    Args:
        h: Hopf algebra to check

    Returns:
        Report listing each violated axiom once, with its first witness,
        plus whether S² = id
    """
    with tracer.start_as_current_span("hopf.check_hopf"):
        add_span_attributes(**{"hopf.name": h.name, "hopf.dim": h.dim})
        logger.info("Checking Hopf axioms", extra={"hopf": h.name, "dim": h.dim})

        violations: list[AxiomViolation] = []
        for axiom, build, in_dims, out_dims in _hopf_identities(h):
            lhs, rhs = build()
            violation = compare_maps(axiom, lhs, rhs, in_dims, out_dims)
            if violation is not None:
                violations.append(violation)

        if rank(h.antipode) != h.dim:
            violations.append(
                AxiomViolation(axiom="antipode_bijective", witness=[], detail="S is singular")
            )

        n = h.dim
        s_squared_is_id = h.antipode @ h.antipode == Mat.identity(n)
        report = HopfReport(
            name=h.name,
            dim=n,
            ok=not violations,
            s_squared_is_id=s_squared_is_id,
            commutative=h.mult @ swap(n, n) == h.mult,
            cocommutative=swap(n, n) @ h.comult == h.comult,
            violations=violations,
        )
        add_span_attributes(**{"hopf.ok": report.ok, "hopf.s_squared_is_id": s_squared_is_id})
        if violations:
            logger.warning(
                "Hopf axioms violated",
                extra={"hopf": h.name, "axioms": [v.axiom for v in violations]},
            )
        else:
            logger.info(
                "Hopf axioms hold",
                extra={"hopf": h.name, "s_squared_is_id": s_squared_is_id},
            )
        return report


def trivial_corep(h: HopfAlgebra, name: str = "trivial") -> Corep:
    """1-dimensional corepresentation with coefficient 1."""
    return Corep(hopf=h, name=name, dim_carrier=1, coeffs=h.unit)


def corep_violations(u: Corep) -> list[AxiomViolation]:
    """Failures of Δu_ij = Σ_k u_ik⊗u_kj and ε(u_ij) = δ_ij."""
    a = u.hopf
    n = u.dim_carrier
    grid = u.grid()
    expected: list[SparseRow] = []
    for i in range(n):
        for j in range(n):
            acc: SparseRow = {}
            for k in range(n):
                for x, p in grid[i][k].items():
                    for y, q in grid[k][j].items():
                        accumulate(acc, x * a.dim + y, p * q)
            expected.append({k: v for k, v in acc.items() if v})
    violations = []
    coproduct = compare_maps(
        "corep_coproduct",
        a.comult @ u.coeffs,
        Mat.from_sparse_columns(a.dim * a.dim, expected),
        (n, n),
        (a.dim, a.dim),
    )
    if coproduct is not None:
        violations.append(coproduct)
    identity = Mat.from_sparse_columns(1, [{0: ONE} if i == j else {} for i in range(n) for j in range(n)])
    counit = compare_maps("corep_counit", a.counit @ u.coeffs, identity, (n, n), ())
    if counit is not None:
        violations.append(counit)
    return violations


def check_corep(u: Corep) -> bool:
    """Whether u satisfies the corepresentation laws exactly."""
    with tracer.start_as_current_span("hopf.check_corep"):
        violations = corep_violations(u)
        add_span_attributes(**{"corep.name": u.name, "corep.ok": not violations})
        if violations:
            logger.warning(
                "Corepresentation laws fail",
                extra={"corep": u.name, "axioms": [v.axiom for v in violations]},
            )
        return not violations


def _require_same_hopf(u: Corep, v: Corep) -> None:
    if u.hopf != v.hopf:
        raise PreconditionError(
            f"Corepresentations {u.name} and {v.name} live over different Hopf algebras"
        )


def corep_product(u: Corep, v: Corep) -> Corep:
    """
    Tensor product u×v on H_u⊗H_v.

    The carrier basis e_i⊗f_k has index i·dim H_v + k, and
    (u×v)_{(i,k),(j,l)} = u_ij·v_kl.

    Raises:
        PreconditionError: If u and v live over different Hopf algebras
    """
    _require_same_hopf(u, v)
    a = u.hopf
    nu, nv = u.dim_carrier, v.dim_carrier
    size = nu * nv
    ug, vg = u.grid(), v.grid()
    columns: list[SparseRow] = [{} for _ in range(size * size)]
    for i in range(nu):
        for k in range(nv):
            row = i * nv + k
            for j in range(nu):
                for l in range(nv):
                    columns[row * size + j * nv + l] = a.multiply(ug[i][j], vg[k][l])
    return Corep(
        hopf=a,
        name=f"{u.name}x{v.name}",
        dim_carrier=size,
        coeffs=Mat.from_sparse_columns(a.dim, columns),
    )


def corep_dual(u: Corep) -> Corep:
    """Antipode dual ǔ with ǔ_ij = S(u_ji) on the dual carrier basis {e_i^*}."""
    a = u.hopf
    n = u.dim_carrier
    grid = u.grid()
    columns = [a.antipode_of(grid[j][i]) for i in range(n) for j in range(n)]
    return Corep(
        hopf=a,
        name=f"{u.name}*",
        dim_carrier=n,
        coeffs=Mat.from_sparse_columns(a.dim, columns),
    )


def corep_morphisms(u: Corep, v: Corep) -> Subspace:
    """
    Carrier maps T: H_u → H_v with (T⊗id)∘u = v∘T.

    T is flattened row-major as a dim H_v × dim H_u matrix, so the
    returned subspace lives in k^(dim H_v · dim H_u).

    Raises:
        PreconditionError: If u and v live over different Hopf algebras
    """
    _require_same_hopf(u, v)
    dim_a = u.hopf.dim
    nu, nv = u.dim_carrier, v.dim_carrier
    ug, vg = u.grid(), v.grid()
    rows: list[SparseRow] = []
    for j in range(nu):
        for p in range(nv):
            block: list[SparseRow] = [{} for _ in range(dim_a)]
            for i in range(nu):
                for x, c in ug[i][j].items():
                    accumulate(block[x], p * nu + i, c)
            for q in range(nv):
                for x, c in vg[p][q].items():
                    accumulate(block[x], q * nu + j, -c)
            rows.extend(block)
    system = Mat.from_sparse_rows(len(rows), nv * nu, rows)
    return kernel(system)


def is_split_irreducible(u: Corep) -> bool:
    """Whether the only self-intertwiners of u are scalars."""
    return corep_morphisms(u, u).dim == 1


def contraction_intertwines(u: Corep) -> bool:
    """Whether e_i^*⊗e_j ↦ δ_ij is a morphism from ǔ×u to the trivial corepresentation."""
    n = u.dim_carrier
    pairing = {i * n + i: ONE for i in range(n)}
    morphisms = corep_morphisms(corep_product(corep_dual(u), u), trivial_corep(u.hopf))
    return morphisms.contains(pairing)


def corep_report(u: Corep) -> CorepReport:
    """Corepresentation laws, plus irreducibility and the contraction check when they hold."""
    ok = check_corep(u)
    return CorepReport(
        name=u.name,
        hopf=u.hopf.name,
        dim_carrier=u.dim_carrier,
        ok=ok,
        split_irreducible=is_split_irreducible(u) if ok else None,
        contraction_intertwines=contraction_intertwines(u) if ok else None,
    )


def comodule_violations(c: Comodule) -> list[AxiomViolation]:
    """Failures of coassociativity and the counit law for a comodule."""
    a = c.hopf
    n = c.dim
    eye_v, eye_a = Mat.identity(n), Mat.identity(a.dim)
    checks = [
        (
            "comodule_coassociativity",
            kron(eye_v, a.comult) @ c.coaction,
            kron(c.coaction, eye_a) @ c.coaction,
            (n, a.dim, a.dim),
        ),
        ("comodule_counit", kron(eye_v, a.counit) @ c.coaction, eye_v, (n,)),
    ]
    violations = []
    for axiom, lhs, rhs, out_dims in checks:
        violation = compare_maps(axiom, lhs, rhs, (n,), out_dims)
        if violation is not None:
            violations.append(violation)
    return violations


def check_comodule(c: Comodule) -> bool:
    """Whether the coaction is coassociative and counital."""
    violations = comodule_violations(c)
    if violations:
        logger.warning(
            "Comodule laws fail",
            extra={"comodule": c.name, "axioms": [v.axiom for v in violations]},
        )
    return not violations


def comodule_to_corep(c: Comodule) -> Corep:
    """Matrix coefficients of a comodule in its given basis.

    v_i ↦ Σ_j v_j⊗u_ji, so u_ji collects the coaction entries of v_i at v_j.
    """
    a = c.hopf
    n = c.dim
    columns: list[SparseRow] = [{} for _ in range(n * n)]
    for i, image in enumerate(c.coaction.sparse_columns()):
        for index, value in image.items():
            j, x = divmod(index, a.dim)
            columns[j * n + i][x] = value
    return Corep(hopf=a, name=c.name, dim_carrier=n, coeffs=Mat.from_sparse_columns(a.dim, columns))


def antipode_translation_oracle(h: HopfAlgebra) -> Mat:
    """dim A² × dim A matrix whose column a is S(h_a⁽¹⁾)⊗h_a⁽²⁾."""
    return kron(h.antipode, Mat.identity(h.dim)) @ h.comult
