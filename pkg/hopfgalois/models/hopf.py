"""Hopf algebras, corepresentations and comodules given by structure constants."""

from dataclasses import dataclass, field
from typing import Optional

from hopfgalois.core.exceptions import MalformedInputError
from hopfgalois.linalg import ZERO, Mat
from hopfgalois.linalg.matrix import SparseRow
from hopfgalois.models.algebra import AlgebraStructure


def _expect_shape(label: str, m: Mat, rows: int, cols: int) -> None:
    if m.shape != (rows, cols):
        raise MalformedInputError(
            f"{label} has shape {m.rows}x{m.cols}, expected {rows}x{cols}"
        )


@dataclass(frozen=True, eq=False)
class HopfAlgebra(AlgebraStructure):
    """Finite-dimensional Hopf algebra as linear maps on the basis {e_i}.

    Attributes:
        mult: dim × dim² (column i·dim+j holds e_i·e_j)
        unit: dim × 1
        comult: dim² × dim (column i holds Δe_i, row j·dim+k ↔ e_j⊗e_k)
        counit: 1 × dim
        antipode: dim × dim (column i holds S(e_i))
        involution: optional dim × dim conjugate-linear star (metadata only)
    """

    name: str
    dim: int
    basis_labels: tuple[str, ...]
    mult: Mat
    unit: Mat
    comult: Mat
    counit: Mat
    antipode: Mat
    involution: Optional[Mat] = field(default=None)

    def __post_init__(self) -> None:
        n = self.dim
        if n < 1:
            raise MalformedInputError("Hopf algebra dimension must be positive")
        if len(self.basis_labels) != n:
            raise MalformedInputError(
                f"{len(self.basis_labels)} basis labels for dimension {n}"
            )
        _expect_shape("mult", self.mult, n, n * n)
        _expect_shape("unit", self.unit, n, 1)
        _expect_shape("comult", self.comult, n * n, n)
        _expect_shape("counit", self.counit, 1, n)
        _expect_shape("antipode", self.antipode, n, n)
        if self.involution is not None:
            _expect_shape("involution", self.involution, n, n)

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, HopfAlgebra):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.mult == other.mult
            and self.unit == other.unit
            and self.comult == other.comult
            and self.counit == other.counit
            and self.antipode == other.antipode
        )

    __hash__ = None  # type: ignore[assignment]

    def counit_value(self, a: SparseRow):
        """ε(a) as a scalar."""
        return self.counit.apply_sparse(a).get(0, ZERO)

    def coproduct(self, a: SparseRow) -> SparseRow:
        """Δ(a) in A⊗A coordinates."""
        return self.comult.apply_sparse(a)

    def antipode_of(self, a: SparseRow) -> SparseRow:
        return self.antipode.apply_sparse(a)


@dataclass(frozen=True, eq=False)
class Corep:
    """Matrix corepresentation u = (u_ij) with carrier H_u = k^dim_carrier.

    ``coeffs`` is hopf.dim × dim_carrier²; column i·n+j holds u_ij. The
    carrier coaction is e_j ↦ Σ_i e_i⊗u_ij.
    """

    hopf: HopfAlgebra
    name: str
    dim_carrier: int
    coeffs: Mat

    def __post_init__(self) -> None:
        n = self.dim_carrier
        if n < 1:
            raise MalformedInputError("Carrier dimension must be positive")
        _expect_shape(f"coefficients of {self.name}", self.coeffs, self.hopf.dim, n * n)

    def coeff(self, i: int, j: int) -> SparseRow:
        """u_ij as a sparse vector in A."""
        n = self.dim_carrier
        column = i * n + j
        result: SparseRow = {}
        for r in range(self.coeffs.rows):
            value = self.coeffs.row(r).get(column)
            if value is not None:
                result[r] = value
        return result

    def grid(self) -> list[list[SparseRow]]:
        columns = self.coeffs.sparse_columns()
        n = self.dim_carrier
        return [[columns[i * n + j] for j in range(n)] for i in range(n)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Corep):
            return NotImplemented
        return (
            self.dim_carrier == other.dim_carrier
            and self.hopf == other.hopf
            and self.coeffs == other.coeffs
        )

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True, eq=False)
class Comodule:
    """Right comodule V → V⊗A given by its coaction matrix.

    ``coaction`` is (dim·hopf.dim) × dim; column i holds the image of v_i,
    row j·hopf.dim + a ↔ v_j⊗h_a.
    """

    hopf: HopfAlgebra
    name: str
    dim: int
    coaction: Mat

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise MalformedInputError("Comodule dimension must be positive")
        _expect_shape(
            f"coaction of {self.name}", self.coaction, self.dim * self.hopf.dim, self.dim
        )
