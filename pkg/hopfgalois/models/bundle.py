"""Comodule algebras (bundles) and the objects derived from them."""

from dataclasses import dataclass, field
from typing import Optional

from hopfgalois.core.exceptions import MalformedInputError
from hopfgalois.linalg import Mat, Subspace
from hopfgalois.linalg.matrix import SparseRow
from hopfgalois.models.algebra import AlgebraStructure
from hopfgalois.models.hopf import Corep, HopfAlgebra


@dataclass(frozen=True, eq=False)
class Bundle(AlgebraStructure):
    """Right comodule algebra (B, F) over a Hopf algebra A.

    Attributes:
        mult: n × n² multiplication of B
        unit: n × 1
        coaction: (n·dim A) × n; column i holds F(b_i), row j·dim A + a ↔ b_j⊗h_a
    """

    name: str
    hopf: HopfAlgebra
    total_dim: int
    basis_labels: tuple[str, ...]
    mult: Mat
    unit: Mat
    coaction: Mat

    def __post_init__(self) -> None:
        n = self.total_dim
        if n < 1:
            raise MalformedInputError("Bundle dimension must be positive")
        if len(self.basis_labels) != n:
            raise MalformedInputError(f"{len(self.basis_labels)} basis labels for dimension {n}")
        expected = {
            "mult": (self.mult, (n, n * n)),
            "unit": (self.unit, (n, 1)),
            "coaction": (self.coaction, (n * self.hopf.dim, n)),
        }
        for label, (m, shape) in expected.items():
            if m.shape != shape:
                raise MalformedInputError(
                    f"{label} of bundle {self.name} has shape {m.rows}x{m.cols}, "
                    f"expected {shape[0]}x{shape[1]}"
                )

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Bundle):
            return NotImplemented
        return (
            self.total_dim == other.total_dim
            and self.hopf == other.hopf
            and self.mult == other.mult
            and self.unit == other.unit
            and self.coaction == other.coaction
        )

    __hash__ = None  # type: ignore[assignment]

    @property
    def tensor_dim(self) -> int:
        """dim(B⊗B)."""
        return self.total_dim * self.total_dim

    @property
    def target_dim(self) -> int:
        """dim(B⊗A)."""
        return self.total_dim * self.hopf.dim


@dataclass(frozen=True)
class FixedSubalgebra:
    """The base V = {b : F(b) = b⊗1} with the multiplication it inherits.

    ``mult`` is expressed in the canonical basis of ``space``
    (dim V × dim V²); ``unit`` holds the coordinates of 1.
    """

    space: Subspace
    mult: Mat
    unit: tuple

    @property
    def dim(self) -> int:
        return self.space.dim

    def inclusion(self) -> Mat:
        """dim B × dim V matrix of V ⊆ B."""
        return self.space.as_columns()


@dataclass(frozen=True)
class TensorOverBase:
    """B⊗_V B as a quotient of B⊗B by the middle-linearity relations."""

    bundle: Bundle
    dim: int
    project: Mat
    section: Mat
    relations: Subspace


@dataclass(frozen=True)
class CanonicalMap:
    """X: B⊗_V B → B⊗A and its undescended form on B⊗B."""

    tensor: TensorOverBase
    full: Mat
    descended: Mat

    @property
    def target_dim(self) -> int:
        return self.full.rows


@dataclass(frozen=True)
class IntertwinerSpace:
    """bim(u): maps φ: H_u → B with F∘φ = (φ⊗id)∘u.

    Each basis element is a dim H_u × dim B matrix whose row i is φ(e_i).
    ``space`` is the same space flattened into k^(dim H_u · dim B).
    """

    corep: Corep
    space: Subspace
    basis: tuple[Mat, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class DualBases:
    """Pairs (ν_k, μ_k) with Σ_k ν_k(e_i^*)·μ_k(e_j) = δ_ij·1.

    ν_k is a row-per-e_i^* matrix in bim(ǔ), μ_k a row-per-e_j matrix in bim(u).
    """

    corep: Corep
    pairs: tuple[tuple[Mat, Mat], ...]


@dataclass(frozen=True, eq=False)
class TranslationTable:
    """τ(h) ∈ B⊗_V B for every basis element h of A.

    ``values[a]`` holds the quotient coordinates of τ(h_a).
    """

    tensor: TensorOverBase
    method: str
    values: tuple[SparseRow, ...]
    hopf_dim: int = field(default=0)

    def __post_init__(self) -> None:
        if not self.hopf_dim:
            object.__setattr__(self, "hopf_dim", len(self.values))

    @property
    def bundle(self) -> Bundle:
        return self.tensor.bundle

    def as_matrix(self) -> Mat:
        """dim(B⊗_V B) × dim A matrix with column a = τ(h_a)."""
        return Mat.from_sparse_columns(self.tensor.dim, list(self.values))

    def with_value(self, index: int, value: SparseRow, method: Optional[str] = None) -> "TranslationTable":
        """Copy with one value replaced."""
        values = list(self.values)
        values[index] = dict(value)
        return TranslationTable(self.tensor, method or self.method, tuple(values))

    def first_difference(self, other: "TranslationTable") -> Optional[int]:
        """Index of the first basis element where the tables disagree."""
        for a, (x, y) in enumerate(zip(self.values, other.values)):
            if x != y:
                return a
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TranslationTable):
            return NotImplemented
        return self.tensor.dim == other.tensor.dim and self.values == other.values

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True)
class IsotypicComponent:
    """bim(α)⊗H_α and its image in B under φ⊗x ↦ φ(x)."""

    corep: Corep
    intertwiners: IntertwinerSpace
    image: Subspace

    @property
    def dim(self) -> int:
        return self.intertwiners.dim * self.corep.dim_carrier


@dataclass(frozen=True)
class PeterWeylDecomposition:
    """B = ⊕_α bim(α)⊗H_α, or the evidence that the given list falls short."""

    bundle: Bundle
    components: tuple[IsotypicComponent, ...]
    evaluation_rank: int

    @property
    def total(self) -> int:
        return sum(c.dim for c in self.components)

    @property
    def complete(self) -> bool:
        n = self.bundle.total_dim
        return self.total == n and self.evaluation_rank == n
