"""Report schemas for engine verdicts and command output."""

from typing import Literal, Optional

from pydantic import BaseModel, Field, SerializeAsAny


class AxiomViolation(BaseModel):
    """One failed identity, with the basis indices where it first fails."""

    axiom: str = Field(description="Name of the violated axiom", examples=["associativity"])
    witness: list[int] = Field(description="Basis indices of the first failing entry")
    detail: Optional[str] = Field(default=None, description="Human-readable explanation")


class EngineReport(BaseModel):
    """Common fields of every per-object report."""

    kind: str
    name: str


class HopfReport(EngineReport):
    """Result of the Hopf axiom suite."""

    kind: Literal["hopf"] = "hopf"
    dim: int
    ok: bool
    s_squared_is_id: bool
    commutative: bool
    cocommutative: bool
    violations: list[AxiomViolation] = Field(default_factory=list)


class CorepReport(EngineReport):
    """Result of the corepresentation laws for one corep."""

    kind: Literal["corep"] = "corep"
    hopf: str
    dim_carrier: int
    ok: bool
    split_irreducible: Optional[bool] = None
    contraction_intertwines: Optional[bool] = None


class BundleReport(EngineReport):
    """Result of the comodule-algebra axiom suite."""

    kind: Literal["bundle"] = "bundle"
    hopf: str
    total_dim: int
    ok: bool
    base_dim: Optional[int] = None
    violations: list[AxiomViolation] = Field(default_factory=list)


class FreenessReport(EngineReport):
    """Surjectivity of the canonical map."""

    kind: Literal["freeness"] = "freeness"
    surjective: bool
    rank: int
    target_dim: int
    cokernel_dim: int


class GaloisReport(EngineReport):
    """Bijectivity of X: B⊗_V B → B⊗A."""

    kind: Literal["galois"] = "galois"
    bijective: bool
    base_dim: int
    tensor_dim: int = Field(description="dim(B⊗_V B)")
    target_dim: int = Field(description="dim(B⊗A)")
    rank: int
    kernel_dim: int
    cokernel_dim: int


class PeterWeylComponent(BaseModel):
    """One isotypic block bim(α)⊗H_α."""

    irrep: str
    carrier_dim: int
    multiplicity: int = Field(description="dim bim(α)")
    image_dim: int


class PeterWeylReport(EngineReport):
    """Isotypic decomposition of the total space."""

    kind: Literal["peter_weyl"] = "peter_weyl"
    bundle_dim: int
    total: int = Field(description="Σ dim bim(α)·dim H_α")
    evaluation_rank: int
    complete: bool
    components: list[PeterWeylComponent] = Field(default_factory=list)


class TranslationReport(EngineReport):
    """τ values as (i, j, scalar) triples over the quotient basis b_i⊗b_j."""

    kind: Literal["translation"] = "translation"
    method: str
    tensor_dim: int
    values: dict[str, list[tuple[int, int, str]]]


class InverseReport(EngineReport):
    """X∘τ = id and τ∘X = id, and the invariance lemma of the dual bases."""

    kind: Literal["inverse"] = "inverse"
    method: str
    x_tau_is_id: bool
    tau_x_is_id: bool
    x_tau_witness: Optional[list[int]] = None
    tau_x_witness: Optional[list[int]] = None
    lemma: Literal["passed", "failed", "skipped"] = "skipped"
    lemma_failures: list[str] = Field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.x_tau_is_id and self.tau_x_is_id and self.lemma != "failed"


class FODCReport(EngineReport):
    """Universal first-order calculus."""

    kind: Literal["fodc"] = "fodc"
    bundle_dim: int
    omega1_dim: int
    d_unit_is_zero: bool
    leibniz: bool


class VerticalSplitReport(EngineReport):
    """Vertical map and horizontal subspaces."""

    kind: Literal["vertical_split"] = "vertical_split"
    vertical_rank: int
    vertical_target_dim: int
    vertical_surjective: bool
    hor1_dim: int
    omega_hor1_dim: int
    omega_hor1_in_hor1: bool
    exact_sequence_law: bool = Field(
        description="dim Ω¹ = dim hor¹ + dim B·(dim A − 1)"
    )


class BmMdReport(EngineReport):
    """Ω¹_hor = hor¹ together with exactness of the vertical sequence."""

    kind: Literal["bm_md"] = "bm_md"
    holds: bool
    subspaces_equal: bool
    vertical_surjective: bool
    gap_dim: int
    vertical_deficit: int


class CrossCheckReport(EngineReport):
    """Agreement of the Galois and horizontal-form verdicts."""

    kind: Literal["cross_check"] = "cross_check"
    consistent: bool
    bijective: bool
    bm_md_holds: bool


class CommandReport(BaseModel):
    """Everything one command invocation produced."""

    command: str
    source: Optional[str] = None
    ok: bool
    exit_code: int
    results: list[SerializeAsAny[EngineReport]] = Field(default_factory=list)
    error: Optional[str] = None
    timing_ms: float = 0.0
