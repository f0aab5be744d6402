"""Schemas for the JSON structure-constant file format."""

from typing import Annotated, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

Triple = tuple[int, int, int, str]
Pair = tuple[int, int, str]
Single = tuple[int, str]


class FieldSpec(BaseModel):
    """Scalar field Q(ζ_conductor) the file's scalars live in."""

    model_config = ConfigDict(extra="forbid")

    conductor: int = Field(default=1, ge=1, description="n for the primitive root ζ_n")


class HopfBlock(BaseModel):
    """Hopf algebra given by structure-constant triples."""

    model_config = ConfigDict(extra="forbid")

    kind: Literal["hopf"]
    name: str = Field(min_length=1)
    dim: int = Field(ge=1)
    basis: Optional[list[str]] = None
    mult: list[Triple] = Field(description="e_i e_j has coefficient s at e_k")
    unit: list[Single] = Field(description="1 = Σ s e_k")
    comult: list[Triple] = Field(description="Δe_i has coefficient s at e_j⊗e_k")
    counit: list[Single] = Field(description="ε(e_i) = s")
    antipode: list[Pair] = Field(description="S(e_i) has coefficient s at e_j")
    involution: Optional[list[Pair]] = None


class BundleBlock(BaseModel):
    """Comodule algebra over a named Hopf algebra."""

    model_config = ConfigDict(extra="forbid")

    kind: Literal["bundle"]
    name: str = Field(min_length=1)
    hopf: str
    dim: int = Field(ge=1)
    basis: Optional[list[str]] = None
    mult: list[Triple]
    unit: list[Single]
    coaction: list[Triple] = Field(description="F(b_i) has coefficient s at b_j⊗h_a")


class CorepBlock(BaseModel):
    """One matrix corepresentation."""

    model_config = ConfigDict(extra="forbid")

    name: str = Field(min_length=1)
    dim: int = Field(ge=1)
    coeffs: list[Triple] = Field(description="u_ij has coefficient s at h_a")


class CorepListBlock(BaseModel):
    """A list of corepresentations over a named Hopf algebra."""

    model_config = ConfigDict(extra="forbid")

    kind: Literal["coreps"]
    name: str = Field(min_length=1)
    hopf: str
    coreps: list[CorepBlock]


ObjectBlock = Annotated[Union[HopfBlock, BundleBlock, CorepListBlock], Field(discriminator="kind")]


class InputFile(BaseModel):
    """Top-level document."""

    model_config = ConfigDict(extra="forbid")

    format_version: str
    field: FieldSpec = Field(default_factory=FieldSpec)
    objects: list[ObjectBlock] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_unique_names(self) -> "InputFile":
        seen: set[str] = set()
        for block in self.objects:
            if block.name in seen:
                raise ValueError(f"duplicate object name {block.name!r}")
            seen.add(block.name)
        return self
