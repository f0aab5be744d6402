"""First-order universal differential calculus over a bundle."""

from dataclasses import dataclass

from hopfgalois.linalg import Mat, Subspace
from hopfgalois.models.bundle import Bundle


@dataclass(frozen=True)
class UniversalFODC:
    """Ω¹ = ker(m: B⊗B → B) with d(b) = 1⊗b − b⊗1."""

    bundle: Bundle
    space: Subspace
    d: Mat

    @property
    def dim(self) -> int:
        return self.space.dim


@dataclass(frozen=True)
class VerticalSplit:
    """Vertical map on Ω¹ and the two horizontal subspaces.

    ``vertical_map`` acts on the coordinates of ``space`` basis vectors and
    lands in B⊗A. ``hor1`` and ``omega_hor1`` are subspaces of B⊗B.
    """

    fodc: UniversalFODC
    vertical_map: Mat
    vertical_rank: int
    vertical_target_dim: int
    hor1: Subspace
    omega_hor1: Subspace

    @property
    def vertical_surjective(self) -> bool:
        return self.vertical_rank == self.vertical_target_dim
