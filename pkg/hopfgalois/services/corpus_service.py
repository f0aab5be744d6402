"""Deterministic builders for groups, Hopf algebras, bundles and irreducible coreps."""

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Callable, Optional

from hopfgalois.config import settings
from hopfgalois.core.exceptions import BundleConstructionError, UnsupportedGroupError
from hopfgalois.linalg import ONE, Mat, Scalar
from hopfgalois.linalg.matrix import SparseRow
from hopfgalois.models import Bundle, Corep, GroupTable, GSetAction, HopfAlgebra
from hopfgalois.services.bundle_service import BundleService
from hopfgalois.services.hopf_service import check_corep, check_hopf
from hopfgalois.utils.logger import get_logger

logger = get_logger(__name__)


# Groups and actions
def cyclic_group(n: int) -> GroupTable:
    """Z/n with addition mod n."""
    if not 1 <= n <= settings.MAX_GROUP_ORDER:
        raise UnsupportedGroupError(f"Z/{n} is outside the supported orders 1..{settings.MAX_GROUP_ORDER}")
    return GroupTable(
        name=f"Z/{n}",
        table=tuple(tuple((g + h) % n for h in range(n)) for g in range(n)),
    )


def _sign(perm: tuple[int, ...]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


S3_ELEMENTS = tuple(permutations(range(3)))


def symmetric_group_3() -> GroupTable:
    """S3 as permutations of {0, 1, 2} in lexicographic order; (σ·τ)(i) = σ(τ(i))."""
    index = {perm: k for k, perm in enumerate(S3_ELEMENTS)}
    table = tuple(
        tuple(index[tuple(s[t[i]] for i in range(3))] for t in S3_ELEMENTS) for s in S3_ELEMENTS
    )
    labels = tuple("".join(str(i) for i in perm) for perm in S3_ELEMENTS)
    return GroupTable(name="S3", table=table, identity=0, labels=labels)


def group_by_name(name: str) -> GroupTable:
    """
    Look up a builtin group.

    Args:
        name: ``Z/n`` (also ``Zn``) or ``S3``

    Raises:
        UnsupportedGroupError: If the name is unknown or the order too large
    """
    key = name.strip()
    if key.upper() == "S3":
        return symmetric_group_3()
    match = re.fullmatch(r"Z/?(\d+)", key, flags=re.IGNORECASE)
    if match:
        return cyclic_group(int(match[1]))
    raise UnsupportedGroupError(f"Unknown group {name!r}; supported: Z/n (n ≤ {settings.MAX_GROUP_ORDER}), S3")


def regular_action(g: GroupTable) -> GSetAction:
    """G acting on itself by right multiplication."""
    return GSetAction(
        name=f"{g.name}-regular",
        group=g,
        points=g.order,
        action=tuple(tuple(g.multiply(p, x) for p in range(g.order)) for x in range(g.order)),
    )


def disjoint_copies(action: GSetAction, copies: int) -> GSetAction:
    """``copies`` disjoint copies of an action, copy c on points c·m … c·m + m − 1."""
    m = action.points
    return GSetAction(
        name=f"{action.name}x{copies}",
        group=action.group,
        points=m * copies,
        action=tuple(
            tuple(c * m + row[p] for c in range(copies) for p in range(m)) for row in action.action
        ),
    )


def z2_with_fixed_point() -> GSetAction:
    """Z/2 swapping points 0 and 1 and fixing 2."""
    return GSetAction(
        name="Z/2-fixed-point",
        group=cyclic_group(2),
        points=3,
        action=((0, 1, 2), (1, 0, 2)),
    )


# Hopf algebras
def fn_algebra(g: GroupTable) -> HopfAlgebra:
    """Functions on G: pointwise product, Δδ_x = Σ_{yz=x} δ_y⊗δ_z, S(δ_x) = δ_{x⁻¹}."""
    n = g.order
    h = HopfAlgebra(
        name=f"k^{g.name}",
        dim=n,
        basis_labels=tuple(f"d{label}" for label in g.labels),
        mult=Mat(n, n * n, {(x, x * n + x): ONE for x in range(n)}),
        unit=Mat(n, 1, {(x, 0): ONE for x in range(n)}),
        comult=Mat(n * n, n, {(y * n + z, g.multiply(y, z)): ONE for y in range(n) for z in range(n)}),
        counit=Mat(1, n, {(0, g.identity): ONE}),
        antipode=Mat(n, n, {(g.inverse(x), x): ONE for x in range(n)}),
        involution=Mat.identity(n),
    )
    return _checked_hopf(h)


def group_algebra(g: GroupTable) -> HopfAlgebra:
    """Group algebra kG: e_x e_y = e_{xy}, Δe_x = e_x⊗e_x, S(e_x) = e_{x⁻¹}, e_x* = e_{x⁻¹}."""
    n = g.order
    h = HopfAlgebra(
        name=f"k[{g.name}]",
        dim=n,
        basis_labels=tuple(f"e{label}" for label in g.labels),
        mult=Mat(n, n * n, {(g.multiply(x, y), x * n + y): ONE for x in range(n) for y in range(n)}),
        unit=Mat(n, 1, {(g.identity, 0): ONE}),
        comult=Mat(n * n, n, {(x * n + x, x): ONE for x in range(n)}),
        counit=Mat(1, n, {(0, x): ONE for x in range(n)}),
        antipode=Mat(n, n, {(g.inverse(x), x): ONE for x in range(n)}),
        involution=Mat(n, n, {(g.inverse(x), x): ONE for x in range(n)}),
    )
    return _checked_hopf(h)


def sweedler() -> HopfAlgebra:
    """Sweedler's 4-dimensional Hopf algebra on {1, g, x, y = gx}.

    g² = 1, x² = 0, xg = −gx, Δg = g⊗g, Δx = x⊗1 + g⊗x, S(x) = −y.
    """
    n = 4
    one, g, x, y = range(4)
    products = {
        (g, g): {one: 1},
        (g, x): {y: 1},
        (g, y): {x: 1},
        (x, g): {y: -1},
        (y, g): {x: -1},
    }
    mult: dict[tuple[int, int], int] = {}
    for i in range(n):
        mult[(i, one * n + i)] = 1
        mult[(i, i * n + one)] = 1
    for (i, j), image in products.items():
        for k, value in image.items():
            mult[(k, i * n + j)] = value
    comult = {
        (one * n + one, one): 1,
        (g * n + g, g): 1,
        (x * n + one, x): 1,
        (g * n + x, x): 1,
        (y * n + g, y): 1,
        (one * n + y, y): 1,
    }
    h = HopfAlgebra(
        name="H4",
        dim=n,
        basis_labels=("1", "g", "x", "gx"),
        mult=Mat(n, n * n, mult),
        unit=Mat(n, 1, {(one, 0): 1}),
        comult=Mat(n * n, n, comult),
        counit=Mat(1, n, {(0, one): 1, (0, g): 1}),
        antipode=Mat(n, n, {(one, one): 1, (g, g): 1, (y, x): -1, (x, y): 1}),
    )
    return _checked_hopf(h)


def _checked_hopf(h: HopfAlgebra) -> HopfAlgebra:
    report = check_hopf(h)
    if not report.ok:
        raise BundleConstructionError(
            f"Builder output {h.name} fails {', '.join(v.axiom for v in report.violations)}"
        )
    return h


# Bundles
def _checked_bundle(p: Bundle) -> Bundle:
    report = BundleService(p).check_bundle()
    if not report.ok:
        raise BundleConstructionError(
            f"Builder output {p.name} fails {', '.join(v.axiom for v in report.violations)}"
        )
    return p


def gset_bundle(action: GSetAction, hopf: Optional[HopfAlgebra] = None) -> Bundle:
    """
    Functions on a G-set with F(δ_q) = Σ_g δ_{q·g⁻¹}⊗δ_g, i.e. F(f)(p, g) = f(p·g).

    Args:
        action: Right action of a group on finitely many points
        hopf: Function algebra of the group (built when omitted)

    Raises:
        BundleConstructionError: If the result fails the bundle axioms
    """
    g = action.group
    a = hopf or fn_algebra(g)
    n, dim_a = action.points, g.order
    coaction = {
        (action.act(q, g.inverse(x)) * dim_a + x, q): ONE for q in range(n) for x in range(dim_a)
    }
    p = Bundle(
        name=action.name,
        hopf=a,
        total_dim=n,
        basis_labels=tuple(f"p{q}" for q in range(n)),
        mult=Mat(n, n * n, {(q, q * n + q): ONE for q in range(n)}),
        unit=Mat(n, 1, {(q, 0): ONE for q in range(n)}),
        coaction=Mat(n * dim_a, n, coaction),
    )
    logger.info(
        "Built G-set bundle",
        extra={"bundle": p.name, "points": n, "free": action.is_free(), "orbits": len(action.orbits())},
    )
    return _checked_bundle(p)


def trivial_bundle(h: HopfAlgebra) -> Bundle:
    """B = A with F = Δ."""
    return _checked_bundle(
        Bundle(
            name=f"{h.name}-trivial",
            hopf=h,
            total_dim=h.dim,
            basis_labels=h.basis_labels,
            mult=h.mult,
            unit=h.unit,
            coaction=h.comult,
        )
    )


# Irreducible corepresentations
def _corep(h: HopfAlgebra, name: str, n: int, coeffs: dict[tuple[int, int], SparseRow]) -> Corep:
    columns = [coeffs.get((i, j), {}) for i in range(n) for j in range(n)]
    u = Corep(hopf=h, name=name, dim_carrier=n, coeffs=Mat.from_sparse_columns(h.dim, columns))
    if not check_corep(u):
        raise BundleConstructionError(f"Builtin corepresentation {name} fails its laws")
    return u


def cyclic_characters(n: int, h: Optional[HopfAlgebra] = None) -> list[Corep]:
    """χ_k = Σ_x ζ_n^{kx} δ_x for k = 0 … n−1, over functions on Z/n."""
    a = h or fn_algebra(cyclic_group(n))
    return [
        _corep(a, "trivial" if k == 0 else f"chi{k}", 1, {(0, 0): {x: Scalar.zeta(n, k * x) for x in range(n)}})
        for k in range(n)
    ]


def _s3_standard(perm: tuple[int, ...]) -> list[list[int]]:
    """Matrix of σ on the sum-zero plane in the basis f1 = e0 − e1, f2 = e1 − e2."""
    columns = []
    for x, y in ((0, 1), (1, 2)):
        w = [0, 0, 0]
        w[perm[x]] += 1
        w[perm[y]] -= 1
        columns.append((w[0], -w[2]))
    return [[columns[j][i] for j in range(2)] for i in range(2)]


def s3_irreps(h: Optional[HopfAlgebra] = None) -> list[Corep]:
    """Trivial, sign and the 2-dimensional standard corep over functions on S3."""
    a = h or fn_algebra(symmetric_group_3())
    trivial = _corep(a, "trivial", 1, {(0, 0): {x: ONE for x in range(6)}})
    sign = _corep(a, "sign", 1, {(0, 0): {x: Scalar.rational(_sign(p)) for x, p in enumerate(S3_ELEMENTS)}})
    standard_coeffs: dict[tuple[int, int], SparseRow] = {}
    for x, perm in enumerate(S3_ELEMENTS):
        matrix = _s3_standard(perm)
        for i in range(2):
            for j in range(2):
                if matrix[i][j]:
                    standard_coeffs.setdefault((i, j), {})[x] = Scalar.rational(matrix[i][j])
    standard = _corep(a, "standard", 2, standard_coeffs)
    return [trivial, sign, standard]


def grouplike_coreps(h: HopfAlgebra) -> list[Corep]:
    """The 1-dimensional coreps e_x of a group algebra kG."""
    return [_corep(h, f"g{label}", 1, {(0, 0): {x: ONE}}) for x, label in enumerate(h.basis_labels)]


def builtin_irreps(name: str, h: Optional[HopfAlgebra] = None) -> list[Corep]:
    """
    Complete list of irreducible coreps of the function algebra of a builtin group.

    Args:
        name: ``Z/n`` or ``S3``
        h: Function algebra to attach the coreps to (built when omitted)

    Raises:
        UnsupportedGroupError: If no builtin list exists for the group
    """
    g = group_by_name(name)
    if g.name == "S3":
        return s3_irreps(h)
    return cyclic_characters(g.order, h)


# Examples
@dataclass(frozen=True)
class Example:
    """A corpus example: its Hopf algebra, bundle and (when known) irreducibles."""

    name: str
    hopf: HopfAlgebra
    bundle: Bundle
    irreps: Optional[list[Corep]] = field(default=None)


def _gset_example(name: str, group: str, build: Callable[[GroupTable], GSetAction]) -> Example:
    g = group_by_name(group)
    a = fn_algebra(g)
    return Example(name=name, hopf=a, bundle=gset_bundle(build(g), a), irreps=builtin_irreps(group, a))


def _group_algebra_example(name: str, group: str) -> Example:
    a = group_algebra(group_by_name(group))
    return Example(name=name, hopf=a, bundle=trivial_bundle(a), irreps=grouplike_coreps(a))


def _sweedler_example(name: str) -> Example:
    a = sweedler()
    return Example(name=name, hopf=a, bundle=trivial_bundle(a))


_EXAMPLES: dict[str, Callable[[], Example]] = {
    "z2-regular": lambda: _gset_example("z2-regular", "Z/2", regular_action),
    "z2-free-4": lambda: _gset_example("z2-free-4", "Z/2", lambda g: disjoint_copies(regular_action(g), 2)),
    "z2-nonfree-3": lambda: _gset_example("z2-nonfree-3", "Z/2", lambda g: z2_with_fixed_point()),
    "z3-regular": lambda: _gset_example("z3-regular", "Z/3", regular_action),
    "s3-regular": lambda: _gset_example("s3-regular", "S3", regular_action),
    "s3-free-12": lambda: _gset_example("s3-free-12", "S3", lambda g: disjoint_copies(regular_action(g), 2)),
    "sweedler-trivial": lambda: _sweedler_example("sweedler-trivial"),
    "group-algebra-z2": lambda: _group_algebra_example("group-algebra-z2", "Z/2"),
    "group-algebra-s3": lambda: _group_algebra_example("group-algebra-s3", "S3"),
}


def example_names() -> list[str]:
    return list(_EXAMPLES)


@lru_cache(maxsize=None)
def example(name: str) -> Example:
    """
    Build a named corpus example.

    Raises:
        UnsupportedGroupError: If the name is unknown
    """
    builder = _EXAMPLES.get(name)
    if builder is None:
        raise UnsupportedGroupError(f"Unknown example {name!r}; available: {', '.join(_EXAMPLES)}")
    return builder()


def example_bundle(name: str) -> Bundle:
    return example(name).bundle


def corpus_hopf_algebras() -> list[HopfAlgebra]:
    """Every Hopf algebra the corpus builds."""
    return [
        fn_algebra(cyclic_group(2)),
        fn_algebra(cyclic_group(3)),
        fn_algebra(symmetric_group_3()),
        group_algebra(cyclic_group(2)),
        group_algebra(symmetric_group_3()),
        sweedler(),
    ]
