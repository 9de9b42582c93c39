# app/services/root_system_service.py
"""
D_n root data in the orthonormal ε-basis.

Simple roots are α_i = ε_i − ε_{i+1} (i < n) and α_n = ε_{n-1} + ε_n, so the
only noncompact simple root carries the label m_n.
"""
import logging
from fractions import Fraction
from typing import Optional, Sequence

from ..exceptions import ArityMismatchError, UnsupportedRankError
from ..models.linform import LinForm, WeightVec
from ..models.models import (
    AlgebraInfo,
    AlgebraTag,
    ParabolicFactor,
    Root,
    RootKind,
    RootSystemD,
)

# Configure module logger
logger = logging.getLogger(__name__)

MIN_RANK = 4
HALF = Fraction(1, 2)


def build(n: int, k: Optional[int] = None) -> RootSystemD:
    """
    Construct the positive, simple and ρ data of D_n.

    Args:
        n: Rank; must be even and >= 4 for the so*(2n) conformal class
        k: Label arity; defaults to n and must equal it

    Returns:
        The root system with ρ as constant forms of arity k

    Raises:
        UnsupportedRankError: If n is odd or below 4
        ArityMismatchError: If k differs from n
    """
    if n < MIN_RANK or n % 2:
        raise UnsupportedRankError(f"Rank must be an even integer >= {MIN_RANK}, got {n}")
    k = n if k is None else k
    if k != n:
        raise ArityMismatchError(f"Label arity {k} must equal the rank {n}")

    positive = [Root(kind=RootKind.ALPHA_DIFF, i=i, j=j, rank=n) for i, j in _pairs(n)]
    positive += [Root(kind=RootKind.BETA_SUM, i=i, j=j, rank=n) for i, j in _pairs(n)]

    simple = [Root(kind=RootKind.ALPHA_DIFF, i=i, j=i + 1, rank=n) for i in range(1, n)]
    simple.append(Root(kind=RootKind.BETA_SUM, i=n - 1, j=n, rank=n))

    rho = WeightVec.from_values(range(n - 1, -1, -1), k)
    logger.debug(f"Built D_{n}: {len(positive)} positive roots, rho={rho}")

    return RootSystemD(
        rank=n,
        positive_roots=tuple(positive),
        simple_roots=tuple(simple),
        rho=rho,
    )


def _pairs(n: int):
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def inner(x: WeightVec, root: Root) -> LinForm:
    """Standard inner product (x, α) as an exact form."""
    if x.rank != root.rank:
        raise ArityMismatchError(f"Weight of rank {x.rank} paired with a rank-{root.rank} root")
    first = x[root.i - 1]
    second = x[root.j - 1]
    return first - second if root.compact else first + second


def pairing(x: WeightVec, root: Root) -> LinForm:
    """⟨x, α∨⟩ = 2(x, α)/(α, α), which equals (x, α) because every root has length² 2."""
    return inner(x, root)


def reflect(x: WeightVec, root: Root) -> WeightVec:
    """
    Weyl reflection x − ⟨x, α∨⟩ α.

    For ε_i − ε_j this swaps coordinates i and j; for ε_i + ε_j it swaps
    them and negates both.
    """
    m = pairing(x, root)
    coords = list(x.coords)
    for index, component in enumerate(root.vector):
        if component:
            coords[index] = coords[index] - m * component
    return WeightVec(coords)


def lambda_plus_rho(n: int, labels: Optional[Sequence[int]] = None) -> WeightVec:
    """
    Invert m_i = (Λ+ρ, α_i) for the ε-coordinates of Λ+ρ.

    Args:
        n: Rank
        labels: Positive integer Dynkin labels, or None for the symbolic
            indeterminates m1..mn

    Returns:
        x with x_n = (m_n − m_{n-1})/2, x_{n-1} = (m_{n-1} + m_n)/2 and
        x_i = m_i + x_{i+1}
    """
    if labels is None:
        m = [LinForm.indeterminate(i, n) for i in range(1, n + 1)]
    else:
        if len(labels) != n:
            raise ArityMismatchError(f"Expected {n} labels, got {len(labels)}")
        if any(label < 1 for label in labels):
            raise ValueError(f"Labels must be positive integers: {tuple(labels)}")
        m = [LinForm.constant_form(label, n) for label in labels]

    coords: list[LinForm] = [LinForm.zero(n)] * n
    coords[n - 1] = (m[n - 1] - m[n - 2]) * HALF
    coords[n - 2] = (m[n - 2] + m[n - 1]) * HALF
    for i in range(n - 3, -1, -1):
        coords[i] = m[i] + coords[i + 1]
    return WeightVec(coords)


def c_form(x: WeightVec) -> LinForm:
    """The character label c = −½ Σ x_i of a weight."""
    return x.total() * -HALF


def maximal_parabolics(n: int) -> tuple[ParabolicFactor, ...]:
    """
    Maximal parabolic M-factors so*(2n−4j) ⊕ su*(2j), j = 1..[n/2].

    The nilradicals have dimension j(4n − 6j − 1).
    """
    factors = []
    for j in range(1, n // 2 + 1):
        rest = 2 * n - 4 * j
        m_factor = f"su*({2 * j})" if rest == 0 else f"so*({rest}) + su*({2 * j})"
        factors.append(
            ParabolicFactor(j=j, m_factor=m_factor, nilradical_dim=j * (4 * n - 6 * j - 1))
        )
    return tuple(factors)


def algebra_info(n: int, tag: AlgebraTag) -> AlgebraInfo:
    """Documented constants of so*(2n), or of so(n,n) for the split relative."""
    if tag is AlgebraTag.SO_SPLIT:
        return AlgebraInfo(
            tag=tag,
            name=f"so({n},{n})",
            rank=n,
            real_dimension=n * (2 * n - 1),
            noncompact_dimension=n * n,
            split_rank=n,
            minimal_nilradical_dim=n * (n - 1),
            m_factor=f"sl({n},R)",
            has_highest_weight_reps=False,
            parabolics=(),
            notes=("shares the multiplet structure of so*(12) through the parabolic relation",),
        )

    notes = ()
    if n == 4:
        notes = ("so*(8) is isomorphic to so(6,2)",)
    return AlgebraInfo(
        tag=tag,
        name=f"so*({2 * n})",
        rank=n,
        real_dimension=n * (2 * n - 1),
        noncompact_dimension=n * (n - 1),
        split_rank=n // 2,
        minimal_nilradical_dim=n * (n - 1) - n // 2,
        m_factor=f"su*({n})",
        has_highest_weight_reps=True,
        parabolics=maximal_parabolics(n),
        notes=notes,
    )
