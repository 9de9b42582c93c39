# app/services/weyl_service.py
"""
W(D_n) as even-signed permutations: the action on weights, the 2^{n-1}
parabolic coset representatives modulo W(A_{n-1}), and a brute-force
closure used as a verification oracle.
"""
import logging
from collections import deque
from itertools import combinations
from typing import Sequence

from ..exceptions import ArityMismatchError, OracleUnavailableError, UnsupportedRankError
from ..models.linform import WeightVec
from ..models.models import CosetRep, Root, SignedPerm
from .root_system_service import build

# Configure module logger
logger = logging.getLogger(__name__)

DEFAULT_ORACLE_MAX_RANK = 6


def act(w: SignedPerm, x: WeightVec) -> WeightVec:
    """Apply a Weyl group element to a weight."""
    if w.rank != x.rank:
        raise ArityMismatchError(f"Element of W(D_{w.rank}) applied to a rank-{x.rank} weight")
    return WeightVec(w.apply(x.coords))


def reflection(root: Root) -> SignedPerm:
    """The reflection s_α as a signed permutation."""
    perm = list(range(root.rank))
    signs = [1] * root.rank
    i, j = root.i - 1, root.j - 1
    perm[i], perm[j] = j, i
    if not root.compact:
        signs[i] = signs[j] = -1
    return SignedPerm(tuple(perm), tuple(signs))


def flip_sets(n: int) -> list[tuple[int, ...]]:
    """Even-cardinality subsets of {1..n}, by size then lexicographically."""
    return [
        subset
        for size in range(0, n + 1, 2)
        for subset in combinations(range(1, n + 1), size)
    ]


def coset_rep(n: int, flip_set: Sequence[int]) -> CosetRep:
    """
    Representative that negates the flipped coordinates and sorts the result
    into M-dominant order.

    For a generic dominant weight x_1 > ... > x_{n-1} > |x_n| the sorted image
    lists the unflipped x_j (j < n) ascending in j, then ±x_n, then the
    flipped −x_j with j descending.
    """
    flipped = set(flip_set)
    if len(flipped) % 2 or not flipped <= set(range(1, n + 1)):
        raise ValueError(f"Flip set must be an even subset of 1..{n}: {tuple(flip_set)}")

    order = [j for j in range(1, n) if j not in flipped]
    order.append(n)
    order += [j for j in range(n - 1, 0, -1) if j in flipped]

    perm = [0] * n
    for position, j in enumerate(order):
        perm[j - 1] = position
    signs = tuple(-1 if j in flipped else 1 for j in range(1, n + 1))
    return CosetRep(element=SignedPerm(tuple(perm), signs), flip_set=tuple(sorted(flipped)))


def coset_reps(n: int) -> list[CosetRep]:
    """
    All 2^{n-1} minimal parabolic coset representatives of W(D_n)/W(A_{n-1}).

    Raises:
        UnsupportedRankError: If n is odd or below 4
    """
    if n < 4 or n % 2:
        raise UnsupportedRankError(f"Rank must be an even integer >= 4, got {n}")
    reps = [coset_rep(n, subset) for subset in flip_sets(n)]
    logger.debug(f"Enumerated {len(reps)} coset representatives for D_{n}")
    return reps


def brute_force_group(n: int, max_rank: int = DEFAULT_ORACLE_MAX_RANK) -> set[SignedPerm]:
    """
    Closure of the simple reflections of D_n under composition.

    Args:
        n: Rank
        max_rank: Largest rank the oracle agrees to enumerate

    Returns:
        The full Weyl group, of order 2^{n-1} * n!

    Raises:
        OracleUnavailableError: If n exceeds max_rank
    """
    if n > max_rank:
        raise OracleUnavailableError(
            f"Brute-force Weyl group is limited to rank {max_rank}, got {n}"
        )
    generators = [reflection(root) for root in build(n).simple_roots]
    identity = SignedPerm.identity(n)
    group = {identity}
    frontier = deque([identity])

    while frontier:
        element = frontier.popleft()
        for generator in generators:
            product = generator.compose(element)
            if product not in group:
                group.add(product)
                frontier.append(product)

    logger.info(f"Brute-force W(D_{n}) closure has {len(group)} elements")
    return group


def orbit_quotient(group: set[SignedPerm], weight: Sequence[int]) -> set[tuple]:
    """
    Canonical classes of the orbit of a regular numeric weight.

    Each image is sorted into decreasing order, which is the M-dominant
    representative of its W(A_{n-1}) coset.
    """
    coords = tuple(weight)
    return {tuple(sorted(w.apply(coords), reverse=True)) for w in group}
