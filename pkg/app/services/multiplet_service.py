# app/services/multiplet_service.py
"""
Main multiplet assembly: ER signatures per coset, BGG arrows through
noncompact roots, their transitive reduction and the Knapp-Stein pairing.
"""
import logging
from fractions import Fraction
from functools import cmp_to_key
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from ..exceptions import InvariantViolation, NonDominantError, UnsupportedRankError
from ..models.linform import LinForm, Ordering, WeightVec
from ..models.models import (
    AlgebraTag,
    BGGEdge,
    CosetRep,
    ERVertex,
    Multiplet,
    Root,
    RootKind,
    Side,
    Signature,
    VertexFlags,
)
from .golden_service import GOLDEN_RANK, GoldenTableService
from .root_system_service import (
    algebra_info,
    build,
    c_form,
    inner,
    lambda_plus_rho,
    reflect,
)
from .weyl_service import act, coset_reps

# Configure module logger
logger = logging.getLogger(__name__)

CONFORMAL_RANK = 6
CONFORMAL_SHIFT = Fraction(15, 2)


def _descending(a: LinForm, b: LinForm) -> int:
    order = b.cmp_generic(a)
    if order is Ordering.INCOMPARABLE:
        raise InvariantViolation(f"Cannot order {a} and {b} for all positive labels")
    return {Ordering.LESS: -1, Ordering.EQUAL: 0, Ordering.GREATER: 1}[order]


def canonicalize(x: WeightVec) -> WeightVec:
    """
    Sort coordinates into generic descending order (the M-dominant form).

    Raises:
        InvariantViolation: If two coordinates are not generically comparable
    """
    return WeightVec(sorted(x.coords, key=cmp_to_key(_descending)))


def conformal_weight_d(signature: Signature) -> LinForm:
    """
    d = c + 15/2, defined for so*(12) only.

    Raises:
        UnsupportedRankError: At any rank other than 6
    """
    rank = len(signature.labels) + 1
    if rank != CONFORMAL_RANK:
        raise UnsupportedRankError(f"Conformal weight is only defined at rank 6, got {rank}")
    return signature.c + LinForm.constant_form(CONFORMAL_SHIFT, signature.c.arity)


def signature_of(y: WeightVec) -> Signature:
    """
    Read {n_1..n_{n-1}; c} off an M-dominant weight.

    Raises:
        NonDominantError: If some y_i - y_{i+1} is not generically positive
    """
    labels = tuple(y[i] - y[i + 1] for i in range(y.rank - 1))
    for position, label in enumerate(labels, start=1):
        if not label.is_generically_positive():
            raise NonDominantError(f"Label n_{position} = {label} is not generically positive")

    signature = Signature(labels=labels, c=c_form(y))
    if y.rank == CONFORMAL_RANK:
        signature = signature.model_copy(update={"d": conformal_weight_d(signature)})
    return signature


def weyl_dim(labels: Sequence[int]) -> int:
    """
    Dimension of the finite-dimensional module with Λ+ρ given by the labels.

    Product over every positive root of (Λ+ρ, α)/(ρ, α).

    Raises:
        InvariantViolation: If the product is not a positive integer
    """
    n = len(labels)
    system = build(n)
    x = lambda_plus_rho(n, labels)

    dim = Fraction(1)
    for root in system.positive_roots:
        dim *= inner(x, root).constant / inner(system.rho, root).constant

    if dim.denominator != 1 or dim < 1:
        raise InvariantViolation(f"Weyl dimension {dim} is not a positive integer")
    return int(dim)


def weyl_dim_epsilon(labels: Sequence[int]) -> int:
    """
    Weyl dimension as ∏_{i<j} (x_i² − x_j²)/(ρ_i² − ρ_j²), built straight from the labels.

    Raises:
        InvariantViolation: If the product is not a positive integer
    """
    n = len(labels)
    m = [Fraction(label) for label in labels]
    x = [Fraction(0)] * n
    x[n - 1] = (m[n - 1] - m[n - 2]) / 2
    x[n - 2] = (m[n - 2] + m[n - 1]) / 2
    for i in range(n - 3, -1, -1):
        x[i] = m[i] + x[i + 1]
    rho = [Fraction(n - 1 - i) for i in range(n)]

    dim = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            dim *= (x[i] ** 2 - x[j] ** 2) / (rho[i] ** 2 - rho[j] ** 2)

    if dim.denominator != 1 or dim < 1:
        raise InvariantViolation(f"Weyl dimension {dim} is not a positive integer")
    return int(dim)


def length_of(y: WeightVec) -> int:
    """Number of noncompact positive roots pairing generically negatively with y."""
    return sum(
        1
        for i in range(y.rank)
        for j in range(i + 1, y.rank)
        if (y[i] + y[j]).is_generically_negative()
    )


def edge_label(m: LinForm, root: Root) -> Optional[str]:
    """'i_{jk}' when m is exactly m_i, where j, k are the positions of β."""
    index = m.single_indeterminate()
    if index is None:
        return None
    return f"{index}_{{{root.i}{root.j}}}"


class MultipletService:
    """
    Service assembling the main multiplet of so*(2n) or so(n,n).

    All vertices are computed symbolically; numeric runs substitute the
    labels into the same construction so that names and sides agree.
    """

    def __init__(
        self,
        rank: int = CONFORMAL_RANK,
        algebra: AlgebraTag = AlgebraTag.SO_STAR,
        golden: Optional[GoldenTableService] = None,
    ):
        """
        Initialize the MultipletService.

        Args:
            rank: Even rank n >= 4
            algebra: Real form being studied
            golden: Table used to name the rank-6 vertices
        """
        self.system = build(rank)
        self.rank = rank
        self.algebra = algebra
        self.golden = golden

    # ============== Vertices ==============

    def _check_dominant(self, x: WeightVec) -> None:
        for root in self.system.positive_roots:
            if not inner(x, root).is_generically_positive():
                raise NonDominantError(f"Λ+ρ is not regular dominant on {root.name}")

    def _name(self, coset: CosetRep, signature: Signature) -> str:
        if self.golden is not None and self.rank == GOLDEN_RANK:
            name = self.golden.name_for(signature)
            if name is not None:
                return name
            logger.warning(f"No golden row matches coset {coset.tag}")
        return coset.tag

    def build_vertices(self, labels: Optional[Sequence[int]] = None) -> List[ERVertex]:
        """
        One ER per coset representative.

        Args:
            labels: Positive integer labels, or None for symbolic labels

        Returns:
            Vertices ordered by flip set size, then lexicographically
        """
        n = self.rank
        symbolic_seed = lambda_plus_rho(n)
        self._check_dominant(symbolic_seed)
        seed = symbolic_seed if labels is None else lambda_plus_rho(n, labels)

        reps = coset_reps(n)
        symbolic = {}
        for rep in reps:
            y_sym = canonicalize(act(rep.element, symbolic_seed))
            symbolic[rep.flip_set] = (y_sym, signature_of(y_sym), length_of(y_sym))

        full = tuple(range(1, n + 1))
        vertices = []
        for vertex_id, rep in enumerate(reps):
            y_sym, sig_sym, length = symbolic[rep.flip_set]
            partner_set = tuple(j for j in full if j not in rep.flip_set)
            partner_length = symbolic[partner_set][2]
            if length != partner_length:
                side = Side.MINUS if length < partner_length else Side.PLUS
            else:
                side = Side.MINUS if rep.flip_set < partner_set else Side.PLUS

            y = y_sym if labels is None else canonicalize(act(rep.element, seed))
            signature = signature_of(y)
            name = self._name(rep, sig_sym)

            flags = VertexFlags(
                has_finite_dim_subrep=not rep.flip_set,
                has_discrete_series_metadata=(
                    rep.flip_set == full and self.algebra is AlgebraTag.SO_STAR
                ),
            )
            vertices.append(
                ERVertex(
                    id=vertex_id,
                    name=name,
                    signature=signature.model_copy(update={"name": name}),
                    weight=y,
                    coset=rep,
                    side=side,
                    length=length,
                    flags=flags,
                )
            )

        logger.info(f"Built {len(vertices)} ER vertices at rank {n}")
        return vertices

    # ============== Arrows ==============

    def bgg_edges(self, vertices: Sequence[ERVertex]) -> List[BGGEdge]:
        """
        Arrows χ(Λ) → χ(Λ − mβ) for every noncompact β with m in {1, 2, ...}.

        Labels come from the symbolic weight of the source, so numeric arrows
        keep the i_{jk} label of the arrow they specialize.

        Raises:
            InvariantViolation: If a reflected weight matches no vertex
        """
        owner: Dict[WeightVec, int] = {v.weight: v.id for v in vertices}
        edges: Dict[Tuple[int, int], BGGEdge] = {}
        symbolic_seed = lambda_plus_rho(self.rank)

        for vertex in vertices:
            y_sym = canonicalize(act(vertex.coset.element, symbolic_seed))
            for root in self.system.noncompact_roots:
                m = inner(vertex.weight, root)
                if not m.is_positive_integer_valued():
                    continue
                target = owner.get(canonicalize(reflect(vertex.weight, root)))
                if target is None:
                    raise InvariantViolation(
                        f"Reflection of {vertex.name} by {root.name} leaves the multiplet"
                    )
                edge = BGGEdge(
                    source=vertex.id,
                    target=target,
                    root=root,
                    m=m,
                    label=edge_label(inner(y_sym, root), root),
                )
                edges.setdefault(edge.key, edge)

        logger.info(f"Found {len(edges)} BGG arrows")
        return list(edges.values())

    def transitive_reduction(self, edges: Sequence[BGGEdge]) -> List[BGGEdge]:
        """
        Flag the arrows not implied by a composite path.

        Raises:
            InvariantViolation: If the arrows contain a cycle
        """
        graph = nx.DiGraph()
        graph.add_edges_from(edge.key for edge in edges)
        if not nx.is_directed_acyclic_graph(graph):
            raise InvariantViolation("BGG arrows contain a cycle")

        reduced = nx.transitive_reduction(graph)
        result = [
            edge.model_copy(update={"reduced": reduced.has_edge(*edge.key)}) for edge in edges
        ]
        logger.debug(f"{reduced.number_of_edges()} of {len(edges)} arrows are non-composite")
        return result

    def ks_pairing(self, vertices: Sequence[ERVertex]) -> List[Tuple[int, int]]:
        """
        Pair each ER with the one carrying reversed labels and opposite c.

        Returns:
            Pairs (minus id, plus id) ordered by the minus id

        Raises:
            InvariantViolation: If a vertex has no partner or pairs with itself
        """
        by_key = {v.signature.key(): v for v in vertices}
        pairs = set()
        for vertex in vertices:
            labels, c = vertex.signature.key()
            partner = by_key.get((tuple(reversed(labels)), -c))
            if partner is None or partner.id == vertex.id:
                raise InvariantViolation(f"{vertex.name} has no Knapp-Stein partner")
            if {vertex.side, partner.side} != {Side.MINUS, Side.PLUS}:
                raise InvariantViolation(
                    f"{vertex.name} and {partner.name} lie on the same side"
                )
            minus, plus = (vertex, partner) if vertex.side is Side.MINUS else (partner, vertex)
            pairs.add((minus.id, plus.id))
        return sorted(pairs)

    # ============== Assembly ==============

    def build_multiplet(self, labels: Optional[Sequence[int]] = None) -> Multiplet:
        """
        Assemble and validate the main multiplet.

        Args:
            labels: Positive integer labels, or None for symbolic labels

        Returns:
            A validated Multiplet
        """
        if labels is not None:
            labels = tuple(labels)
            if any(label < 1 for label in labels):
                raise ValueError(f"Labels must be positive integers: {labels}")

        vertices = self.build_vertices(labels)
        edges = self.transitive_reduction(self.bgg_edges(vertices))
        multiplet = Multiplet(
            algebra_tag=self.algebra,
            rank=self.rank,
            labels=labels,
            vertices=tuple(vertices),
            edges=tuple(edges),
            ks_pairs=tuple(self.ks_pairing(vertices)),
            finite_dim=None if labels is None else weyl_dim(labels),
            info=algebra_info(self.rank, self.algebra),
        )
        return self._validate(multiplet)

    def _validate(self, multiplet: Multiplet) -> Multiplet:
        n = self.rank
        if len(multiplet.vertices) != 2 ** (n - 1):
            raise InvariantViolation(
                f"Expected {2 ** (n - 1)} vertices, got {len(multiplet.vertices)}"
            )

        for edge in multiplet.edges:
            if edge.root.kind is not RootKind.BETA_SUM:
                raise InvariantViolation(f"Arrow {edge.key} uses a compact root")
            if edge.reduced and multiplet.symbolic and edge.m.single_indeterminate() is None:
                raise InvariantViolation(f"Non-composite arrow {edge.key} has m = {edge.m}")

        partners = {}
        for a, b in multiplet.ks_pairs:
            partners[a] = b
            partners[b] = a
        if len(partners) != len(multiplet.vertices):
            raise InvariantViolation("Knapp-Stein pairing does not cover every vertex")

        graph = nx.DiGraph()
        graph.add_nodes_from(v.id for v in multiplet.vertices)
        graph.add_edges_from(e.key for e in multiplet.reduced_edges)
        sources = [v for v in graph.nodes if graph.in_degree(v) == 0]
        sinks = [v for v in graph.nodes if graph.out_degree(v) == 0]
        bottom = multiplet.vertices[0]
        top = multiplet.vertices[-1]
        if sources != [bottom.id] or sinks != [top.id]:
            raise InvariantViolation(f"Reduced arrows have sources {sources} and sinks {sinks}")
        if not nx.is_weakly_connected(graph):
            raise InvariantViolation("Reduced arrows do not connect the multiplet")

        logger.info(
            f"Validated multiplet: {len(multiplet.vertices)} vertices, "
            f"{len(multiplet.edges)} arrows, {len(multiplet.reduced_edges)} non-composite"
        )
        return multiplet.model_copy(update={"validated": True})
