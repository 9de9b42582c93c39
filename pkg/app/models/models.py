from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field, field_validator, model_validator

from .linform import LinForm, WeightVec


# ============== Enumerations ==============


class RootKind(str, Enum):
    """Compact roots are ε_i − ε_j, noncompact roots ε_i + ε_j."""

    ALPHA_DIFF = "alpha"
    BETA_SUM = "beta"


class AlgebraTag(str, Enum):
    SO_STAR = "so-star"
    SO_SPLIT = "so-split"


class Side(str, Enum):
    MINUS = "minus"
    PLUS = "plus"


class EdgeSelection(str, Enum):
    REDUCED = "reduced"
    ALL = "all"


class OutputFormat(str, Enum):
    JSON = "json"
    DOT = "dot"
    TABLE = "table"


# ============== Root Data Models ==============


class Root(BaseModel):
    """Positive root of D_n, stored by kind and 1-based indices i < j."""

    kind: RootKind
    i: int = Field(..., ge=1)
    j: int = Field(..., ge=2)
    rank: int = Field(..., ge=2)

    class Config:
        frozen = True

    @model_validator(mode="after")
    def _check_indices(self):
        if not self.i < self.j <= self.rank:
            raise ValueError(
                f"Root indices must satisfy 1 <= i < j <= rank, got ({self.i}, {self.j})"
            )
        return self

    @property
    def compact(self) -> bool:
        return self.kind is RootKind.ALPHA_DIFF

    @property
    def vector(self) -> Tuple[int, ...]:
        """ε-basis coordinates."""
        coords = [0] * self.rank
        coords[self.i - 1] = 1
        coords[self.j - 1] = -1 if self.compact else 1
        return tuple(coords)

    @property
    def name(self) -> str:
        return f"{'alpha' if self.compact else 'beta'}_{self.i}{self.j}"


class RootSystemD(BaseModel):
    """Positive roots, simple roots and ρ of D_n."""

    rank: int
    positive_roots: Tuple[Root, ...]
    simple_roots: Tuple[Root, ...]
    rho: WeightVec

    class Config:
        frozen = True
        arbitrary_types_allowed = True

    @property
    def compact_roots(self) -> Tuple[Root, ...]:
        return tuple(r for r in self.positive_roots if r.compact)

    @property
    def noncompact_roots(self) -> Tuple[Root, ...]:
        return tuple(r for r in self.positive_roots if not r.compact)


class ParabolicFactor(BaseModel):
    """One maximal parabolic M-factor and its nilradical dimension."""

    j: int
    m_factor: str
    nilradical_dim: int


class AlgebraInfo(BaseModel):
    """Documented constants of the real form being studied."""

    tag: AlgebraTag
    name: str
    rank: int
    real_dimension: int
    noncompact_dimension: int
    split_rank: int
    minimal_nilradical_dim: int
    m_factor: str
    has_highest_weight_reps: bool
    parabolics: Tuple[ParabolicFactor, ...] = ()
    notes: Tuple[str, ...] = ()


# ============== Weyl Group Types ==============


@dataclass(frozen=True)
class SignedPerm:
    """
    Element of W(D_n): w(ε_i) = signs[i] * ε_{perm[i]} (0-based).

    The product of the signs is +1.
    """

    perm: Tuple[int, ...]
    signs: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"Not a permutation: {self.perm}")
        if len(self.signs) != len(self.perm) or any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"Invalid sign pattern: {self.signs}")
        if self.signs.count(-1) % 2:
            raise ValueError(f"Odd number of sign changes: {self.signs}")

    @classmethod
    def identity(cls, n: int) -> "SignedPerm":
        return cls(tuple(range(n)), (1,) * n)

    @property
    def rank(self) -> int:
        return len(self.perm)

    def compose(self, other: "SignedPerm") -> "SignedPerm":
        """Return self ∘ other (apply other first)."""
        return SignedPerm(
            tuple(self.perm[p] for p in other.perm),
            tuple(s * self.signs[p] for s, p in zip(other.signs, other.perm)),
        )

    def inverse(self) -> "SignedPerm":
        perm = [0] * self.rank
        signs = [1] * self.rank
        for i, (p, s) in enumerate(zip(self.perm, self.signs)):
            perm[p] = i
            signs[p] = s
        return SignedPerm(tuple(perm), tuple(signs))

    def apply(self, coords: tuple) -> tuple:
        """Act on a coordinate tuple of numbers or linear forms."""
        image = [None] * self.rank
        for i, (p, s) in enumerate(zip(self.perm, self.signs)):
            image[p] = coords[i] if s == 1 else -coords[i]
        return tuple(image)


@dataclass(frozen=True)
class CosetRep:
    """Coset of W(A_{n-1}) in W(D_n), indexed by its even flip set."""

    element: SignedPerm
    flip_set: Tuple[int, ...]

    @property
    def tag(self) -> str:
        return "F{" + ",".join(str(i) for i in self.flip_set) + "}"


# ============== Multiplet Models ==============


class Signature(BaseModel):
    """ER signature {n_1, ..., n_{n-1}; c} with optional conformal weight d."""

    labels: Tuple[LinForm, ...]
    c: LinForm
    d: Optional[LinForm] = None
    name: str = ""

    class Config:
        frozen = True
        arbitrary_types_allowed = True

    def key(self) -> Tuple[Tuple[LinForm, ...], LinForm]:
        return self.labels, self.c


class VertexFlags(BaseModel):
    has_finite_dim_subrep: bool = False
    has_discrete_series_metadata: bool = False

    class Config:
        frozen = True


class ERVertex(BaseModel):
    """One elementary representation of the multiplet."""

    id: int
    name: str
    signature: Signature
    weight: WeightVec
    coset: CosetRep
    side: Side
    length: int
    flags: VertexFlags = VertexFlags()

    class Config:
        frozen = True
        arbitrary_types_allowed = True


class BGGEdge(BaseModel):
    """Arrow χ(Λ) → χ(Λ − mβ) for a noncompact root β."""

    source: int
    target: int
    root: Root
    m: LinForm
    reduced: bool = False
    label: Optional[str] = None

    class Config:
        frozen = True
        arbitrary_types_allowed = True

    @property
    def key(self) -> Tuple[int, int]:
        return self.source, self.target


class Multiplet(BaseModel):
    """Vertices, BGG arrows and Knapp–Stein pairs of a main multiplet."""

    algebra_tag: AlgebraTag
    rank: int
    labels: Optional[Tuple[int, ...]] = None
    vertices: Tuple[ERVertex, ...]
    edges: Tuple[BGGEdge, ...] = ()
    ks_pairs: Tuple[Tuple[int, int], ...] = ()
    finite_dim: Optional[int] = None
    info: AlgebraInfo
    validated: bool = False

    class Config:
        frozen = True
        arbitrary_types_allowed = True

    @property
    def symbolic(self) -> bool:
        return self.labels is None

    @property
    def reduced_edges(self) -> Tuple[BGGEdge, ...]:
        return tuple(e for e in self.edges if e.reduced)

    def vertex(self, vertex_id: int) -> ERVertex:
        return self.vertices[vertex_id]

    def vertex_by_name(self, name: str) -> ERVertex:
        for vertex in self.vertices:
            if vertex.name == name:
                return vertex
        raise KeyError(f"No vertex named '{name}'")

    def partner(self, vertex_id: int) -> int:
        for a, b in self.ks_pairs:
            if a == vertex_id:
                return b
            if b == vertex_id:
                return a
        raise KeyError(f"Vertex {vertex_id} has no Knapp-Stein partner")


class GoldenRow(BaseModel):
    """Minus-side row of the transcribed signature table."""

    name: str
    labels: Tuple[LinForm, ...]
    c: LinForm

    class Config:
        frozen = True
        arbitrary_types_allowed = True


# ============== Run Models ==============


class RunConfig(BaseModel):
    """Validated description of one CLI run."""

    algebra: AlgebraTag = AlgebraTag.SO_STAR
    rank: int = 6
    labels: Optional[Tuple[int, ...]] = None
    edges: EdgeSelection = EdgeSelection.REDUCED
    output_format: OutputFormat = OutputFormat.JSON
    verify: bool = False
    output: Optional[Path] = None
    allow_split_any_rank: bool = False

    @field_validator("labels", mode="before")
    @classmethod
    def _parse_labels(cls, value):
        if value is None:
            return None
        if isinstance(value, str):
            text = value.strip()
            if text.lower() == "symbolic":
                return None
            try:
                return tuple(int(part) for part in text.split(","))
            except ValueError:
                raise ValueError(
                    f"Labels must be 'symbolic' or comma-separated integers, got '{value}'"
                )
        return value

    @field_validator("rank")
    @classmethod
    def _check_rank(cls, value: int) -> int:
        if value < 4 or value % 2:
            raise ValueError(f"Rank must be an even integer >= 4, got {value}")
        return value

    @model_validator(mode="after")
    def _check_consistency(self):
        if self.labels is not None:
            if len(self.labels) != self.rank:
                raise ValueError(
                    f"Expected {self.rank} labels for rank {self.rank}, got {len(self.labels)}"
                )
            if any(label < 1 for label in self.labels):
                raise ValueError(
                    f"Labels must be positive (degenerate multiplets are not supported): {self.labels}"
                )
        if (
            self.algebra is AlgebraTag.SO_SPLIT
            and self.rank != 6
            and not self.allow_split_any_rank
        ):
            raise ValueError(
                "so-split is only related to so*(12) at rank 6; pass the override flag for other ranks"
            )
        return self

    @property
    def symbolic(self) -> bool:
        return self.labels is None


class CheckResult(BaseModel):
    """Outcome of one verification check."""

    name: str
    passed: bool
    skipped: bool = False
    details: List[str] = []

    @property
    def status(self) -> str:
        if self.skipped:
            return "SKIP"
        return "PASS" if self.passed else "FAIL"


class VerifyReport(BaseModel):
    """All verification checks for one configuration."""

    rank: int
    algebra: AlgebraTag
    checks: List[CheckResult] = []

    @property
    def passed(self) -> bool:
        """A skipped check never counts as a pass."""
        return all(check.passed and not check.skipped for check in self.checks)

    def render(self) -> str:
        lines = [f"Verification for {self.algebra.value}, rank {self.rank}"]
        for check in self.checks:
            lines.append(f"[{check.status}] {check.name}")
            lines.extend(f"    {detail}" for detail in check.details)
        if self.passed:
            lines.append("ALL CHECKS PASSED")
        elif all(check.passed or check.skipped for check in self.checks):
            lines.append("VERIFICATION INCOMPLETE")
        else:
            lines.append("VERIFICATION FAILED")
        return "\n".join(lines) + "\n"
