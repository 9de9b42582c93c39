# app/models/linform.py
"""
Exact linear forms c0 + c1*m1 + ... + ck*mk over the rationals.

The indeterminates m1..mk stand for positive Dynkin labels, so every
comparison made here is "generic": it must hold for all labels >= 1.
"""
from __future__ import annotations

from enum import Enum
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Iterator, Sequence, Union

from ..exceptions import ArityMismatchError

Scalar = Union[int, Fraction]


class Ordering(str, Enum):
    """Outcome of a generic comparison between two linear forms."""

    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


class LinForm:
    """
    Immutable exact linear form in the Dynkin-label indeterminates.

    Entries are stored constant first, then the coefficient of m1..mk.
    """

    __slots__ = ("_entries",)

    def __init__(self, constant: Scalar = 0, coeffs: Iterable[Scalar] = ()):
        self._entries: tuple[Fraction, ...] = (
            Fraction(constant),
            *(Fraction(c) for c in coeffs),
        )

    # ============== Constructors ==============

    @classmethod
    def zero(cls, arity: int) -> LinForm:
        return cls(0, [0] * arity)

    @classmethod
    def constant_form(cls, value: Scalar, arity: int) -> LinForm:
        """Form with no indeterminate part."""
        return cls(value, [0] * arity)

    @classmethod
    def indeterminate(cls, index: int, arity: int) -> LinForm:
        """
        The form m_index (1-based).

        Raises:
            ValueError: If index is outside 1..arity
        """
        if not 1 <= index <= arity:
            raise ValueError(f"Indeterminate m{index} outside arity {arity}")
        coeffs = [0] * arity
        coeffs[index - 1] = 1
        return cls(0, coeffs)

    @classmethod
    def from_coeff_strings(cls, entries: Sequence[str]) -> LinForm:
        """Rebuild a form from its serialized entries (constant first)."""
        if not entries:
            raise ValueError("A linear form needs at least its constant entry")
        return cls(Fraction(entries[0]), [Fraction(e) for e in entries[1:]])

    # ============== Accessors ==============

    @property
    def arity(self) -> int:
        return len(self._entries) - 1

    @property
    def constant(self) -> Fraction:
        return self._entries[0]

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._entries[1:]

    @property
    def entries(self) -> tuple[Fraction, ...]:
        return self._entries

    def single_indeterminate(self) -> int | None:
        """Return i when the form is exactly m_i, otherwise None."""
        if self.constant != 0:
            return None
        nonzero = [(i, c) for i, c in enumerate(self.coeffs, start=1) if c != 0]
        if len(nonzero) == 1 and nonzero[0][1] == 1:
            return nonzero[0][0]
        return None

    def to_coeff_strings(self) -> list[str]:
        """Serialize entries as rational strings, constant first."""
        return [str(e) for e in self._entries]

    # ============== Arithmetic ==============

    def _same_arity(self, other: LinForm) -> None:
        if self.arity != other.arity:
            raise ArityMismatchError(
                f"Cannot combine forms of arity {self.arity} and {other.arity}"
            )

    def __add__(self, other: LinForm) -> LinForm:
        if not isinstance(other, LinForm):
            return NotImplemented
        self._same_arity(other)
        return LinForm._from_entries(a + b for a, b in zip(self._entries, other._entries))

    def __sub__(self, other: LinForm) -> LinForm:
        if not isinstance(other, LinForm):
            return NotImplemented
        self._same_arity(other)
        return LinForm._from_entries(a - b for a, b in zip(self._entries, other._entries))

    def __neg__(self) -> LinForm:
        return LinForm._from_entries(-a for a in self._entries)

    def __mul__(self, scalar: Scalar) -> LinForm:
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        factor = Fraction(scalar)
        return LinForm._from_entries(a * factor for a in self._entries)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> LinForm:
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return self * (1 / Fraction(scalar))

    def scale(self, factor: Scalar) -> LinForm:
        return self * factor

    @classmethod
    def _from_entries(cls, entries: Iterable[Fraction]) -> LinForm:
        form = cls.__new__(cls)
        form._entries = tuple(entries)
        return form

    # ============== Evaluation and comparison ==============

    def eval_at(self, labels: Sequence[int]) -> Fraction:
        """
        Substitute positive integer labels for m1..mk.

        Raises:
            ArityMismatchError: If the label count differs from the arity
            ValueError: If a label is below 1
        """
        if len(labels) != self.arity:
            raise ArityMismatchError(
                f"Expected {self.arity} labels, got {len(labels)}"
            )
        if any(label < 1 for label in labels):
            raise ValueError(f"Labels must be positive integers: {tuple(labels)}")
        return self.constant + sum(
            (c * label for c, label in zip(self.coeffs, labels)), Fraction(0)
        )

    def cmp_generic(self, other: LinForm) -> Ordering:
        """
        Compare two forms for every admissible label assignment.

        GREATER when every entry of (self - other) is >= 0 and one is > 0.
        The rule is sound but incomplete: INCOMPARABLE means undecided.
        """
        self._same_arity(other)
        diff = [a - b for a, b in zip(self._entries, other._entries)]
        if not any(diff):
            return Ordering.EQUAL
        if all(d >= 0 for d in diff):
            return Ordering.GREATER
        if all(d <= 0 for d in diff):
            return Ordering.LESS
        return Ordering.INCOMPARABLE

    def is_generically_positive(self) -> bool:
        return self.cmp_generic(LinForm.zero(self.arity)) is Ordering.GREATER

    def is_generically_negative(self) -> bool:
        return self.cmp_generic(LinForm.zero(self.arity)) is Ordering.LESS

    def is_positive_integer_valued(self) -> bool:
        """
        True when the form lands in {1, 2, ...} for all labels >= 1.

        Integer entries, none negative, and a positive m-coefficient (or, for
        a constant form, a positive constant).
        """
        if any(e.denominator != 1 or e < 0 for e in self._entries):
            return False
        if any(self.coeffs):
            return True
        return self.constant > 0

    # ============== Protocols ==============

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinForm):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(self._entries)

    def __repr__(self) -> str:
        return f"LinForm({self})"

    def __str__(self) -> str:
        terms = [(c, f"m{i}") for i, c in enumerate(self.coeffs, start=1) if c != 0]
        if self.constant != 0:
            terms.append((self.constant, None))
        if not terms:
            return "0"
        if len(terms) == 1:
            return _render_terms(terms)

        content = Fraction(
            gcd(*(c.numerator for c, _ in terms)),
            lcm(*(c.denominator for c, _ in terms)),
        )
        if terms[0][0] < 0:
            content = -content
        inner = _render_terms([(c / content, symbol) for c, symbol in terms])
        if content == 1:
            return inner
        if content == -1:
            return f"-({inner})"
        return f"{content}*({inner})"


def _render_terms(terms: list[tuple[Fraction, str | None]]) -> str:
    """Join (coefficient, symbol) pairs as 'm1+2*m2-1/2*m3+5'."""
    parts = []
    for position, (coeff, symbol) in enumerate(terms):
        sign = "-" if coeff < 0 else ("+" if position else "")
        magnitude = abs(coeff)
        if symbol is None:
            body = str(magnitude)
        elif magnitude == 1:
            body = symbol
        else:
            body = f"{magnitude}*{symbol}"
        parts.append(f"{sign}{body}")
    return "".join(parts)


class WeightVec:
    """ε-basis coordinates of a weight, each an exact linear form."""

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable[LinForm]):
        coords = tuple(coords)
        if not coords:
            raise ValueError("A weight needs at least one coordinate")
        arity = coords[0].arity
        if any(x.arity != arity for x in coords):
            raise ArityMismatchError("Weight coordinates must share one arity")
        self.coords: tuple[LinForm, ...] = coords

    @classmethod
    def from_values(cls, values: Iterable[Scalar], arity: int) -> WeightVec:
        return cls(LinForm.constant_form(v, arity) for v in values)

    @property
    def rank(self) -> int:
        return len(self.coords)

    @property
    def arity(self) -> int:
        return self.coords[0].arity

    def total(self) -> LinForm:
        result = LinForm.zero(self.arity)
        for x in self.coords:
            result = result + x
        return result

    def eval_at(self, labels: Sequence[int]) -> tuple[Fraction, ...]:
        return tuple(x.eval_at(labels) for x in self.coords)

    def _same_rank(self, other: WeightVec) -> None:
        if self.rank != other.rank:
            raise ArityMismatchError(
                f"Cannot combine weights of rank {self.rank} and {other.rank}"
            )

    def __add__(self, other: WeightVec) -> WeightVec:
        self._same_rank(other)
        return WeightVec(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: WeightVec) -> WeightVec:
        self._same_rank(other)
        return WeightVec(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> WeightVec:
        return WeightVec(-x for x in self.coords)

    def __iter__(self) -> Iterator[LinForm]:
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, index: int) -> LinForm:
        return self.coords[index]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightVec):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        return f"WeightVec({', '.join(str(x) for x in self.coords)})"
