# app/services/golden_service.py
"""
Loader for the transcribed so*(12) signature table.

The table is kept in the shorthand it was published in and expanded here,
so a transcription slip shows up as a row-level diff rather than being
silently normalized away.
"""
import json
import logging
import re
from fractions import Fraction
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..exceptions import GoldenTableError
from ..models.linform import LinForm
from ..models.models import GoldenRow, Signature

# Configure module logger
logger = logging.getLogger(__name__)

# m_{i}, m_{ij} (range i..j), m_{i,k} and m_{ij,k} (range plus one extra index)
SHORTHAND_PATTERN = re.compile(r"^m_\{(\d)(\d)?(?:,(\d))?\}$")

GOLDEN_RANK = 6
C_FACTOR = Fraction(-1, 2)


def expand_shorthand(text: str, arity: int = GOLDEN_RANK) -> LinForm:
    """
    Expand a label such as 'm_{24,6}' into m2+m3+m4+m6.

    Raises:
        GoldenTableError: If the text does not follow the shorthand
    """
    match = SHORTHAND_PATTERN.match(text.strip())
    if not match:
        raise GoldenTableError(f"Unrecognized label shorthand: '{text}'")

    start = int(match.group(1))
    stop = int(match.group(2)) if match.group(2) else start
    indices = list(range(start, stop + 1))
    if match.group(3):
        indices.append(int(match.group(3)))
    if stop < start or any(not 1 <= i <= arity for i in indices):
        raise GoldenTableError(f"Label shorthand out of range: '{text}'")

    form = LinForm.zero(arity)
    for index in indices:
        form = form + LinForm.indeterminate(index, arity)
    return form


def conjugate(labels: Sequence[LinForm]) -> Tuple[LinForm, ...]:
    """(n_1, ..., n_k)* = (n_k, ..., n_1)."""
    return tuple(reversed(labels))


class GoldenTableService:
    """
    Service exposing the 32 hand-transcribed signatures.

    The JSON file holds the minus-side rows; plus-side rows are derived by
    conjugating the labels and negating c.
    """

    def __init__(self, table_path: str | Path):
        """
        Initialize the golden table service.

        Args:
            table_path: Path to the transcribed signature table

        Raises:
            GoldenTableError: If the file is missing or malformed
        """
        self.table_path = Path(table_path)
        self.rows = self.load_rows()

    def load_rows(self) -> List[GoldenRow]:
        """
        Read and expand the minus-side rows.

        Returns:
            Parsed rows in file order
        """
        try:
            with open(self.table_path, "r", encoding="utf-8") as f:
                payload = json.load(f)
        except FileNotFoundError:
            raise GoldenTableError(f"Golden table not found: {self.table_path}")
        except json.JSONDecodeError as e:
            raise GoldenTableError(f"Invalid JSON in golden table: {e}")

        if not isinstance(payload, dict) or not isinstance(payload.get("rows", []), list):
            raise GoldenTableError(f"Golden table must be an object with a list of rows: {self.table_path}")

        arity = payload.get("rank", GOLDEN_RANK)
        rows = []
        for entry in payload.get("rows", []):
            if not isinstance(entry, dict):
                raise GoldenTableError(f"Golden table row is not an object: {entry!r}")
            try:
                labels = tuple(expand_shorthand(text, arity) for text in entry["labels"])
                t = entry["c"]
                if len(t) != arity:
                    raise GoldenTableError(
                        f"Row '{entry['name']}' has {len(t)} c-coefficients, expected {arity}"
                    )
                c = LinForm(0, t) * C_FACTOR
            except KeyError as e:
                raise GoldenTableError(f"Golden table row is missing {e}")
            rows.append(GoldenRow(name=entry["name"], labels=labels, c=c))

        logger.debug(f"Loaded {len(rows)} golden rows from {self.table_path}")
        return rows

    def signatures(self) -> Dict[str, Tuple[Tuple[LinForm, ...], LinForm]]:
        """
        All 2 * len(rows) signatures keyed by side-tagged name.

        Returns:
            Mapping such as 'chi_a^-' -> (labels, c)
        """
        table = {}
        for row in self.rows:
            table[f"{row.name}^-"] = (row.labels, row.c)
            table[f"{row.name}^+"] = (conjugate(row.labels), -row.c)
        return table

    def evaluated(self, labels: Sequence[int]) -> Dict[str, Tuple[Tuple[Fraction, ...], Fraction]]:
        """Golden signatures substituted at numeric labels."""
        return {
            name: (tuple(x.eval_at(labels) for x in row_labels), c.eval_at(labels))
            for name, (row_labels, c) in self.signatures().items()
        }

    def name_for(self, signature: Signature) -> Optional[str]:
        """Side-tagged name of the row equal to the symbolic signature, if any."""
        key = signature.key()
        for name, row in self.signatures().items():
            if row == key:
                return name
        return None

    def diff(
        self, computed: Iterable[Tuple[Tuple[LinForm, ...], LinForm]]
    ) -> Tuple[int, List[str]]:
        """
        Compare computed symbolic signatures with the table.

        Args:
            computed: (labels, c) pairs of every vertex

        Returns:
            Number of golden rows matched and human-readable mismatch lines
        """
        remaining = list(computed)
        expected = self.signatures()
        matched = 0
        problems = []

        for name, row in expected.items():
            if row in remaining:
                remaining.remove(row)
                matched += 1
            else:
                labels, c = row
                problems.append(
                    f"missing {name}: ({', '.join(str(x) for x in labels)}; {c})"
                )

        for labels, c in remaining:
            problems.append(
                f"unexpected: ({', '.join(str(x) for x in labels)}; {c})"
            )

        logger.info(f"Golden diff: {matched}/{len(expected)} signatures match")
        return matched, problems
