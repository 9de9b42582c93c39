# app/services/export_service.py
"""
Serializers for a validated multiplet: JSON, DOT source and a text table.

Every emitter returns bytes and is deterministic for a given multiplet.
"""
import json
import logging
from collections import defaultdict
from typing import Any, Dict, List, Optional

from graphviz import Digraph
from texttable import Texttable

from ..exceptions import InvariantViolation
from ..models.linform import LinForm
from ..models.models import BGGEdge, EdgeSelection, Multiplet, OutputFormat

# Configure module logger
logger = logging.getLogger(__name__)

BULLET = "bullet"


def _require_validated(multiplet: Multiplet) -> None:
    if not multiplet.validated:
        raise InvariantViolation("Refusing to emit a multiplet that has not been validated")


def select_edges(multiplet: Multiplet, edges: EdgeSelection) -> List[BGGEdge]:
    chosen = multiplet.reduced_edges if edges is EdgeSelection.REDUCED else multiplet.edges
    return sorted(chosen, key=lambda e: e.key)


def form_to_json(form: Optional[LinForm]) -> Optional[Dict[str, Any]]:
    """A form is {coeffs: [rational strings, constant first], text: canonical string}."""
    if form is None:
        return None
    return {"coeffs": form.to_coeff_strings(), "text": str(form)}


def form_from_json(payload: Dict[str, Any]) -> LinForm:
    return LinForm.from_coeff_strings(payload["coeffs"])


def multiplet_to_dict(multiplet: Multiplet, edges: EdgeSelection = EdgeSelection.REDUCED) -> Dict[str, Any]:
    """Plain-dict view with the fixed key order of the JSON schema."""
    vertices = []
    for vertex in multiplet.vertices:
        sig = vertex.signature
        vertices.append(
            {
                "id": vertex.id,
                "name": vertex.name,
                "labels": [form_to_json(x) for x in sig.labels],
                "c": form_to_json(sig.c),
                "d": form_to_json(sig.d),
                "side": vertex.side.value,
                "flags": {
                    "has_finite_dim_subrep": vertex.flags.has_finite_dim_subrep,
                    "has_discrete_series_metadata": vertex.flags.has_discrete_series_metadata,
                },
            }
        )

    arrows = [
        {
            "from": edge.source,
            "to": edge.target,
            "root": {"kind": edge.root.kind.value, "i": edge.root.i, "j": edge.root.j},
            "m": form_to_json(edge.m),
            "reduced": edge.reduced,
            "label": edge.label,
        }
        for edge in select_edges(multiplet, edges)
    ]

    return {
        "algebra": multiplet.algebra_tag.value,
        "rank": multiplet.rank,
        "labels": "symbolic" if multiplet.symbolic else list(multiplet.labels),
        "vertices": vertices,
        "edges": arrows,
        "ks_pairs": [list(pair) for pair in multiplet.ks_pairs],
    }


def emit_json(multiplet: Multiplet, edges: EdgeSelection = EdgeSelection.REDUCED) -> bytes:
    """
    Serialize the multiplet as JSON.

    Raises:
        InvariantViolation: If the multiplet was not validated
    """
    _require_validated(multiplet)
    text = json.dumps(multiplet_to_dict(multiplet, edges), indent=2, ensure_ascii=False)
    return (text + "\n").encode("utf-8")


def _signature_text(multiplet: Multiplet, vertex_id: int) -> str:
    sig = multiplet.vertex(vertex_id).signature
    return "{" + ", ".join(str(x) for x in sig.labels) + "; " + str(sig.c) + "}"


def emit_dot(multiplet: Multiplet, edges: EdgeSelection = EdgeSelection.REDUCED) -> bytes:
    """
    Render the multiplet as DOT source.

    Vertices of equal length share a rank, so the minus side sits above the
    plus side; the invisible bullet node marks the centre of the KS symmetry.
    """
    _require_validated(multiplet)
    dot = Digraph(
        name="multiplet",
        comment=f"{multiplet.info.name} main multiplet",
        graph_attr={"rankdir": "TB"},
        node_attr={"shape": "box", "fontsize": "10"},
    )

    by_length = defaultdict(list)
    for vertex in multiplet.vertices:
        by_length[vertex.length].append(vertex)

    for length in sorted(by_length):
        with dot.subgraph(name=f"length_{length}") as layer:
            layer.attr(rank="same")
            for vertex in by_length[length]:
                layer.node(
                    f"v{vertex.id}",
                    label=f"{vertex.name}\\n{_signature_text(multiplet, vertex.id)}",
                )

    dot.node(BULLET, label="", shape="point", style="invis", comment="Knapp-Stein symmetry centre")

    for edge in select_edges(multiplet, edges):
        dot.edge(
            f"v{edge.source}",
            f"v{edge.target}",
            label=edge.label or str(edge.m),
            style="solid" if edge.reduced else "dotted",
        )

    for minus, plus in multiplet.ks_pairs:
        dot.edge(f"v{minus}", f"v{plus}", style="dashed", dir="none", constraint="false")

    logger.debug(f"DOT source has {len(multiplet.vertices)} nodes")
    return dot.source.encode("utf-8")


def emit_table(multiplet: Multiplet) -> bytes:
    """
    Aligned text table of name, side, length, labels, c and d.

    Numeric runs end with the dimension of the finite-dimensional subspace at χ0⁻.
    """
    _require_validated(multiplet)
    n = multiplet.rank
    header = ["name", "side", "length"] + [f"n{i}" for i in range(1, n)] + ["c", "d"]

    table = Texttable(max_width=0)
    table.set_deco(Texttable.HEADER)
    table.set_cols_dtype(["t"] * len(header))
    table.header(header)
    for vertex in sorted(multiplet.vertices, key=lambda v: (v.side.value, v.length, v.id)):
        sig = vertex.signature
        table.add_row(
            [vertex.name, vertex.side.value, str(vertex.length)]
            + [str(x) for x in sig.labels]
            + [str(sig.c), "" if sig.d is None else str(sig.d)]
        )
    text = table.draw() + "\n"
    if multiplet.finite_dim is not None:
        text += f"dim E = {multiplet.finite_dim}\n"
    return text.encode("utf-8")


def emit(multiplet: Multiplet, output_format: OutputFormat, edges: EdgeSelection) -> bytes:
    """Dispatch on the requested output format."""
    if output_format is OutputFormat.DOT:
        return emit_dot(multiplet, edges)
    if output_format is OutputFormat.TABLE:
        return emit_table(multiplet)
    return emit_json(multiplet, edges)
