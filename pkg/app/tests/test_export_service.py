# app/tests/test_export_service.py
"""
Unit tests for the JSON, DOT and table emitters.
"""
import json
import random

import pytest

from app.exceptions import InvariantViolation
from app.models.models import EdgeSelection
from app.services.export_service import emit_dot, emit_json, emit_table, form_from_json


class TestEmitJson:
    """Tests for emit_json()."""

    def test_top_level_key_order(self, symbolic_six):
        """Keys appear in the documented order."""
        payload = json.loads(emit_json(symbolic_six))
        assert list(payload) == ["algebra", "rank", "labels", "vertices", "edges", "ks_pairs"]
        assert list(payload["vertices"][0]) == ["id", "name", "labels", "c", "d", "side", "flags"]
        assert list(payload["edges"][0]) == ["from", "to", "root", "m", "reduced", "label"]

    def test_symbolic_content(self, symbolic_six):
        """Reduced arrows by default, chi_0^- first."""
        payload = json.loads(emit_json(symbolic_six))
        assert payload["labels"] == "symbolic"
        assert len(payload["vertices"]) == 32
        assert len(payload["edges"]) == 48
        assert len(payload["ks_pairs"]) == 16
        chi0 = payload["vertices"][0]
        assert chi0["name"] == "chi_0^-"
        assert chi0["side"] == "minus"
        assert chi0["c"]["text"] == "-1/2*(m1+2*m2+3*m3+4*m4+2*m5+3*m6)"
        assert chi0["c"]["coeffs"] == ["0", "-1/2", "-1", "-3/2", "-2", "-1", "-3/2"]

    def test_chi_zero_to_chi_a_label(self, symbolic_six):
        """The chi_0^- -> chi_a^- arrow is labelled 6_{56}."""
        payload = json.loads(emit_json(symbolic_six))
        names = {v["id"]: v["name"] for v in payload["vertices"]}
        edge = next(
            e for e in payload["edges"]
            if names[e["from"]] == "chi_0^-" and names[e["to"]] == "chi_a^-"
        )
        assert edge["label"] == "6_{56}"
        assert edge["root"] == {"kind": "beta", "i": 5, "j": 6}

    def test_numeric_unit_labels(self, numeric_unit):
        """chi_0^- has d = 0 at unit labels."""
        payload = json.loads(emit_json(numeric_unit))
        assert payload["labels"] == [1, 1, 1, 1, 1, 1]
        assert payload["vertices"][0]["d"]["text"] == "0"

    def test_all_edges(self, symbolic_six):
        """--edges all emits all 240 arrows."""
        payload = json.loads(emit_json(symbolic_six, EdgeSelection.ALL))
        assert len(payload["edges"]) == 240

    def test_byte_stable(self, symbolic_six, service_six):
        """Two builds serialize to identical bytes."""
        assert emit_json(symbolic_six) == emit_json(service_six.build_multiplet())

    def test_forms_read_back(self, symbolic_six):
        """Parsed forms evaluate like the originals."""
        payload = json.loads(emit_json(symbolic_six))
        rng = random.Random(8)
        for vertex, data in zip(symbolic_six.vertices, payload["vertices"]):
            labels = [rng.randint(1, 9) for _ in range(6)]
            assert form_from_json(data["c"]).eval_at(labels) == vertex.signature.c.eval_at(labels)

    def test_refuses_unvalidated(self, symbolic_six):
        """Emitters only accept validated multiplets."""
        raw = symbolic_six.model_copy(update={"validated": False})
        with pytest.raises(InvariantViolation):
            emit_json(raw)
        with pytest.raises(InvariantViolation):
            emit_dot(raw)


class TestEmitDot:
    """Tests for emit_dot()."""

    def test_nodes_and_bullet(self, symbolic_six):
        """32 vertex nodes plus the invisible bullet."""
        source = emit_dot(symbolic_six).decode("utf-8")
        assert source.startswith("// so*(12) main multiplet")
        for vertex in symbolic_six.vertices:
            assert f"v{vertex.id} [label=" in source
        assert "bullet [" in source and "style=invis" in source
        assert source.count("rank=same") == 16

    def test_edge_sets(self, symbolic_six):
        """All arrows are a strict superset of the reduced ones."""
        reduced = emit_dot(symbolic_six).decode("utf-8")
        full = emit_dot(symbolic_six, EdgeSelection.ALL).decode("utf-8")
        arrows = lambda text: {line.split("[")[0].strip() for line in text.splitlines() if "->" in line and "dir=none" not in line}
        assert arrows(reduced) < arrows(full)
        assert len(arrows(reduced)) == 48
        assert reduced.count("dir=none") == 16

    def test_deterministic(self, symbolic_six):
        """DOT output is byte-identical across calls."""
        assert emit_dot(symbolic_six) == emit_dot(symbolic_six)


class TestEmitTable:
    """Tests for emit_table()."""

    def test_names_on_both_sides(self, symbolic_six):
        """Each of the sixteen names appears with both signs."""
        text = emit_table(symbolic_six).decode("utf-8")
        for vertex in symbolic_six.vertices:
            assert vertex.name in text
        assert len(text.strip().splitlines()) == 32 + 2

    def test_symbolic_c_column(self, symbolic_six):
        """c is printed in canonical text."""
        text = emit_table(symbolic_six).decode("utf-8")
        assert "-1/2*(m1+2*m2+3*m3+4*m4+2*m5+3*m6)" in text

    def test_numeric_dim_footer(self, numeric_unit, symbolic_six):
        """Numeric tables end with dim E; symbolic ones do not."""
        text = emit_table(numeric_unit).decode("utf-8")
        assert text.endswith("dim E = 1\n")
        assert "dim E" not in emit_table(symbolic_six).decode("utf-8")
