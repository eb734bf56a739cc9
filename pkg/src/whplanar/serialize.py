"""JSON forms of specs, graphs, matches and reports."""

from __future__ import annotations

from typing import Any

from .circulant import CircPlanarVerdict, CirculantSpec, canonicalize_circ
from .gamma import ConditionReport, GammaDecomposition, GammaSpec, canonicalize_gamma, canonicalize_gamma_loose
from .graph import MultiGraph
from .whitehead import CyclicPresentation, MultiplicityPlan, parse_word


def gamma_spec_to_json(spec: GammaSpec) -> dict:
    return {"n": spec.n, "A": list(spec.A), "B": list(spec.B), "Q": list(spec.Q)}


def gamma_spec_from_json(data: dict, loose: bool = False) -> GammaSpec:
    """Load ``{"n", "A", "B", "Q"}``; raw residues are canonicalised."""
    make = canonicalize_gamma_loose if loose else canonicalize_gamma
    n = int(data["n"])
    return make(n, data.get("A", []), data.get("B", []), data.get("Q", []))


def circ_spec_to_json(spec: CirculantSpec) -> dict:
    return {"n": spec.n, "S": list(spec.S)}


def circ_spec_from_json(data: dict) -> CirculantSpec:
    return canonicalize_circ(int(data["n"]), data.get("S", []))


def graph_to_json(g: MultiGraph) -> dict:
    return {
        "vertex_count": g.vertex_count,
        "edges": [list(e) for e in g.edges],
        "labels": list(g.labels) if g.labels is not None else None,
    }


def graph_from_json(data: dict) -> MultiGraph:
    return MultiGraph(int(data["vertex_count"]), data["edges"], data.get("labels"))


def conditions_to_json(report: ConditionReport) -> dict:
    return {
        "c1": report.c1_planar,
        "c2prime": report.c2prime_regularizable,
        "c3a": report.c3a_loopless,
        "c3b": report.c3b_simple,
        "c4": report.c4_vertexcount,
        "c5": report.c5_automorphism,
        "c6": report.c6_intra_orbit_edge,
        "c7": report.c7_inter_orbit_edge,
        "c8": report.c8_unit_steps,
        "edge_orbit_lengths": list(report.edge_orbit_lengths),
    }


def conditions_from_json(data: dict) -> ConditionReport:
    return ConditionReport(
        c1_planar=bool(data["c1"]),
        c2prime_regularizable=bool(data["c2prime"]),
        c3a_loopless=bool(data["c3a"]),
        c3b_simple=bool(data["c3b"]),
        c4_vertexcount=bool(data["c4"]),
        c5_automorphism=bool(data["c5"]),
        c6_intra_orbit_edge=bool(data["c6"]),
        c7_inter_orbit_edge=bool(data["c7"]),
        c8_unit_steps=bool(data["c8"]),
        edge_orbit_lengths=tuple(int(x) for x in data["edge_orbit_lengths"]),
    )


def decomposition_to_json(dec: GammaDecomposition) -> dict:
    return {"d": dec.d, "quotient": gamma_spec_to_json(dec.quotient)}


def circ_components_to_json(d: int, quotient: CirculantSpec) -> dict:
    return {"d": d, "quotient": circ_spec_to_json(quotient)}


def circ_verdict_to_json(v: CircPlanarVerdict) -> dict:
    return {"planar": v.planar, "case": v.case.value, "s": v.s, "d": v.d, "connected": v.connected}


def presentation_to_json(p: CyclicPresentation) -> dict:
    return p.to_json()


def presentation_from_json(data: dict) -> CyclicPresentation:
    return parse_word(int(data["n"]), str(data["word"]))


def plan_to_json(plan: MultiplicityPlan) -> dict[str, Any]:
    def conv(m):
        return {str(k): v for k, v in sorted(m.items())}

    return {"m_a": conv(plan.m_a), "m_b": conv(plan.m_b), "m_q": conv(plan.m_q)}
