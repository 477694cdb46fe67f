"""JSON documents and the workspace bundle used by the command line.

Integers are always written as decimal strings so no precision is lost.
A workspace looks like::

    {"graphs": {"C3": {"vertices": [...], "edges": [[a, b], ...]}},
     "structures": {"R1S1": {"graph": "C3", "r": ["2", ...], "s": [...]}},
     "morphisms": {"phi": {"domain": "W5", "codomain": "C3", "map": {"v0": "x0", ...}}},
     "divisors": {"xi": {"graph": "C3", "values": ["-4", "5", "1"]}}}
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import NamedTuple

from .arith import ArithStructure, validate_structure
from .divisor import Divisor, make_divisor
from .errors import DocumentError
from .graph import Graph, build_graph
from .morphism import GraphMorphism, build_morphism


class StructureEntry(NamedTuple):
    graph: str
    structure: ArithStructure


class MorphismEntry(NamedTuple):
    domain: str
    codomain: str
    morphism: GraphMorphism


class DivisorEntry(NamedTuple):
    graph: str
    divisor: Divisor


def int_strings(values) -> list[str]:
    return [str(int(x)) for x in values]


def parse_ints(values, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in values)
    except (TypeError, ValueError) as exc:
        raise DocumentError(f"{what}: expected a list of integers") from exc


def graph_to_doc(g: Graph) -> dict:
    return {"vertices": list(g.labels), "edges": [list(e) for e in g.edge_labels()]}


def graph_from_doc(doc: dict) -> Graph:
    try:
        return build_graph(doc["vertices"], doc["edges"])
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"malformed graph document: {exc}") from exc


def structure_to_doc(st: ArithStructure, graph_name: str | None = None) -> dict:
    doc = {"graph": graph_name} if graph_name is not None else {}
    doc.update({"r": int_strings(st.r), "s": int_strings(st.s)})
    return doc


def structure_from_doc(doc: dict, g: Graph) -> ArithStructure:
    try:
        return validate_structure(g, parse_ints(doc["r"], "r"), parse_ints(doc["s"], "s"))
    except KeyError as exc:
        raise DocumentError(f"structure document lacks {exc}") from exc


def morphism_to_doc(m: GraphMorphism, domain: str | None = None, codomain: str | None = None) -> dict:
    doc = {}
    if domain is not None:
        doc["domain"] = domain
    if codomain is not None:
        doc["codomain"] = codomain
    doc["map"] = m.label_map()
    return doc


def divisor_to_doc(d: Divisor, graph_name: str | None = None) -> dict:
    doc = {"graph": graph_name} if graph_name is not None else {}
    doc["values"] = int_strings(d.values)
    return doc


@dataclass
class Workspace:
    graphs: dict[str, Graph] = field(default_factory=dict)
    structures: dict[str, StructureEntry] = field(default_factory=dict)
    morphisms: dict[str, MorphismEntry] = field(default_factory=dict)
    divisors: dict[str, DivisorEntry] = field(default_factory=dict)

    def graph(self, name: str) -> Graph:
        return _lookup(self.graphs, name, "graph")

    def structure(self, name: str) -> StructureEntry:
        return _lookup(self.structures, name, "structure")

    def morphism(self, name: str) -> MorphismEntry:
        return _lookup(self.morphisms, name, "morphism")

    def divisor(self, name: str) -> DivisorEntry:
        return _lookup(self.divisors, name, "divisor")

    def to_doc(self) -> dict:
        return {
            "graphs": {k: graph_to_doc(g) for k, g in self.graphs.items()},
            "structures": {k: structure_to_doc(e.structure, e.graph) for k, e in self.structures.items()},
            "morphisms": {
                k: morphism_to_doc(e.morphism, e.domain, e.codomain) for k, e in self.morphisms.items()
            },
            "divisors": {k: divisor_to_doc(e.divisor, e.graph) for k, e in self.divisors.items()},
        }


def _lookup(table: dict, name: str, kind: str):
    try:
        return table[name]
    except KeyError:
        raise DocumentError(f"no {kind} named {name!r} in workspace") from None


def workspace_from_doc(doc: dict) -> Workspace:
    ws = Workspace()
    for name, gd in doc.get("graphs", {}).items():
        ws.graphs[name] = graph_from_doc(gd)
    for name, sd in doc.get("structures", {}).items():
        gname = sd.get("graph")
        ws.structures[name] = StructureEntry(gname, structure_from_doc(sd, ws.graph(gname)))
    for name, md in doc.get("morphisms", {}).items():
        dom, cod = md.get("domain"), md.get("codomain")
        if not isinstance(md.get("map"), dict):
            raise DocumentError(f"morphism {name!r} lacks a label map")
        m = build_morphism(ws.graph(dom), ws.graph(cod), md["map"])
        ws.morphisms[name] = MorphismEntry(dom, cod, m)
    for name, dd in doc.get("divisors", {}).items():
        gname = dd.get("graph")
        g = ws.graph(gname)
        values = parse_ints(dd.get("values", ()), f"divisor {name!r}")
        if len(values) != g.n:
            raise DocumentError(f"divisor {name!r} has {len(values)} values, graph has {g.n}")
        ws.divisors[name] = DivisorEntry(gname, make_divisor(g, values))
    return ws


def load_workspace(path) -> Workspace:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: invalid JSON ({exc})") from exc
    return workspace_from_doc(doc)


def save_workspace(ws: Workspace, path) -> None:
    Path(path).write_text(dumps(ws.to_doc(), pretty=True) + "\n")


def dumps(obj, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(obj, indent=2)
    return json.dumps(obj, separators=(",", ":"))


def bundled_workspace_path() -> Path:
    """Path of the bundled fixture holding the worked examples."""
    return Path(str(resources.files("arithgraph") / "data" / "paper.json"))


def bundled_workspace() -> Workspace:
    return load_workspace(bundled_workspace_path())
