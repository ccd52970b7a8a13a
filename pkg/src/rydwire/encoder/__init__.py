"""Construction of MWIS instances and their atom-layout encodings."""

from rydwire.encoder.types import MWISInstance, SetupSpec, spec_from_config
from rydwire.encoder.layout import Atom, AtomLayout, layout_from_json, layout_to_json
from rydwire.encoder.builders import (
    blockade_graph,
    build_ancilla_cwe,
    build_crossing,
    build_cwe,
    build_vertex_wire,
    encode_weights,
    extend_wires,
)
from rydwire.encoder import dwspace

__all__ = [
    "MWISInstance",
    "SetupSpec",
    "spec_from_config",
    "Atom",
    "AtomLayout",
    "layout_from_json",
    "layout_to_json",
    "build_vertex_wire",
    "build_crossing",
    "build_cwe",
    "build_ancilla_cwe",
    "extend_wires",
    "encode_weights",
    "blockade_graph",
    "dwspace",
]
