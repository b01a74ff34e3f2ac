from ._recol import (
    Decision,
    Graph,
    RecolorPath,
    RecolorStep,
    ReconfigSummary,
    build_family,
    certificate_text,
    check_frozen,
    check_proper,
    chromatic_number,
    decide_recolorable,
    degeneracy,
    find_frozen,
    in_scope_class,
    is_chordal,
    is_mixing,
    optimal_coloring,
    oracle_path,
    read_graph_text,
    recolor_path,
    reconfig_diameter,
    reconfig_summary,
    validate_path,
    write_graph_text,
)

__all__ = [
    "Decision",
    "Graph",
    "RecolorPath",
    "RecolorStep",
    "ReconfigSummary",
    "build_family",
    "certificate_text",
    "check_frozen",
    "check_proper",
    "chromatic_number",
    "decide_recolorable",
    "degeneracy",
    "find_frozen",
    "in_scope_class",
    "is_chordal",
    "is_mixing",
    "optimal_coloring",
    "oracle_path",
    "read_graph_text",
    "recolor_path",
    "reconfig_diameter",
    "reconfig_summary",
    "validate_path",
    "write_graph_text",
]
