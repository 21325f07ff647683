"""DOT export of a state's views, for standard graph renderers.

One node per argument, one directed edge per attack; publicly announced
arguments are drawn filled and each agent's scope arguments are grouped in
a cluster.  View selectors:

    public                 the public record
    global                 the whole global frame
    aware:E                agent E's awareness frame
    perceived:V:S          V's model of S's argumentation
    adjusted:V:S           the same, fact-adjusted
    trust-adjusted:E       E's public model with its trust order applied
"""

from __future__ import annotations

from .frames import ArgumentationFrame
from .state import MmaState, adjusted_perceived, perceived, trust_adjusted_public_model


def select_view(m: MmaState, selector: str) -> ArgumentationFrame:
    parts = selector.replace("trust_adjusted", "trust-adjusted").split(":")
    name = parts[0]
    if name == "public" and len(parts) == 1:
        return m.public_af
    if name == "global" and len(parts) == 1:
        return m.global_af
    if name == "aware" and len(parts) == 2:
        if parts[1] not in m.agents:
            raise ValueError(f"unknown agent {parts[1]!r}")
        return m.aware[parts[1]]
    if name == "perceived" and len(parts) == 3:
        return perceived(m, parts[1], parts[2]).frame
    if name == "adjusted" and len(parts) == 3:
        return adjusted_perceived(m, parts[1], parts[2])
    if name == "trust-adjusted" and len(parts) == 2:
        return trust_adjusted_public_model(m, parts[1])
    raise ValueError(f"unknown view selector {selector!r}")


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(m: MmaState, frame: ArgumentationFrame, labels: dict[str, str] | None = None, title: str = "attacks") -> str:
    """Render one frame of a state as a DOT digraph."""
    labels = labels or {}
    lines = [f"digraph {_quote(title)} {{", "  rankdir=LR;", "  node [shape=ellipse];"]
    grouped: set[str] = set()
    for e in sorted(m.agents):
        members = sorted(frame.args & m.scope[e].args)
        if not members:
            continue
        grouped.update(members)
        lines.append(f"  subgraph {_quote('cluster_' + e)} {{")
        lines.append(f"    label={_quote('scope ' + e)};")
        for a in members:
            lines.append("    " + _node_line(a, labels.get(a, ""), a in m.public_af.args))
        lines.append("  }")
    for a in sorted(frame.args - grouped):
        lines.append("  " + _node_line(a, labels.get(a, ""), a in m.public_af.args))
    for s, t in frame.sorted_attacks():
        lines.append(f"  {_quote(s)} -> {_quote(t)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _node_line(arg: str, label: str, public: bool) -> str:
    text = f"{arg}: {label}" if label else arg
    attrs = [f"label={_quote(text)}"]
    if public:
        attrs.append("style=filled")
        attrs.append("fillcolor=lightgoldenrod")
    return f"{_quote(arg)} [{', '.join(attrs)}];"


def export_graph(m: MmaState, selector: str, labels: dict[str, str] | None = None) -> str:
    return to_dot(m, select_view(m, selector), labels, title=selector)
