"""DOT export of dual graphs."""

from jinja2 import BaseLoader, Environment

from app.core.config import settings
from app.models.curve import CurveGraph

DOT_TEMPLATE = """graph "{{ name }}" {
  rankdir={{ rankdir }};
  node [fontname="Helvetica"];
{% for c in components %}
  "{{ c.id }}" [shape=box, label="{{ c.id }}\\n{{ c.plane }}=0\\n{{ c.line }}"];
{% endfor %}
{% for n in nodes %}
  "{{ n.ends[0] }}" -- "{{ n.ends[1] }}" [label="{{ n.id }}", style=solid];
{% endfor %}
{% for m in marks %}
  "{{ m.id }}" [shape=none, label="x", fontcolor=red];
  "{{ m.component }}" -- "{{ m.id }}" [style=solid];
{% endfor %}
{% for a, b in partners %}
  "{{ a }}" -- "{{ b }}" [style=dotted, constraint=false];
{% endfor %}
}
"""

_env = Environment(loader=BaseLoader(), trim_blocks=True, lstrip_blocks=True)


def _quote(text: str) -> str:
    return text.replace('"', '\\"')


def to_dot(curve: CurveGraph, name: str = "curve") -> str:
    """
    Render the dual graph: components as boxes, node-edges as solid edges,
    S-marks as cross-marked leaves and partner pairs joined by dotted edges.
    """
    template = _env.from_string(DOT_TEMPLATE)
    return template.render(
        name=_quote(str(curve.metadata.get("construction", name))),
        rankdir=settings.DOT_RANKDIR,
        components=[
            {"id": _quote(c.id), "plane": c.plane.value, "line": _quote(str(c.line))}
            for c in curve.components
        ],
        nodes=[{"id": _quote(n.id), "ends": [_quote(e) for e in n.ends]} for n in curve.nodes],
        marks=[{"id": _quote(m.id), "component": _quote(m.component)} for m in curve.marks],
        partners=[(_quote(a.id), _quote(b.id)) for a, b in curve.partner_pairs()],
    )
