"""
Report rendering

Text reports come from jinja2 string templates; JSON reports are the pydantic
dump of the same model.
"""

from typing import Dict, Literal

from jinja2 import BaseLoader, Environment
from pydantic import BaseModel

from ..exceptions import ReportRenderError
from ..schemas.schemas import (
    CosetRadonReport, DivisorRadonReport, HeatReport, TableauxReport, TransformReport, VerificationReport,
)


class StringTemplateLoader(BaseLoader):
    """Jinja2 loader over in-module template strings"""

    def __init__(self, templates: Dict[str, str]):
        self.templates = templates

    def get_source(self, environment: Environment, template: str):
        if template not in self.templates:
            raise FileNotFoundError(f"Template {template} not found")
        return self.templates[template], None, lambda: True


REPORT_TEMPLATES = {
    "transform": """\
spherical transform on S_{{ r.n + 1 }} (n = {{ r.n }})
  lambda_1     {{ r.lambda1 }}
  lambda_2     {{ r.lambda2 }}
  f_hat        {{ r.fhat }}
  <f, 1>       {{ r.coef_trivial }}
  <f, phi_n>   {{ r.coef_phi }}
  biinvariant  {{ "yes" if r.biinvariant else "no" }}
  round trip   {{ r.round_trip }}
""",
    "verify": """\
{% for c in r.checks %}{{ "ok  " if c.passed else "FAIL" }} [{{ c.group }}] {{ c.name }}{% if c.n is not none %} (n={{ c.n }}){% endif %}{% if c.detail %}: {{ c.detail }}{% endif %}
{% endfor %}
{% if r.residuals %}recovery residuals (diagnostic, not gating)
{% for row in r.residuals %}  n={{ row.n }} {{ row.label }}: {{ row.residual }}
{% endfor %}{% endif %}
{% if r.corrupted %}corrupted constant: {{ r.corrupted }}
{% endif %}{{ r.checks | length - failures }} passed, {{ failures }} failed (n_max = {{ r.n_max }})
""",
    "heat": """\
heat solution on S_{{ r.n + 1 }} after {{ r.steps }} step(s)
  closed form matches iteration: {{ "yes" if r.matches_iteration else "no" }}
  total mass: {{ r.total_mass }}
""",
    "coset_radon": """\
horocyclic Radon transform on S_{{ r.n + 1 }} / S_{{ r.n }}
label  representative  Rf
{% for row in r.rows %}{{ row.label }}  {{ row.representative }}  {{ row.value }}
{% endfor %}""",
    "divisor_radon": """\
{{ r.mode }} table, truncation N = {{ r.truncation }}
{% if r.tail_bound is not none %}tail bound at index 1 (s = {{ r.decay_exponent }}): {{ r.tail_bound }}
{% endif %}{% if r.max_error is not none %}max |reconstruction - f| = {{ r.max_error }}
{% endif %}rows 1..{{ r.rows | length }}
""",
    "tableaux": """\
shapes of {{ r.n }} (|S_{{ r.n }}| = {{ r.group_order }})
shape        SYT  |P_t|  |Q_t|  supp(e_t)  lambda_t  dim
{% for s in r.shapes %}{{ "%-12s" | format(s.shape) }} {{ "%4d" | format(s.standard_tableaux) }} {{ "%6d" | format(s.row_stabilizer) }} {{ "%6d" | format(s.column_stabilizer) }} {{ "%10d" | format(s.support) }} {{ "%9s" | format(s.idempotency) }} {{ "%4d" | format(s.dimension) }}
{% endfor %}sum of dim^2 = {{ r.sum_of_squares }}
""",
}

_env = Environment(loader=StringTemplateLoader(REPORT_TEMPLATES), keep_trailing_newline=True)


def render_text(name: str, **context) -> str:
    try:
        return _env.get_template(name).render(**context)
    except Exception as e:
        raise ReportRenderError(f"Error rendering {name} report: {str(e)}") from e


def render(report: BaseModel, output_format: Literal["text", "json"]) -> str:
    if output_format == "json":
        return report.model_dump_json(indent=2) + "\n"
    if isinstance(report, TransformReport):
        return render_text("transform", r=report)
    if isinstance(report, VerificationReport):
        return render_text("verify", r=report, failures=len(report.failures))
    if isinstance(report, HeatReport):
        return render_text("heat", r=report)
    if isinstance(report, CosetRadonReport):
        return render_text("coset_radon", r=report)
    if isinstance(report, DivisorRadonReport):
        return render_text("divisor_radon", r=report)
    if isinstance(report, TableauxReport):
        return render_text("tableaux", r=report)
    raise ReportRenderError(f"No text template for {type(report).__name__}")
