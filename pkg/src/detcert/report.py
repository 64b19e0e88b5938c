"""Certification reports: a JSON document and a tab-delimited text form.

Rationals are written as ``"p/q"`` strings (``"2"`` when integral) so that no
JSON consumer can round them; the 4-place decimals are for reading only.
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import __version__
from .certify import decimal4, row_abs_sums, verdict_from_sums
from .errors import DegenerateSimplex, SingularMatrix
from .exact import Matrix01, MatrixPM1, det_exact
from .geometry import alpha_of, axial_diameters, xi_of
from .simplex import border_01, lagrange_data
from .transform import pm1_to_01


def frac_str(x) -> str:
    return str(Fraction(x))


def build_report(m) -> dict:
    """Analyse a 0/1 matrix, or a +-1 matrix after reducing it to 0/1 form."""
    source = None
    if isinstance(m, MatrixPM1):
        u = m
        m = pm1_to_01(u)
        det_u = det_exact(u)
        source = {
            "kind": "pm1",
            "order": u.order,
            "det": str(det_u),
        }
    elif not isinstance(m, Matrix01):
        m = Matrix01(m)
    try:
        L = lagrange_data(border_01(m))
    except DegenerateSimplex:
        raise SingularMatrix("0/1 matrix is singular; nothing to certify") from None
    sums = row_abs_sums(L)
    verdict = verdict_from_sums(sums, L.det)
    if source is not None:
        n = m.order
        source["det_ratio_holds"] = 2**n * abs(L.det) == abs(int(source["det"]))
    report = {
        "order": m.order,
        "det": str(L.det),
        "row_sums": [frac_str(s) for s in sums.sums],
        "row_sums_decimal": list(sums.decimals),
        "axial_diameters": [frac_str(d) for d in axial_diameters(L)],
        "alpha": frac_str(alpha_of(L)),
        "xi": frac_str(xi_of(L)),
        "verdict": {
            "kind": verdict.kind.value,
            "witness_rows": list(verdict.witness_rows),
        },
        "tool_version": __version__,
    }
    if source is not None:
        report["source"] = source
    return report


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def report_text(report: dict) -> str:
    out = []
    if "source" in report:
        src = report["source"]
        out.append(f"source\tpm1 order {src['order']}\tdet {src['det']}")
        out.append(f"det_ratio_holds\t{str(src['det_ratio_holds']).lower()}")
    out.append(f"order\t{report['order']}")
    out.append(f"det\t{report['det']}")
    out.append(f"alpha\t{report['alpha']}\t{decimal4(Fraction(report['alpha']))}")
    out.append(f"xi\t{report['xi']}\t{decimal4(Fraction(report['xi']))}")
    v = report["verdict"]
    witnesses = ",".join(str(i) for i in v["witness_rows"]) or "-"
    out.append(f"verdict\t{v['kind']}\twitness_rows {witnesses}")
    out.append("i\trow_sum\trow_sum_decimal\taxial_diameter")
    for i, (s, dec, d) in enumerate(
        zip(report["row_sums"], report["row_sums_decimal"], report["axial_diameters"]), start=1
    ):
        out.append(f"{i}\t{s}\t{dec}\t{d}")
    return "\n".join(out) + "\n"


def load_report(text: str) -> dict:
    """Inverse of :func:`report_json` with rational fields turned back into Fractions."""
    data = json.loads(text)
    data["det"] = int(data["det"])
    data["row_sums"] = [Fraction(s) for s in data["row_sums"]]
    data["axial_diameters"] = [Fraction(s) for s in data["axial_diameters"]]
    data["alpha"] = Fraction(data["alpha"])
    data["xi"] = Fraction(data["xi"])
    return data
