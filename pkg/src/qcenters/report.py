"""Report assembly: one deterministic JSON/text document per analysis.

All angles are serialized as "a/b" strings, rationals likewise, lattices as
their HNF generator rows, and cyclotomic numbers as a conductor plus
coefficient list, so emitted JSON is byte-stable for fixed inputs and
round-trips through the parser unchanged.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Optional

from .angles import AngleQZ
from .centers import DualDatum, center_tower, dual_datum, g_check, verdicts
from .cyclo import CycloNum
from .intlat import FiniteAbelianGroup, Lattice, index
from .invariants import dim_report
from .kappa import BiformQZ, build_kappa, extend_psi, psi_vanishes_on, radicals
from .qparam import QParam, classify
from .rmatrix import support_size, term_table
from .rootdata import RootDatum, Weight
from .twistcheck import run_all

SCHEMA_VERSION = 1


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _angle(a: AngleQZ) -> str:
    return str(a)


def _lattice(l: Lattice) -> list[list[int]]:
    return [list(r) for r in l.gens]


def _group(g: FiniteAbelianGroup) -> dict[str, Any]:
    return {"order": g.order, "invariant_factors": list(g.invariant_factors)}


def _weight(w: Optional[Weight]) -> Optional[list[str]]:
    if w is None:
        return None
    return [_frac(c) for c in w.coords]


def _cyclo(c: CycloNum) -> dict[str, Any]:
    return {"conductor": c.conductor, "coeffs": [_frac(x) for x in c.coeffs]}


def _biform(b: BiformQZ) -> dict[str, Any]:
    return {
        "basis": _lattice(b.basis),
        "gram": [[_angle(x) for x in row] for row in b.gram],
    }


def _dual(d: DualDatum) -> dict[str, Any]:
    return {
        "star_roots": [list(r) for r in d.star_roots],
        "cartan": [list(r) for r in d.cartan_star],
        "char_lattice": _lattice(d.char_lattice),
        "dynkin_type": str(d.dual_type) if d.dual_type else None,
        "epsilon_scalars": [_angle(e) for e in d.epsilon_scalars],
        "l_simple": list(d.l_simple),
    }


def _index_str(value: Optional[int]) -> Any:
    return "infinite" if value is None else value


def build_report(
    rd: RootDatum,
    q: QParam,
    input_echo: dict[str, Any],
    max_terms: Optional[int] = None,
    include_rmatrix: bool = False,
    include_twistcheck: bool = True,
) -> dict[str, Any]:
    """Full analysis of one (root datum, parameter) pair as a JSON-ready dict."""
    tower = center_tower(q, rd)
    cls = classify(q)
    verd = verdicts(q, rd, tower)
    dual_star = dual_datum(q, rd)
    dual_check = g_check(q, rd, tower)
    kappa = build_kappa(q, tower.x_tan)
    rads = radicals(q, kappa, rd, tower.x_star)
    psi = extend_psi(kappa, rd.charlattice)
    dims = dim_report(q, rd, tower, rads)

    report: dict[str, Any] = {
        "schema": SCHEMA_VERSION,
        "input": input_echo,
        "root_datum": {
            "dynkin_type": str(rd.dynkin),
            "cartan": [list(r) for r in rd.cartan],
            "symmetrizers": list(rd.d),
            "lacing": rd.lacing,
            "killing": [[_frac(x) for x in row] for row in rd.killing],
            "char_lattice": _lattice(rd.charlattice),
            "simply_connected": rd.is_simply_connected(),
            "adjoint": rd.is_adjoint(),
            "w0_word": [i + 1 for i in rd.w0_word],
            "pos_roots": [list(r.root_coords) for r in rd.pos_roots],
        },
        "parameter": {
            "c_per_factor": [_frac(c) for c in q.c],
            "max_nondegenerate": cls.max_nondegenerate,
            "all_even_orders": cls.all_even,
            "quasi_classical": cls.quasi_classical,
            "rad_witness_outside_q": _weight(cls.witness),
        },
        "l_table": {
            "per_simple": q.simple_ls(),
            "per_pos_root": q.pos_root_ls(),
            "q_scalars_simple": [
                _angle(q.q_scalar(r)) for r in rd.pos_roots if r.height == 1
            ],
        },
        "centers": {
            "lQ": _lattice(tower.lq),
            "x_star": _lattice(tower.x_star),
            "x_mug": _lattice(tower.x_mug),
            "x_tan": _lattice(tower.x_tan),
            "indices": {
                "x_over_x_star": _index_str(tower.index_x_star),
                "x_star_over_x_mug": _index_str(tower.index_mug_in_star),
                "x_mug_over_x_tan": _index_str(tower.index_tan_in_mug),
                "x_tan_over_lQ": _index_str(tower.index_lq_in_tan),
                "x_over_x_tan": _index_str(index(tower.x_tan, rd.charlattice)),
            },
            "witness_mug_not_tan": _weight(tower.witness_mug_not_tan),
            "witness_star_not_mug": _weight(tower.witness_star_not_mug),
            "witness_tan_not_lq": _weight(tower.witness_tan_not_lq),
            "verdicts": {
                "tan_equals_mug": verd.tan_equals_mug,
                "thm_sc_hypotheses": verd.thm_sc_hypotheses,
                "thm_sc_conclusion_check": verd.thm_sc_conclusion_check,
                "langlands_dual": verd.langlands_dual,
                "pivot_trivial_on_xtan": verd.pivot_trivial_on_xtan,
                "modular": verd.modular,
            },
        },
        "dual": {
            "g_star": _dual(dual_star),
            "g_check": _dual(dual_check),
        },
        "twisting": {
            "kappa": _biform(kappa),
            "psi": _biform(psi),
            "psi_vanishes_on_rad_qk": psi_vanishes_on(psi, rads.rad_qk, rd.charlattice),
            "rad_q_in_x": _lattice(rads.rad_q),
            "rad_kappa": _lattice(rads.rad_kappa),
            "rad_qk": _lattice(rads.rad_qk),
        },
        "groups": {
            "sigma": _group(rads.groups.sigma),
            "lambda": _group(rads.groups.lam),
            "theta": _group(rads.groups.theta),
        },
        "dims": {
            "fpdim_fiber": dims.fpdim_fiber,
            "fpdim_sc_formula": dims.fpdim_sc_formula,
            "dim_uqk": dims.dim_uqk,
            "dim_u_plus": dims.dim_u_plus,
            "sigma_order": dims.sigma_order,
            "simple_count_uq": dims.simple_count_uq,
            "simple_count_uqk": dims.simple_count_uqk,
            "simples_group_uq": _group(dims.simples_group_uq),
            "simples_group_uqk": _group(dims.simples_group_uqk),
            "grouplike_count": dims.grouplike_count,
            "theta_order": dims.theta_order,
        },
    }

    if include_twistcheck:
        witnesses, comm_ok, cross_ok = run_all(dual_check, kappa)
        report["twistcheck"] = {
            "serre_ratio": [
                {
                    "pair": list(w.pair),
                    "serre_exponent": w.serre_exponent,
                    "values": [_angle(v) for v in w.values],
                    "verdict": w.verdict,
                }
                for w in witnesses
            ],
            "commutator": comm_ok,
            "cross_commutator": cross_ok,
            "all_pass": comm_ok and cross_ok and all(w.verdict for w in witnesses),
        }

    if include_rmatrix:
        count, _ = support_size(q, rd, cap=0)
        terms = term_table(q, rd, max_terms=max_terms)
        report["rmatrix"] = {
            "support_count": count,
            "truncated": max_terms is not None and count > max_terms,
            "terms": [
                {"support": list(s.n), "coeff": _cyclo(c)} for s, c in terms
            ],
        }

    return report


def to_json(report: dict[str, Any]) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def to_text(report: dict[str, Any]) -> str:
    """Human-readable summary mirroring the standard notation."""
    lines = []
    rdat = report["root_datum"]
    lines.append(f"type {rdat['dynkin_type']}  (lacing {rdat['lacing']}, "
                 f"{'simply connected' if rdat['simply_connected'] else 'adjoint' if rdat['adjoint'] else 'intermediate X'})")
    lines.append(f"parameter c = {', '.join(report['parameter']['c_per_factor'])} per factor")
    lines.append(f"l per simple root: {report['l_table']['per_simple']}")
    lines.append(f"l per positive root: {report['l_table']['per_pos_root']}")
    c = report["centers"]
    lines.append("center tower (HNF rows):")
    lines.append(f"  lQ     = {c['lQ']}")
    lines.append(f"  X^Tan  = {c['x_tan']}")
    lines.append(f"  X^Mug  = {c['x_mug']}")
    lines.append(f"  X*     = {c['x_star']}")
    lines.append(f"  indices: [X:X^Tan] = {c['indices']['x_over_x_tan']}, "
                 f"[X^Mug:X^Tan] = {c['indices']['x_mug_over_x_tan']}, "
                 f"[X^Tan:lQ] = {c['indices']['x_tan_over_lQ']}")
    if c["witness_mug_not_tan"] is not None:
        lines.append(f"  witness in X^Mug - X^Tan: {c['witness_mug_not_tan']}")
    v = c["verdicts"]
    lines.append(f"verdicts: X^Tan = X^Mug: {v['tan_equals_mug']}, sc/even hypotheses: {v['thm_sc_hypotheses']}, "
                 f"Langlands dual: {v['langlands_dual']}, pivot trivial on X^Tan: {v['pivot_trivial_on_xtan']}, "
                 f"modular: {v['modular']}")
    lines.append(f"dual datum G*: type {report['dual']['g_star']['dynkin_type']}, "
                 f"Cartan {report['dual']['g_star']['cartan']}, eps scalars {report['dual']['g_star']['epsilon_scalars']}")
    lines.append(f"dual datum Gv: char lattice {report['dual']['g_check']['char_lattice']}")
    g = report["groups"]
    lines.append(f"Sigma: order {g['sigma']['order']} {g['sigma']['invariant_factors']}, "
                 f"Lambda: order {g['lambda']['order']} {g['lambda']['invariant_factors']}, "
                 f"Theta: order {g['theta']['order']} {g['theta']['invariant_factors']}")
    d = report["dims"]
    lines.append(f"FPdim(fiber) = {d['fpdim_fiber']}"
                 + (f" = sc formula {d['fpdim_sc_formula']}" if d["fpdim_sc_formula"] is not None else ""))
    lines.append(f"dim u = {d['dim_uqk']} = {d['grouplike_count']} * {d['dim_u_plus']}^2, |Sigma| = {d['sigma_order']}")
    lines.append(f"simples: u_q labels X/X^Tan = {d['simples_group_uq']['invariant_factors']} "
                 f"({d['simple_count_uq']}), toral labels X/rad(q,kappa) = "
                 f"{d['simples_group_uqk']['invariant_factors']} ({d['simple_count_uqk']})")
    t = report["twisting"]
    lines.append(f"kappa gram on X^Tan basis: {t['kappa']['gram']}")
    lines.append(f"psi gram on X basis: {t['psi']['gram']} (vanishes on rad(q,kappa): {t['psi_vanishes_on_rad_qk']})")
    if "twistcheck" in report:
        lines.append(f"twist checks pass: {report['twistcheck']['all_pass']}")
    if "rmatrix" in report:
        r = report["rmatrix"]
        lines.append(f"braiding support count: {r['support_count']}" + (" (truncated list)" if r["truncated"] else ""))
        for term in r["terms"]:
            lines.append(f"  n = {term['support']}: conductor {term['coeff']['conductor']}, coeffs {term['coeff']['coeffs']}")
    return "\n".join(lines) + "\n"
