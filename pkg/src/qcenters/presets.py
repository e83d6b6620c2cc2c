"""Named example fixtures with their expected conclusions.

Each preset fixes a (type, lattice, parameter) triple and a checker that
inspects the finished report; a preset run fails loudly when its documented
conclusion stops holding.  Presets accept overrides as `name:k=v,...` and
the shorthand `name-<l>` for the order parameter l.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from .qparam import QParam, make_param
from .rootdata import RootDatum, Weight, build_root_datum


class PresetError(ValueError):
    """Unknown preset or malformed preset arguments."""


@dataclass(frozen=True)
class PresetCase:
    name: str
    type_str: str
    lattice: str
    c: tuple[Fraction, ...]
    description: str
    check: Callable[[dict[str, Any], RootDatum, QParam], list[str]]

    def build(self) -> tuple[RootDatum, QParam]:
        rd = build_root_datum(self.type_str, self.lattice)
        return rd, make_param(rd, list(self.c))

    def input_echo(self) -> dict[str, Any]:
        return {
            "preset": self.name,
            "type": self.type_str,
            "lattice": self.lattice,
            "param": [f"{c.numerator}/{c.denominator}" for c in self.c],
        }


def _odd_half_sum_witness(rd: RootDatum, ell: int) -> Weight:
    """(l/2) * (alpha_1 + alpha_3 + ...) over the odd-position simple roots."""
    total = Weight.of([0] * rd.rank)
    for i in range(0, rd.rank, 2):
        total = total + rd.simple_root(i)
    return total.scaled(Fraction(ell, 2))


def _check_even_regular(report: dict[str, Any], rd: RootDatum, q: QParam) -> list[str]:
    fails = []
    v = report["centers"]["verdicts"]
    if not v["thm_sc_hypotheses"]:
        fails.append("expected the simply-connected even-order hypotheses to hold")
    if not v["tan_equals_mug"]:
        fails.append("expected X^Tan = X^Mug")
    if report["centers"]["x_tan"] != report["centers"]["lQ"]:
        fails.append("expected X^Tan = lQ")
    if not v["langlands_dual"]:
        fails.append("expected the dual datum to be of Langlands-dual type")
    transpose = [[rd.cartan[j][i] for j in range(rd.rank)] for i in range(rd.rank)]
    if report["dual"]["g_check"]["cartan"] != transpose:
        fails.append("expected the dual Cartan matrix to equal the transpose")
    return fails


def _check_sl2n_odd(ell: int) -> Callable[[dict[str, Any], RootDatum, QParam], list[str]]:
    def check(report: dict[str, Any], rd: RootDatum, q: QParam) -> list[str]:
        fails = []
        if report["centers"]["verdicts"]["tan_equals_mug"]:
            fails.append("expected X^Tan to be a proper sublattice of X^Mug")
        lam0 = _odd_half_sum_witness(rd, ell)
        coords = lam0.int_coords()
        from .centers import center_tower

        tower = center_tower(q, rd)
        if not tower.x_mug.member(coords):
            fails.append("expected the half-sum witness to lie in X^Mug")
        if tower.x_tan.member(coords):
            fails.append("expected the half-sum witness to avoid X^Tan")
        if not q.eval(lam0, lam0).is_half():
            fails.append("expected self-pairing -1 at the half-sum witness")
        return fails

    return check


def _check_sp2n_odd(ell: int) -> Callable[[dict[str, Any], RootDatum, QParam], list[str]]:
    def check(report: dict[str, Any], rd: RootDatum, q: QParam) -> list[str]:
        fails = []
        if report["centers"]["verdicts"]["tan_equals_mug"]:
            fails.append("expected X^Tan to be a proper sublattice of X^Mug")
        beta = rd.simple_root(rd.rank - 1)  # the unique long simple root
        lam0 = beta.scaled(Fraction(ell, 2))
        coords = lam0.int_coords()
        from .centers import center_tower

        tower = center_tower(q, rd)
        if not tower.x_mug.member(coords):
            fails.append("expected l*beta/2 to lie in X^Mug")
        if tower.x_tan.member(coords):
            fails.append("expected l*beta/2 to avoid X^Tan")
        if not q.eval(lam0, lam0).is_half():
            fails.append("expected self-pairing -1 at l*beta/2")
        return fails

    return check


def _check_tan_is_lq(report: dict[str, Any], rd: RootDatum, q: QParam) -> list[str]:
    fails = []
    c = report["centers"]
    if not (c["x_tan"] == c["x_mug"] == c["lQ"]):
        fails.append("expected X^Tan = X^Mug = lQ")
    return fails


def _check_adjoint_lusztig(ell: int) -> Callable[[dict[str, Any], RootDatum, QParam], list[str]]:
    def check(report: dict[str, Any], rd: RootDatum, q: QParam) -> list[str]:
        fails = _check_tan_is_lq(report, rd, q)
        dims = report["dims"]
        expected_grouplikes = ell ** rd.rank
        if dims["grouplike_count"] != expected_grouplikes:
            fails.append(f"expected {expected_grouplikes} grouplikes")
        if report["groups"]["lambda"]["invariant_factors"] != [ell] * rd.rank:
            fails.append(f"expected grouplike group (Z/{ell})^{rd.rank}")
        lie_dim = rd.rank + 2 * len(rd.pos_roots)
        if dims["fpdim_fiber"] != ell**lie_dim:
            fails.append(f"expected fiber dimension l^dim(g) = {ell**lie_dim}")
        return fails

    return check


def make_preset(name: str, **overrides: Any) -> PresetCase:
    """Instantiate a named preset; overrides are integers n, l and type."""
    if name == "sl2n-even":
        n = int(overrides.pop("n", 1))
        ell = int(overrides.pop("l", 2))
        if ell % 2:
            raise PresetError("sl2n-even needs an even order l")
        case = PresetCase(
            name=f"sl2n-even:n={n},l={ell}",
            type_str=f"A{2 * n - 1}",
            lattice="sc",
            c=(Fraction(1, 2 * ell),),
            description=f"SL({2*n}) at the even-order form of order 2l = {2*ell}",
            check=_check_even_regular,
        )
    elif name == "sl2n-odd":
        n = int(overrides.pop("n", 1))
        ell = int(overrides.pop("l", 3))
        if n % 2 == 0 or ell % 2 == 0:
            raise PresetError("sl2n-odd needs odd n and odd l")
        case = PresetCase(
            name=f"sl2n-odd:n={n},l={ell}",
            type_str=f"A{2 * n - 1}",
            lattice="sc",
            c=(Fraction(1, ell),),
            description=f"SL({2*n}) at an odd order l = {ell}: strict Tannakian center",
            check=_check_sl2n_odd(ell),
        )
    elif name == "sp2n-odd-halfpi":
        n = int(overrides.pop("n", 2))
        ell = int(overrides.pop("l", 3))
        if ell % 2 == 0:
            raise PresetError("sp2n-odd-halfpi needs odd l")
        case = PresetCase(
            name=f"sp2n-odd-halfpi:n={n},l={ell}",
            type_str=f"C{n}",
            lattice="sc",
            c=(Fraction(1, 2 * ell),),
            description=f"Sp({2*n}) at the half-angle form with odd l = {ell}",
            check=_check_sp2n_odd(ell),
        )
    elif name == "sl3-odd":
        ell = int(overrides.pop("l", 3))
        if ell % 2 == 0:
            raise PresetError("sl3-odd needs odd l")
        case = PresetCase(
            name=f"sl3-odd:l={ell}",
            type_str="A2",
            lattice="sc",
            c=(Fraction(1, ell),),
            description=f"SL(3) at odd order l = {ell}: centers agree at lQ anyway",
            check=_check_tan_is_lq,
        )
    elif name == "adjoint-odd-lusztig":
        type_str = str(overrides.pop("type", "A1"))
        ell = int(overrides.pop("l", 3))
        scaffold = build_root_datum(type_str, "adjoint")
        det = 1
        from .intlat import index

        det = index(scaffold.root_lattice(), scaffold.weight_lattice())
        from math import gcd

        if ell % 2 == 0 or gcd(ell, scaffold.lacing) != 1 or det is None or gcd(ell, det) != 1:
            raise PresetError("adjoint-odd-lusztig needs odd l coprime to the lacing number and det(Cartan)")
        case = PresetCase(
            name=f"adjoint-odd-lusztig:{type_str},l={ell}",
            type_str=type_str,
            lattice="adjoint",
            c=tuple(Fraction(1, ell) for _ in build_root_datum(type_str, "adjoint").dynkin.factors),
            description=f"adjoint {type_str} at generic odd order l = {ell}",
            check=_check_adjoint_lusztig(ell),
        )
    elif name == "g2-small":
        ell = int(overrides.pop("l", 6))
        if ell % 6:
            raise PresetError("g2-small needs 6 | l so that the lacing number divides l")
        case = PresetCase(
            name=f"g2-small:l={ell}",
            type_str="G2",
            lattice="sc",
            c=(Fraction(1, 2 * ell),),
            description=f"G2 at the even-order form with l = {ell}",
            check=_check_even_regular,
        )
    else:
        raise PresetError(f"unknown preset {name!r}")
    if overrides:
        raise PresetError(f"unused preset arguments: {sorted(overrides)}")
    return case


PRESET_NAMES = [
    "sl2n-even",
    "sl2n-odd",
    "sp2n-odd-halfpi",
    "sl3-odd",
    "adjoint-odd-lusztig",
    "g2-small",
]


def parse_preset(spec: str) -> PresetCase:
    """Parse `name`, `name-<l>`, or `name:k=v,...` into a preset case."""
    spec = spec.strip()
    if ":" in spec:
        name, argstr = spec.split(":", 1)
        kwargs: dict[str, Any] = {}
        for piece in argstr.split(","):
            piece = piece.strip()
            if not piece:
                continue
            if "=" in piece:
                k, v = piece.split("=", 1)
                kwargs[k.strip()] = v.strip()
            elif re.fullmatch(r"[A-G]\d+(x[A-G]\d+)*", piece):
                kwargs["type"] = piece  # bare Dynkin type, e.g. name:A1,l=3
            elif piece.isdigit():
                kwargs["l"] = int(piece)
            else:
                raise PresetError(f"bad preset argument {piece!r}")
        return make_preset(name.strip(), **kwargs)
    if spec not in PRESET_NAMES:
        for name in PRESET_NAMES:
            if spec.startswith(name + "-"):
                suffix = spec[len(name) + 1 :]
                if suffix.isdigit():
                    return make_preset(name, l=int(suffix))
        raise PresetError(f"unknown preset {spec!r}")
    return make_preset(spec)
