"""JSON documents for triples and reports.

A triple document is {"k": int, "p": [str...], "q": [str...]} with
exact rationals written as "n" or "n/d" (denominators positive), entry
i holding the coefficient of u^i v^(d-i), and list lengths 4k+1 and
6k+1.  Reports mirror the fiber table, arc data, topology and bound
verdicts; every number in them is an exact rational string, never a
decimal.  Serialization is canonical, so equal data produces byte-equal
files.
"""

from __future__ import annotations

import json
from fractions import Fraction
from .binform import BinForm
from .roots import AlgebraicPoint, CirclePoint, FinitePoint, InfinityPoint
from .topology import (
    ArcDecomposition,
    BoundChecks,
    NotRealGeneric,
    RealTopologyReport,
)
from .weierstrass import (
    ConjugatePairTag,
    FiberReport,
    SurfaceInvariants,
    WeierstrassTriple,
    validate,
)


class DocumentError(ValueError):
    """Malformed triple document."""


def parse_rational(text: str) -> Fraction:
    s = str(text).strip()
    try:
        if "/" in s:
            num, den = s.split("/", 1)
            d = int(den)
            if d == 0:
                raise DocumentError(f"zero denominator in {s!r}")
            return Fraction(int(num), d)
        return Fraction(int(s))
    except DocumentError:
        raise
    except (ValueError, TypeError) as exc:
        raise DocumentError(f"not an exact rational: {s!r}") from exc


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def triple_to_document(t: WeierstrassTriple) -> dict:
    return {
        "k": t.k,
        "p": [format_rational(c) for c in t.p.coeffs],
        "q": [format_rational(c) for c in t.q.coeffs],
    }


def triple_from_document(doc: dict) -> WeierstrassTriple:
    """Parse and validate; raises DocumentError or WeierstrassError."""
    if not isinstance(doc, dict):
        raise DocumentError("triple document must be a JSON object")
    for key in ("k", "p", "q"):
        if key not in doc:
            raise DocumentError(f"missing field {key!r}")
    k = doc["k"]
    if not isinstance(k, int) or k < 1:
        raise DocumentError("k must be a positive integer")
    p_list = doc["p"]
    q_list = doc["q"]
    if not isinstance(p_list, list) or len(p_list) != 4 * k + 1:
        raise DocumentError(f"p must be a list of {4 * k + 1} rationals")
    if not isinstance(q_list, list) or len(q_list) != 6 * k + 1:
        raise DocumentError(f"q must be a list of {6 * k + 1} rationals")
    p = BinForm.make(4 * k, [parse_rational(c) for c in p_list])
    q = BinForm.make(6 * k, [parse_rational(c) for c in q_list])
    return validate(k, p, q)


def load_triple(path: str) -> WeierstrassTriple:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"invalid JSON: {exc}") from exc
    return triple_from_document(doc)


def dump_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


# ---------------------------------------------------------------------------
# report documents


def point_to_document(pt: CirclePoint) -> dict:
    if isinstance(pt, FinitePoint):
        return {"type": "rational", "value": format_rational(pt.value)}
    if isinstance(pt, InfinityPoint):
        return {"type": "infinity"}
    assert isinstance(pt, AlgebraicPoint)
    return {
        "type": "algebraic",
        "defining": [format_rational(c) for c in pt.defining.coeffs],
        "lo": format_rational(pt.lo),
        "hi": format_rational(pt.hi),
    }


def fiber_to_document(rep: FiberReport) -> dict:
    loc = rep.location
    if isinstance(loc, ConjugatePairTag):
        location = {
            "type": "conjugate-pairs",
            "factor": [format_rational(c) for c in loc.factor.coeffs],
            "pairs": loc.pairs,
        }
    else:
        location = point_to_document(loc)
    return {
        "location": location,
        "v_p": rep.v_p,
        "v_q": rep.v_q,
        "v_delta": rep.v_delta,
        "kodaira": rep.kodaira.symbol,
        "euler": rep.kodaira.euler_number,
        "is_real": rep.is_real,
    }


def invariants_to_document(inv: SurfaceInvariants) -> dict:
    return {"k": inv.k, "chi_top": inv.chi_top, "h11": inv.h11, "b2": inv.b2}


def arcs_to_document(dec: ArcDecomposition) -> dict:
    return {
        "singular_points": [
            {"point": point_to_document(p), "real_type": str(ty)}
            for p, ty in zip(dec.points, dec.types)
        ],
        "arcs": [
            {
                "sample": format_rational(a.sample.value),
                "components": a.component_count,
                "endpoint_types": [str(a.start_type), str(a.end_type)],
            }
            for a in dec.arcs
        ],
        "arc_plus": dec.arc_plus,
        "arc_minus": dec.arc_minus,
        "n_I1_plus": dec.n_plus,
        "n_I1_minus": dec.n_minus,
    }


def topology_to_document(rep: RealTopologyReport) -> dict:
    doc = {
        "h0": rep.h0,
        "h1": rep.h1,
        "h2": rep.h2,
        "h_star": rep.h_star,
        "chi_top": rep.chi_top,
        "orientable": rep.orientable,
        "components": list(rep.components),
        "no_real_singular_fibers": rep.no_real_singular_fibers,
    }
    if rep.single_component_caveat:
        doc["caveat"] = (
            "no real singular fiber and positive discriminant: a single "
            "torus/Klein component was computed from signs"
        )
    return doc


def bounds_to_document(bc: BoundChecks) -> dict:
    return {
        "h0_le_5k": bc.component_bound_ok,
        "h1_le_10k": bc.betti_bound_ok,
        "h1_even": bc.h1_even_ok,
        "orientable_iff_k_even": bc.orientability_ok,
        "all_ok": bc.all_ok,
    }


def not_real_generic_to_document(exc: NotRealGeneric) -> dict:
    return {
        "refused": "non-nodal real singular fibers",
        "offenders": [fiber_to_document(r) for r in exc.offenders],
    }
