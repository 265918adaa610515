"""JSON encodings for matrices, tuples, lattices and phase points.

Matrix encoding is plane-separated and row-major:

    {"re": [[.., ..], [.., ..]], "im": [[.., ..], [.., ..]]}

Float entries are JSON numbers (shortest round-trip decimals); exact
entries are strings "p/q".  A matrix parses onto the exact backend iff
every entry is a string.  Scalars follow the same convention as
``{"re": .., "im": ..}`` objects.

Lattice encoding:

    {"sites": n, "links": [[s, t], ...],
     "plaquettes": [[{"link": id, "dir": +-1}, ...], ...],
     "tree": [link ids], "basepoint": site}
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import Su2StrataError
from .lattice import GaugeConfig, GaugeTransform, LatticeGraph, PhasePoint
from .matrices import Mat2
from .scalars import GaussianRational


class EncodingError(Su2StrataError):
    """Input JSON does not match the documented schemas."""


def scalar_to_json(x):
    if isinstance(x, GaussianRational):
        return {"re": str(x.re), "im": str(x.im)}
    x = complex(x)
    return {"re": x.real, "im": x.imag}


def scalar_from_json(obj):
    if not isinstance(obj, dict) or set(obj) != {"re", "im"}:
        raise EncodingError(f"scalar must be a {{re, im}} object, got {obj!r}")
    re, im = obj["re"], obj["im"]
    if isinstance(re, str) and isinstance(im, str):
        return GaussianRational(Fraction(re), Fraction(im))
    return complex(float(re), float(im))


def _entry_to_json(x):
    if isinstance(x, GaussianRational):
        return str(x.re), str(x.im)
    x = complex(x)
    return x.real, x.imag


def matrix_to_json(m: Mat2) -> dict:
    pairs = [_entry_to_json(v) for v in m.entries()]
    return {
        "re": [[pairs[0][0], pairs[1][0]], [pairs[2][0], pairs[3][0]]],
        "im": [[pairs[0][1], pairs[1][1]], [pairs[2][1], pairs[3][1]]],
    }


def matrix_from_json(obj) -> Mat2:
    try:
        re = obj["re"]
        im = obj["im"]
        cells = [
            (re[r][c], im[r][c]) for r in range(2) for c in range(2)
        ]
    except (KeyError, IndexError, TypeError) as exc:
        raise EncodingError(f"malformed matrix object: {obj!r}") from exc
    exact = all(isinstance(v, str) for pair in cells for v in pair)
    entries = []
    for re_v, im_v in cells:
        if exact:
            try:
                entries.append(GaussianRational(Fraction(re_v), Fraction(im_v)))
            except (ValueError, ZeroDivisionError) as exc:
                raise EncodingError(f"bad rational entry {re_v!r}/{im_v!r}") from exc
        else:
            try:
                entries.append(complex(float(re_v), float(im_v)))
            except (TypeError, ValueError) as exc:
                raise EncodingError(f"bad float entry {re_v!r}/{im_v!r}") from exc
    return Mat2(*entries)


def tuple_to_json(mats) -> dict:
    return {"entries": [matrix_to_json(m) for m in mats]}


def tuple_from_json(obj) -> list:
    if not isinstance(obj, dict) or "entries" not in obj:
        raise EncodingError('tuple file needs an "entries" array')
    mats = [matrix_from_json(m) for m in obj["entries"]]
    if not mats:
        raise EncodingError("tuple must not be empty")
    if len({m.exact for m in mats}) > 1:
        raise EncodingError("tuple mixes exact and float matrices")
    return mats


def phase_point_to_json(p: PhasePoint) -> dict:
    return {
        "a": [matrix_to_json(m) for m in p.a],
        "A": [matrix_to_json(m) for m in p.alg],
    }


def phase_point_from_json(obj) -> PhasePoint:
    if not isinstance(obj, dict) or "a" not in obj or "A" not in obj:
        raise EncodingError('phase point file needs "a" and "A" arrays')
    a = [matrix_from_json(m) for m in obj["a"]]
    alg = [matrix_from_json(m) for m in obj["A"]]
    if len(a) != len(alg):
        raise EncodingError('"a" and "A" must have equal length')
    return PhasePoint(tuple(a), tuple(alg))


def lattice_to_json(lat: LatticeGraph) -> dict:
    return {
        "sites": lat.n_sites,
        "links": [list(l) for l in lat.links],
        "plaquettes": [
            [{"link": lid, "dir": d} for lid, d in p] for p in lat.plaquettes
        ],
        "tree": list(lat.tree),
        "basepoint": lat.basepoint,
    }


def lattice_from_json(obj) -> LatticeGraph:
    try:
        return LatticeGraph(
            int(obj["sites"]),
            tuple((int(s), int(t)) for s, t in obj["links"]),
            tuple(
                tuple((int(step["link"]), int(step["dir"])) for step in p)
                for p in obj["plaquettes"]
            ),
            int(obj.get("basepoint", 0)),
            tuple(int(l) for l in obj["tree"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise EncodingError(f"malformed lattice object: {exc}") from exc


def config_to_json(config: GaugeConfig) -> dict:
    return {"values": [matrix_to_json(m) for m in config.values]}


def config_from_json(obj, lat: LatticeGraph) -> GaugeConfig:
    if not isinstance(obj, dict) or "values" not in obj:
        raise EncodingError('gauge config needs a "values" array')
    return GaugeConfig(lat, tuple(matrix_from_json(m) for m in obj["values"]))


def transform_to_json(g: GaugeTransform) -> dict:
    return {"values": [matrix_to_json(m) for m in g.values]}


def transform_from_json(obj, lat: LatticeGraph) -> GaugeTransform:
    if not isinstance(obj, dict) or "values" not in obj:
        raise EncodingError('gauge transform needs a "values" array')
    return GaugeTransform(lat, tuple(matrix_from_json(m) for m in obj["values"]))


def momenta_from_json(obj, lat: LatticeGraph):
    if not isinstance(obj, dict) or "values" not in obj:
        raise EncodingError('momenta file needs a "values" array')
    vals = tuple(matrix_from_json(m) for m in obj["values"])
    if len(vals) != len(lat.links):
        raise EncodingError("one momentum per link required")
    return vals


def canonical_dumps(obj) -> str:
    """Deterministic JSON text: sorted keys, no whitespace churn."""
    return json.dumps(obj, sort_keys=True, separators=(",", ": "), indent=1)
