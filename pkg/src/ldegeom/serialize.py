"""JSON forms of certificates and traces. Rationals travel as ``"p/q"`` strings."""
from __future__ import annotations

from .core import format_rational, parse_rational, solution_from_json
from .decompose import BinaryState, ConvexCertificate, LevelRecord, TraceLevel
from .errors import ParseError


def _matrix_to_json(table):
    return [[format_rational(v) for v in row] for row in table]


def _matrix_from_json(obj):
    if not isinstance(obj, list) or not all(isinstance(row, list) for row in obj):
        raise ParseError("coefficient matrix must be an array of arrays")
    return tuple(tuple(parse_rational(v) for v in row) for row in obj)


def certificate_to_json(cert: ConvexCertificate) -> dict:
    return {
        "lambda": _matrix_to_json(cert.lambdas),
        "slack": format_rational(cert.slack),
        "generators": [{"i": i, "j": j, "coef": format_rational(v)} for i, j, v in cert.terms()],
    }


def certificate_from_json(obj) -> ConvexCertificate:
    if not isinstance(obj, dict) or "lambda" not in obj:
        raise ParseError("certificate needs a 'lambda' matrix")
    cert = ConvexCertificate(_matrix_from_json(obj["lambda"]))
    if "slack" in obj and parse_rational(obj["slack"]) != cert.slack:
        raise ParseError("'slack' disagrees with the coefficient matrix")
    return cert


def _level_to_json(level: TraceLevel) -> dict:
    r, st = level.record, level.record.state
    return {
        "level": r.level,
        "identity": r.identity,
        "s": r.s,
        "t": r.t,
        "a_s": r.a_s,
        "b_t": r.b_t,
        "side": r.side,
        "replaced": r.replaced_value,
        "a": list(st.a),
        "b": list(st.b),
        "origin_row": [k + 1 for k in st.origin_row],
        "origin_col": [k + 1 for k in st.origin_col],
        "active_x": sorted(k + 1 for k in st.active_x),
        "active_y": sorted(k + 1 for k in st.active_y),
        "lambdas": _matrix_to_json(level.lambdas),
    }


def trace_to_json(levels) -> list:
    return [_level_to_json(lv) for lv in levels]


def trace_from_json(obj) -> list[TraceLevel]:
    if not isinstance(obj, list):
        raise ParseError("trace must be an array of levels")
    out = []
    for item in obj:
        try:
            state = BinaryState(
                tuple(item["a"]), tuple(item["b"]),
                tuple(k - 1 for k in item["origin_row"]),
                tuple(k - 1 for k in item["origin_col"]),
                frozenset(k - 1 for k in item["active_x"]),
                frozenset(k - 1 for k in item["active_y"]),
            )
            record = LevelRecord(
                item["level"], item["identity"], item["s"], item["t"],
                item["a_s"], item["b_t"], item["side"], item["replaced"], state,
            )
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed trace level: {exc}") from exc
        out.append(TraceLevel(record, _matrix_from_json(item["lambdas"])))
    return out


def solutions_to_json(sols) -> list:
    return [s.to_json() for s in sols]


def solutions_from_json(obj):
    if not isinstance(obj, list):
        raise ParseError("expected an array of solutions")
    return [solution_from_json(o) for o in obj]
