"""Line-oriented session language and the ``vectop`` command.

A session declares one field, some named topologies and maps, and a list of
queries::

    field arch minpoly=x^2-2 interval=1,2
    topology T dim=2 basis=[1,a]
    hausdorff T

Each query prints one record (``key=value`` pairs, or JSON with
``--json``).  Exit status: 0 on success, 1 if any query raised a domain
error, 2 on a parse error.

Neighbourhood queries (``member``) use the basic neighbourhoods
{y : ||P(y - x)|| < eps}, where P projects away the topology's subspace
along the coordinates outside its pivot columns and ||.|| is the sum of
absolute values.  These generate the same topology as the quotient norm but
are exactly computable.  When the enclosure of ||P(y - x)|| still contains
eps after ``cap`` refinement rounds the verdict is ``boundary-undecidable``.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import finite
from .arith import Poly, QQ, format_poly
from .errors import VectopError
from .fields import model_create
from .linalg import Subspace
from .topology import (
    DEFAULT_PRECISION_CAP, LinearMap, NeighborhoodQuery, closure_of_zero,
    in_neighborhood, is_continuous, is_hausdorff, q_linear_independent,
    topology_compare, topology_from_subspace, topology_join, topology_meet,
)

__all__ = [
    "ParseError", "FieldDecl", "TopologyDecl", "MapDecl", "Query",
    "SessionSpec", "parse_session", "format_session", "run_query",
    "run_session", "main", "PRECISION_ENV",
]

PRECISION_ENV = "VECTOP_PRECISION_CAP"


class ParseError(VectopError):
    code = "syntax-error"

    def __init__(self, message, line, column, code=None):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line, self.column, self.detail = line, column, message
        if code:
            self.code = code


# --- session data -------------------------------------------------------------

Entry = tuple  # coefficients of a polynomial in ``a``, lowest degree first


@dataclass(frozen=True)
class FieldDecl:
    kind: str
    p: int | None = None
    minpoly: tuple = ()
    interval: tuple | None = None
    residue: int | None = None


@dataclass(frozen=True)
class TopologyDecl:
    dim: int
    basis: tuple[tuple[Entry, ...], ...]


@dataclass(frozen=True)
class MapDecl:
    rows: tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class Query:
    kind: str
    names: tuple[str, ...] = ()
    params: tuple = ()

    def param(self, key, default=None):
        return dict(self.params).get(key, default)


@dataclass
class SessionSpec:
    field: FieldDecl | None = None
    topologies: dict = dc_field(default_factory=dict)
    maps: dict = dc_field(default_factory=dict)
    queries: list = dc_field(default_factory=list)


# --- lexical helpers ----------------------------------------------------------

_RAT = re.compile(r"[+-]?\d+(?:/\d+)?")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_']*$")
_TERM = re.compile(r"(?P<sign>[+-])?(?P<coef>\d+(?:/\d+)?)?(?P<star>\*)?(?:(?P<var>[A-Za-z])(?:\^(?P<exp>\d+))?)?")

NAME_ARITY = {
    "hausdorff": 1, "closure-zero": 1, "join": 2, "meet": 2, "compare": 2,
    "continuous": 3, "member": 1,
}
PARAM_QUERIES = {"count-subspaces": ("q", "n"), "enumerate-topologies": ("p", "n")}


def _rat(text, line, col):
    if not _RAT.fullmatch(text):
        raise ParseError(f"expected a rational number, got {text!r}", line, col)
    return Fraction(text)


def _int(text, line, col):
    if not re.fullmatch(r"[+-]?\d+", text):
        raise ParseError(f"expected an integer, got {text!r}", line, col)
    return int(text)


def parse_poly(text: str, var: str, line: int = 1, col: int = 1) -> tuple:
    """Parse ``1/2+3a-a^2`` style polynomials into coefficient tuples."""
    if not text:
        raise ParseError("empty expression", line, col)
    coeffs: dict[int, Fraction] = {}
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if m is None or m.end() == pos or (pos and not m.group("sign")):
            raise ParseError(f"unexpected {text[pos]!r}", line, col + pos)
        if m.group("var") is None and m.group("coef") is None:
            raise ParseError("missing term", line, col + pos)
        if m.group("var") is not None and m.group("var") != var:
            raise ParseError(f"unknown symbol {m.group('var')!r}; expected {var!r}", line,
                             col + m.start("var"))
        if m.group("star") and (m.group("coef") is None or m.group("var") is None):
            raise ParseError("misplaced '*'", line, col + m.start("star"))
        c = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("sign") == "-":
            c = -c
        e = 0
        if m.group("var"):
            e = int(m.group("exp")) if m.group("exp") else 1
        coeffs[e] = coeffs.get(e, Fraction(0)) + c
        pos = m.end()
    deg = max(coeffs)
    out = [coeffs.get(i, Fraction(0)) for i in range(deg + 1)]
    while out and not out[-1]:
        out.pop()
    return tuple(out)


def _split_rows(text, line, col, allow_bare=False):
    """``[r;r]`` -> list of (row_text, column) pairs, each row a list of entries."""
    if text.startswith("[") and text.endswith("]"):
        inner, off = text[1:-1], 1
    elif allow_bare:
        inner, off = text, 0
    else:
        raise ParseError("expected '[...]'", line, col)
    rows = []
    if not inner:
        return rows
    pos = 0
    for row_text in inner.split(";"):
        entries = []
        epos = pos
        for e in row_text.split(","):
            entries.append((e, col + off + epos))
            epos += len(e) + 1
        rows.append(entries)
        pos += len(row_text) + 1
    return rows


def _entries(text, line, col, var="a", allow_bare=False):
    return [[parse_poly(e, var, line, c) for e, c in row]
            for row in _split_rows(text, line, col, allow_bare)]


def _words(line_text):
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line_text)]


def _kv(words, line, allowed, required=()):
    out = {}
    for w, c in words:
        key, eq, value = w.partition("=")
        if not eq:
            raise ParseError(f"expected key=value, got {w!r}", line, c)
        if key not in allowed:
            raise ParseError(f"unknown key {key!r}", line, c)
        if key in out:
            raise ParseError(f"duplicate key {key!r}", line, c)
        out[key] = (value, c + len(key) + 1)
    for key in required:
        if key not in out:
            raise ParseError(f"missing {key}=", line, words[-1][1] if words else 1)
    return out


# --- parser -----------------------------------------------------------------

def parse_session(text: str) -> SessionSpec:
    spec = SessionSpec()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line_text = raw.split("#", 1)[0]
        words = _words(line_text)
        if not words:
            continue
        head = words[0][0]
        if head == "field":
            _parse_field(spec, words, lineno)
        elif head == "topology":
            _parse_topology(spec, words, lineno)
        elif head == "map":
            _parse_map(spec, words, lineno)
        else:
            _parse_query(spec, words, lineno)
    return spec


def _parse_field(spec, words, ln):
    if spec.field is not None:
        raise ParseError("a session declares exactly one field", ln, 1, "field-mismatch")
    if len(words) < 2:
        raise ParseError("missing field kind", ln, words[0][1] + 5)
    kind, kcol = words[1]
    rest = words[2:]
    if kind == "arch":
        kv = _kv(rest, ln, {"minpoly", "interval"}, ("minpoly", "interval"))
        mp = parse_poly(kv["minpoly"][0], "x", ln, kv["minpoly"][1])
        iv_text, iv_col = kv["interval"]
        parts = iv_text.split(",")
        if len(parts) != 2:
            raise ParseError("interval needs two endpoints", ln, iv_col)
        lo = _rat(parts[0], ln, iv_col)
        hi = _rat(parts[1], ln, iv_col + len(parts[0]) + 1)
        spec.field = FieldDecl("arch", minpoly=mp, interval=(lo, hi))
    elif kind == "padic":
        kv = _kv(rest, ln, {"p", "minpoly", "residue"}, ("p", "minpoly", "residue"))
        spec.field = FieldDecl(
            "padic", p=_int(kv["p"][0], ln, kv["p"][1]),
            minpoly=parse_poly(kv["minpoly"][0], "x", ln, kv["minpoly"][1]),
            residue=_int(kv["residue"][0], ln, kv["residue"][1]))
    elif kind == "prime":
        kv = _kv(rest, ln, {"p"}, ("p",))
        spec.field = FieldDecl("prime", p=_int(kv["p"][0], ln, kv["p"][1]))
    else:
        raise ParseError(f"unknown field kind {kind!r}", ln, kcol)


def _require_field(spec, ln, col):
    if spec.field is None:
        raise ParseError("declaration before 'field'", ln, col, "field-mismatch")


def _check_entry(spec, entry, ln, col):
    if len(entry) > 1 and spec.field.kind == "prime":
        raise ParseError("the symbol 'a' is not available over a prime field", ln, col,
                         "field-mismatch")


def _declare_name(spec, words, ln):
    if len(words) < 2:
        raise ParseError("missing name", ln, words[0][1])
    name, ncol = words[1]
    if not _NAME.match(name):
        raise ParseError(f"invalid name {name!r}", ln, ncol)
    if name in spec.topologies or name in spec.maps:
        raise ParseError(f"{name!r} is already declared", ln, ncol, "duplicate-name")
    return name


def _parse_topology(spec, words, ln):
    _require_field(spec, ln, words[0][1])
    name = _declare_name(spec, words, ln)
    kv = _kv(words[2:], ln, {"dim", "basis"}, ("dim",))
    dim = _int(kv["dim"][0], ln, kv["dim"][1])
    if dim < 0:
        raise ParseError("dim must be non-negative", ln, kv["dim"][1])
    basis = []
    if "basis" in kv:
        text, col = kv["basis"]
        for row, cols in zip(_entries(text, ln, col), _split_rows(text, ln, col)):
            if len(row) != dim:
                raise ParseError(f"basis vector has {len(row)} entries, dim is {dim}", ln,
                                 cols[0][1], "arity-error")
            for entry, (_, c) in zip(row, cols):
                _check_entry(spec, entry, ln, c)
            basis.append(tuple(row))
    spec.topologies[name] = TopologyDecl(dim, tuple(basis))


def _parse_map(spec, words, ln):
    _require_field(spec, ln, words[0][1])
    name = _declare_name(spec, words, ln)
    kv = _kv(words[2:], ln, {"rows"}, ("rows",))
    text, col = kv["rows"]
    rows = []
    width = None
    for row in _split_rows(text, ln, col):
        vals = tuple(_rat(e, ln, c) for e, c in row)
        if width is not None and len(vals) != width:
            raise ParseError("ragged matrix", ln, row[0][1], "arity-error")
        width = len(vals)
        rows.append(vals)
    if not rows:
        raise ParseError("a map needs at least one row", ln, col)
    spec.maps[name] = MapDecl(tuple(rows))


def _vector(spec, text, ln, col):
    rows = _entries(text, ln, col, allow_bare=True)
    if len(rows) != 1:
        raise ParseError("expected a single vector", ln, col)
    for e in rows[0]:
        _check_entry(spec, e, ln, col)
    return tuple(rows[0])


def _parse_query(spec, words, ln):
    kind, kcol = words[0]
    if kind in PARAM_QUERIES:
        keys = PARAM_QUERIES[kind]
        kv = _kv(words[1:], ln, set(keys), keys)
        spec.queries.append(Query(kind, (), tuple((k, _int(kv[k][0], ln, kv[k][1])) for k in keys)))
        return
    _require_field(spec, ln, kcol)
    if kind == "qli":
        if len(words) != 2:
            raise ParseError("qli takes one bracketed list", ln, kcol)
        elems = _vector(spec, words[1][0], ln, words[1][1])
        spec.queries.append(Query(kind, (), (("elems", elems),)))
        return
    if kind not in NAME_ARITY:
        raise ParseError(f"unknown command {kind!r}", ln, kcol)
    arity = NAME_ARITY[kind]
    names = words[1:1 + arity]
    if len(names) < arity or any("=" in w for w, _ in names):
        raise ParseError(f"{kind} expects {arity} name(s)", ln, kcol)
    for i, (w, c) in enumerate(names):
        want_map = kind == "continuous" and i == 0
        table = spec.maps if want_map else spec.topologies
        if w not in table:
            what = "map" if want_map else "topology"
            raise ParseError(f"undeclared {what} {w!r}", ln, c, "undeclared-name")
    if kind in ("join", "meet", "compare"):
        a, b = (spec.topologies[w] for w, _ in names)
        if a.dim != b.dim:
            raise ParseError("topologies have different dimensions", ln, names[1][1],
                             "arity-error")
    params = ()
    rest = words[1 + arity:]
    if kind == "member":
        kv = _kv(rest, ln, {"center", "point", "eps", "cap"}, ("center", "point", "eps"))
        dim = spec.topologies[names[0][0]].dim
        center = _vector(spec, kv["center"][0], ln, kv["center"][1])
        point = _vector(spec, kv["point"][0], ln, kv["point"][1])
        for v, key in ((center, "center"), (point, "point")):
            if len(v) != dim:
                raise ParseError(f"{key} has {len(v)} entries, dim is {dim}", ln,
                                 kv[key][1], "arity-error")
            if any(len(e) > 1 for e in v):
                raise ParseError(f"{key} must have base-field entries", ln, kv[key][1],
                                 "field-mismatch")
        eps = _rat(kv["eps"][0], ln, kv["eps"][1])
        if eps <= 0:
            raise ParseError("eps must be positive", ln, kv["eps"][1])
        params = (("center", center), ("point", point), ("eps", eps))
        if "cap" in kv:
            cap = _int(kv["cap"][0], ln, kv["cap"][1])
            if cap < 1:
                raise ParseError("cap must be positive", ln, kv["cap"][1])
            params += (("cap", cap),)
    elif rest:
        raise ParseError(f"unexpected {rest[0][0]!r}", ln, rest[0][1])
    spec.queries.append(Query(kind, tuple(w for w, _ in names), params))


# --- printer ----------------------------------------------------------------

def _fmt_entry(e):
    return format_poly(e, "a")


def _fmt_vec(v):
    return "[" + ",".join(_fmt_entry(e) for e in v) + "]"


def _fmt_rows(rows, fmt=_fmt_entry):
    return "[" + ";".join(",".join(fmt(e) for e in row) for row in rows) + "]"


def format_session(spec: SessionSpec) -> str:
    """Canonical text of a session; ``parse_session`` inverts it."""
    out = []
    f = spec.field
    if f is not None:
        if f.kind == "arch":
            out.append(f"field arch minpoly={format_poly(f.minpoly, 'x')} "
                       f"interval={f.interval[0]},{f.interval[1]}")
        elif f.kind == "padic":
            out.append(f"field padic p={f.p} minpoly={format_poly(f.minpoly, 'x')} residue={f.residue}")
        else:
            out.append(f"field prime p={f.p}")
    for name, t in spec.topologies.items():
        line = f"topology {name} dim={t.dim}"
        if t.basis:
            line += " basis=" + _fmt_rows(t.basis)
        out.append(line)
    for name, m in spec.maps.items():
        out.append(f"map {name} rows=" + _fmt_rows(m.rows, str))
    for q in spec.queries:
        parts = [q.kind, *q.names]
        for key, value in q.params:
            if key == "elems":
                parts.append(_fmt_vec(value))
            elif key in ("center", "point"):
                parts.append(f"{key}={_fmt_vec(value)}")
            else:
                parts.append(f"{key}={value}")
        out.append(" ".join(parts))
    return "\n".join(out) + "\n"


# --- evaluation -------------------------------------------------------------

def _build_model(decl: FieldDecl):
    mp = Poly(decl.minpoly, QQ) if decl.minpoly else None
    return model_create(decl.kind, minpoly=mp, interval=decl.interval, p=decl.p,
                        residue=decl.residue)


def _element(model, entry):
    if model.kind == "prime":
        return model(entry[0] if entry else 0)
    return model.from_poly(Poly(entry, QQ))


def _fmt_subspace(s: Subspace) -> str:
    return "[" + ";".join(",".join(str(x) for x in row) for row in s.basis) + "]"


class _Context:
    def __init__(self, spec: SessionSpec, default_cap: int):
        self.spec = spec
        self.default_cap = default_cap
        self._model = None
        self._topologies = {}

    @property
    def model(self):
        if self._model is None:
            self._model = _build_model(self.spec.field)
        return self._model

    def topology(self, name):
        if name not in self._topologies:
            decl = self.spec.topologies[name]
            gens = [[_element(self.model, e) for e in row] for row in decl.basis]
            self._topologies[name] = topology_from_subspace(self.model, decl.dim, gens)
        return self._topologies[name]

    def linear_map(self, name):
        decl = self.spec.maps[name]
        return LinearMap.from_rows(self.model, [[self.model(x) for x in row] for row in decl.rows])


def run_query(ctx: _Context, q: Query) -> dict:
    """Evaluate one query; returns an ordered record (raises on domain errors)."""
    rec = {"query": q.kind}
    k = q.kind
    if k == "count-subspaces":
        rec.update(q=q.param("q"), n=q.param("n"))
        rec["result"] = finite.count_subspaces(q.param("q"), q.param("n"))
    elif k == "enumerate-topologies":
        p, n = q.param("p"), q.param("n")
        rec.update(p=p, n=n)
        tops = finite.enumerate_compatible_topologies(p, n)
        strips = {finite.strip_topology_finite(p, n, s).opens for s in finite.enumerate_subspaces(p, n)}
        rec["result"] = len(tops)
        rec["bijection"] = {t.opens for t in tops} == strips and len(tops) == len(strips)
    elif k == "qli":
        elems = [_element(ctx.model, e) for e in q.param("elems")]
        rec["elems"] = _fmt_vec(q.param("elems"))
        rec["result"] = q_linear_independent(elems)
    elif k in ("hausdorff", "closure-zero"):
        t = ctx.topology(q.names[0])
        rec["topology"] = q.names[0]
        if k == "hausdorff":
            rec["result"] = is_hausdorff(t)
        else:
            z = closure_of_zero(t)
            rec["dim"] = z.dim
            rec["result"] = _fmt_subspace(z)
    elif k in ("join", "meet", "compare"):
        t1, t2 = (ctx.topology(n) for n in q.names)
        rec["left"], rec["right"] = q.names
        if k == "compare":
            rec["result"] = topology_compare(t1, t2).value
        else:
            t = topology_join(t1, t2) if k == "join" else topology_meet(t1, t2)
            rec["dim"] = t.subspace.dim
            rec["result"] = _fmt_subspace(t.subspace)
    elif k == "continuous":
        rec["map"], rec["domain"], rec["codomain"] = q.names
        lmap = ctx.linear_map(q.names[0])
        rec["result"] = is_continuous(lmap, ctx.topology(q.names[1]), ctx.topology(q.names[2]))
    elif k == "member":
        t = ctx.topology(q.names[0])
        rec["topology"] = q.names[0]
        cap = q.param("cap", ctx.default_cap)
        query = NeighborhoodQuery(
            tuple(_element(ctx.model, e) for e in q.param("center")),
            tuple(_element(ctx.model, e) for e in q.param("point")),
            q.param("eps"), cap)
        rec["eps"] = str(q.param("eps"))
        rec["cap"] = cap
        rec["result"] = in_neighborhood(t, query).value
    else:  # pragma: no cover - parser rejects unknown commands
        raise ValueError(k)
    return rec


def run_session(spec: SessionSpec, default_cap: int = DEFAULT_PRECISION_CAP):
    """Yield ``(record, ok)`` per query; domain errors become error records."""
    ctx = _Context(spec, default_cap)
    for q in spec.queries:
        try:
            yield run_query(ctx, q), True
        except (VectopError, ValueError, ArithmeticError) as exc:
            code = getattr(exc, "code", None) or (
                "division-by-zero" if isinstance(exc, ZeroDivisionError) else "domain-error")
            yield {"query": q.kind, "error": code, "message": str(exc)}, False


def _render(rec: dict, as_json: bool) -> str:
    if as_json:
        return json.dumps(rec)
    parts = []
    for key, value in rec.items():
        if isinstance(value, bool):
            value = "true" if value else "false"
        value = str(value)
        if key == "message" or re.search(r"\s|\"", value):
            value = json.dumps(value)
        parts.append(f"{key}={value}")
    return " ".join(parts)


def _default_cap() -> int:
    raw = os.environ.get(PRECISION_ENV)
    if raw is None:
        return DEFAULT_PRECISION_CAP
    try:
        cap = int(raw)
    except ValueError:
        cap = 0
    if cap < 1:
        raise SystemExit(f"{PRECISION_ENV} must be a positive integer, got {raw!r}")
    return cap


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="vectop",
        description="Decide questions about compatible topologies on K^n.",
        epilog=__doc__.split("\n\n", 3)[-1],
        formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("session", nargs="?", help="session file (default: stdin)")
    ap.add_argument("--json", action="store_true", help="emit one JSON object per query")
    args = ap.parse_args(argv)

    if args.session:
        with open(args.session, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    try:
        spec = parse_session(text)
    except ParseError as exc:
        rec = {"error": exc.code, "line": exc.line, "column": exc.column, "message": exc.detail}
        print(_render(rec, args.json))
        return 2
    status = 0
    for rec, ok in run_session(spec, _default_cap()):
        print(_render(rec, args.json))
        if not ok:
            status = 1
    return status


if __name__ == "__main__":
    sys.exit(main())
