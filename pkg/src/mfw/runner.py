"""Build the objects of a parsed program and execute its queries.

Every query produces one output record with the frozen schema::

    {"query": <printed query>, "kind": ..., "params": {...},
     "result": {...}, "convention": {...} | null, "version": "..."}

JSON output is ``json.dumps`` with sorted keys over the list of records,
so it is byte-for-byte reproducible regardless of ``jobs``.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from ._version import __version__
from .dsl import FieldDecl, MFDecl, Program, Query, RingDecl, SectionDecl, format_statement
from .errors import MFWError, ParseError
from .expr import evaluate
from .factorization import MatrixFactorization
from .hom import DEFAULT_CAP, hom_shifted, hom_table
from .invertible import bh_transpose, exponent_matrix, weights_from_matrix
from .oracle import coker_presentation, ext_dim_periodic, stable_hom_dim
from .poly import GradedRing
from .pushforward import make_section, push
from .scalars import QQ, make_field
from .verify import DualityConvention, directedness_report, verify_serre, verify_theorem

FORMATS = ("json", "csv", "text")


class ValidationError(MFWError):
    """A declaration parsed but does not describe a valid object."""


class QueryError(MFWError):
    def __init__(self, index: int, query: Query, message: str):
        self.index = index
        line = f" at line {query.pos[0]}" if query.pos else ""
        super().__init__(f"query {index + 1} ({query.kind}){line}: {message}")


@dataclass
class RunOptions:
    format: str = "json"
    field: object = None  # overrides the program's field declaration
    jobs: int = 1
    cap: int = DEFAULT_CAP


@dataclass
class Environment:
    field: object
    rings: dict = field(default_factory=dict)
    sections: dict = field(default_factory=dict)
    mfs: dict = field(default_factory=dict)

    def ring(self, name: str) -> GradedRing:
        if name in self.sections:
            return self.sections[name].S
        return self.rings[name]


def _where(decl) -> str:
    return f"line {decl.pos[0]}: " if decl.pos else ""


def _build_mf(env: Environment, decl: MFDecl) -> MatrixFactorization:
    ring = env.ring(decl.ring)
    f = evaluate(decl.f, ring)
    phi = [[evaluate(x, ring) for x in row] for row in decl.phi]
    psi = [[evaluate(x, ring) for x in row] for row in decl.psi]
    m = len(phi)
    d = decl.d if decl.d is not None else (0,) * m
    e = decl.e
    if e is None:
        # read e off the first nonzero entry of each column of phi
        e = []
        for i in range(len(phi[0]) if phi else 0):
            for j in range(m):
                p = phi[j][i]
                if p and not isinstance(p.degree, str):
                    e.append(d[j] - p.degree)
                    break
            else:
                raise ValidationError(f"cannot infer e[{i}]: column {i} of phi is zero; give e=[...]")
    return MatrixFactorization(ring, f, d, e, phi, psi)


def build(program: Program, field_override=None) -> Environment:
    """Construct rings, sections and factorizations; raises :class:`ValidationError`."""
    decl = program.field
    fld = make_field(field_override) if field_override is not None else (
        make_field(decl.characteristic) if decl else QQ)
    env = Environment(fld)
    for s in program.statements:
        if isinstance(s, (FieldDecl, Query)):
            continue
        try:
            if isinstance(s, RingDecl):
                env.rings[s.name] = GradedRing([v for v, _ in s.variables], [w for _, w in s.variables], fld)
            elif isinstance(s, SectionDecl):
                R = env.rings[s.ring]
                S = R.extend(s.var, s.weight)
                env.sections[s.name] = make_section(R, s.var, s.weight, evaluate(s.f, S), evaluate(s.g, S))
            elif isinstance(s, MFDecl):
                env.mfs[s.name] = _build_mf(env, s)
        except ParseError:
            raise
        except MFWError as exc:
            raise ValidationError(f"{_where(s)}{type(s).__name__[:-4].lower()} {s.name}: {exc}") from exc
    return env


# -- queries ---------------------------------------------------------------

def _matrix_json(M) -> list:
    return M.to_lists()


def _mf_json(E: MatrixFactorization) -> dict:
    return {"f": str(E.f), "d": list(E.d), "e": list(E.e),
            "phi": _matrix_json(E.phi), "psi": _matrix_json(E.psi)}


def _convention(q: Query, ring) -> object:
    delta = q.option("delta", "auto")
    sigma = q.option("sigma")
    if delta == "auto":
        if sigma is not None:
            raise ValidationError("sigma needs an explicit delta")
        return "auto"
    if delta == ring.ngens:
        base = "dim R"
    elif delta == ring.ngens - 1:
        base = "dim Rbar"
    else:
        raise ValidationError(f"delta must be dim R = {ring.ngens} or dim Rbar = {ring.ngens - 1}")
    return DualityConvention(delta, 1 if sigma is None else sigma, base)


def _twists(q: Query, h: int) -> list:
    r = q.option("twists")
    return list(r.values()) if r is not None else list(range(-(h + 2), h + 3))


def _execute(env: Environment, q: Query, opts: RunOptions):
    """Return ``(params, result, convention, passed)``."""
    mf = [env.mfs[a] for a in q.args] if q.kind != "transpose" else []
    cap, jobs = opts.cap, opts.jobs
    kind = q.kind
    if kind == "hom":
        E, T = mf
        n, i = q.option("twist", 0), q.option("shift", 0)
        H = hom_shifted(E, T, n, i, cap)
        res = {"dim": H.dim, "cycle_dim": H.cycle_dim, "boundary_dim": H.boundary_dim}
        if q.option("witness"):
            res["basis"] = [{"alpha": _matrix_json(m.alpha), "beta": _matrix_json(m.beta)}
                            for m in H.class_basis()]
        params = {"source": q.args[0], "target": q.args[1], "twist": n, "shift": i}
        return params, res, None, True
    if kind == "homtable":
        E, T = mf
        shifts = q.option("shifts")
        shifts = list(shifts.values()) if shifts is not None else [-1, 0, 1]
        twists = _twists(q, E.h)
        table = hom_table(E, T, twists, shifts, cap, jobs)
        params = {"source": q.args[0], "target": q.args[1], "shifts": shifts, "twists": twists}
        rows = [{"shift": i, "twist": n, "dim": table[(i, n)]} for i in shifts for n in twists]
        return params, {"table": rows}, None, True
    if kind == "push":
        sec = env.sections[q.option("section")]
        P = push(mf[0], sec)
        return {"source": q.args[0], "section": q.option("section")}, _mf_json(P), None, True
    if kind == "verify-theorem":
        E, T = mf
        sec = env.sections[q.option("section")]
        shifts = q.option("shifts")
        shifts = list(shifts.values()) if shifts is not None else list(range(-3, 4))
        twists = _twists(q, sec.h)
        conv = _convention(q, sec.R)
        rep = verify_theorem(E, T, sec, shifts, twists, conv, cap, jobs)
        params = {"source": q.args[0], "target": q.args[1], "section": q.option("section"),
                  "shifts": shifts, "twists": twists,
                  "delta": conv if conv == "auto" else conv.delta,
                  "r": sec.r, "h": sec.h, "a": sec.a, "dual_twist": sec.dual_twist}
        conv_json = rep.convention.to_json() if rep.convention else None
        return params, rep.to_json(), conv_json, rep.passed
    if kind == "verify-serre":
        E, T = mf
        twists = _twists(q, E.h)
        conv = _convention(q, E.ring)
        rep = verify_serre(E, T, twists, conv, cap, jobs)
        params = {"source": q.args[0], "target": q.args[1], "twists": twists,
                  "delta": conv if conv == "auto" else conv.delta,
                  "r_plus_h": E.ring.a_invariant + E.h}
        conv_json = rep.convention.to_json() if rep.convention else None
        return params, rep.to_json(), conv_json, rep.passed
    if kind == "oracle":
        E, T = mf
        n, i = q.option("twist", 0), q.option("shift", 0)
        if i < 0:
            raise ValidationError("oracle needs shift >= 0")
        hom = hom_shifted(E, T, n, i, cap).dim
        if i == 0:
            method, other = "stable_hom", stable_hom_dim(coker_presentation(E), coker_presentation(T), n)
        else:
            method, other = "ext_periodic", ext_dim_periodic(E, T, i, n)
        params = {"source": q.args[0], "target": q.args[1], "twist": n, "shift": i}
        return params, {"hom": hom, "oracle": other, "method": method, "agree": hom == other}, None, True
    if kind == "transpose":
        ring = env.ring(q.args[0])
        p = evaluate(q.poly, ring)
        A = exponent_matrix(p)
        weights, c = weights_from_matrix(A)
        t = bh_transpose(A)
        tw, tc = weights_from_matrix(A.transpose())
        res = {"polynomial": str(p), "matrix": A.to_lists(), "weights": list(weights), "degree": c,
               "transpose": str(t), "transpose_matrix": A.transpose().to_lists(),
               "transpose_weights": list(tw), "transpose_degree": tc}
        return {"ring": q.args[0], "polynomial": str(p)}, res, None, True
    if kind == "directed":
        sec = env.sections[q.option("section")]
        delta = q.option("delta")
        conv = None if delta is None else _convention(q, sec.R)
        rep = directedness_report(mf, sec, conv, cap, jobs)
        params = {"objects": list(q.args), "section": q.option("section")}
        return params, rep.to_json(), rep.convention.to_json(), True
    raise ValidationError(f"unknown query kind {kind!r}")


def run_program(program: Program, options: RunOptions | None = None) -> list[dict]:
    """Execute every query in order; engine errors are re-raised as :class:`QueryError`."""
    opts = options or RunOptions()
    env = build(program, opts.field)
    outputs = []
    for k, q in enumerate(program.queries):
        try:
            params, result, conv, _ = _execute(env, q, opts)
        except MFWError as exc:
            raise QueryError(k, q, str(exc)) from exc
        outputs.append({"query": format_statement(q), "kind": q.kind, "params": params,
                        "result": result, "convention": conv, "version": __version__})
    return outputs


VERIFY_KINDS = ("verify-theorem", "verify-serre")


def all_passed(outputs: list[dict]) -> bool:
    """False if some verify query produced a failing report."""
    return all(o["result"]["pass"] for o in outputs if o["kind"] in VERIFY_KINDS)


# -- rendering ---------------------------------------------------------------

def render_json(outputs: list[dict]) -> str:
    return json.dumps(outputs, sort_keys=True, indent=2) + "\n"


def _flatten(value, prefix=""):
    if isinstance(value, dict):
        for k in sorted(value):
            yield from _flatten(value[k], f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(value, list):
        for i, v in enumerate(value):
            yield from _flatten(v, f"{prefix}[{i}]")
    else:
        yield prefix, value


def _scalar(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render_csv(outputs: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["query", "kind", "key", "value"])
    for k, out in enumerate(outputs, 1):
        for section in ("params", "result", "convention"):
            for key, v in _flatten(out[section], section):
                w.writerow([k, out["kind"], key, _scalar(v)])
    return buf.getvalue()


def _text_rows(result) -> list[str]:
    lines = []
    for r in result["rows"]:
        rhs = " + ".join(str(s) for s in r["summands"])
        lines.append(f"  i={r['i']:>3} n={r['n']:>3}  {r['lhs']} = {rhs}"
                     f"  (dual twist {r['dual_twist']})  {'ok' if r['pass'] else 'FAIL'}")
    return lines


def render_text(outputs: list[dict]) -> str:
    lines = []
    for k, out in enumerate(outputs, 1):
        lines.append(f"[{k}] {out['query']}")
        res, kind = out["result"], out["kind"]
        if kind in VERIFY_KINDS:
            conv = res["convention"]
            desc = DualityConvention(**conv).describe() if conv else "none passes"
            lines.append(f"  {'PASS' if res['pass'] else 'FAIL'}; convention: {desc}")
            for t in res["tried"]:
                lines.append(f"  tried {DualityConvention(**t['convention']).describe()}: "
                             f"{'pass' if t['pass'] else 'fail'}")
            lines.extend(_text_rows(res))
        elif kind == "homtable":
            p = out["params"]
            cells = {(r["shift"], r["twist"]): r["dim"] for r in res["table"]}
            lines.append("  shift\\twist " + " ".join(f"{n:>3}" for n in p["twists"]))
            for i in p["shifts"]:
                lines.append(f"  {i:>11} " + " ".join(f"{cells[(i, n)]:>3}" for n in p["twists"]))
        elif kind == "directed":
            for name in ("hom", "push_hom", "dual"):
                lines.append(f"  {name}: {res[name]}")
        else:
            for key, v in _flatten(res):
                lines.append(f"  {key} = {_scalar(v)}")
    return "\n".join(lines) + ("\n" if lines else "")


def render(outputs: list[dict], fmt: str = "json") -> str:
    if fmt == "json":
        return render_json(outputs)
    if fmt == "csv":
        return render_csv(outputs)
    if fmt == "text":
        return render_text(outputs)
    raise ValueError(f"unknown format {fmt!r} (choose from {', '.join(FORMATS)})")
