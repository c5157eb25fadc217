"""Command-line client for the service.

Runs against the in-process app by default; ``--server URL`` targets a
running instance instead.  Formats: ``table`` for reading, ``records`` for
lossless line-oriented JSON, ``dot`` for poset graphs.
"""

from __future__ import annotations

import json
import sys

import click


def _client(server: str | None):
    if server:
        import httpx

        return httpx.Client(base_url=server, timeout=600.0)
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DeprecationWarning)
        from fastapi.testclient import TestClient

    from .service import app

    return TestClient(app)


def _post(server, path, payload):
    with _client(server) as c:
        resp = c.post(path, json=payload)
    if resp.status_code != 200:
        try:
            detail = resp.json().get("detail", resp.text)
        except Exception:
            detail = resp.text
        raise click.UsageError(f"{path}: {detail}")
    return resp.json()


def _emit(text: str, output: str | None):
    if output:
        try:
            with open(output, "w") as fh:
                fh.write(text)
                if not text.endswith("\n"):
                    fh.write("\n")
        except OSError as e:
            raise click.ClickException(f"cannot write {output}: {e}")
    else:
        click.echo(text)


def _records(kind: str, rows) -> str:
    return "\n".join(json.dumps({"kind": kind, **row}, sort_keys=True) for row in rows)


def read_records(text: str):
    """Inverse of the records format: one JSON object per non-empty line."""
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def _form_str(f, labels=None):
    terms = []
    for c, name in zip(f["coeffs"], labels or [f"t_{k+1}" for k in range(len(f["coeffs"]))]):
        if c:
            terms.append(f"{'+' if c > 0 else '-'}{abs(c) if abs(c) != 1 else ''}{name}")
    for c, k in zip(f.get("lam_coeffs", []), range(1, len(f.get("lam_coeffs", [])) + 1)):
        if c:
            terms.append(f"{'+' if c > 0 else '-'}{abs(c) if abs(c) != 1 else ''}lam_{k}")
    lhs = " ".join(terms) if terms else "0"
    return f"{lhs} >= 0" + (f"    [{f['label']}]" if f.get("label") else "")


_type_opts = [
    click.option("--type", "family", type=click.Choice(["A", "B", "C", "D"]),
                 required=True, help="Lie type family."),
    click.option("--rank", type=int, required=True, help="Rank n."),
]


def _add_opts(opts):
    def deco(fn):
        for o in reversed(opts):
            fn = o(fn)
        return fn

    return deco


@click.group()
@click.option("--server", default=None, metavar="URL",
              help="Base URL of a running service (default: in-process).")
@click.pass_context
def main(ctx, server):
    """String cones, string/Lusztig polytopes, and branching."""
    ctx.ensure_object(dict)
    ctx.obj["server"] = server


@main.command()
@_add_opts(_type_opts)
@click.option("--system", type=click.Choice(["explicit", "generated"]),
              default="explicit", show_default=True,
              help="Explicit inequalities or the subword-generated system.")
@click.option("--format", "fmt", type=click.Choice(["table", "records"]),
              default="table", show_default=True)
@click.option("--output", default=None, metavar="PATH")
@click.pass_context
def cone(ctx, family, rank, system, fmt, output):
    """H-representation of the string cone."""
    data = _post(ctx.obj["server"], "/cone",
                 {"family": family, "rank": rank, "system": system})
    if fmt == "records":
        rows = [{"family": data["family"], "rank": data["rank"],
                 "system": data["system"], "labels": data["labels"], **f}
                for f in data["forms"]]
        _emit(_records("cone_form", rows), output)
        return
    lines = [f"string cone {family}{rank} ({system}), "
             f"word {tuple(data['word'])}, {len(data['forms'])} forms"]
    lines += ["  " + _form_str(f, data["labels"]) for f in data["forms"]]
    _emit("\n".join(lines), output)


def _parse_lam(lam_str, rank):
    try:
        coeffs = [int(x) for x in lam_str.split(",")]
    except ValueError:
        raise click.UsageError(f"bad lambda {lam_str!r}: expected comma-separated ints")
    if len(coeffs) != rank:
        raise click.UsageError(f"lambda needs {rank} coefficients, got {len(coeffs)}")
    return coeffs


@main.command()
@_add_opts(_type_opts)
@click.option("--lambda", "lam_str", "--lam", required=True, metavar="C1,C2,...",
              help="Dominant weight in fundamental coordinates.")
@click.option("--kind", type=click.Choice(["string", "lusztig"]),
              default="string", show_default=True)
@click.option("--h-rep", is_flag=True, help="Emit inequalities instead of points.")
@click.option("--format", "fmt", type=click.Choice(["table", "records"]),
              default="table", show_default=True)
@click.option("--output", default=None, metavar="PATH")
@click.pass_context
def polytope(ctx, family, rank, lam_str, kind, h_rep, fmt, output):
    """Lattice points (or Lusztig H-rep) of a polytope."""
    lam = _parse_lam(lam_str, rank)
    data = _post(ctx.obj["server"], "/polytope",
                 {"family": family, "rank": rank, "lam": lam, "kind": kind,
                  "output": "h-rep" if h_rep else "points"})
    if h_rep:
        if fmt == "records":
            _emit(_records("polytope_form", data["forms"]), output)
        else:
            lines = [f"{kind} polytope {family}{rank}, lambda {tuple(lam)}: "
                     f"{len(data['forms'])} forms"]
            lines += ["  " + _form_str(f) for f in data["forms"]]
            _emit("\n".join(lines), output)
        return
    if fmt == "records":
        rows = [{"point": p} for p in data["points"]]
        _emit(_records(f"{kind}_point", rows), output)
        return
    lines = [f"{kind} polytope {family}{rank}, lambda {tuple(lam)}: "
             f"{data['count']} lattice points"]
    lines += ["  " + " ".join(str(x) for x in p) for p in data["points"]]
    _emit("\n".join(lines), output)


@main.command()
@_add_opts(_type_opts)
@click.option("--lambda", "lam_str", "--lam", required=True, metavar="C1,C2,...")
@click.option("--kind", type=click.Choice(["string", "lusztig"]),
              default="string", show_default=True)
@click.option("--fibers", is_flag=True, help="Include the per-point fiber report.")
@click.option("--format", "fmt", type=click.Choice(["table", "records"]),
              default="table", show_default=True)
@click.option("--output", default=None, metavar="PATH")
@click.pass_context
def branch(ctx, family, rank, lam_str, kind, fibers, fmt, output):
    """Branching multiplicities and fiber report."""
    lam = _parse_lam(lam_str, rank)
    data = _post(ctx.obj["server"], "/branch",
                 {"family": family, "rank": rank, "lam": lam, "kind": kind,
                  "fibers": fibers})
    if kind == "lusztig":
        if fmt == "records":
            rows = [{"point": p} for p in data["points"]]
            _emit(_records("lusztig_branching_point", rows), output)
        else:
            lines = [f"Lusztig branching polytope {family}{rank}, "
                     f"lambda {tuple(lam)}: {len(data['points'])} lattice points"]
            lines += ["  " + " ".join(str(x) for x in p) for p in data["points"]]
            _emit("\n".join(lines), output)
        return
    if fmt == "records":
        rows = [{"mu": r["mu"], "multiplicity": r["multiplicity"],
                 "witnesses": r["witnesses"]} for r in data["rows"]]
        if data.get("fibers"):
            rows += [{"fiber": f} for f in data["fibers"]]
        _emit(_records("branch_row", rows), output)
        return
    lines = [f"branching {family}{rank} -> A{rank - 1}, lambda {tuple(lam)}",
             f"{'mu':>16}  multiplicity"]
    for r in data["rows"]:
        lines.append(f"{str(tuple(r['mu'])):>16}  {r['multiplicity']}")
    if data.get("fibers"):
        lines.append("fibers:")
        for f in data["fibers"]:
            lines.append(f"  plus point {tuple(f['plus_point'])} -> "
                         f"mu {tuple(f['mu'])}, fiber size {f['fiber_size']}")
    _emit("\n".join(lines), output)


@main.command()
@_add_opts(_type_opts)
@click.option("--lemma-level", is_flag=True,
              help="Use the smaller pre-theorem inequality system.")
@click.option("--format", "fmt", type=click.Choice(["dot", "table", "records"]),
              default="dot", show_default=True)
@click.option("--output", default=None, metavar="PATH")
@click.pass_context
def poset(ctx, family, rank, lemma_level, fmt, output):
    """Cover-relation poset of the explicit system (DOT by default)."""
    data = _post(ctx.obj["server"], "/poset",
                 {"family": family, "rank": rank, "lemma_level": lemma_level})
    if fmt == "dot":
        _emit(data["dot"], output)
    elif fmt == "records":
        rows = [{"lower": e[0], "greater": e[1]} for e in data["edges"]]
        _emit(_records("poset_edge", rows), output)
    else:
        lines = [f"poset {family}{rank}: {len(data['nodes'])} nodes, "
                 f"{len(data['edges'])} edges"]
        lines += [f"  {lo} -> {hi}" for lo, hi in data["edges"]]
        _emit("\n".join(lines), output)


@main.command()
@click.option("--criteria", default=None, metavar="NAME,NAME,...",
              help="Subset of criteria (default: all).")
@click.option("--dim-cap", type=int, default=None,
              help="Dimension cap for the representation sweep "
                   "(default: STRINGCONES_DIM_CAP or 20000).")
@click.option("--format", "fmt", type=click.Choice(["table", "records"]),
              default="table", show_default=True)
@click.option("--output", default=None, metavar="PATH")
@click.pass_context
def verify(ctx, criteria, dim_cap, fmt, output):
    """Run verification criteria; exit 1 on any failure."""
    payload = {"criteria": criteria.split(",") if criteria else None,
               "cap": dim_cap}
    data = _post(ctx.obj["server"], "/verify", payload)
    if fmt == "records":
        _emit(_records("criterion", data["results"]), output)
    else:
        lines = []
        for r in data["results"]:
            status = "PASS" if r["passed"] else "FAIL"
            lines.append(f"{status}  {r['name']}: {r['theorem']}")
            lines.append(f"      {r['detail']}")
        lines.append("all criteria passed" if data["passed"]
                     else "verification FAILED")
        _emit("\n".join(lines), output)
    if not data["passed"]:
        sys.exit(1)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service (requires uvicorn)."""
    try:
        import uvicorn
    except ImportError:
        raise click.ClickException("uvicorn is not installed (pip install uvicorn)")
    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
