"""Command-line client for the service.

The CLI talks to the HTTP API and renders the responses; it holds no
analysis logic of its own.  By default it mounts the service in-process, so
no server is needed; point ``--url`` at a running instance to query that
instead.  Every data command accepts ``--format text|records`` and most
accept ``--out`` to write files instead of printing.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click


class ServiceClient:
    """Minimal GET/POST wrapper over either HTTP or the in-process app."""

    def __init__(self, url: str | None):
        if url:
            import httpx

            self._client = httpx.Client(base_url=url.rstrip("/"), timeout=1200.0)
        else:
            import warnings

            with warnings.catch_warnings():
                warnings.simplefilter("ignore", DeprecationWarning)
                from starlette.testclient import TestClient

            from .service import create_app

            self._client = TestClient(create_app(), raise_server_exceptions=False)

    def get(self, path: str, **params):
        response = self._client.get(path, params={k: v for k, v in params.items() if v is not None})
        return self._unwrap(response)

    def post(self, path: str, payload: dict):
        return self._unwrap(self._client.post(path, json=payload))

    @staticmethod
    def _unwrap(response):
        if response.status_code >= 400:
            try:
                detail = response.json().get("detail", response.text)
            except Exception:
                detail = response.text
            raise click.ClickException(f"service error {response.status_code}: {detail}")
        content_type = response.headers.get("content-type", "")
        if content_type.startswith("application/json"):
            return response.json()
        return response.text


def _emit(data, fmt: str, out: Path | None, text_renderer=None) -> None:
    if fmt == "records":
        body = json.dumps(data, indent=2, sort_keys=True) + "\n"
    else:
        body = text_renderer(data) if text_renderer else json.dumps(data, indent=2) + "\n"
    if out is None:
        click.echo(body, nl=False)
    else:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(body)


@click.group()
@click.option("--url", default=None, help="Base URL of a running service (default: in-process).")
@click.pass_context
def main(ctx: click.Context, url: str | None) -> None:
    """Symmetry-obstruction toolkit for the Heawood family of graphs."""
    ctx.obj = ServiceClient(url)


def _format_option(fn):
    fn = click.option(
        "--format", "fmt", type=click.Choice(["text", "records"]), default="text"
    )(fn)
    return fn


@main.command()
@click.option("--seed", type=click.Choice(["K7", "K6"]), default="K7")
@click.option("--moves", type=click.Choice(["all", "nabla"]), default="all")
@click.option("--out", type=click.Path(path_type=Path), default=None,
              help="Directory to write graph files, manifest, and DOT export.")
@click.option("--dot/--no-dot", default=False, help="Also write the family DOT file.")
@_format_option
@click.pass_obj
def family(client: ServiceClient, seed: str, moves: str, out: Path | None, dot: bool, fmt: str):
    """Enumerate the move closure of a seed graph."""
    data = client.get("/family", seed=seed, moves=moves)

    def render(d) -> str:
        lines = [f"family of {d['seed']} under {d['moves']} moves: {d['member_count']} members"]
        hist = ", ".join(f"{k}v:{v}" for k, v in sorted(d["vertex_histogram"].items(), key=lambda kv: int(kv[0])))
        lines.append(f"vertex histogram: {hist}")
        for info in d["members"]:
            steps = d["provenance"][info["name"]]
            trail = " ".join(
                f"{r['kind']}({','.join(r['site'])}{'->' + r['new_label'] if r['new_label'] else ''})"
                for r in steps
            )
            lines.append(
                f"  {info['name']:>6}  {info['vertices']}v {info['edges']}e  "
                f"{info['fingerprint']}  {trail or '(seed)'}"
            )
        return "\n".join(lines) + "\n"

    if out is None:
        _emit(data, fmt, None, render)
        return
    out.mkdir(parents=True, exist_ok=True)
    for info in data["members"]:
        (out / f"{info['name']}.json").write_text(
            json.dumps(info["record"], indent=2, sort_keys=True) + "\n"
        )
    manifest = {
        "seed": data["seed"],
        "moves": data["moves"],
        "members": [
            {k: v for k, v in info.items() if k != "record"} for info in data["members"]
        ],
        "provenance": data["provenance"],
        "adjacency": data["adjacency"],
    }
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    if dot:
        (out / "family.dot").write_text(client.get("/export/family.dot", seed=seed, moves=moves))
    click.echo(f"wrote {data['member_count']} members to {out}")


@main.command()
@click.argument("name")
@_format_option
@click.option("--out", type=click.Path(path_type=Path), default=None)
@click.pass_obj
def aut(client: ServiceClient, name: str, fmt: str, out: Path | None):
    """Automorphism group: order, identified type, conjugacy classes."""
    data = client.get(f"/graphs/{name}/aut")

    def render(d) -> str:
        lines = [f"Aut({d['graph']}): order {d['order']}, type {d['type']}"]
        lines.append(f"{d['class_count']} nontrivial conjugacy classes:")
        for c in d["classes"]:
            lines.append(f"  {c['rep']:<28} order {c['order']:>2}  size {c['size']}")
        return "\n".join(lines) + "\n"

    _emit(data, fmt, out, render)


@main.command()
@click.argument("name")
@_format_option
@click.option("--out", type=click.Path(path_type=Path), default=None)
@click.pass_obj
def analyze(client: ServiceClient, name: str, fmt: str, out: Path | None):
    """Fixed-subgraph table: one row per conjugacy class."""
    data = client.get(f"/graphs/{name}/analysis")

    def render(d) -> str:
        header = ["class rep", "ord", "fixed subgraph", "S1", "S2", "swap path"]
        rows = [
            [r["rep"], r["order"], r["fixed_subgraph"],
             "Yes" if r["embeds_in_s1"] else "No",
             "Yes" if r["planar"] else "No", r["swap_path"]]
            for r in d["rows"]
        ]
        widths = [max(len(str(x[i])) for x in [header] + rows) for i in range(len(header))]
        fmt_row = lambda r: "  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip()
        return "\n".join(
            [f"analysis of {d['graph']}", fmt_row(header), fmt_row(["-" * w for w in widths])]
            + [fmt_row(r) for r in rows]
        ) + "\n"

    _emit(data, fmt, out, render)


@main.command()
@click.argument("name")
@click.option("--audit", "do_audit", is_flag=True, help="Replay every exclusion trace.")
@_format_option
@click.option("--out", type=click.Path(path_type=Path), default=None)
@click.pass_obj
def tsg(client: ServiceClient, name: str, do_audit: bool, fmt: str, out: Path | None):
    """Realizability verdicts, positive upper bounds, chirality certificate."""
    data = client.get(f"/graphs/{name}/tsg", include_audit=do_audit or None)

    def render(d) -> str:
        lines = [f"{d['graph']}: Aut order {d['aut_order']}, type {d['aut_type']}"]
        for c in d["classes"]:
            pos = c["pos"]["rule"] or "open"
            neg = c["neg"]["rule"] or "open"
            lines.append(f"  {c['rep']:<28} ord {c['order']:>2}  pos {pos:<4} neg {neg}")
        bounds = ", ".join(d["positive_upper_bounds"]) or "(none beyond trivial)"
        lines.append(f"positive upper bounds: {bounds}")
        lines.append(f"chirality: {d['chirality']}")
        if d["comparison"]:
            comp = d["comparison"]
            extra = f" excess={comp['excess']}" if comp["excess"] else ""
            extra += f" missing={comp['missing']}" if comp["missing"] else ""
            lines.append(f"expected-table comparison: {comp['verdict']}{extra}")
        if d["audited_traces"] is not None:
            lines.append(f"audited traces: {d['audited_traces']} (all replayed)")
        return "\n".join(lines) + "\n"

    _emit(data, fmt, out, render)


@main.command()
@click.argument("name", required=False)
@_format_option
@click.option("--out", type=click.Path(path_type=Path), default=None,
              help="Directory for per-graph record files plus a summary.")
@click.pass_obj
def report(client: ServiceClient, name: str | None, fmt: str, out: Path | None):
    """Full pipeline for one or all graphs; nonzero exit on any MISMATCH."""
    data = client.get("/report", name=name)

    def render(d) -> str:
        lines = []
        for rec in d["graphs"]:
            comp = rec["comparison"]
            verdict = comp["verdict"] if comp else "-"
            excess = f" excess={comp['excess']}" if comp and comp["excess"] else ""
            bounds = ", ".join(rec["positive_upper_bounds"]) or "-"
            lines.append(
                f"{rec['name']:>6}  |Aut|={rec['aut']['order']:<5} "
                f"chirality={rec['chirality']['verdict']:<8} {verdict}{excess}  bounds: {bounds}"
            )
        lines.append("all match" if d["all_match"] else f"MISMATCHES: {d['mismatches']}")
        for div in d["divergences"]:
            lines.append(f"documented divergence: {div}")
        return "\n".join(lines) + "\n"

    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
        for rec in data["graphs"]:
            (out / f"{rec['name']}.json").write_text(
                json.dumps(rec, indent=2, sort_keys=True) + "\n"
            )
        (out / "summary.json").write_text(json.dumps(
            {"all_match": data["all_match"], "mismatches": data["mismatches"],
             "divergences": data["divergences"]}, indent=2) + "\n")
        click.echo(f"wrote {len(data['graphs'])} report records to {out}")
    else:
        _emit(data, fmt, None, render)
    if not data["all_match"]:
        sys.exit(1)


@main.command("export-dot")
@click.argument("name", required=False)
@click.option("--family", "family_mode", is_flag=True, help="Export the family graph.")
@click.option("--seed", type=click.Choice(["K7", "K6"]), default="K7")
@click.option("--moves", type=click.Choice(["all", "nabla"]), default="all")
@click.option("--out", type=click.Path(path_type=Path), default=None)
@click.pass_obj
def export_dot(client: ServiceClient, name: str | None, family_mode: bool,
               seed: str, moves: str, out: Path | None):
    """DOT export of one member (undirected) or the family (move arrows)."""
    if family_mode or name is None:
        text = client.get("/export/family.dot", seed=seed, moves=moves)
    else:
        text = client.get(f"/export/graphs/{name}.dot")
    if out is None:
        click.echo(text, nl=False)
    else:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text)


@main.command()
@click.argument("path", type=click.Path(exists=True, path_type=Path))
@_format_option
@click.pass_obj
def parse(client: ServiceClient, path: Path, fmt: str):
    """Validate a graph file and print its normalized form."""
    try:
        record = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise click.ClickException(f"{path}: malformed JSON at line {exc.lineno}: {exc.msg}")
    data = client.post("/graphs/validate", record)

    def render(d) -> str:
        head = f"valid graph: {len(d['graph']['vertices'])} vertices, {len(d['graph']['edges'])} edges\n"
        head += f"fingerprint: {d['fingerprint']}\n"
        if d["catalog_match"]:
            head += f"isomorphic to catalog member: {d['catalog_match']}\n"
        return head + json.dumps(d["graph"], indent=2, sort_keys=True) + "\n"

    _emit(data, fmt, None, render)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", default=8000, type=int)
def serve(host: str, port: int):
    """Run the HTTP service under uvicorn."""
    import uvicorn

    uvicorn.run("tsgkit.service:app", host=host, port=port)


if __name__ == "__main__":
    main()
