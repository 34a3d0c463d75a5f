"""Command-line client for the integration/bounds service.

By default every command drives the FastAPI app in-process through an ASGI
transport (no network); pass ``--server URL`` to target a running instance
started with ``sugint serve``.

Exit codes: 0 success; 1 malformed input or transport failure; 2 hypothesis
error; 3 violation found (fuzz) or reproduction mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

import httpx


def _request(server: Optional[str], path: str, payload: dict) -> httpx.Response:
    if server:
        with httpx.Client(base_url=server, timeout=600.0) as client:
            return client.post(path, json=payload)

    import asyncio

    from .service import app

    async def go() -> httpx.Response:
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(transport=transport, base_url="http://sugint.local", timeout=600.0) as client:
            return await client.post(path, json=payload)

    return asyncio.run(go())


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        print(f"error: no such file: {path}", file=sys.stderr)
        raise SystemExit(1)
    except json.JSONDecodeError as exc:
        print(f"error: malformed JSON in {path} at line {exc.lineno}, column {exc.colno}: {exc.msg}", file=sys.stderr)
        raise SystemExit(1)


def _post(args, path: str, payload: dict) -> dict:
    try:
        resp = _request(args.server, path, payload)
    except httpx.HTTPError as exc:
        print(f"error: transport failure: {exc}", file=sys.stderr)
        raise SystemExit(1)
    if resp.status_code >= 400:
        try:
            body = resp.json()
        except ValueError:
            body = {"error": {"kind": "Unknown", "detail": resp.text}}
        err = body.get("error") or {}
        kind = err.get("kind", "ValidationError")
        detail = err.get("detail", body.get("detail", resp.text))
        print(f"error [{kind}]: {detail}", file=sys.stderr)
        raise SystemExit(2 if kind == "HypothesisError" else 1)
    return resp.json()


def _fmt(v) -> str:
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def _emit(args, data: dict, pretty_lines=None) -> None:
    if args.json_out:
        with open(args.json_out, "w", encoding="utf-8") as fh:
            json.dump(data, fh, indent=2)
            fh.write("\n")
    if args.pretty and pretty_lines is not None:
        for line in pretty_lines(data):
            print(line)
    else:
        print(json.dumps(data, indent=2))


# -- pretty renderers -------------------------------------------------------------


def _pretty_integrate(data: dict):
    yield f"value       {_fmt(data['value'])}"
    yield f"mode        {data['mode']}"
    if data.get("error_bound") is not None:
        yield f"error_bound {_fmt(data['error_bound'])}"
    if data.get("argmax_t") is not None:
        yield f"argmax_t    {_fmt(data['argmax_t'])}"


def _pretty_bound(data: dict):
    yield f"bound       {data['bound_id']} ({data['direction']})"
    yield f"lhs         {_fmt(data['lhs'])}"
    yield f"rhs         {_fmt(data['rhs'])}"
    yield f"slack       {_fmt(data['slack'])}"
    yield f"holds       {data['holds']}"
    yield f"hypotheses  {'all hold' if data['hypotheses_ok'] else 'NOT all hold'}"
    for h in data["hypotheses"]:
        mark = "+" if h["holds"] else "-"
        detail = f"  ({h['detail']})" if h.get("detail") else ""
        yield f"  [{mark}] {h['name']}{detail}"
    if data.get("minimizer") is not None:
        yield f"minimizer   {_fmt(data['minimizer'])}"
    for note in data.get("notes", []):
        yield f"note: {note}"


def _pretty_fuzz(data: dict):
    yield f"trials      {data['trials']}"
    yield f"digest      {data['digest']}"
    yield f"clean       {data['clean']}"
    yield "evaluated / skipped per bound:"
    for b in sorted(data["evaluated"]):
        yield f"  {b:<14} {data['evaluated'][b]:>8} / {data['skipped'][b]}"
    if data["violations"]:
        yield f"violations ({len(data['violations'])}):"
        for v in data["violations"]:
            tag = " [refutable claim]" if v["refutable"] else ""
            yield f"  {v['bound_id']}: lhs={_fmt(v['lhs'])} rhs={_fmt(v['rhs'])} slack={_fmt(v['slack'])}{tag}"
    else:
        yield "violations  none"


def _pretty_verify(data: dict):
    yield f"predicate   {data['predicate']}"
    yield f"holds       {data['holds']}"
    if data.get("witness"):
        yield f"witness     {data['witness']}"
    if data.get("detail"):
        yield f"detail      {data['detail']}"


def _pretty_reproduce(data: dict):
    for fx in data["fixtures"]:
        status = "PASS" if fx["passed"] else "FAIL"
        yield f"[{status}] {fx['fixture']}: {fx['title']}"
        for c in fx["checks"]:
            mark = "ok " if c["passed"] else "BAD"
            if c.get("expected") is not None:
                yield f"    {mark} {c['name']}: expected {_fmt(c['expected'])} got {_fmt(c['actual'])} (tol {c['tol']:g})"
            else:
                note = f"  ({c['note']})" if c.get("note") else ""
                yield f"    {mark} {c['name']}{note}"
        for note in fx.get("notes", []):
            yield f"    note: {note}"
    yield f"overall     {'PASS' if data['passed'] else 'FAIL'}"


# -- commands ----------------------------------------------------------------------


def _cmd_integrate(args) -> int:
    payload = {"op": args.op, "tol": args.tol, "symmetric": args.symmetric}
    if args.instance:
        payload["instance"] = _load_json(args.instance)
    if args.profile:
        payload["profile"] = _load_json(args.profile)
    if args.star:
        payload["star"] = args.star
    if args.nu:
        payload["nu"] = _load_json(args.nu)
    data = _post(args, "/integrate", payload)
    _emit(args, data, _pretty_integrate)
    return 0


def _cmd_bound(args) -> int:
    payload = {"id": args.id, "instance": _load_json(args.instance), "tol": args.tol}
    data = _post(args, "/bound", payload)
    _emit(args, data, _pretty_bound)
    return 0


def _cmd_fuzz(args) -> int:
    payload = {
        "seed": args.seed,
        "trials": args.trials,
        "n_min": args.n_min,
        "n_max": args.n_max,
        "kind": args.kind,
        "bounds": [b for b in args.bounds.split(",") if b] if args.bounds else [],
        "tol": args.tol,
        "resample_budget": args.resample_budget,
    }
    data = _post(args, "/fuzz", payload)
    _emit(args, data, _pretty_fuzz)
    return 0 if data["clean"] else 3


def _cmd_verify(args) -> int:
    payload = {"predicate": args.predicate, "instance": _load_json(args.instance)}
    if args.A:
        payload["A"] = [int(part) for part in args.A.split(",") if part]
    data = _post(args, "/verify", payload)
    _emit(args, data, _pretty_verify)
    return 0


def _cmd_reproduce(args) -> int:
    payload = {"fixture": args.fixture}
    if args.q is not None:
        payload["q"] = args.q
    data = _post(args, "/reproduce", payload)
    _emit(args, data, _pretty_reproduce)
    return 0 if data["passed"] else 3


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def main(argv=None) -> int:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--server", default=None, help="URL of a running service (default: in-process)")
    common.add_argument("--pretty", action="store_true", help="human-readable output")
    common.add_argument("--json-out", default=None, metavar="PATH", help="also write the JSON response to PATH")
    common.add_argument("--tol", type=float, default=1e-9, help="numeric tolerance")
    common.add_argument("--seed", type=int, default=0, help="randomization seed (fuzz)")

    parser = argparse.ArgumentParser(prog="sugint", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("integrate", parents=[common], help="evaluate an integral")
    p.add_argument("--op", default="min", help="min|product|ceil_min|qconj:<tnorm>|semicopula:<name>")
    p.add_argument("--instance", help="discrete instance JSON file")
    p.add_argument("--profile", help="survival profile JSON file")
    p.add_argument("--symmetric", action="store_true", help="sign-symmetric integral of a signed instance")
    p.add_argument("--star", choices=["plus", "ovee"], help="mixing operation for --symmetric")
    p.add_argument("--nu", help="second measure instance JSON (asymmetric integral)")
    p.set_defaults(fn=_cmd_integrate)

    p = sub.add_parser("bound", parents=[common], help="evaluate one bound on one instance")
    p.add_argument("--id", required=True, help="bound id (see GET /bounds)")
    p.add_argument("--instance", required=True, help="bound-instance JSON file")
    p.set_defaults(fn=_cmd_bound)

    p = sub.add_parser("fuzz", parents=[common], help="randomized bound checking")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--bounds", default="", help="comma-separated bound ids (default: all sound bounds)")
    p.add_argument("--kind", default="general", help="general|subadditive|superadditive|weakly_sub|weakly_super")
    p.add_argument("--n-min", type=int, default=2, dest="n_min")
    p.add_argument("--n-max", type=int, default=6, dest="n_max")
    p.add_argument("--resample-budget", type=int, default=100, dest="resample_budget")
    p.set_defaults(fn=_cmd_fuzz)

    p = sub.add_parser("verify", parents=[common], help="check a measure predicate")
    p.add_argument("--predicate", required=True,
                   choices=["monotone", "weakly-subadditive", "weakly-superadditive", "subadditive", "superadditive"])
    p.add_argument("--instance", required=True, help="discrete instance JSON file")
    p.add_argument("--A", default=None, help="comma-separated element indices (defaults to the instance A)")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("reproduce", parents=[common], help="run the built-in regression fixtures")
    p.add_argument("fixture", nargs="?", default="all", help="fixture id or 'all'")
    p.add_argument("--q", type=float, default=None, help="exponent for the parametric fixture")
    p.set_defaults(fn=_cmd_reproduce)

    p = sub.add_parser("serve", parents=[common], help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(fn=_cmd_serve)

    args = parser.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
