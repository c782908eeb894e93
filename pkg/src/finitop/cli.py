"""Command-line front end: a thin client for the HTTP service.

Commands parse their arguments, build one request, send it to the service
(in-process by default, or a remote instance via --server), and print the
response as JSON lines.  Payloads are deterministic: wall-clock timings are
stripped from stdout and echoed on stderr as diagnostics.

Exit codes: 0 success; 1 reproduce mismatch; 2 witness or violation found;
3 search budget exceeded; 64 usage error; 65 file/parse/document error;
70 domain error (topology validation, width overflow, unknown id).
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys

import httpx

from .classify import CLASSES
from .operators import KINDS

EX_OK = 0
EX_MISMATCH = 1
EX_WITNESS = 2
EX_BUDGET = 3
EX_USAGE = 64
EX_DATAERR = 65
EX_DOMAIN = 70

_DOC_ERROR_CODES = {"DocumentError", "UnknownLabel"}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="finitop", description=__doc__.splitlines()[0])
    parser.add_argument("--server", metavar="URL",
                        help="talk to a running service instead of in-process")
    parser.add_argument("--pretty", action="store_true",
                        help="indent JSON output for humans")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-space", help="validate (and complete) a space document")
    p.add_argument("file")
    p.add_argument("--strict", action="store_true")

    p = sub.add_parser("families", help="list one generalized open-set family")
    p.add_argument("file")
    p.add_argument("--kind", required=True)

    p = sub.add_parser("op", help="apply one operator to a subset")
    p.add_argument("file")
    p.add_argument("--which", required=True)
    p.add_argument("--set", default="", dest="subset",
                   help="comma-separated point labels (empty for the empty set)")

    p = sub.add_parser("classify", help="decide continuity classes of a map document")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--class", dest="cls")
    group.add_argument("--all", action="store_true")

    p = sub.add_parser("verify", help="run one theorem check over enumerated spaces")
    p.add_argument("--theorem")
    p.add_argument("--nmax", type=int)
    p.add_argument("--sample", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int)
    p.add_argument("--list", action="store_true", help="list theorem ids")

    p = sub.add_parser("reproduce", help="recompute the bundled examples")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--example")
    group.add_argument("--all", action="store_true")

    p = sub.add_parser("search", help="scan maps for counterexamples")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--open-question", action="store_true",
                       help="hunt a weakly-e-continuous map that is not weakly-eR-continuous")
    group.add_argument("--implication", nargs=2, metavar=("FROM", "TO"))
    p.add_argument("--nmax", type=int, default=3)
    p.add_argument("--budget", type=int)
    p.add_argument("--resume", metavar="CURSOR")

    p = sub.add_parser("enumerate", help="emit every labeled topology of one size")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dedup", action="store_true",
                   help="one representative per homeomorphism class")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8876)

    return parser


async def _post_async(server: str | None, endpoint: str, payload: dict):
    if server is None:
        from .service.app import create_app

        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(
            transport=transport, base_url="http://finitop.internal", timeout=None
        ) as client:
            resp = await client.post(endpoint, json=payload)
            return resp.status_code, resp.json()
    async with httpx.AsyncClient(base_url=server, timeout=None) as client:
        resp = await client.post(endpoint, json=payload)
        return resp.status_code, resp.json()


def _post(args, endpoint: str, payload: dict):
    return asyncio.run(_post_async(args.server, endpoint, payload))


def _emit(args, obj) -> None:
    if args.pretty:
        print(json.dumps(obj, indent=2))
    else:
        print(json.dumps(obj, separators=(",", ":")))


def _diag(message: str) -> None:
    print(f"# {message}", file=sys.stderr)


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise _DataError(str(exc))


class _DataError(Exception):
    pass


def _error_exit(body) -> int:
    err = body.get("error") if isinstance(body, dict) else None
    if err is None:
        # fastapi validation errors and other malformed-input responses
        _diag(json.dumps(body))
        return EX_DATAERR
    _diag(f"{err.get('code')}: {err.get('message')}")
    if err.get("context"):
        _diag(json.dumps(err["context"]))
    return EX_DATAERR if err.get("code") in _DOC_ERROR_CODES else EX_DOMAIN


def _run_command(args) -> int:
    if args.command == "serve":
        import uvicorn

        from .service.app import app

        uvicorn.run(app, host=args.host, port=args.port)
        return EX_OK

    if args.command == "check-space":
        payload = {"space": _load_json(args.file), "strict": args.strict}
        status, body = _post(args, "/check-space", payload)
        if status != 200:
            return _error_exit(body)
        _emit(args, body["space"])
        if body["added"]:
            _diag(f"completed family with {len(body['added'])} added sets: "
                  + json.dumps(body["added"]))
        return EX_OK

    if args.command == "families":
        if args.kind not in KINDS:
            raise _UsageError(f"unknown kind {args.kind!r}; one of: {', '.join(KINDS)}")
        payload = {"space": _load_json(args.file), "kind": args.kind}
        status, body = _post(args, "/families", payload)
        if status != 200:
            return _error_exit(body)
        _emit(args, body)
        return EX_OK

    if args.command == "op":
        from .service.app import OPERATOR_NAMES

        if args.which not in OPERATOR_NAMES:
            raise _UsageError(
                f"unknown operator {args.which!r}; one of: {', '.join(OPERATOR_NAMES)}"
            )
        subset = [s for s in args.subset.split(",") if s]
        payload = {"space": _load_json(args.file), "which": args.which, "set": subset}
        status, body = _post(args, "/op", payload)
        if status != 200:
            return _error_exit(body)
        _emit(args, body)
        return EX_OK

    if args.command == "classify":
        classes = None
        if args.cls is not None:
            if args.cls not in CLASSES:
                raise _UsageError(
                    f"unknown class {args.cls!r}; one of: {', '.join(CLASSES)}"
                )
            classes = [args.cls]
        payload = {"map": _load_json(args.file), "classes": classes}
        status, body = _post(args, "/classify", payload)
        if status != 200:
            return _error_exit(body)
        for verdict in body["verdicts"]:
            _emit(args, verdict)
        return EX_OK

    if args.command == "verify":
        from .theorems import THEOREMS

        if args.list:
            for name, (_fn, default_n, desc) in THEOREMS.items():
                _emit(args, {"theorem": name, "default_n_max": default_n,
                             "description": desc})
            return EX_OK
        if not args.theorem:
            raise _UsageError("verify needs --theorem ID or --list")
        if args.theorem not in THEOREMS:
            raise _UsageError(
                f"unknown theorem {args.theorem!r}; see `finitop verify --list`"
            )
        payload = {
            "theorem": args.theorem,
            "n_max": args.nmax,
            "sample": args.sample,
            "seed": args.seed,
            "budget": args.budget,
        }
        status, body = _post(args, "/verify", payload)
        if status != 200:
            return _error_exit(body)
        wall = body.pop("wall_time_s", None)
        _emit(args, body)
        if wall is not None:
            _diag(f"wall_time_s={wall:.3f}")
        return EX_WITNESS if body["violations"] else EX_OK

    if args.command == "reproduce":
        example = "all" if args.all else args.example
        status, body = _post(args, "/reproduce", {"example": example})
        if status != 200:
            return _error_exit(body)
        for result in body["results"]:
            _emit(args, result)
        return EX_OK if body["reproduced"] else EX_MISMATCH

    if args.command == "search":
        payload = {
            "n_max": args.nmax,
            "budget": args.budget,
            "resume": args.resume,
        }
        if args.implication:
            payload["implication"] = list(args.implication)
        else:
            payload["question"] = "open-question"
        status, body = _post(args, "/search", payload)
        if status != 200:
            return _error_exit(body)
        wall = body.pop("wall_time_s", None)
        _emit(args, body)
        if wall is not None:
            _diag(f"wall_time_s={wall:.3f}")
        if body.get("witness") is not None:
            return EX_WITNESS
        if body.get("resumable_cursor") is not None:
            return EX_BUDGET
        return EX_OK

    if args.command == "enumerate":
        status, body = _post(args, "/enumerate", {"n": args.n, "dedup": args.dedup})
        if status != 200:
            return _error_exit(body)
        for doc in body["spaces"]:
            _emit(args, doc)
        return EX_OK

    raise _UsageError(f"unknown command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"finitop: {exc}", file=sys.stderr)
        return EX_USAGE
    try:
        return _run_command(args)
    except _UsageError as exc:
        print(f"finitop: {exc}", file=sys.stderr)
        return EX_USAGE
    except _DataError as exc:
        print(f"finitop: {exc}", file=sys.stderr)
        return EX_DATAERR


def entry() -> None:
    raise SystemExit(main(sys.argv[1:]))


if __name__ == "__main__":
    entry()
