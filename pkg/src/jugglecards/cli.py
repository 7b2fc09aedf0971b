"""Thin command-line client for the jugglecards service.

By default each invocation spins up the FastAPI app in-process (no sockets,
no server to manage); pass --url to talk to a running instance instead.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

import httpx

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

_METHODS = ["brute", "transfer", "thm3", "prop1", "thm-l1", "cor-l1", "infinite"]
_FORMULAS = ["thm-l1", "cor-l1", "infinite"]
_SUITES = ["identities", "cross", "bijections", "oeis", "all"]


def _make_client(url: str | None):
    if url:
        return httpx.Client(base_url=url, timeout=600.0)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service import app

    return TestClient(app)


def _post(client, path: str, payload: dict):
    """Returns (data, exit_code); on failure data is None and a message has
    been printed to stderr."""
    try:
        response = client.post(path, json=payload)
    except httpx.HTTPError as exc:
        print(f"error: cannot reach service: {exc}", file=sys.stderr)
        return None, EXIT_USAGE
    if response.status_code == 200:
        return response.json(), EXIT_OK
    try:
        detail = response.json().get("detail")
    except Exception:
        detail = response.text
    if isinstance(detail, dict):
        code = detail.get("code")
        message = detail.get("message", "")
        print(f"error: {message}", file=sys.stderr)
        return None, EXIT_BUDGET if code == "budget_exceeded" else EXIT_USAGE
    print(f"error: {detail}", file=sys.stderr)
    return None, EXIT_USAGE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jugglecards",
        description="Exact counts of multiplex juggling cards and card sequences",
    )
    parser.add_argument("--url", help="base URL of a running service (default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="one count for (balls, capacity, length)")
    count.add_argument("--balls", type=int, required=True)
    count.add_argument("--capacity", type=int)
    count.add_argument("--length", type=int, default=1)
    count.add_argument("--method", choices=_METHODS, required=True)
    count.add_argument("--periodic", action="store_true",
                       help="first arrival must equal last departure")
    count.add_argument("--budget", type=int, default=None)
    count.add_argument("--json", action="store_true")

    series = sub.add_parser("series", help="counts for balls 0..order")
    series.add_argument("--capacity", type=int)
    series.add_argument("--length", type=int, default=1)
    series.add_argument("--order", type=int, default=20)
    series.add_argument("--method", choices=_METHODS, required=True)
    series.add_argument("--budget", type=int, default=None)
    series.add_argument("--format", choices=["json", "csv"], default="csv")

    genfun = sub.add_parser("genfun", help="closed-form numerator/denominator")
    genfun.add_argument("--capacity", type=int)
    genfun.add_argument("--formula", choices=_FORMULAS, required=True)
    genfun.add_argument("--json", action="store_true")

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("--suite", choices=_SUITES, default="all")
    verify.add_argument("--max-balls", type=int, default=5)
    verify.add_argument("--max-capacity", type=int, default=2)
    verify.add_argument("--max-length", type=int, default=3)
    verify.add_argument("--json", action="store_true")

    draw = sub.add_parser("draw", help="ASCII diagram of a card")
    draw.add_argument("--card", required=True,
                      help='text form, e.g. "arrival=4,2,3;departure=4,2,3;f=1,2,3"')

    fit = sub.add_parser("fit", help="fit a minimal linear recurrence")
    fit.add_argument("--sequence", required=True, help="comma-separated integers")
    fit.add_argument("--max-order", type=int, default=16)
    fit.add_argument("--json", action="store_true")

    matrix = sub.add_parser("matrix", help="transfer matrix as JSON")
    matrix.add_argument("--balls", type=int, required=True)
    matrix.add_argument("--capacity", type=int, required=True)
    matrix.add_argument("--budget", type=int, default=None)

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)

    return parser


def _cmd_count(client, args) -> int:
    payload = {
        "balls": args.balls,
        "capacity": args.capacity,
        "length": args.length,
        "method": args.method,
        "periodic": args.periodic,
    }
    if args.budget is not None:
        payload["budget"] = args.budget
    data, code = _post(client, "/count", payload)
    if data is None:
        return code
    if args.json:
        print(json.dumps(data))
    else:
        print(data["count"])
    return EXIT_OK


def _cmd_series(client, args) -> int:
    payload = {
        "capacity": args.capacity,
        "length": args.length,
        "order": args.order,
        "method": args.method,
    }
    if args.budget is not None:
        payload["budget"] = args.budget
    data, code = _post(client, "/series", payload)
    if data is None:
        return code
    if args.format == "json":
        print(json.dumps(data))
    else:
        print("b,count")
        for b, value in enumerate(data["coefficients"]):
            print(f"{b},{value}")
    return EXIT_OK


def _cmd_genfun(client, args) -> int:
    payload = {"capacity": args.capacity, "formula": args.formula}
    data, code = _post(client, "/genfun", payload)
    if data is None:
        return code
    if args.json:
        print(json.dumps(data))
    else:
        print("numerator=" + ",".join(data["numerator"]))
        print("denominator=" + ",".join(data["denominator"]))
    return EXIT_OK


def _cmd_verify(client, args) -> int:
    payload = {
        "suite": args.suite,
        "max_balls": args.max_balls,
        "max_capacity": args.max_capacity,
        "max_length": args.max_length,
    }
    data, code = _post(client, "/verify", payload)
    if data is None:
        return code
    if args.json:
        print(json.dumps(data))
    else:
        for check in data["checks"]:
            status = "PASS" if check["ok"] else "FAIL"
            print(f"{status} {check['id']}: {check['detail']}")
        passed = sum(1 for c in data["checks"] if c["ok"])
        print(f"{passed}/{len(data['checks'])} checks passed")
    return EXIT_OK if data["passed"] else EXIT_VERIFY_FAILED


def _cmd_draw(client, args) -> int:
    data, code = _post(client, "/draw", {"card": args.card})
    if data is None:
        return code
    print(data["diagram"])
    return EXIT_OK


def _cmd_fit(client, args) -> int:
    tokens = [tok.strip() for tok in args.sequence.split(",") if tok.strip()]
    payload = {"sequence": tokens, "max_order": args.max_order}
    data, code = _post(client, "/fit", payload)
    if data is None:
        return code
    if args.json:
        print(json.dumps(data))
    elif not data["found"]:
        print(f"no recurrence of order <= {args.max_order} found")
    else:
        print(
            f"order={data['order']} coeffs={','.join(data['coeffs'])} "
            f"valid_from={data['valid_from']} "
            f"char_poly={','.join(data['char_poly'])}"
        )
    return EXIT_OK


def _cmd_matrix(client, args) -> int:
    payload = {"balls": args.balls, "capacity": args.capacity}
    if args.budget is not None:
        payload["budget"] = args.budget
    data, code = _post(client, "/matrix", payload)
    if data is None:
        return code
    print(json.dumps(data))
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


_HANDLERS = {
    "count": _cmd_count,
    "series": _cmd_series,
    "genfun": _cmd_genfun,
    "verify": _cmd_verify,
    "draw": _cmd_draw,
    "fit": _cmd_fit,
    "matrix": _cmd_matrix,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "serve":
        return _cmd_serve(args)
    client = _make_client(args.url)
    try:
        return _HANDLERS[args.command](client, args)
    finally:
        client.close()


def entry() -> None:
    raise SystemExit(main())
