"""Command line front end.

Each subcommand is a thin client over the HTTP service: it reads the
input files, posts them to the in-process app (or a remote ``--server``),
and writes the response payloads back to disk atomically. Every output
file gets a sibling ``<name>.manifest.json`` recording the argv, input
and output digests, and the seed, so a run can be checked and repeated.
"""
from __future__ import annotations

import argparse
import asyncio
import hashlib
import json
import os
import sys
import tempfile
from pathlib import Path
from typing import Optional

import httpx

from .errors import DataError

DATA_DIR_ENV = "SENTIMARKET_DATA_DIR"
_SECTIONS = ("epidemic", "panic-buying")


class UsageError(Exception):
    """Bad flags or flag combinations; exits with status 1."""


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage problems; this tool reserves 2 for data
    # errors, so route parse failures to exit status 1 instead.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


class ServiceClient:
    """POSTs JSON bodies either to a remote server or straight into the
    ASGI app without opening a socket."""

    def __init__(self, server: Optional[str]):
        self.server = server

    def post(self, path: str, payload: dict) -> dict:
        if self.server is not None:
            with httpx.Client(base_url=self.server, timeout=600.0) as client:
                return self._unwrap(client.post(path, json=payload))
        return asyncio.run(self._post_inprocess(path, payload))

    async def _post_inprocess(self, path: str, payload: dict) -> dict:
        from .service import app

        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://sentimarket.local"
        ) as client:
            return self._unwrap(await client.post(path, json=payload))

    @staticmethod
    def _unwrap(resp: httpx.Response) -> dict:
        if resp.status_code == 400:
            raise DataError(resp.json().get("detail", "bad request"))
        if resp.status_code == 422:
            raise UsageError(f"request rejected: {resp.text}")
        resp.raise_for_status()
        return resp.json()


def _resolve(path: str) -> Path:
    base = os.environ.get(DATA_DIR_ENV)
    p = Path(path)
    if base and not p.is_absolute():
        return Path(base) / p
    return p


def _read_text(path: str) -> str:
    try:
        return _resolve(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}") from None


def _resolve_out(path: str) -> Path:
    p = _resolve(path)
    parent = p.parent if str(p.parent) else Path(".")
    if not parent.is_dir():
        raise DataError(f"output directory does not exist: {parent}")
    return p


def _sha256(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _write_atomic(path: Path, text: str) -> None:
    fd, tmp = tempfile.mkstemp(dir=str(path.parent), prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def _emit(
    outputs: dict[str, str],
    inputs: dict[str, str],
    argv: list[str],
    seed: Optional[int],
) -> None:
    """Write every output atomically plus a manifest alongside each."""
    resolved = {name: _resolve_out(name) for name in outputs}
    manifest = {
        "command": "sentimarket",
        "args": argv,
        "inputs": {name: _sha256(text) for name, text in inputs.items()},
        "outputs": {name: _sha256(text) for name, text in outputs.items()},
        "seed": seed,
    }
    manifest_text = json.dumps(manifest, sort_keys=True, indent=2) + "\n"
    for name, text in outputs.items():
        path = resolved[name]
        _write_atomic(path, text)
        _write_atomic(path.with_name(path.name + ".manifest.json"), manifest_text)


def _json_text(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _parse_sections(raw: str) -> list[str]:
    sections = [s.strip() for s in raw.split(",") if s.strip()]
    for name in sections:
        if name not in _SECTIONS:
            raise UsageError(
                f"unknown section {name!r}; choose from {', '.join(_SECTIONS)}"
            )
    if not sections:
        raise UsageError("at least one section is required")
    return sections


def _train_options(args) -> dict:
    options = {}
    for key in ("epochs", "hidden", "learning_rate", "seed", "clip_norm", "split"):
        value = getattr(args, key, None)
        if value is not None:
            options[key] = value
    if getattr(args, "returns_mode", False):
        options["returns_mode"] = True
    return options


# --- subcommand handlers -------------------------------------------------

def _cmd_filter(args, client: ServiceClient, argv: list[str]) -> int:
    tweets = _read_text(args.in_path)
    inputs = {args.in_path: tweets}
    payload: dict = {
        "tweets_csv": tweets,
        "sections": _parse_sections(args.sections),
    }
    if args.keywords != "default":
        text = _read_text(args.keywords)
        payload["keywords_text"] = text
        inputs[args.keywords] = text
    body = client.post("/text/filter", payload)
    _emit({args.out: body["tweets_csv"]}, inputs, argv, None)
    print(f"kept {body['kept']} of {body['total']} tweets -> {args.out}")
    return 0


def _cmd_score(args, client: ServiceClient, argv: list[str]) -> int:
    tweets = _read_text(args.in_path)
    inputs = {args.in_path: tweets}
    payload: dict = {"tweets_csv": tweets}
    if args.lexicon != "default":
        text = _read_text(args.lexicon)
        payload["lexicon_text"] = text
        inputs[args.lexicon] = text
    body = client.post("/sentiment/score", payload)
    _emit({args.out: body["scored_csv"]}, inputs, argv, None)
    print(f"scored {body['tweets']} tweets -> {args.out}")
    return 0


def _cmd_aggregate(args, client: ServiceClient, argv: list[str]) -> int:
    scored = _read_text(args.in_path)
    body = client.post(
        "/sentiment/aggregate",
        {
            "scored_csv": scored,
            "bucket": args.bucket,
            "daily_from_buckets": args.daily_from_buckets,
            "center": args.center,
        },
    )
    _emit({args.out: body["sentiment_csv"]}, {args.in_path: scored}, argv, None)
    print(f"{body['buckets']} buckets -> {args.out}")
    return 0


def _cmd_ingest(args, client: ServiceClient, argv: list[str]) -> int:
    raw = _read_text(args.in_path)
    body = client.post("/market/ingest", {"ohlc_csv": raw})
    _emit({args.out: body["ohlc_csv"]}, {args.in_path: raw}, argv, None)
    print(
        f"{body['rows']} rows {body['first_date']}..{body['last_date']} -> {args.out}"
    )
    return 0


def _cmd_fill(args, client: ServiceClient, argv: list[str]) -> int:
    raw = _read_text(args.in_path)
    body = client.post("/market/fill", {"ohlc_csv": raw})
    _emit({args.out: body["ohlc_csv"]}, {args.in_path: raw}, argv, None)
    print(f"{body['rows']} rows ({body['filled_rows']} filled) -> {args.out}")
    return 0


def _cmd_denoise(args, client: ServiceClient, argv: list[str]) -> int:
    raw = _read_text(args.in_path)
    ohlc = raw
    if args.fill_first:
        ohlc = client.post("/market/fill", {"ohlc_csv": ohlc})["ohlc_csv"]
    body = client.post(
        "/market/denoise",
        {
            "ohlc_csv": ohlc,
            "levels": args.levels,
            "threshold_scale": args.threshold_scale,
        },
    )
    report_text = _json_text(body["report"])
    outputs = {args.out: body["ohlc_csv"]}
    if args.report is not None:
        outputs[args.report] = report_text
    _emit(outputs, {args.in_path: raw}, argv, None)
    sys.stdout.write(report_text)
    return 0


def _cmd_train(args, client: ServiceClient, argv: list[str]) -> int:
    if args.model == "s-lstm" and args.sentiment is None:
        raise UsageError("s-lstm requires --sentiment")
    prices = _read_text(args.prices)
    inputs = {args.prices: prices}
    payload: dict = {
        "ohlc_csv": prices,
        "model": args.model,
        "options": _train_options(args),
    }
    if args.sentiment is not None:
        text = _read_text(args.sentiment)
        payload["sentiment_csv"] = text
        inputs[args.sentiment] = text
    body = client.post("/forecast/train", payload)
    _emit({args.out: body["model_json"]}, inputs, argv, args.seed)
    print(
        f"{body['kind']} loss {body['first_train_loss']:.6f} -> "
        f"{body['final_train_loss']:.6f} -> {args.out}"
    )
    return 0


def _cmd_predict(args, client: ServiceClient, argv: list[str]) -> int:
    model = _read_text(args.model)
    prices = _read_text(args.prices)
    inputs = {args.model: model, args.prices: prices}
    payload: dict = {"model_json": model, "ohlc_csv": prices}
    if args.sentiment is not None:
        text = _read_text(args.sentiment)
        payload["sentiment_csv"] = text
        inputs[args.sentiment] = text
    body = client.post("/forecast/predict", payload)
    text = _json_text(body)
    if args.out is not None:
        _emit({args.out: text}, inputs, argv, None)
    sys.stdout.write(text)
    return 0


def _cmd_backtest(args, client: ServiceClient, argv: list[str]) -> int:
    if args.model == "s-lstm" and args.sentiment is None:
        raise UsageError("s-lstm requires --sentiment")
    try:
        order = tuple(int(part) for part in args.order.split(","))
    except ValueError:
        raise UsageError(f"bad --order {args.order!r}; expected p,d,q") from None
    if len(order) != 3:
        raise UsageError(f"bad --order {args.order!r}; expected p,d,q")
    prices = _read_text(args.prices)
    inputs = {args.prices: prices}
    payload: dict = {
        "ohlc_csv": prices,
        "model": args.model,
        "test_start": args.start,
        "test_end": args.end,
        "options": _train_options(args),
        "order": order,
        "refit": args.refit,
    }
    if args.sentiment is not None:
        text = _read_text(args.sentiment)
        payload["sentiment_csv"] = text
        inputs[args.sentiment] = text
    body = client.post("/evaluate/backtest", payload)
    report_text = _json_text(body["report"])
    outputs = {args.out: report_text}
    if args.rows_out is not None:
        outputs[args.rows_out] = body["rows_csv"]
    _emit(outputs, inputs, argv, args.seed)
    sys.stdout.write(report_text)
    return 0


def _cmd_synth(args, client: ServiceClient, argv: list[str]) -> int:
    body = client.post(
        "/synth",
        {
            "length": args.length,
            "beta": args.beta,
            "sigma": args.sigma,
            "seed": args.seed,
        },
    )
    outputs = {args.out: body["ohlc_csv"]}
    if args.sentiment_out is not None:
        outputs[args.sentiment_out] = body["sentiment_csv"]
    _emit(outputs, {}, argv, args.seed)
    print(f"{args.length} synthetic days -> {args.out}")
    return 0


def _cmd_serve(args, client: ServiceClient, argv: list[str]) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


# --- parser --------------------------------------------------------------

def _add_train_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--epochs", type=int)
    sub.add_argument("--hidden", type=int)
    sub.add_argument("--learning-rate", type=float, dest="learning_rate")
    sub.add_argument("--clip-norm", type=float, dest="clip_norm")
    sub.add_argument("--split", type=float)
    sub.add_argument(
        "--returns-mode",
        action="store_true",
        dest="returns_mode",
        help="train on log returns instead of close levels",
    )
    sub.add_argument("--seed", type=int, default=1)


def build_parser() -> _Parser:
    parser = _Parser(prog="sentimarket", description=__doc__.splitlines()[0])
    parser.add_argument(
        "--server",
        default=None,
        help="base URL of a running service; default runs in process",
    )
    commands = parser.add_subparsers(dest="command", required=True, metavar="command")

    sub = commands.add_parser("filter", help="keep tweets matching keyword phrases")
    sub.add_argument("--in", dest="in_path", required=True, help="tweets CSV")
    sub.add_argument("--out", required=True)
    sub.add_argument(
        "--keywords",
        default="default",
        help="keyword file, or 'default' for the built-in phrase set",
    )
    sub.add_argument(
        "--sections",
        default="epidemic,panic-buying",
        help="comma-separated keyword sections to match",
    )
    sub.set_defaults(func=_cmd_filter)

    sub = commands.add_parser("score", help="score tweet sentiment in [-1, 1]")
    sub.add_argument("--in", dest="in_path", required=True, help="tweets CSV")
    sub.add_argument("--out", required=True)
    sub.add_argument(
        "--lexicon",
        default="default",
        help="lexicon TSV, or 'default' for the bundled one",
    )
    sub.set_defaults(func=_cmd_score)

    sub = commands.add_parser("aggregate", help="bucket scored tweets into a series")
    sub.add_argument("--in", dest="in_path", required=True, help="scored CSV")
    sub.add_argument("--out", required=True)
    sub.add_argument("--bucket", choices=("30min", "daily"), default="30min")
    sub.add_argument(
        "--daily-from-buckets",
        action="store_true",
        dest="daily_from_buckets",
        help="collapse 30-minute buckets into daily means",
    )
    sub.add_argument("--center", action="store_true", help="subtract the series mean")
    sub.set_defaults(func=_cmd_aggregate)

    sub = commands.add_parser("ingest", help="validate and normalize an OHLC CSV")
    sub.add_argument("--in", dest="in_path", required=True)
    sub.add_argument("--out", required=True)
    sub.set_defaults(func=_cmd_ingest)

    sub = commands.add_parser("fill", help="interpolate missing calendar days")
    sub.add_argument("--in", dest="in_path", required=True)
    sub.add_argument("--out", required=True)
    sub.set_defaults(func=_cmd_fill)

    sub = commands.add_parser("denoise", help="wavelet-denoise the close column")
    sub.add_argument("--in", dest="in_path", required=True)
    sub.add_argument("--out", required=True)
    sub.add_argument("--levels", type=int, default=3)
    sub.add_argument(
        "--threshold-scale", type=float, default=1.0, dest="threshold_scale"
    )
    sub.add_argument(
        "--fill-first",
        action="store_true",
        dest="fill_first",
        help="interpolate calendar gaps before denoising",
    )
    sub.add_argument("--report", help="also write the quality report JSON here")
    sub.set_defaults(func=_cmd_denoise)

    sub = commands.add_parser("train", help="fit a forecasting model")
    sub.add_argument("--prices", required=True, help="filled OHLC CSV")
    sub.add_argument("--model", choices=("lstm", "s-lstm"), default="lstm")
    sub.add_argument("--sentiment", help="centered daily sentiment CSV")
    sub.add_argument("--out", required=True, help="model JSON path")
    _add_train_flags(sub)
    sub.set_defaults(func=_cmd_train)

    sub = commands.add_parser("predict", help="forecast the next close")
    sub.add_argument("--model", required=True, help="trained model JSON")
    sub.add_argument("--prices", required=True)
    sub.add_argument("--sentiment")
    sub.add_argument("--out", help="write the prediction JSON here too")
    sub.set_defaults(func=_cmd_predict)

    sub = commands.add_parser("backtest", help="walk-forward evaluation")
    sub.add_argument("--prices", required=True)
    sub.add_argument(
        "--model",
        choices=("lstm", "s-lstm", "arima", "persistence"),
        default="lstm",
    )
    sub.add_argument("--sentiment")
    sub.add_argument("--start", required=True, help="first test date, YYYY-MM-DD")
    sub.add_argument("--end", required=True, help="last test date, YYYY-MM-DD")
    sub.add_argument("--out", required=True, help="report JSON path")
    sub.add_argument("--rows-out", dest="rows_out", help="per-day CSV path")
    sub.add_argument("--order", default="5,1,0", help="ARIMA order p,d,q")
    sub.add_argument("--refit", choices=("once", "daily"), default="once")
    _add_train_flags(sub)
    sub.set_defaults(func=_cmd_backtest)

    sub = commands.add_parser("synth", help="generate a seeded synthetic dataset")
    sub.add_argument("--out", required=True, help="OHLC CSV path")
    sub.add_argument(
        "--sentiment-out", dest="sentiment_out", help="daily sentiment CSV path"
    )
    sub.add_argument("--length", type=int, default=400)
    sub.add_argument("--beta", type=float, default=0.0)
    sub.add_argument("--sigma", type=float, default=0.01)
    sub.add_argument("--seed", type=int, default=1)
    sub.set_defaults(func=_cmd_synth)

    sub = commands.add_parser("serve", help="run the HTTP service")
    sub.add_argument("--host", default="127.0.0.1")
    sub.add_argument("--port", type=int, default=8000)
    sub.set_defaults(func=_cmd_serve)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    client = ServiceClient(args.server)
    try:
        return args.func(args, client, argv) or 0
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except httpx.HTTPError as exc:
        print(f"error: service request failed: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
