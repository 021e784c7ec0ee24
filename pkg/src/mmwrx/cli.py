"""Command-line interface: run sweeps, query utility tables, serve the API.

    mmwrx sweep --scenario downlink --out chart.json --seed 7
    mmwrx sweep --scenario my_scenario.json --out chart.csv --format csv
    mmwrx utility --chart chart.json --alpha 0.5
    mmwrx serve --bind 127.0.0.1 --port 8000

Scenario files are JSON with the field names of ``Scenario``; the names
``downlink`` and ``uplink`` refer to built-in presets.  Output files are
written atomically: a failed run never leaves a partial file behind.
"""

import argparse
import json
import os
import sys
import tempfile

from mmwrx.chart import build_chart_document, canonical_json_bytes, chart_to_csv, utility_table
from mmwrx.errors import NumericError, ValidationError
from mmwrx.montecarlo import SCENARIO_PRESETS, run_sweep, scenario_from_dict
from mmwrx.tradeoff import UtilityConfig

ENV_BIND = "MMWRX_BIND"
ENV_PORT = "MMWRX_PORT"


def _load_scenario(ref: str):
    if ref in SCENARIO_PRESETS:
        return SCENARIO_PRESETS[ref]()
    try:
        with open(ref, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read scenario file {ref!r}: {exc}", field="scenario")
    except json.JSONDecodeError as exc:
        raise ValidationError(f"scenario file {ref!r} is not valid JSON: {exc}", field="scenario")
    return scenario_from_dict(payload)


def _atomic_write(path: str, data: bytes):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".mmwrx-", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def cmd_sweep(args) -> int:
    scenario = _load_scenario(args.scenario)
    if args.trials is not None:
        from dataclasses import replace

        scenario = replace(scenario, trials=args.trials)
    result = run_sweep(scenario, seed=args.seed)
    doc = build_chart_document(result)
    if args.format == "json":
        data = canonical_json_bytes(doc)
    else:
        data = chart_to_csv(doc).encode("utf-8")
    _atomic_write(args.out, data)
    print(
        f"wrote {args.out}: {len(doc['points'])} points, "
        f"{result.valid_trials}/{result.trials} valid trials, {result.wall_time_s:.1f}s"
    )
    return 0


def cmd_utility(args) -> int:
    with open(args.chart, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    if args.alpha is not None:
        alphas = [args.alpha]
    else:
        alphas = list(UtilityConfig().alpha_grid)
    rows = utility_table(doc, alphas)
    print(f"{'alpha':>6}  {'scheme':<6} {'bits':>4} {'n_rf':>4} {'SE b/s/Hz':>10} {'EE Gbit/J':>10}")
    for r in rows:
        print(
            f"{r['alpha']:>6.2f}  {r['scheme']:<6} {r['bits']:>4} {r['n_rf']:>4} "
            f"{r['se']:>10.3f} {r['ee'] / 1e9:>10.3f}"
        )
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from mmwrx.service import create_app

    bind = args.bind or os.environ.get(ENV_BIND, "127.0.0.1")
    port = args.port if args.port is not None else int(os.environ.get(ENV_PORT, "8000"))
    uvicorn.run(create_app(), host=bind, port=port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mmwrx", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sweep", help="run a Monte Carlo sweep and write a chart document")
    p.add_argument("--scenario", required=True, help="scenario JSON path or preset name")
    p.add_argument("--out", required=True, help="output file path")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--seed", type=int, default=None, help="override the scenario seed")
    p.add_argument("--trials", type=int, default=None, help="override the trial count")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("utility", help="print utility-optimal designs from a chart document")
    p.add_argument("--chart", required=True, help="chart JSON path")
    p.add_argument("--alpha", type=float, default=None, help="single preference weight in [0,1]")
    p.set_defaults(func=cmd_utility)

    p = sub.add_parser("serve", help="run the HTTP evaluation service")
    p.add_argument("--bind", default=None, help=f"bind address (or ${ENV_BIND})")
    p.add_argument("--port", type=int, default=None, help=f"port (or ${ENV_PORT})")
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if getattr(args, "alpha", None) is not None and not 0.0 <= args.alpha <= 1.0:
            raise ValidationError("alpha must lie in [0, 1]", field="alpha")
        return args.func(args)
    except ValidationError as exc:
        field = f" (field: {exc.field})" if exc.field else ""
        print(f"error: {exc}{field}", file=sys.stderr)
        return 2
    except NumericError as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return 3
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
