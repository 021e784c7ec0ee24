"""HTTP evaluation service backing the interactive explorer.

Endpoints (all JSON, stateless):

    GET  /presets   scenario and component power model presets
    POST /evaluate  {scenario, overrides?, power_model?, seed?, trials?}
                    -> chart document (same bytes the CLI writes)
    POST /utility   {chart, alpha: number | [numbers]} -> selected designs

Evaluation requests are served synchronously up to ``TRIALS_LIMIT`` trials;
larger runs belong to the CLI.  Errors carry machine-readable codes:
``validation``, ``numeric`` or ``limit``.
"""

from dataclasses import replace

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse

from mmwrx.chart import build_chart_document, canonical_json_bytes, utility_table
from mmwrx.errors import LimitError, NumericError, ValidationError
from mmwrx.montecarlo import (
    SCENARIO_PRESETS,
    run_sweep,
    scenario_from_dict,
    scenario_to_dict,
)
from mmwrx.power import POWER_MODEL_PRESETS, power_model_from_dict, power_model_to_dict
from mmwrx.quantization import ADC_PRESETS_FJ

TRIALS_LIMIT = 200
DEFAULT_SEED = 1

_MERGEABLE = ("channel", "link", "power_model")


def _error_response(status: int, code: str, message: str, field: str | None = None) -> JSONResponse:
    body = {"error": {"code": code, "message": message}}
    if field is not None:
        body["error"]["field"] = field
    return JSONResponse(status_code=status, content=body)


def _resolve_scenario(payload: dict):
    ref = payload.get("scenario", "downlink")
    if isinstance(ref, str):
        if ref not in SCENARIO_PRESETS:
            raise ValidationError(
                f"unknown scenario preset {ref!r}; choose from {sorted(SCENARIO_PRESETS)}",
                field="scenario",
            )
        base = scenario_to_dict(SCENARIO_PRESETS[ref]())
    elif isinstance(ref, dict):
        base = dict(ref)
    else:
        raise ValidationError("scenario must be a preset name or an object", field="scenario")

    overrides = payload.get("overrides", {})
    if overrides:
        if not isinstance(overrides, dict):
            raise ValidationError("overrides must be an object", field="overrides")
        for key, value in overrides.items():
            if key in _MERGEABLE and isinstance(value, dict) and isinstance(base.get(key), dict):
                base[key] = {**base[key], **value}
            else:
                base[key] = value

    if "power_model" in payload and payload["power_model"] is not None:
        if not isinstance(payload["power_model"], dict):
            raise ValidationError("power_model must be an object", field="power_model")
        base["power_model"] = payload["power_model"]

    if "trials" in payload and payload["trials"] is not None:
        base["trials"] = payload["trials"]

    scenario = scenario_from_dict(base)
    if scenario.trials > TRIALS_LIMIT:
        raise LimitError(
            f"synchronous evaluation is limited to {TRIALS_LIMIT} trials "
            f"(requested {scenario.trials}); use the CLI for full-fidelity runs",
            limit=TRIALS_LIMIT,
        )
    return scenario


def create_app() -> FastAPI:
    app = FastAPI(title="mmwrx evaluation service", docs_url=None, redoc_url=None)

    @app.exception_handler(ValidationError)
    async def _validation(_req, exc: ValidationError):
        return _error_response(400, "validation", str(exc), exc.field)

    @app.exception_handler(LimitError)
    async def _limit(_req, exc: LimitError):
        return _error_response(400, "limit", str(exc))

    @app.exception_handler(NumericError)
    async def _numeric(_req, exc: NumericError):
        return _error_response(500, "numeric", str(exc))

    @app.get("/presets")
    async def presets():
        scenarios = {name: scenario_to_dict(make()) for name, make in SCENARIO_PRESETS.items()}
        power_models = {
            name: power_model_to_dict(make()) for name, make in POWER_MODEL_PRESETS.items()
        }
        return JSONResponse(
            {
                "scenarios": scenarios,
                "power_models": power_models,
                "adc_presets_fj": ADC_PRESETS_FJ,
                "trials_limit": TRIALS_LIMIT,
                "default_seed": DEFAULT_SEED,
            }
        )

    @app.post("/evaluate")
    async def evaluate(request: Request):
        try:
            payload = await request.json()
        except Exception:
            raise ValidationError("request body must be JSON", field="body")
        if not isinstance(payload, dict):
            raise ValidationError("request body must be a JSON object", field="body")
        scenario = _resolve_scenario(payload)
        seed = payload.get("seed", DEFAULT_SEED)
        if not isinstance(seed, int) or isinstance(seed, bool) or seed < 0:
            raise ValidationError("seed must be a nonnegative integer", field="seed")
        result = run_sweep(scenario, seed=seed)
        doc = build_chart_document(result)
        return Response(content=canonical_json_bytes(doc), media_type="application/json")

    @app.post("/utility")
    async def utility(request: Request):
        try:
            payload = await request.json()
        except Exception:
            raise ValidationError("request body must be JSON", field="body")
        chart = payload.get("chart")
        if not isinstance(chart, dict) or "points" not in chart or "utility" not in chart:
            raise ValidationError("chart must be a chart document object", field="chart")
        alpha = payload.get("alpha")
        alphas = alpha if isinstance(alpha, list) else [alpha]
        for a in alphas:
            if not isinstance(a, (int, float)) or isinstance(a, bool) or not 0.0 <= a <= 1.0:
                raise ValidationError("alpha must be a number in [0, 1]", field="alpha")
        try:
            rows = utility_table(chart, [float(a) for a in alphas])
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed chart document: {exc}", field="chart")
        return JSONResponse({"selections": rows})

    return app


app = create_app()
