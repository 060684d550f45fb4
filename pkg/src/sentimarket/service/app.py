"""Stateless HTTP service exposing the pipeline stage by stage."""
from __future__ import annotations

import io
from datetime import timedelta

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import DataError
from ..evaluation import backtest as run_backtest
from ..evaluation.synthetic import SyntheticScenario, generate_synthetic
from ..forecast import ForecastModel, TrainConfig, build_features, fit, predict
from ..market import denoise, fill_calendar, ohlc_csv_text, parse_ohlc_rows
from ..market.prices import INTERPOLATED
from ..sentiment import (
    aggregate,
    center,
    daily_mean_of_buckets,
    default_lexicon,
    parse_lexicon_text,
    read_sentiment_csv,
    score_text,
    sentiment_csv_text,
)
from ..sentiment.series import BUCKET_30MIN, BUCKET_DAILY
from ..textpipe import (
    DEFAULT_KEYWORDS,
    parse_keyword_text,
    parse_tweet_rows,
    tweet_csv_text,
)
from ..timefmt import parse_date
from . import schemas
from .formats import parse_scored_csv, scored_csv_text


def _train_config(options: schemas.TrainOptions) -> TrainConfig:
    overrides = {k: v for k, v in options.model_dump().items() if v is not None}
    return TrainConfig(**overrides)


def create_app() -> FastAPI:
    app = FastAPI(title="sentimarket", version=__version__)

    @app.exception_handler(DataError)
    async def data_error_handler(_request: Request, exc: DataError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/health", response_model=schemas.HealthResponse)
    async def health():
        return schemas.HealthResponse(status="ok", version=__version__)

    @app.post("/text/filter", response_model=schemas.FilterResponse)
    async def text_filter(body: schemas.FilterRequest):
        keywords = (
            parse_keyword_text(body.keywords_text, "keywords_text")
            if body.keywords_text is not None
            else DEFAULT_KEYWORDS
        )
        records = parse_tweet_rows(
            io.StringIO(body.tweets_csv), keywords, tuple(body.sections), "tweets_csv"
        )
        kept = [r for r in records if r.matched_keywords]
        return schemas.FilterResponse(
            tweets_csv=tweet_csv_text(kept), kept=len(kept), total=len(records)
        )

    @app.post("/sentiment/score", response_model=schemas.ScoreResponse)
    async def sentiment_score(body: schemas.ScoreRequest):
        lexicon = (
            parse_lexicon_text(body.lexicon_text)
            if body.lexicon_text is not None
            else default_lexicon()
        )
        records = parse_tweet_rows(io.StringIO(body.tweets_csv), source="tweets_csv")
        rows = [(r.timestamp, score_text(r.text, lexicon)) for r in records]
        return schemas.ScoreResponse(scored_csv=scored_csv_text(rows), tweets=len(rows))

    @app.post("/sentiment/aggregate", response_model=schemas.AggregateResponse)
    async def sentiment_aggregate(body: schemas.AggregateRequest):
        scored = parse_scored_csv(body.scored_csv, "scored_csv")
        bucket = BUCKET_30MIN if body.bucket == "30min" else BUCKET_DAILY
        if body.daily_from_buckets and body.bucket != "30min":
            raise DataError("daily_from_buckets requires bucket=30min")
        series = aggregate(scored, bucket)
        if body.daily_from_buckets:
            series = daily_mean_of_buckets(series)
        if body.center:
            series = center(series)
        return schemas.AggregateResponse(
            sentiment_csv=sentiment_csv_text(series), buckets=len(series.score)
        )

    @app.post("/market/ingest", response_model=schemas.IngestResponse)
    async def market_ingest(body: schemas.IngestRequest):
        series = parse_ohlc_rows(io.StringIO(body.ohlc_csv), "ohlc_csv")
        return schemas.IngestResponse(
            ohlc_csv=ohlc_csv_text(series),
            rows=len(series),
            first_date=series.date[0].isoformat(),
            last_date=series.date[-1].isoformat(),
        )

    @app.post("/market/fill", response_model=schemas.FillResponse)
    async def market_fill(body: schemas.FillRequest):
        series = parse_ohlc_rows(io.StringIO(body.ohlc_csv), "ohlc_csv")
        filled = fill_calendar(series)
        return schemas.FillResponse(
            ohlc_csv=ohlc_csv_text(filled),
            rows=len(filled),
            filled_rows=sum(1 for p in filled.provenance if p == INTERPOLATED),
        )

    @app.post("/market/denoise", response_model=schemas.DenoiseResponse)
    async def market_denoise(body: schemas.DenoiseRequest):
        series = parse_ohlc_rows(io.StringIO(body.ohlc_csv), "ohlc_csv")
        out, report = denoise(series, body.levels, body.threshold_scale)
        return schemas.DenoiseResponse(
            ohlc_csv=ohlc_csv_text(out),
            report=schemas.DenoiseReportBody(
                snr_db=report.snr_db,
                rmse=report.rmse,
                levels=report.levels,
                wavelet_name=report.wavelet_name,
                threshold_rule=report.threshold_rule,
            ),
        )

    @app.post("/forecast/train", response_model=schemas.TrainResponse)
    async def forecast_train(body: schemas.TrainRequest):
        series = parse_ohlc_rows(io.StringIO(body.ohlc_csv), "ohlc_csv")
        sentiment = None
        if body.model == "s-lstm":
            if body.sentiment_csv is None:
                raise DataError("s-lstm requires a sentiment series")
            sentiment = read_sentiment_csv(
                io.StringIO(body.sentiment_csv), "sentiment_csv"
            )
        model = fit(series, sentiment, _train_config(body.options))
        return schemas.TrainResponse(
            model_json=model.to_json(),
            kind=model.kind,
            first_train_loss=model.first_train_loss,
            final_train_loss=model.final_train_loss,
        )

    @app.post("/forecast/predict", response_model=schemas.PredictResponse)
    async def forecast_predict(body: schemas.PredictRequest):
        model = ForecastModel.from_json(body.model_json)
        series = parse_ohlc_rows(io.StringIO(body.ohlc_csv), "ohlc_csv")
        sentiment = None
        if model.kind == "s-lstm":
            if body.sentiment_csv is None:
                raise DataError("s-lstm model requires sentiment_csv to predict")
            sentiment = read_sentiment_csv(
                io.StringIO(body.sentiment_csv), "sentiment_csv"
            )
        features = build_features(series, sentiment)
        if features.shape[0] < 3:
            raise DataError("need at least 3 days of data to predict")
        value = predict(model, features[-3:])
        next_day = series.date[-1] + timedelta(days=1)
        return schemas.PredictResponse(
            prediction=value, for_date=next_day.isoformat()
        )

    @app.post("/evaluate/backtest", response_model=schemas.BacktestResponse)
    async def evaluate_backtest(body: schemas.BacktestRequest):
        series = parse_ohlc_rows(io.StringIO(body.ohlc_csv), "ohlc_csv")
        sentiment = None
        if body.model == "s-lstm":
            if body.sentiment_csv is None:
                raise DataError("s-lstm requires a sentiment series")
            sentiment = read_sentiment_csv(
                io.StringIO(body.sentiment_csv), "sentiment_csv"
            )
        report = run_backtest(
            body.model,
            series,
            sentiment,
            parse_date(body.test_start),
            parse_date(body.test_end),
            _train_config(body.options),
            tuple(body.order),
            body.refit,
        )
        return schemas.BacktestResponse(
            report=schemas.ReportBody(
                model=report.model,
                direction_accuracy=report.direction_accuracy,
                f1_up=report.f1_up,
                mean_relative_error=report.mean_relative_error,
                relative_accuracy=report.relative_accuracy,
            ),
            rows_csv=report.rows_csv_text(),
        )

    @app.post("/synth", response_model=schemas.SynthResponse)
    async def synth(body: schemas.SynthRequest):
        prices, sentiment = generate_synthetic(
            SyntheticScenario(
                length=body.length, beta=body.beta, sigma=body.sigma, seed=body.seed
            )
        )
        return schemas.SynthResponse(
            ohlc_csv=ohlc_csv_text(prices),
            sentiment_csv=sentiment_csv_text(sentiment),
        )

    return app


app = create_app()
