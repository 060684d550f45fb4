"""Request and response bodies for the HTTP surface.

Every payload is self-contained: CSV and JSON documents travel inline
as text so the service stays stateless and trivially scriptable.
"""
from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field


class HealthResponse(BaseModel):
    status: str
    version: str


class FilterRequest(BaseModel):
    tweets_csv: str
    keywords_text: Optional[str] = None
    sections: list[Literal["epidemic", "panic-buying"]] = Field(
        default=["epidemic", "panic-buying"]
    )


class FilterResponse(BaseModel):
    tweets_csv: str
    kept: int
    total: int


class ScoreRequest(BaseModel):
    tweets_csv: str
    lexicon_text: Optional[str] = None


class ScoreResponse(BaseModel):
    scored_csv: str
    tweets: int


class AggregateRequest(BaseModel):
    scored_csv: str
    bucket: Literal["30min", "daily"] = "30min"
    daily_from_buckets: bool = False
    center: bool = False


class AggregateResponse(BaseModel):
    sentiment_csv: str
    buckets: int


class IngestRequest(BaseModel):
    ohlc_csv: str


class IngestResponse(BaseModel):
    ohlc_csv: str
    rows: int
    first_date: str
    last_date: str


class FillRequest(BaseModel):
    ohlc_csv: str


class FillResponse(BaseModel):
    ohlc_csv: str
    rows: int
    filled_rows: int


class DenoiseRequest(BaseModel):
    ohlc_csv: str
    levels: int = 3
    threshold_scale: float = 1.0


class DenoiseReportBody(BaseModel):
    snr_db: float
    rmse: float
    levels: int
    wavelet_name: str
    threshold_rule: str


class DenoiseResponse(BaseModel):
    ohlc_csv: str
    report: DenoiseReportBody


class TrainOptions(BaseModel):
    epochs: Optional[int] = None
    hidden: Optional[int] = None
    learning_rate: Optional[float] = None
    seed: Optional[int] = None
    clip_norm: Optional[float] = None
    split: Optional[float] = None
    returns_mode: Optional[bool] = None


class TrainRequest(BaseModel):
    ohlc_csv: str
    model: Literal["lstm", "s-lstm"] = "lstm"
    sentiment_csv: Optional[str] = None
    options: TrainOptions = Field(default_factory=TrainOptions)


class TrainResponse(BaseModel):
    model_json: str
    kind: str
    first_train_loss: float
    final_train_loss: float


class PredictRequest(BaseModel):
    model_json: str
    ohlc_csv: str
    sentiment_csv: Optional[str] = None


class PredictResponse(BaseModel):
    prediction: float
    for_date: str


class BacktestRequest(BaseModel):
    ohlc_csv: str
    model: Literal["lstm", "s-lstm", "arima", "persistence"] = "lstm"
    sentiment_csv: Optional[str] = None
    test_start: str
    test_end: str
    options: TrainOptions = Field(default_factory=TrainOptions)
    order: tuple[int, int, int] = (5, 1, 0)
    refit: Literal["once", "daily"] = "once"


class ReportBody(BaseModel):
    model: str
    direction_accuracy: float
    f1_up: float
    mean_relative_error: float
    relative_accuracy: float


class BacktestResponse(BaseModel):
    report: ReportBody
    rows_csv: str


class SynthRequest(BaseModel):
    length: int = 400
    beta: float = 0.0
    sigma: float = 0.01
    seed: int = 1


class SynthResponse(BaseModel):
    ohlc_csv: str
    sentiment_csv: str
