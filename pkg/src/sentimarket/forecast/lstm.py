"""Single-layer LSTM with exact backpropagation through time.

The cell follows the standard gated recurrence with split input and
recurrent weights and two bias vectors per gate:

    f_t = sigmoid(W_if x_t + b_if + W_hf h_{t-1} + b_hf)
    i_t = sigmoid(W_ii x_t + b_ii + W_hi h_{t-1} + b_hi)
    o_t = sigmoid(W_io x_t + b_io + W_ho h_{t-1} + b_ho)
    g_t = tanh   (W_ig x_t + b_ig + W_hg h_{t-1} + b_hg)
    c_t = f_t * c_{t-1} + i_t * g_t
    h_t = o_t * tanh(c_t)

A scalar readout h_T . w + b produces the forecast. Gradients are
computed analytically over the full unroll; the finite-difference
agreement is asserted in the test suite.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterator

import numpy as np

from ..errors import DataError

PARAM_FIELDS = (
    "w_if", "w_hf", "b_if", "b_hf",
    "w_ii", "w_hi", "b_ii", "b_hi",
    "w_io", "w_ho", "b_io", "b_ho",
    "w_ig", "w_hg", "b_ig", "b_hg",
    "readout_w", "readout_b",
)


@dataclass(frozen=True)
class LstmParameters:
    w_if: np.ndarray
    w_hf: np.ndarray
    b_if: np.ndarray
    b_hf: np.ndarray
    w_ii: np.ndarray
    w_hi: np.ndarray
    b_ii: np.ndarray
    b_hi: np.ndarray
    w_io: np.ndarray
    w_ho: np.ndarray
    b_io: np.ndarray
    b_ho: np.ndarray
    w_ig: np.ndarray
    w_hg: np.ndarray
    b_ig: np.ndarray
    b_hg: np.ndarray
    readout_w: np.ndarray
    readout_b: float

    def __post_init__(self):
        hidden, inp = self.w_if.shape
        if hidden < 1 or inp < 1:
            raise DataError("hidden and input sizes must be at least 1")
        for gate in "fiog":
            if getattr(self, f"w_i{gate}").shape != (hidden, inp):
                raise DataError(f"w_i{gate} shape inconsistent")
            if getattr(self, f"w_h{gate}").shape != (hidden, hidden):
                raise DataError(f"w_h{gate} shape inconsistent")
            for prefix in ("b_i", "b_h"):
                if getattr(self, f"{prefix}{gate}").shape != (hidden,):
                    raise DataError(f"{prefix}{gate} shape inconsistent")
        if self.readout_w.shape != (hidden,):
            raise DataError("readout_w shape inconsistent")
        for name, value in self.items():
            if not np.all(np.isfinite(value)):
                raise DataError(f"non-finite parameter {name}")

    @property
    def hidden_size(self) -> int:
        return self.w_if.shape[0]

    @property
    def input_size(self) -> int:
        return self.w_if.shape[1]

    def items(self) -> Iterator[tuple[str, np.ndarray]]:
        for name in PARAM_FIELDS:
            yield name, np.asarray(getattr(self, name), dtype=float)


@dataclass(frozen=True)
class LstmState:
    f_t: np.ndarray
    i_t: np.ndarray
    o_t: np.ndarray
    g_t: np.ndarray
    c_t: np.ndarray
    h_t: np.ndarray


def init_parameters(hidden: int, input_size: int, seed: int) -> LstmParameters:
    """Uniform init in [-k, k], k = 1/sqrt(hidden), field order fixed."""
    if hidden < 1 or input_size < 1:
        raise DataError("hidden and input sizes must be at least 1")
    rng = np.random.default_rng(seed)
    k = 1.0 / np.sqrt(hidden)
    shapes = _field_shapes(hidden, input_size)
    drawn = {}
    for name in PARAM_FIELDS:
        shape = shapes[name]
        if shape == ():
            drawn[name] = float(rng.uniform(-k, k))
        else:
            drawn[name] = rng.uniform(-k, k, size=shape)
    return LstmParameters(**drawn)


def _field_shapes(hidden: int, input_size: int) -> dict[str, tuple]:
    shapes: dict[str, tuple] = {}
    for gate in "fiog":
        shapes[f"w_i{gate}"] = (hidden, input_size)
        shapes[f"w_h{gate}"] = (hidden, hidden)
        shapes[f"b_i{gate}"] = (hidden,)
        shapes[f"b_h{gate}"] = (hidden,)
    shapes["readout_w"] = (hidden,)
    shapes["readout_b"] = ()
    return shapes


def _sigmoid(z: np.ndarray) -> np.ndarray:
    return 1.0 / (1.0 + np.exp(-z))


def _stacked(params: LstmParameters) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    wx = np.vstack([params.w_if, params.w_ii, params.w_io, params.w_ig])
    wh = np.vstack([params.w_hf, params.w_hi, params.w_ho, params.w_hg])
    b = np.concatenate(
        [
            params.b_if + params.b_hf,
            params.b_ii + params.b_hi,
            params.b_io + params.b_ho,
            params.b_ig + params.b_hg,
        ]
    )
    return wx, wh, b


def lstm_step(
    params: LstmParameters, x_t: np.ndarray, h_prev: np.ndarray, c_prev: np.ndarray
) -> LstmState:
    """One cell update on a single time step."""
    x_t = np.asarray(x_t, dtype=float)
    h_prev = np.asarray(h_prev, dtype=float)
    c_prev = np.asarray(c_prev, dtype=float)
    hidden = params.hidden_size
    if x_t.shape != (params.input_size,):
        raise DataError(
            f"x_t has shape {x_t.shape}, expected ({params.input_size},)"
        )
    if h_prev.shape != (hidden,):
        raise DataError(f"h_prev has shape {h_prev.shape}, expected ({hidden},)")
    if c_prev.shape != (hidden,):
        raise DataError(f"c_prev has shape {c_prev.shape}, expected ({hidden},)")

    wx, wh, b = _stacked(params)
    z = wx @ x_t + wh @ h_prev + b
    f_t = _sigmoid(z[:hidden])
    i_t = _sigmoid(z[hidden : 2 * hidden])
    o_t = _sigmoid(z[2 * hidden : 3 * hidden])
    g_t = np.tanh(z[3 * hidden :])
    c_t = f_t * c_prev + i_t * g_t
    h_t = o_t * np.tanh(c_t)
    return LstmState(f_t=f_t, i_t=i_t, o_t=o_t, g_t=g_t, c_t=c_t, h_t=h_t)


def forward_batch(params: LstmParameters, inputs: np.ndarray) -> np.ndarray:
    """Readout after the final step for a [batch, steps, features] tensor."""
    inputs = np.asarray(inputs, dtype=float)
    if inputs.ndim != 3 or inputs.shape[2] != params.input_size:
        raise DataError(
            f"inputs have shape {inputs.shape}, expected (batch, steps, {params.input_size})"
        )
    batch, steps, _ = inputs.shape
    hidden = params.hidden_size
    wx, wh, b = _stacked(params)
    h = np.zeros((batch, hidden))
    c = np.zeros((batch, hidden))
    for t in range(steps):
        z = inputs[:, t, :] @ wx.T + h @ wh.T + b
        f = _sigmoid(z[:, :hidden])
        i = _sigmoid(z[:, hidden : 2 * hidden])
        o = _sigmoid(z[:, 2 * hidden : 3 * hidden])
        g = np.tanh(z[:, 3 * hidden :])
        c = f * c + i * g
        h = o * np.tanh(c)
    return h @ params.readout_w + params.readout_b


def loss_and_gradients(
    params: LstmParameters, inputs: np.ndarray, targets: np.ndarray
) -> tuple[float, LstmParameters]:
    """Mean squared error and its exact gradients over the full unroll.

    inputs: [batch, steps, features]; targets: [batch]. The returned
    gradient container reuses the parameter dataclass, one array per
    field of matching shape.
    """
    inputs = np.asarray(inputs, dtype=float)
    targets = np.asarray(targets, dtype=float)
    if inputs.ndim != 3 or inputs.shape[2] != params.input_size:
        raise DataError(
            f"inputs have shape {inputs.shape}, expected (batch, steps, {params.input_size})"
        )
    if targets.shape != (inputs.shape[0],):
        raise DataError(
            f"targets have shape {targets.shape}, expected ({inputs.shape[0]},)"
        )
    if inputs.shape[0] < 1:
        raise DataError("at least one window required")

    batch, steps, _ = inputs.shape
    hidden = params.hidden_size
    wx, wh, b = _stacked(params)

    h = np.zeros((batch, hidden))
    c = np.zeros((batch, hidden))
    cache = []
    for t in range(steps):
        z = inputs[:, t, :] @ wx.T + h @ wh.T + b
        f = _sigmoid(z[:, :hidden])
        i = _sigmoid(z[:, hidden : 2 * hidden])
        o = _sigmoid(z[:, 2 * hidden : 3 * hidden])
        g = np.tanh(z[:, 3 * hidden :])
        c_new = f * c + i * g
        tanh_c = np.tanh(c_new)
        h_new = o * tanh_c
        cache.append((inputs[:, t, :], h, c, f, i, o, g, tanh_c))
        h, c = h_new, c_new

    yhat = h @ params.readout_w + params.readout_b
    residual = yhat - targets
    loss = float(np.mean(residual**2))

    dyhat = 2.0 * residual / batch
    g_readout_w = h.T @ dyhat
    g_readout_b = float(np.sum(dyhat))
    dh = np.outer(dyhat, params.readout_w)
    dc = np.zeros((batch, hidden))

    g_wx = np.zeros_like(wx)
    g_wh = np.zeros_like(wh)
    g_b = np.zeros_like(b)

    for t in reversed(range(steps)):
        x_t, h_prev, c_prev, f, i, o, g, tanh_c = cache[t]
        do = dh * tanh_c
        dc = dc + dh * o * (1.0 - tanh_c**2)
        df = dc * c_prev
        di = dc * g
        dg = dc * i
        dz = np.concatenate(
            [
                df * f * (1.0 - f),
                di * i * (1.0 - i),
                do * o * (1.0 - o),
                dg * (1.0 - g**2),
            ],
            axis=1,
        )
        g_wx += dz.T @ x_t
        g_wh += dz.T @ h_prev
        g_b += dz.sum(axis=0)
        dh = dz @ wh
        dc = dc * f

    grads = {}
    for slot, gate in enumerate("fiog"):
        rows = slice(slot * hidden, (slot + 1) * hidden)
        grads[f"w_i{gate}"] = g_wx[rows]
        grads[f"w_h{gate}"] = g_wh[rows]
        # z depends on b_i and b_h only through their sum, so the two
        # bias vectors carry identical gradients
        grads[f"b_i{gate}"] = g_b[rows].copy()
        grads[f"b_h{gate}"] = g_b[rows].copy()
    grads["readout_w"] = g_readout_w
    grads["readout_b"] = g_readout_b
    return loss, LstmParameters(**grads)


def batch_loss(params: LstmParameters, inputs: np.ndarray, targets: np.ndarray) -> float:
    """Loss without gradients; the finite-difference oracle calls this."""
    yhat = forward_batch(params, inputs)
    return float(np.mean((yhat - np.asarray(targets, dtype=float)) ** 2))


def perturbed(params: LstmParameters, name: str, index: tuple, delta: float) -> LstmParameters:
    """Copy of params with one coordinate shifted; finite-difference helper."""
    value = getattr(params, name)
    if name == "readout_b":
        return replace(params, readout_b=float(value) + delta)
    bumped = np.array(value, dtype=float)
    bumped[index] += delta
    return replace(params, **{name: bumped})
