"""Hermite recursion in sign/log-magnitude form.

d^k/dt^k e^{−γt²} = (−√γ)^k H_k(√γ t) e^{−γt²} with the physicists' H_k.
"""

import math

import numpy as np


def hermite_log(k: int, u: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(sign, log|H_k(u)|) with a running per-element rescale."""
    u = np.asarray(u, dtype=float)
    if k == 0:
        return np.ones_like(u), np.zeros_like(u)
    prev = np.ones_like(u)
    cur = 2.0 * u
    log_scale = np.zeros_like(u)
    for j in range(1, k):
        nxt = 2.0 * u * cur - 2.0 * j * prev
        scale = np.maximum(np.abs(nxt), np.abs(cur))
        scale = np.where(scale > 0, scale, 1.0)
        prev = cur / scale
        cur = nxt / scale
        log_scale += np.log(scale)
    magnitude = np.abs(cur)
    with np.errstate(divide="ignore"):
        log_abs = np.where(magnitude > 0, np.log(np.where(magnitude > 0, magnitude, 1.0)), -np.inf)
    return np.sign(cur), log_abs + log_scale


def hermite(k: int, u: np.ndarray) -> np.ndarray:
    sign, log_abs = hermite_log(k, u)
    return sign * np.exp(log_abs)


def gaussian_derivative_log(k: int, gamma: float, t: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(sign, log|∂^k e^{−γt²}|)."""
    t = np.asarray(t, dtype=float)
    sign, log_abs = hermite_log(k, math.sqrt(gamma) * t)
    sign = sign * (-1.0) ** k
    return sign, log_abs + 0.5 * k * math.log(gamma) - gamma * t * t


def gaussian_derivative(k: int, gamma: float, t: np.ndarray) -> np.ndarray:
    sign, log_abs = gaussian_derivative_log(k, gamma, t)
    return sign * np.exp(log_abs)
