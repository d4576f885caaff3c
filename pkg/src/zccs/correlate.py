"""Exact aperiodic correlation of root-of-unity sequences and codes.

Each correlation value is accumulated in the group ring (see
:mod:`zccs.algebra`): a product of two unit entries is a single root of
unity, so a correlation sum is a histogram of exponent differences.
Zero tests are deferred to the caller and are bit-exact.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import CycInt, is_prime
from .boolfn import RootSequence
from .construct import Code
from .errors import InvalidParams, ShapeError


def _check_pair(a: RootSequence, b: RootSequence):
    if len(a) != len(b):
        raise ShapeError(f"sequence lengths differ: {len(a)} != {len(b)}")
    if a.delta != b.delta:
        raise ShapeError(f"root orders differ: {a.delta} != {b.delta}")


def _accf_coeffs(a: RootSequence, b: RootSequence, tau: int) -> np.ndarray:
    n = len(a)
    if tau <= -n or tau >= n:
        return np.zeros(a.delta, dtype=np.int64)
    if tau >= 0:
        diffs = (a.exponents[tau:] - b.exponents[: n - tau]) % a.delta
    else:
        diffs = (a.exponents[: n + tau] - b.exponents[-tau:]) % a.delta
    return np.bincount(diffs, minlength=a.delta)


def accf(a: RootSequence, b: RootSequence, tau: int) -> CycInt:
    """Aperiodic cross-correlation of two sequences at shift tau.

    Sum of a[i+tau] * conj(b[i]) over the overlap for 0 <= tau < N, the
    mirrored sum for -N < tau < 0, and zero outside (-N, N).
    """
    _check_pair(a, b)
    return CycInt(a.delta, _accf_coeffs(a, b, tau))


def code_accf(a: Code, b: Code, tau: int) -> CycInt:
    """Correlation of two codes: the sum over paired member sequences."""
    if len(a.sequences) != len(b.sequences):
        raise ShapeError("codes have different sequence counts")
    total = None
    for sa, sb in zip(a.sequences, b.sequences):
        _check_pair(sa, sb)
        c = _accf_coeffs(sa, sb, tau)
        total = c if total is None else total + c
    if total is None:
        raise ShapeError("cannot correlate empty codes")
    return CycInt(a.sequences[0].delta, total)


@dataclass(frozen=True)
class CorrelationProfile:
    """Code-level correlation at every shift in (-N, N)."""

    length: int
    values: dict[int, CycInt]


def profile(a: Code, b: Code) -> CorrelationProfile:
    n = len(a.sequences[0])
    values = {tau: code_accf(a, b, tau) for tau in range(-n + 1, n)}
    return CorrelationProfile(n, values)


def root_sum(p: int, c: int) -> CycInt:
    """Sum of w_p^(c*alpha) over alpha = 0..p-1; zero unless p divides c."""
    if not is_prime(p):
        raise InvalidParams(f"p must be prime, got {p}")
    exps = (c * np.arange(p, dtype=np.int64)) % p
    return CycInt(p, np.bincount(exps, minlength=p))
