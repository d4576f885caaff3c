"""Exact decision procedures for zero-correlation-zone properties.

All zero tests reduce group-ring values modulo a cyclotomic polynomial,
so a verdict never depends on floating-point tolerance.  Checking every
ordered code pair at shifts tau >= 0 covers negative shifts too, because
theta(A, B)(-tau) is the conjugate of theta(B, A)(tau).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .algebra import CycInt
from .construct import CodeSet
from .correlate import code_accf
from .errors import InvalidZ, NotAComplementarySet, NotAZccs


class ZccsCheck(NamedTuple):
    ok: bool
    witness: tuple[int, int, int] | None


def _peak_target(cs: CodeSet) -> CycInt:
    return CycInt.from_int(cs.params.M * cs.params.N, cs.params.delta)


def check_zccs(cs: CodeSet, z: int) -> ZccsCheck:
    """Decide the zone conditions at width z.

    Every same-code correlation must be exactly M*N at shift 0 and zero
    for 0 < tau < z; every cross-code correlation must be zero for
    0 <= tau < z.  On failure the witness is the first violating
    (mu1, mu2, tau) in lexicographic scan order.
    """
    n = cs.params.N
    if z < 1 or z > n:
        raise InvalidZ(f"need 1 <= Z <= {n}, got {z}")
    peak = _peak_target(cs)
    for mu1, a in enumerate(cs.codes):
        for mu2, b in enumerate(cs.codes):
            for tau in range(z):
                value = code_accf(a, b, tau)
                target = peak if mu1 == mu2 and tau == 0 else None
                if target is None:
                    bad = not value.is_zero()
                else:
                    bad = value != target
                if bad:
                    return ZccsCheck(False, (mu1, mu2, tau))
    return ZccsCheck(True, None)


def max_zcz(cs: CodeSet) -> int:
    """Widest z for which :func:`check_zccs` holds, by scanning shifts.

    Raises NotAComplementarySet when some code misses the M*N peak at
    shift 0.  Returns 0 when cross-correlations at shift 0 already fail
    (no width qualifies).  Worst case this is O(K^2 * M * N^2) exact
    integer work, which is fine at the scale the builders produce.
    """
    peak = _peak_target(cs)
    for mu, code in enumerate(cs.codes):
        if code_accf(code, code, 0) != peak:
            raise NotAComplementarySet(f"code {mu} misses the zero-shift peak")
    for i, a in enumerate(cs.codes):
        for j, b in enumerate(cs.codes):
            if i != j and not code_accf(a, b, 0).is_zero():
                return 0
    for tau in range(1, cs.params.N):
        for a in cs.codes:
            for b in cs.codes:
                if not code_accf(a, b, tau).is_zero():
                    return tau
    return cs.params.N


def check_optimal(cs: CodeSet, z: int) -> bool:
    """Set-size bound K <= M * floor(N/Z) met with equality."""
    ok, _ = check_zccs(cs, z)
    if not ok:
        raise NotAZccs(f"set fails the zone conditions at Z={z}")
    p = cs.params
    return p.K == p.M * (p.N // z)


def check_ccc(cs: CodeSet) -> bool:
    """True when the set is completely complementary: K = M and the
    zone spans the whole length."""
    if cs.params.K != cs.params.M:
        return False
    return check_zccs(cs, cs.params.N).ok


@dataclass(frozen=True)
class VerificationReport:
    claimed_z: int
    is_zccs_at_claimed_z: bool
    peak: int
    optimal: bool
    is_ccc: bool
    witness: tuple[int, int, int] | None
    max_zcz: int | None = None


def verify_code_set(cs: CodeSet, z: int | None = None, compute_max: bool = False) -> VerificationReport:
    """Full report against a claimed zone width (default: the built-in one)."""
    if z is None:
        z = cs.params.Z
    ok, witness = check_zccs(cs, z)
    peak_value = code_accf(cs.codes[0], cs.codes[0], 0).to_complex()
    report_max = max_zcz(cs) if compute_max else None
    return VerificationReport(
        claimed_z=z,
        is_zccs_at_claimed_z=ok,
        peak=int(round(peak_value.real)),
        optimal=ok and cs.params.K == cs.params.M * (cs.params.N // z),
        is_ccc=check_ccc(cs),
        witness=witness,
        max_zcz=report_max,
    )
