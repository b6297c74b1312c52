"""Exact lower-bound arithmetic and asymptotic constant estimates.

N_q(n,m) counts monomials in n variables with individual degree at most
q-1 and total degree below m*q; dividing by the per-point constraint
count C(m+n-1, n) gives a certified minimum Kakeya-set size.  All bound
arithmetic is exact (big ints / Fraction); floats appear only in the
asymptotic report.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction


def count_Nq(n: int, q: int, m: int) -> int:
    """Number of e in [0, q-1]^n with sum(e) < m*q, by inclusion-exclusion.

    #{sum <= T} = sum_j (-1)^j C(n,j) C(T - j*q + n, n), applied at
    T = m*q - 1.
    """
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    t = m * q - 1
    if t >= n * (q - 1):
        return q**n
    total = 0
    for j in range(n + 1):
        top = t - j * q + n
        if top < n:
            break
        total += (-1) ** j * math.comb(n, j) * math.comb(top, n)
    return total


@dataclass(frozen=True)
class BoundReport:
    q: int
    n: int
    m: int
    N: int                       # N_q(n, m)
    denom: int                   # C(m+n-1, n), constraints per point
    bound: Fraction              # N / denom
    bound_ceiling: int

    @property
    def per_point_constraints(self) -> int:
        return self.denom


def lemma_bound(n: int, q: int, m: int) -> BoundReport:
    """Certified minimum Kakeya size N_q(n,m) / C(m+n-1, n), exact."""
    N = count_Nq(n, q, m)
    denom = math.comb(m + n - 1, n)
    bound = Fraction(N, denom)
    return BoundReport(q, n, m, N, denom, bound, math.ceil(bound))


def best_m(n: int, q: int, m_cap: int):
    """Scan m in [1, m_cap]; smallest m attaining the maximum bound."""
    if m_cap < 1:
        raise ValueError("m_cap must be >= 1")
    best = None
    for m in range(1, m_cap + 1):
        rep = lemma_bound(n, q, m)
        if best is None or rep.bound > best[1].bound:
            best = (m, rep)
    return best


def eulerian(n: int):
    """Eulerian numbers A(n, 0..n-1), exact."""
    if not 1 <= n <= 64:
        raise ValueError("n must be in [1, 64]")
    row = [1]
    for size in range(2, n + 1):
        prev = row
        row = [0] * size
        for k in range(size):
            row[k] = (k + 1) * (prev[k] if k < size - 1 else 0) + (
                (size - k) * prev[k - 1] if k >= 1 else 0
            )
    return row


def region_volume(n: int, alpha) -> Fraction:
    """Exact volume of {x in [0,1]^n : sum x_i <= alpha*n} (Irwin-Hall).

    Vol = (1/n!) * sum_{j=0}^{floor(t)} (-1)^j C(n,j) (t-j)^n at t = alpha*n,
    evaluated in exact rational arithmetic (the alternating sum cancels
    catastrophically in floats).
    """
    alpha = Fraction(alpha)
    if not 0 <= alpha <= 1:
        raise ValueError("alpha must be in [0, 1]")
    t = alpha * n
    if t <= 0:
        return Fraction(0)
    if t >= n:
        return Fraction(1)
    acc = Fraction(0)
    for j in range(math.floor(t) + 1):
        acc += (-1) ** j * math.comb(n, j) * (t - j) ** n
    return acc / math.factorial(n)


def region_volume_eulerian(n: int, k: int) -> Fraction:
    """Volume of {sum x_i <= k} at integer threshold k, via Eulerian numbers."""
    if k <= 0:
        return Fraction(0)
    if k >= n:
        return Fraction(1)
    return Fraction(sum(eulerian(n)[:k]), math.factorial(n))


def region_volume_mc(n: int, alpha, samples: int = 20000, seed: int = 0) -> float:
    """Fixed-seed Monte Carlo estimate of the same volume."""
    rng = random.Random(seed)
    t = float(alpha) * n
    hits = sum(1 for _ in range(samples) if sum(rng.random() for _ in range(n)) <= t)
    return hits / samples


def binary_entropy(x: float) -> float:
    if x <= 0 or x >= 1:
        return 0.0
    return -x * math.log2(x) - (1 - x) * math.log2(1 - x)


@dataclass(frozen=True)
class AsymptoticReport:
    alpha: float
    n_probe: int
    tau: float                   # ratio estimate Vol(n+1)/Vol(n) at n_probe
    tau_root: float              # plain Vol(n_probe) ** (1/n_probe)
    entropy_factor: float        # 2^((1+alpha) H(1/(1+alpha)))
    c_alpha: float               # tau / entropy_factor
    ladder: tuple                # ((n, tau, c) ...) over a doubling ladder
    method: str = "eulerian-exact"


def _ln_vol(n: int, alpha) -> float:
    vol = region_volume(n, alpha)
    if vol == 0:
        return -math.inf
    # log of a Fraction with an astronomical numerator/denominator
    return math.log(vol.numerator) - math.log(vol.denominator)


def _tau_ratio(n: int, alpha) -> float:
    """Per-dimension volume growth Vol(n+1)/Vol(n) along the alpha*n slice.

    Converges to the same limit as Vol(n)^(1/n) but cancels the
    polynomial-in-n prefactor, so finite probes sit much closer to it.
    """
    lo, hi = _ln_vol(n, alpha), _ln_vol(n + 1, alpha)
    if math.isinf(lo):
        return 0.0
    return math.exp(hi - lo)


def c_alpha(alpha, n_probe: int = 64) -> AsymptoticReport:
    """Finite-n probe of the asymptotic lower-bound constant.

    tau is the consecutive-volume ratio at n_probe, reported together
    with the plain n-th root and a doubling ladder up to n_probe; no
    limit claim is made beyond the trend.
    """
    if not 0 < alpha <= 1:
        raise ValueError("alpha must be in (0, 1]")
    if n_probe < 8:
        raise ValueError("n_probe must be >= 8")
    factor = 2 ** ((1 + alpha) * binary_entropy(1 / (1 + alpha)))
    ladder = []
    for n in sorted({max(8, n_probe // 4), max(8, n_probe // 2), n_probe}):
        tau_n = _tau_ratio(n, alpha)
        ladder.append((n, tau_n, tau_n / factor))
    tau = ladder[-1][1]
    ln_root = _ln_vol(n_probe, alpha)
    tau_root = 0.0 if math.isinf(ln_root) else math.exp(ln_root / n_probe)
    return AsymptoticReport(
        alpha=float(alpha),
        n_probe=n_probe,
        tau=tau,
        tau_root=tau_root,
        entropy_factor=factor,
        c_alpha=tau / factor,
        ladder=tuple(ladder),
    )
