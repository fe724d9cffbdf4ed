"""Prime-sequence problems: centered 3-term progressions P(n), the sign
sequences s_n and pi_n, good primes, and the prefix-sum inequality.

Index convention throughout: p_1 = 2, p_2 = 3, p_3 = 5, ...
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "PrimeSieve",
    "build_sieve",
    "TripletReport",
    "p_set",
    "count_pair_progressions",
    "s_sequence",
    "pi_sequence",
    "GoodPrimeResult",
    "good_prime_check",
    "sum_inequality_scan",
    "sign_statistics",
    "SignStatistics",
]

_SEGMENT = 1 << 20


class PrimeSieve:
    """Exact, immutable sieve: membership bitmap plus the ordered prime list.

    Construction is segmented, so the working set stays one segment plus
    the output arrays; a limit around 10^9 is feasible in memory (the
    bitmap is limit/8 bytes, the prime list 8 bytes per prime).
    """

    def __init__(self, limit: int, bits: np.ndarray, primes: np.ndarray):
        self.limit = limit
        self._bits = bits
        self._primes = primes

    @property
    def primes(self) -> np.ndarray:
        """All primes <= limit, ascending, as int64 (do not mutate)."""
        return self._primes

    def __len__(self) -> int:
        return len(self._primes)

    def is_prime(self, v: int) -> bool:
        if v < 0 or v > self.limit:
            raise ValueError(f"{v} outside sieve range [0, {self.limit}]")
        return bool(self._bits[v >> 3] & (1 << (v & 7)))

    def prime_at(self, n: int) -> int:
        """p_n with p_1 = 2."""
        if not 1 <= n <= len(self._primes):
            raise ValueError(f"index {n} outside [1, {len(self._primes)}]")
        return int(self._primes[n - 1])

    def primes_up_to(self, x: int) -> np.ndarray:
        if x > self.limit:
            raise ValueError(f"{x} exceeds sieve limit {self.limit}")
        return self._primes[: int(np.searchsorted(self._primes, x, side="right"))]

    def membership(self, values: np.ndarray) -> np.ndarray:
        """Vectorized primality lookup for values within the sieve range."""
        v = np.asarray(values)
        if v.size and (int(v.min()) < 0 or int(v.max()) > self.limit):
            raise ValueError("values outside sieve range")
        return (self._bits[v >> 3] & (1 << (v & 7)).astype(np.uint8)) != 0


def build_sieve(limit: int) -> PrimeSieve:
    """Sieve of Eratosthenes over [0, limit], segmented."""
    if limit < 2:
        raise ValueError(f"build_sieve requires limit >= 2, got {limit}")
    root = int(math.isqrt(limit))
    base = np.ones(root + 1, dtype=bool)
    base[:2] = False
    for p in range(2, int(math.isqrt(root)) + 1):
        if base[p]:
            base[p * p :: p] = False
    base_primes = np.flatnonzero(base)

    bits = np.zeros((limit >> 3) + 1, dtype=np.uint8)
    chunks: list[np.ndarray] = []
    for lo in range(0, limit + 1, _SEGMENT):
        hi = min(lo + _SEGMENT, limit + 1)
        seg = np.ones(hi - lo, dtype=bool)
        if lo == 0:
            seg[:2] = False
        for p in base_primes:
            p = int(p)
            start = max(p * p, ((lo + p - 1) // p) * p)
            if start >= hi:
                continue
            seg[start - lo :: p] = False
        idx = np.flatnonzero(seg) + lo
        chunks.append(idx.astype(np.int64))
        np.bitwise_or.at(bits, idx >> 3, (1 << (idx & 7)).astype(np.uint8))
    return PrimeSieve(limit=limit, bits=bits, primes=np.concatenate(chunks))


@dataclass(frozen=True, slots=True)
class TripletReport:
    """Search outcome for P(n) = {x : x-2n, x, x+2n all prime}.

    For n not divisible by 3, one of the three members is divisible by 3;
    being prime it must equal 3, and only x-2n can (x >= 2n+2 > 3), which
    forces x = 2n+3. Those cases are exhaustive. n ≡ 0 (mod 3) admits no
    such forcing and gets a bounded search.
    """

    n: int
    members: tuple[int, ...]
    residue_case: int
    forced_candidate: int | None
    exhaustive: bool
    x_bound: int | None

    def __post_init__(self) -> None:
        if self.residue_case != 0:
            assert self.exhaustive and set(self.members) <= {2 * self.n + 3}


def p_set(n: int, x_bound: int = 100_000, sieve: PrimeSieve | None = None) -> TripletReport:
    """Members of P(n): centers x of prime 3-progressions with gap 2n.

    n ≢ 0 (mod 3): checks the forced candidate 2n+3 only (exhaustive).
    n ≡ 0 (mod 3): scans primes x <= x_bound (reported non-exhaustive).
    """
    if n < 1:
        raise ValueError(f"p_set requires n >= 1, got {n}")
    if x_bound <= 2 * n + 3:
        raise ValueError(f"x_bound {x_bound} too small; need > {2 * n + 3}")
    case = n % 3
    if case != 0:
        x = 2 * n + 3
        if sieve is not None and sieve.limit >= x + 2 * n:
            good = sieve.is_prime(x) and sieve.is_prime(x + 2 * n)
        else:
            from .factorint import is_probable_prime

            good = is_probable_prime(x) and is_probable_prime(x + 2 * n)
        return TripletReport(
            n=n,
            members=(x,) if good else (),
            residue_case=case,
            forced_candidate=x,
            exhaustive=True,
            x_bound=None,
        )
    if sieve is None or sieve.limit < x_bound + 2 * n:
        sieve = build_sieve(x_bound + 2 * n)
    xs = sieve.primes_up_to(x_bound)
    xs = xs[xs > 2 * n]
    hits = xs[sieve.membership(xs - 2 * n) & sieve.membership(xs + 2 * n)]
    return TripletReport(
        n=n,
        members=tuple(int(v) for v in hits),
        residue_case=0,
        forced_candidate=None,
        exhaustive=False,
        x_bound=x_bound,
    )


def count_pair_progressions(
    m_bound: int, sieve: PrimeSieve | None = None
) -> tuple[int, float]:
    """Count k in [0, m_bound] with 6k+5 and 12k+7 both prime, plus the
    ratio of that count to integral_2^m dx/(ln x)^2 (m = m_bound).

    The ratio is reported for empirical inspection only; no constant is
    asserted. m_bound = 1 must give 2 (pairs (5,7) and (11,19)).
    """
    if m_bound < 1:
        raise ValueError(f"count_pair_progressions requires m_bound >= 1, got {m_bound}")
    need = 12 * m_bound + 7
    if sieve is None:
        sieve = build_sieve(need)
    elif sieve.limit < need:
        raise ValueError(f"sieve limit {sieve.limit} below required {need}")
    ks = np.arange(m_bound + 1, dtype=np.int64)
    count = int(np.count_nonzero(sieve.membership(6 * ks + 5) & sieve.membership(12 * ks + 7)))
    m = float(max(m_bound, 3))
    # composite Simpson on a fine uniform grid; the integrand is smooth
    steps = 4096
    xs = np.linspace(2.0, m, steps + 1)
    ys = 1.0 / np.log(xs) ** 2
    h = (m - 2.0) / steps
    integral = h / 3 * (ys[0] + ys[-1] + 4 * ys[1:-1:2].sum() + 2 * ys[2:-1:2].sum())
    return count, float(count / integral)


def _index_window(n: int, sieve: PrimeSieve, span: int) -> None:
    if n < 2:
        raise ValueError(f"index must be >= 2, got {n}")
    if n + span > len(sieve):
        raise ValueError(
            f"index {n}+{span} beyond sieve ({len(sieve)} primes <= {sieve.limit})"
        )


def s_sequence(n: int, sieve: PrimeSieve) -> int:
    """s_n = p_n^2 - p_{n-1} - p_{n+1}; positive for every p_n >= 3."""
    _index_window(n, sieve, 1)
    p = sieve.prime_at
    return p(n) ** 2 - p(n - 1) - p(n + 1)


def pi_sequence(n: int, sieve: PrimeSieve) -> int:
    """pi_n = p_n^2 - p_{n-1} p_{n+1}; either sign occurs, zero never.

    Zero would force p_{n-1} = p_n = p_{n+1}; it is asserted impossible.
    """
    _index_window(n, sieve, 1)
    p = sieve.prime_at
    value = p(n) ** 2 - p(n - 1) * p(n + 1)
    assert value != 0, f"pi_{n} = 0 contradicts distinctness of primes"
    return value


@dataclass(frozen=True, slots=True)
class GoodPrimeResult:
    """Outcome of the good-prime inequality at index n (vacuous at n=1)."""

    n: int
    prime: int
    is_good: bool
    vacuous: bool

    def __bool__(self) -> bool:
        return self.is_good


def good_prime_check(n: int, sieve: PrimeSieve) -> GoodPrimeResult:
    """Is p_n good, i.e. p_n^2 > p_{n-i} p_{n+i} for all 1 <= i <= n-1?

    Needs the sieve to reach p_{2n-1}; n = 1 has an empty i-range and is
    reported vacuously good with the flag set.
    """
    if n < 1:
        raise ValueError(f"good_prime_check requires n >= 1, got {n}")
    if 2 * n - 1 > len(sieve):
        raise ValueError(
            f"sieve holds {len(sieve)} primes; good_prime_check({n}) needs p_{2 * n - 1}"
        )
    prime = sieve.prime_at(n)
    if n == 1:
        return GoodPrimeResult(n=1, prime=prime, is_good=True, vacuous=True)
    square = prime * prime
    for i in range(1, n):
        if square <= sieve.prime_at(n - i) * sieve.prime_at(n + i):
            return GoodPrimeResult(n=n, prime=prime, is_good=False, vacuous=False)
    return GoodPrimeResult(n=n, prime=prime, is_good=True, vacuous=False)


def sum_inequality_scan(n_max: int, sieve: PrimeSieve) -> tuple[int, list[int]]:
    """Scan p_n^2 > sum_{k=1}^{n+1} p_k for 1 <= n <= n_max.

    Returns (n0, failures): the least n0 such that the inequality holds for
    every n0 <= n <= n_max, and every failing index (all below n0).
    """
    if n_max < 1:
        raise ValueError(f"sum_inequality_scan requires n_max >= 1, got {n_max}")
    if n_max + 1 > len(sieve):
        raise ValueError(f"sieve holds {len(sieve)} primes; need p_{n_max + 1}")
    p = sieve.primes[: n_max + 1].astype(np.int64)
    prefix = np.cumsum(p)  # prefix[j] = p_1 + ... + p_{j+1}
    holds = p[:-1] ** 2 > prefix[1:]
    failures = [int(i) + 1 for i in np.flatnonzero(~holds)]
    n0 = failures[-1] + 1 if failures else 1
    return n0, failures


@dataclass(frozen=True, slots=True)
class SignStatistics:
    """Run-length and frequency data for a +/- sign sequence."""

    positives: int
    negatives: int
    longest_positive_run: int
    longest_negative_run: int
    runs: int


def sign_statistics(values: np.ndarray) -> SignStatistics:
    """Empirical sign behavior of a sequence (no law asserted)."""
    signs = np.sign(np.asarray(values))
    if (signs == 0).any():
        raise ValueError("sign_statistics requires nonzero values")
    changes = np.flatnonzero(np.diff(signs) != 0)
    bounds = np.concatenate(([0], changes + 1, [len(signs)]))
    lengths = np.diff(bounds)
    run_signs = signs[bounds[:-1]]
    pos_runs = lengths[run_signs > 0]
    neg_runs = lengths[run_signs < 0]
    return SignStatistics(
        positives=int((signs > 0).sum()),
        negatives=int((signs < 0).sum()),
        longest_positive_run=int(pos_runs.max()) if pos_runs.size else 0,
        longest_negative_run=int(neg_runs.max()) if neg_runs.size else 0,
        runs=len(lengths),
    )
