"""Fixed-point search for the divisor-sum functions over F2[x].

A polynomial is perfect when sigma(A) = A and unitary-perfect when
sigma_star(A) = A.  Exhaustive mode enumerates every polynomial of
degree 1..max_deg.  Odd mode exploits the fact that a fixed point with
no linear factor must be a square, so it enumerates A = S*S over the S
with constant term 1 and S(1) = 1, halving the exponent space.

Every hit is re-verified through the literal divisor-sum (and, for
sigma, the brute-force convolution of id with z), so no reported fixed
point depends on the multiplicative evaluation path that found it.

The odd filter encodes known published lower bounds for odd perfect
polynomials as plain configuration constants; nothing here re-derives
them, and passing the filter never claims a candidate is perfect.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .divisors import big_omega, divisors, is_special, omega, unitary_divisors
from .divisors import ResourceLimitError
from .factorize import _factor_bits, _irreducible_masks, _trial_division, factor, parity
from .gf2poly import Poly, X, X1, _divmod_bits, _mul_bits, _sqr_bits, sqrt_if_square
from .multfun import convolve_bruteforce, ident, z

__all__ = [
    "SearchResult",
    "ScanReport",
    "OddFilterReport",
    "EXHAUSTIVE_MAX_DEG",
    "ODD_SCAN_MAX_DEG",
    "verify_perfect",
    "trivial_form",
    "classify",
    "search_fixed_points",
    "odd_square_scan",
    "odd_perfect_filter",
]

EXHAUSTIVE_MAX_DEG = 24
ODD_SCAN_MAX_DEG = 80

# Exhaustive mode precomputes divisor sums through a smallest-factor
# table up to this degree; beyond it, candidates are factored one by one.
_DP_MAX_DEG = 18

# The odd-mode pre-filter compares this many low coefficients before
# committing to a full product; rejections must stay conservative, which
# tests confirm by fully re-checking a sample of filtered candidates.
_FILTER_BITS = 32
_LOW_MASK = (1 << _FILTER_BITS) - 1

# Known published lower bounds for odd perfect polynomials.  These are
# configuration data for the filter, not facts derived by this package.
ODD_MIN_OMEGA = 5
ODD_MIN_BIG_OMEGA = 12
ODD_MIN_DEGREE = 200  # viable candidates need degree strictly above this
ODD_SPECIAL_MIN_OMEGA = 10

_TRIVIAL_BASE = X * X1  # x^2+x


@dataclass(frozen=True)
class SearchResult:
    """One verified fixed point."""

    polynomial: Poly
    kind: str  # "sigma-perfect" | "unitary-perfect"
    classification: str  # "trivial" | "even-nontrivial" | "odd"
    degree: int

    def line(self) -> str:
        head = "PERFECT" if self.kind == "sigma-perfect" else "UNITARY-PERFECT"
        return f"{head} deg={self.degree} {self.polynomial} class={self.classification}"


@dataclass
class ScanReport:
    """Accounting for one odd-square scan."""

    max_deg: int
    unitary: bool
    candidates: int = 0
    filter_rejected: int = 0
    full_checked: int = 0
    hits: "list[SearchResult]" = field(default_factory=list)
    rejected_sample: "list[Poly]" = field(default_factory=list)


@dataclass(frozen=True)
class OddFilterReport:
    """Necessary-condition verdicts for one odd candidate."""

    candidate: Poly
    is_square: bool
    omega: int
    big_omega: int
    degree: int
    special: bool
    conditions: "dict[str, bool]"
    viable: bool


def verify_perfect(a: Poly, unitary: bool = False) -> bool:
    """Exact fixed-point test by XOR over the (unitary) divisor list."""
    if a.bits == 0:
        raise ValueError("perfection is undefined for the zero polynomial")
    fact = factor(a)
    acc = 0
    for d in (unitary_divisors(fact) if unitary else divisors(fact)):
        acc ^= d.bits
    return acc == a.bits


def trivial_form(a: Poly) -> "int | None":
    """n when a = (x^2+x)**(2**n - 1), else None."""
    deg = a.degree
    if deg is None or deg < 2 or deg % 2:
        return None
    k = deg // 2
    n = (k + 1).bit_length() - 1
    if n < 1 or (1 << n) != k + 1:
        return None
    return n if _TRIVIAL_BASE**k == a else None


def classify(a: Poly) -> str:
    """Shape label used in search listings."""
    if trivial_form(a) is not None:
        return "trivial"
    return "even-nontrivial" if parity(a) == "even" else "odd"


# Divisor sums of prime powers, memoized as masks.  Concurrent writers
# can only ever store the same value, so plain dicts are safe here.
_SIGMA_PP: "dict[tuple[int, int], int]" = {}
_SIGMASTAR_PP: "dict[tuple[int, int], int]" = {}


def _sigma_pp_bits(p: int, e: int) -> int:
    v = _SIGMA_PP.get((p, e))
    if v is None:
        acc = 1
        pw = 1
        for _ in range(e):
            pw = _mul_bits(pw, p)
            acc ^= pw
        _SIGMA_PP[(p, e)] = v = acc
    return v


def _sigmastar_pp_bits(p: int, e: int) -> int:
    v = _SIGMASTAR_PP.get((p, e))
    if v is None:
        pw = p
        for _ in range(e - 1):
            pw = _mul_bits(pw, p)
        _SIGMASTAR_PP[(p, e)] = v = pw ^ 1
    return v


def _divsum_pp(p: int, e: int, unitary: bool) -> int:
    return _sigmastar_pp_bits(p, e) if unitary else _sigma_pp_bits(p, e)


def _spf_table(max_deg: int) -> "list[int]":
    """Smallest irreducible factor of every mask of degree <= max_deg."""
    limit = 1 << (max_deg + 1)
    spf = [0] * limit
    for p in _irreducible_masks(max_deg):
        top = 1 << (max_deg + 1 - (p.bit_length() - 1))
        for q in range(1, top):
            idx = _mul_bits(p, q)
            if not spf[idx]:
                spf[idx] = p
    return spf


def _divsum_table(max_deg: int, unitary: bool) -> "list[int]":
    """sigma (or sigma_star) of every mask of degree <= max_deg."""
    limit = 1 << (max_deg + 1)
    spf = _spf_table(max_deg)
    out = [0] * limit
    out[1] = 1
    pp = _sigmastar_pp_bits if unitary else _sigma_pp_bits
    for m in range(2, limit):
        p = spf[m]
        e = 0
        rest = m
        while True:
            q, r = _divmod_bits(rest, p)
            if r:
                break
            rest = q
            e += 1
        out[m] = _mul_bits(pp(p, e), out[rest])
    return out


def _shards(start: int, stop: int, jobs: int) -> "list[tuple[int, int]]":
    jobs = max(1, jobs)
    span = stop - start
    if span <= 0:
        return []
    step = max(1, (span + jobs - 1) // jobs)
    return [(a, min(a + step, stop)) for a in range(start, stop, step)]


def _run_shards(fn, shards, jobs):
    if jobs > 1 and len(shards) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, shards))
    return [fn(s) for s in shards]


def _result(mask: int, unitary: bool) -> SearchResult:
    a = Poly(mask)
    if not verify_perfect(a, unitary):
        raise RuntimeError(f"search hit {a} failed divisor-sum re-verification")
    if not unitary and convolve_bruteforce(ident, z, a) != a:
        raise RuntimeError(f"search hit {a} failed convolution re-verification")
    kind = "unitary-perfect" if unitary else "sigma-perfect"
    return SearchResult(a, kind, classify(a), a.degree)


def search_fixed_points(
    max_deg: int,
    unitary: bool = False,
    odd_only: bool = False,
    jobs: int = 1,
) -> "list[SearchResult]":
    """All fixed points of sigma (or sigma_star) with degree 1..max_deg.

    Candidate ranges are disjoint bitmask intervals merged in order, so
    the result is identical for every jobs value.
    """
    if odd_only:
        return odd_square_scan(max_deg, unitary=unitary, jobs=jobs).hits
    if not 1 <= max_deg <= EXHAUSTIVE_MAX_DEG:
        raise ResourceLimitError(
            f"exhaustive search is bounded at degree {EXHAUSTIVE_MAX_DEG}"
        )
    limit = 1 << (max_deg + 1)
    if max_deg <= _DP_MAX_DEG:
        table = _divsum_table(max_deg, unitary)

        def scan(bounds: "tuple[int, int]") -> "list[int]":
            lo, hi = bounds
            return [m for m in range(lo, hi) if table[m] == m]

    else:

        def scan(bounds: "tuple[int, int]") -> "list[int]":
            lo, hi = bounds
            out = []
            for m in range(lo, hi):
                acc = 1
                for p, e in _trial_division(m):
                    acc = _mul_bits(acc, _divsum_pp(p, e, unitary))
                if acc == m:
                    out.append(m)
            return out

    chunks = _run_shards(scan, _shards(2, limit, jobs), jobs)
    masks = sorted(m for chunk in chunks for m in chunk)
    return [_result(m, unitary) for m in masks]


def odd_square_scan(
    max_deg: int,
    unitary: bool = False,
    jobs: int = 1,
    sample_rejected: int = 0,
) -> ScanReport:
    """Scan A = S*S over all S without linear factors, deg A <= max_deg.

    S must have constant term 1 and S(1) = 1.  For each candidate the
    low coefficients of the divisor sum are compared first; survivors
    get the full product.  Counters and an ascending sample of
    filter-rejected candidates are recorded for conservativeness checks.
    """
    if not 2 <= max_deg <= ODD_SCAN_MAX_DEG:
        raise ResourceLimitError(
            f"odd-square scan is bounded at degree {ODD_SCAN_MAX_DEG}"
        )
    half = max_deg // 2
    low = _LOW_MASK

    def scan(bounds: "tuple[int, int]"):
        lo, hi = bounds
        cand = rej = full = 0
        hit_masks: "list[int]" = []
        sample: "list[int]" = []
        want = sample_rejected
        for s in range(lo | 1, hi, 2):
            if s.bit_count() % 2 == 0:
                continue  # S(1) = 0 means x+1 divides S
            cand += 1
            pairs = (
                _trial_division(s)
                if s.bit_length() - 1 <= 24
                else _factor_bits(s)
            )
            a_bits = _sqr_bits(s)
            prod_low = 1
            for p, e in pairs:
                prod_low = _mul_bits(prod_low, _divsum_pp(p, 2 * e, unitary) & low) & low
            if prod_low != a_bits & low:
                rej += 1
                if len(sample) < want:
                    sample.append(a_bits)
                continue
            full += 1
            acc = 1
            for p, e in pairs:
                acc = _mul_bits(acc, _divsum_pp(p, 2 * e, unitary))
            if acc == a_bits:
                hit_masks.append(a_bits)
        return cand, rej, full, hit_masks, sample

    shards = _shards(4, 1 << (half + 1), jobs)
    report = ScanReport(max_deg=max_deg, unitary=unitary)
    hit_masks: "list[int]" = []
    sample_masks: "list[int]" = []
    for cand, rej, full, hits, sample in _run_shards(scan, shards, jobs):
        report.candidates += cand
        report.filter_rejected += rej
        report.full_checked += full
        hit_masks.extend(hits)
        sample_masks.extend(sample)
    report.hits = [_result(m, unitary) for m in sorted(hit_masks)]
    report.rejected_sample = [Poly(m) for m in sample_masks[:sample_rejected]]
    return report


def odd_perfect_filter(a: Poly) -> OddFilterReport:
    """Evaluate the documented necessary conditions on an odd candidate.

    A viable verdict only means no condition rules the candidate out.
    """
    if parity(a) != "odd":
        raise ValueError("the odd-candidate filter requires an odd polynomial")
    fact = factor(a)
    w = omega(fact)
    big_w = big_omega(fact)
    deg = a.degree
    special = is_special(a)
    square = sqrt_if_square(a) is not None
    conditions = {
        "is_square": square,
        f"omega_ge_{ODD_MIN_OMEGA}": w >= ODD_MIN_OMEGA,
        f"big_omega_ge_{ODD_MIN_BIG_OMEGA}": big_w >= ODD_MIN_BIG_OMEGA,
        f"degree_gt_{ODD_MIN_DEGREE}": deg > ODD_MIN_DEGREE,
        f"special_omega_ge_{ODD_SPECIAL_MIN_OMEGA}": (not special)
        or w >= ODD_SPECIAL_MIN_OMEGA,
    }
    return OddFilterReport(
        candidate=a,
        is_square=square,
        omega=w,
        big_omega=big_w,
        degree=deg,
        special=special,
        conditions=conditions,
        viable=all(conditions.values()),
    )
