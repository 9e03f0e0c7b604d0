"""Machine-checkable registry of closed-form convolution identities.

Each LemmaSpec pairs a left-hand side (one derived multiplicative
function, or a pair to convolve) with a closed form at prime powers.
check_lemma evaluates the left side through the brute-force divisor-sum
oracle at P**m and compares it with the closed form exactly; nothing is
trusted symbolically on the checked side.

Each CorollarySpec states a divisor-lattice identity at a whole
polynomial A.  The registered forms do not assume any fixed-point
property of A: sides that classical statements shorten using sigma(A)=A
are kept as computed values, so the identities are checkable on
arbitrary squares and special polynomials today.

registry(functions=...) accepts an alternative table of the seven named
functions so tests can corrupt one rule and watch the right lemmas
fail; closed forms always use the true builtins.
"""

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Mapping

from .divisors import DIVISOR_LIMIT, ResourceLimitError, is_special
from .factorize import factor, irreducibles_up_to, is_irreducible
from .gf2poly import ONE, Poly, ZERO, _mul_bits, sqrt_if_square
from .multfun import (
    BUILTINS,
    MultiplicativeFunction,
    convolve_bruteforce,
    inverse,
    phi,
    sigma,
    sigma_star,
)

__all__ = [
    "LemmaSpec",
    "CorollarySpec",
    "IdentityReport",
    "CheckSummary",
    "registry",
    "corollary_registry",
    "check_lemma",
    "check_all",
    "check_corollaries",
    "corollary_suite",
]

_BUILTIN_ORDER = ("delta", "z", "id", "mu", "phi", "sigma", "sigma_star")

# Derived functions used on the right-hand side of corollaries.
_SIGMA_INV = inverse(sigma)
_SIGMASTAR_INV = inverse(sigma_star)
_PHI_INV = inverse(phi)


@dataclass(frozen=True)
class LemmaSpec:
    """One prime-power identity: lhs (1 or 2 functions) vs a closed form."""

    id: str
    lhs: str
    parts: tuple[MultiplicativeFunction, ...]
    closed_form: Callable[[Poly, int], Poly]


@dataclass(frozen=True)
class CorollarySpec:
    """One divisor-lattice identity with an input-shape precondition."""

    id: str
    input_kind: str  # "all" | "square" | "special"
    applies: Callable[[Poly], bool]
    run: Callable[[Poly], "tuple[Poly | None, Poly, bool]"]


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one check at one test point."""

    kind: str  # "lemma" | "corollary"
    spec_id: str
    point: Poly
    prime: "Poly | None" = None
    exponent: "int | None" = None
    expected: "Poly | None" = None
    got: "Poly | None" = None
    passed: bool = False
    skipped: bool = False

    def line(self) -> str:
        if self.kind == "lemma":
            head = f"LEMMA {self.spec_id} P={self.prime} m={self.exponent}"
        else:
            head = f"COROLLARY {self.spec_id} A={self.point}"
        if self.skipped:
            return f"{head} SKIP"
        if self.passed:
            return f"{head} OK"
        if self.expected is None:
            return f"{head} FAIL expected!={self.point} got={self.got}"
        return f"{head} FAIL expected={self.expected} got={self.got}"


@dataclass
class CheckSummary:
    """An ordered batch of reports with pass/fail accounting."""

    reports: list[IdentityReport] = field(default_factory=list)

    @property
    def checked(self) -> int:
        return sum(1 for r in self.reports if not r.skipped)

    @property
    def passed(self) -> int:
        return sum(1 for r in self.reports if not r.skipped and r.passed)

    @property
    def skipped(self) -> int:
        return sum(1 for r in self.reports if r.skipped)

    def failures(self) -> list[IdentityReport]:
        return [r for r in self.reports if not r.skipped and not r.passed]

    def all_passed(self) -> bool:
        return not self.failures()

    def status_line(self) -> str:
        return f"PASS {self.passed}/{self.checked}"

    def render(self, include_passes: bool = False) -> str:
        lines = [
            r.line()
            for r in self.reports
            if include_passes or (not r.passed and not r.skipped)
        ]
        lines.append(self.status_line())
        return "\n".join(lines)


def _pp(f: MultiplicativeFunction, prime: Poly, r: int) -> Poly:
    return f.at_prime_power(prime, r)


def registry(
    functions: "Mapping[str, MultiplicativeFunction] | None" = None,
) -> list[LemmaSpec]:
    """The fixed lemma catalogue, built over the given function table.

    Left-hand sides come from the table (so a corrupted table makes the
    right lemmas fail); closed forms always use the true builtins.
    """
    table = dict(BUILTINS) if functions is None else dict(functions)
    f_z = table["z"]
    f_id = table["id"]
    f_mu = table["mu"]
    f_phi = table["phi"]
    f_sigma = table["sigma"]
    f_sigmastar = table["sigma_star"]
    inv_id = inverse(f_id)
    inv_phi = inverse(f_phi)
    inv_sigma = inverse(f_sigma)
    inv_sigmastar = inverse(f_sigmastar)

    specs: list[LemmaSpec] = []

    def add(spec_id: str, lhs: str, parts, closed) -> None:
        specs.append(LemmaSpec(spec_id, lhs, tuple(parts), closed))

    # f*f vanishes at odd prime powers and squares f at even ones.
    for name in _BUILTIN_ORDER:

        def closed_square(prime: Poly, m: int, _f=BUILTINS[name]) -> Poly:
            if m % 2:
                return ZERO
            v = _pp(_f, prime, m // 2)
            return v * v

        add(f"squareconv_{name}", f"sq({name})",
            (table[name], table[name]), closed_square)

    # Convolutions of plain builtins.
    add("conv_z_mu", "z*mu", (f_z, f_mu),
        lambda prime, m: ONE if m == 0 else ZERO)
    add("conv_phi_z", "phi*z", (f_phi, f_z),
        lambda prime, m: prime**m)
    add("conv_id_z", "id*z", (f_id, f_z),
        lambda prime, m: _pp(sigma, prime, m))
    add("sigma_mu", "sigma*mu", (f_sigma, f_mu),
        lambda prime, m: prime**m)

    def cf_sigma_z(prime: Poly, m: int) -> Poly:
        s = _pp(sigma, prime, m // 2)
        sq = s * s
        return sq if m % 2 == 0 else prime * sq

    add("sigma_z", "sigma*z", (f_sigma, f_z), cf_sigma_z)

    def cf_sigma_id(prime: Poly, m: int) -> Poly:
        s = _pp(sigma, prime, m // 2)
        return s * s

    add("sigma_id", "sigma*id", (f_sigma, f_id), cf_sigma_id)
    add("sigma_phi", "sigma*phi", (f_sigma, f_phi),
        lambda prime, m: prime**m if m % 2 == 0 else ZERO)

    def cf_sigmastar_mu(prime: Poly, m: int) -> Poly:
        if m == 0:
            return ONE
        if m == 1:
            return prime
        return _pp(phi, prime, m)

    add("sigmastar_mu", "sigma_star*mu", (f_sigmastar, f_mu), cf_sigmastar_mu)

    def cf_sigmastar_z(prime: Poly, m: int) -> Poly:
        s = _pp(sigma, prime, m - (m % 2))
        return s if m % 2 == 0 else prime * s

    add("sigmastar_z", "sigma_star*z", (f_sigmastar, f_z), cf_sigmastar_z)
    add("sigmastar_id", "sigma_star*id", (f_sigmastar, f_id),
        lambda prime, m: _pp(sigma, prime, m - (m % 2)))

    def cf_sigmastar_phi(prime: Poly, m: int) -> Poly:
        if m % 2:
            return ZERO
        return _pp(phi, prime, m) if m else ONE

    add("sigmastar_phi", "sigma_star*phi", (f_sigmastar, f_phi), cf_sigmastar_phi)
    add("sigmastar_sigma", "sigma_star*sigma", (f_sigmastar, f_sigma),
        lambda prime, m: _pp(sigma, prime, m) if m % 2 == 0 else ZERO)

    # Dirichlet inverses and their convolutions.
    def cf_id_inv(prime: Poly, m: int) -> Poly:
        if m == 0:
            return ONE
        return prime if m == 1 else ZERO

    add("id_inv", "inv(id)", (inv_id,), cf_id_inv)
    add("idinv_z", "inv(id)*z", (inv_id, f_z),
        lambda prime, m: ONE if m == 0 else ONE + prime)
    add("sigma_idinv", "sigma*inv(id)", (f_sigma, inv_id),
        lambda prime, m: ONE)
    add("phi_inv", "inv(phi)", (inv_phi,),
        lambda prime, m: ONE if m == 0 else ONE + prime)
    add("sigma_phiinv", "sigma*inv(phi)", (f_sigma, inv_phi),
        lambda prime, m: ONE if m % 2 == 0 else ZERO)

    def cf_sigma_inv(prime: Poly, m: int) -> Poly:
        if m == 0:
            return ONE
        if m == 1:
            return ONE + prime
        return prime if m == 2 else ZERO

    add("sigma_inv", "inv(sigma)", (inv_sigma,), cf_sigma_inv)

    def cf_sigmainv_z(prime: Poly, m: int) -> Poly:
        if m == 0:
            return ONE
        return prime if m == 1 else ZERO

    add("sigmainv_z", "inv(sigma)*z", (inv_sigma, f_z), cf_sigmainv_z)
    add("sigmainv_id", "inv(sigma)*id", (inv_sigma, f_id),
        lambda prime, m: ONE if m <= 1 else ZERO)

    def cf_sigmainv_mu(prime: Poly, m: int) -> Poly:
        if m in (1, 3):
            return prime
        return ONE if m in (0, 2) else ZERO

    add("sigmainv_mu", "inv(sigma)*mu", (inv_sigma, f_mu), cf_sigmainv_mu)
    add("sigmastar_sigmainv", "sigma_star*inv(sigma)", (f_sigmastar, inv_sigma),
        lambda prime, m: ONE if m == 0 else (prime if m == 2 else ZERO))

    def cf_sigmastar_inv(prime: Poly, m: int) -> Poly:
        if m == 0:
            return ONE
        if m % 2 == 0:
            return ZERO
        return prime ** (m // 2) * (ONE + prime)

    add("sigmastar_inv", "inv(sigma_star)", (inv_sigmastar,), cf_sigmastar_inv)
    add("sigmastarinv_z", "inv(sigma_star)*z", (inv_sigmastar, f_z),
        lambda prime, m: prime ** (m // 2 + m % 2))
    add("sigmastarinv_id", "inv(sigma_star)*id", (inv_sigmastar, f_id),
        lambda prime, m: prime ** (m // 2))

    def cf_sigmastarinv_mu(prime: Poly, m: int) -> Poly:
        if m == 0:
            return ONE
        if m == 1:
            return prime
        half = prime ** ((m - 1) // 2) if m % 2 else prime ** (m // 2 - 1)
        return half * (ONE + prime)

    add("sigmastarinv_mu", "inv(sigma_star)*mu", (inv_sigmastar, f_mu),
        cf_sigmastarinv_mu)
    add("sigma_sigmastarinv", "sigma*inv(sigma_star)", (f_sigma, inv_sigmastar),
        lambda prime, m: prime ** (m // 2) if m % 2 == 0 else ZERO)

    # Convolutions against phi and id that collapse to near-trivial forms.
    add("sigmainv_phi", "inv(sigma)*phi", (inv_sigma, f_phi),
        lambda prime, m: ONE if m in (0, 2) else ZERO)

    def cf_sigmastarinv_phi(prime: Poly, m: int) -> Poly:
        if m % 2:
            return ZERO
        return _pp(phi, prime, m // 2) if m else ONE

    add("sigmastarinv_phi", "inv(sigma_star)*phi", (inv_sigmastar, f_phi),
        cf_sigmastarinv_phi)
    add("phi_id", "phi*id", (f_phi, f_id),
        lambda prime, m: prime ** (m - (m % 2)))

    return specs


def check_lemma(spec: LemmaSpec, prime: Poly, m: int) -> IdentityReport:
    """Check one spec at P**m: brute-force left side vs closed form."""
    if not is_irreducible(prime):
        raise ValueError(f"test point requires an irreducible P, got {prime}")
    if m < 0:
        raise ValueError("exponent must be nonnegative")
    point = prime**m
    if len(spec.parts) == 1:
        got = spec.parts[0](point)
    else:
        got = convolve_bruteforce(spec.parts[0], spec.parts[1], point)
    expected = spec.closed_form(prime, m)
    return IdentityReport(
        kind="lemma",
        spec_id=spec.id,
        point=point,
        prime=prime,
        exponent=m,
        expected=expected,
        got=got,
        passed=expected == got,
    )


def check_all(
    max_prime_deg: int,
    max_exp: int,
    functions: "Mapping[str, MultiplicativeFunction] | None" = None,
    jobs: int = 1,
    spec_ids: "list[str] | None" = None,
) -> CheckSummary:
    """Check every registered lemma on the full (P, m) grid.

    Work fans out per (spec, P) row when jobs > 1; reports are merged
    and sorted by (spec id, P, m), so output does not depend on jobs.
    """
    if max_exp < 0:
        raise ValueError("max_exp must be nonnegative")
    specs = registry(functions)
    if spec_ids is not None:
        by_id = {s.id: s for s in specs}
        unknown = [i for i in spec_ids if i not in by_id]
        if unknown:
            raise ValueError(f"unknown lemma id(s): {', '.join(unknown)}")
        specs = [by_id[i] for i in spec_ids]
    primes = irreducibles_up_to(max_prime_deg)
    tasks = [(spec, prime) for spec in specs for prime in primes]

    def run(task: tuple[LemmaSpec, Poly]) -> list[IdentityReport]:
        spec, prime = task
        return [check_lemma(spec, prime, m) for m in range(max_exp + 1)]

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(run, tasks))
    else:
        chunks = [run(task) for task in tasks]
    reports = [r for chunk in chunks for r in chunk]
    reports.sort(key=lambda r: (r.spec_id, r.prime.bits, r.exponent))
    return CheckSummary(reports)


# --- corollaries over the divisor lattice -----------------------------------


class _Lattice:
    """Exponent-vector view of the divisor lattice of one polynomial."""

    def __init__(self, a: Poly):
        fact = factor(a)
        count = 1
        for _, e in fact:
            count *= e + 1
        if count > DIVISOR_LIMIT:
            raise ResourceLimitError(
                f"{count} divisors exceed the enumeration bound of {DIVISOR_LIMIT}"
            )
        self.a_bits = a.bits
        self.primes = [p for p, _ in fact]
        self.exps = [e for _, e in fact]
        self.pows = [[(p**j).bits for j in range(e + 1)] for p, e in fact]

    def vectors(self) -> Iterator[tuple[tuple[int, ...], int, int]]:
        """Yield (exponents, divisor mask, codivisor mask) in counting order."""
        k = len(self.exps)
        idx = [0] * k
        while True:
            d = 1
            q = 1
            for i in range(k):
                d = _mul_bits(d, self.pows[i][idx[i]])
                q = _mul_bits(q, self.pows[i][self.exps[i] - idx[i]])
            yield tuple(idx), d, q
            i = 0
            while i < k and idx[i] == self.exps[i]:
                idx[i] = 0
                i += 1
            if i == k:
                return
            idx[i] += 1

    def value(self, f: MultiplicativeFunction, t: tuple[int, ...]) -> int:
        """f at the divisor with exponent vector t, as a mask."""
        acc = 1
        for i, ti in enumerate(t):
            if ti:
                acc = _mul_bits(acc, f.at_prime_power(self.primes[i], ti).bits)
        return acc

    def covalue(self, f: MultiplicativeFunction, t: tuple[int, ...]) -> int:
        """f at the codivisor A/D for exponent vector t, as a mask."""
        acc = 1
        for i, ti in enumerate(t):
            e = self.exps[i] - ti
            if e:
                acc = _mul_bits(acc, f.at_prime_power(self.primes[i], e).bits)
        return acc

    def co_squarefree(self, t: tuple[int, ...]) -> bool:
        return all(self.exps[i] - t[i] <= 1 for i in range(len(t)))

    def radical_bits(self) -> int:
        acc = 1
        for p in self.primes:
            acc = _mul_bits(acc, p.bits)
        return acc


def _is_square(a: Poly) -> bool:
    return sqrt_if_square(a) is not None


def _square_nontrivial(a: Poly) -> bool:
    return a.bits != 1 and _is_square(a)


def _special_nontrivial(a: Poly) -> bool:
    return a.bits != 1 and is_special(a)


def _all_nontrivial(a: Poly) -> bool:
    return a.bits != 1


def _sum_spec(cid, kind, applies, summand, rhs) -> CorollarySpec:
    """A corollary whose left side is an XOR over divisor vectors."""

    def run(a: Poly) -> "tuple[Poly | None, Poly, bool]":
        lat = _Lattice(a)
        acc = 0
        for t, d, q in lat.vectors():
            acc ^= summand(lat, t, d, q)
        got = Poly(acc)
        expected = rhs(a, lat)
        return expected, got, expected == got

    return CorollarySpec(cid, kind, applies, run)


def _squareconv_spec(name: str) -> CorollarySpec:
    f = BUILTINS[name]

    def run(a: Poly) -> "tuple[Poly | None, Poly, bool]":
        got = convolve_bruteforce(f, f, a)
        root = sqrt_if_square(a)
        predicted_fixed = root is not None and f(root) == root
        passed = (got == a) == predicted_fixed
        expected = a if predicted_fixed else None
        return expected, got, passed

    return CorollarySpec(
        f"corol_squareconv_{name}", "all", lambda a: True, run
    )


def corollary_registry() -> list[CorollarySpec]:
    """The fixed catalogue of divisor-lattice corollaries."""
    specs: list[CorollarySpec] = []

    def mid(lat: _Lattice, d: int) -> bool:
        # term restricted to divisors other than 1 and A
        return d != 1 and d != lat.a_bits

    specs.append(_sum_spec(
        "corol_sigma_mu", "square", _is_square,
        lambda lat, t, d, q:
            lat.value(sigma, t) if mid(lat, d) and lat.co_squarefree(t) else 0,
        lambda a, lat: a + sigma(a),
    ))
    specs.append(_sum_spec(
        "corol_sigma_z", "special", _special_nontrivial,
        lambda lat, t, d, q: lat.value(sigma, t) if mid(lat, d) else 0,
        lambda a, lat: sigma(a) + ONE + sigma_star(a),
    ))
    specs.append(_sum_spec(
        "corol_sigma_id", "square", _square_nontrivial,
        lambda lat, t, d, q:
            _mul_bits(lat.value(sigma, t), q) if mid(lat, d) else 0,
        lambda a, lat: _sq(sigma(sqrt_if_square(a))) + sigma(a) + a,
    ))
    specs.append(_sum_spec(
        "corol_sigma_phi", "square", _square_nontrivial,
        lambda lat, t, d, q:
            _mul_bits(lat.value(sigma, t), lat.covalue(phi, t))
            if mid(lat, d) else 0,
        lambda a, lat: a + sigma(a) + phi(a),
    ))
    specs.append(_sum_spec(
        "corol_sigmastar_mu", "square", _is_square,
        lambda lat, t, d, q:
            lat.value(sigma_star, t) if lat.co_squarefree(t) else 0,
        lambda a, lat: phi(a),
    ))
    specs.append(_sum_spec(
        "corol_sigmastar_z", "special", is_special,
        lambda lat, t, d, q: lat.value(sigma_star, t),
        lambda a, lat: sigma(a),
    ))
    specs.append(_sum_spec(
        "corol_sigmastar_id", "square", _square_nontrivial,
        lambda lat, t, d, q:
            _mul_bits(lat.value(sigma_star, t), q) if mid(lat, d) else 0,
        lambda a, lat: sigma(a) + sigma_star(a) + a,
    ))
    specs.append(_sum_spec(
        "corol_sigmastar_phi", "square", _square_nontrivial,
        lambda lat, t, d, q:
            _mul_bits(lat.value(sigma_star, t), lat.covalue(phi, t))
            if mid(lat, d) else 0,
        lambda a, lat: sigma_star(a),
    ))
    specs.append(_sum_spec(
        "corol_sigmastar_sigma", "square", _square_nontrivial,
        lambda lat, t, d, q:
            _mul_bits(lat.value(sigma_star, t), lat.covalue(sigma, t))
            if mid(lat, d) else 0,
        lambda a, lat: sigma_star(a),
    ))
    for name in ("sigma", "sigma_star", "id"):
        specs.append(_squareconv_spec(name))
    specs.append(_sum_spec(
        "corol_sigma_idinv", "square", _is_square,
        lambda lat, t, d, q:
            _mul_bits(lat.value(sigma, t), q)
            if d != lat.a_bits and lat.co_squarefree(t) else 0,
        lambda a, lat: ONE + sigma(a),
    ))
    specs.append(_sum_spec(
        "corol_sigma_phiinv", "square", _square_nontrivial,
        lambda lat, t, d, q:
            _mul_bits(lat.value(sigma, t), lat.covalue(_PHI_INV, t))
            if mid(lat, d) else 0,
        lambda a, lat: ONE + sigma(a) + sigma(Poly(lat.radical_bits())),
    ))
    specs.append(_sum_spec(
        "corol_sigmainv_sigma", "all", _all_nontrivial,
        lambda lat, t, d, q:
            _mul_bits(lat.value(_SIGMA_INV, t), lat.covalue(sigma, t))
            if mid(lat, d) else 0,
        lambda a, lat: sigma(a) + _SIGMA_INV(a),
    ))
    specs.append(_sum_spec(
        "corol_sigmainv_id", "special", _special_nontrivial,
        lambda lat, t, d, q:
            _mul_bits(lat.value(_SIGMA_INV, t), q) if mid(lat, d) else 0,
        lambda a, lat: a + Poly(lat.radical_bits()),
    ))
    specs.append(_sum_spec(
        "corol_sigmainv_mu", "special", _special_nontrivial,
        lambda lat, t, d, q:
            lat.value(_SIGMA_INV, t)
            if mid(lat, d) and lat.co_squarefree(t) else 0,
        lambda a, lat: ONE + Poly(lat.radical_bits()),
    ))
    specs.append(_sum_spec(
        "corol_sigmastarinv_id", "square", _square_nontrivial,
        lambda lat, t, d, q:
            _mul_bits(lat.value(_SIGMASTAR_INV, t), q) if mid(lat, d) else 0,
        lambda a, lat: sqrt_if_square(a) + a,
    ))
    specs.append(_sum_spec(
        "corol_sigmastarinv_mu", "special", _special_nontrivial,
        lambda lat, t, d, q:
            lat.value(_SIGMASTAR_INV, t)
            if mid(lat, d) and lat.co_squarefree(t) else 0,
        lambda a, lat: sigma(Poly(lat.radical_bits())),
    ))
    specs.append(_sum_spec(
        "corol_sigmastarinv_sigma", "square", _square_nontrivial,
        lambda lat, t, d, q:
            _mul_bits(lat.value(_SIGMASTAR_INV, t), lat.covalue(sigma, t))
            if mid(lat, d) else 0,
        lambda a, lat: sigma(a) + sqrt_if_square(a),
    ))
    return specs


def _sq(p: Poly) -> Poly:
    return p * p


def check_corollaries(a: Poly) -> list[IdentityReport]:
    """Check every corollary at one input; inapplicable ones are skipped."""
    if a.bits == 0:
        raise ValueError("corollaries are undefined at 0")
    reports = []
    for spec in corollary_registry():
        if not spec.applies(a):
            reports.append(IdentityReport(
                kind="corollary", spec_id=spec.id, point=a, skipped=True,
            ))
            continue
        expected, got, passed = spec.run(a)
        reports.append(IdentityReport(
            kind="corollary", spec_id=spec.id, point=a,
            expected=expected, got=got, passed=passed,
        ))
    return reports


def suite_inputs(
    square_count: int = 500,
    square_max_deg: int = 20,
    special_max_deg: int = 12,
    seed: int = 20260817,
) -> list[Poly]:
    """Deterministic corollary-suite inputs: random squares plus all
    special polynomials up to the degree bound."""
    rng = random.Random(seed)
    half = square_max_deg // 2
    roots: set[int] = set()
    while len(roots) < square_count:
        roots.add(rng.randrange(2, 1 << (half + 1)))
    masks = {(Poly(s) ** 2).bits for s in roots}
    for s in range(2, 1 << (special_max_deg // 2 + 1)):
        if all(e == 1 for _, e in factor(Poly(s))):
            masks.add((Poly(s) ** 2).bits)
    return [Poly(m) for m in sorted(masks)]


def corollary_suite(
    square_count: int = 500,
    square_max_deg: int = 20,
    special_max_deg: int = 12,
    seed: int = 20260817,
    jobs: int = 1,
) -> CheckSummary:
    """Run every corollary over the deterministic input set."""
    inputs = suite_inputs(square_count, square_max_deg, special_max_deg, seed)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(check_corollaries, inputs))
    else:
        chunks = [check_corollaries(a) for a in inputs]
    reports = [r for chunk in chunks for r in chunk]
    reports.sort(key=lambda r: (r.spec_id, r.point.bits))
    return CheckSummary(reports)
