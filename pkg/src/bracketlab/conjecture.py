"""Random search over pairs (F, G) for small ratios deg[F, G] / min(deg F, deg G).

Pairs are built with top forms a*h^(d/t), b*h^(N/t) for a random h of degree t,
zero constant terms, and linear parts that are independent unless the
degenerate mode asks for proportional ones.  Everything a report claims is
recomputable from the stored pair.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction

from .bracket import bracket_degree, poisson_bracket
from .divisibility import exact_divide, is_power_up_to_scalar
from .errors import BracketLabError, InvalidSpec, TooLarge
from .family import FamilySpec
from .formulas import build_G, smallest_buildable_threshold
from .hreduce import express_in_H
from .linsolve import rref
from .poly import NEG_INF, Poly
from .randpoly import rand_homogeneous, rand_rational, rng_for

HEADER_NOTE = (
    "Flags are certified from the stored pair. Whether F and G generate their own "
    "centralizers is not decided: centralizer_heuristic only rejects a polynomial that "
    "is a polynomial of degree >= 2 in some lower-degree Q (found as an approximate root)."
)

MAX_SAMPLES = 100_000
MAX_DEGREE = 24


@dataclass(frozen=True)
class CandidateConfig:
    nvars: int = 3
    d: int = 2
    N: int = 3
    t: int = 1
    samples: int = 100
    seed: int = 0
    terms: int = 3
    num: int = 9
    den: int = 4
    mode: str = "random"
    degenerate: bool = False

    def __post_init__(self):
        if self.nvars < 2:
            raise InvalidSpec("nvars must be at least 2")
        if self.d < 2 or self.N < 2:
            raise InvalidSpec("d and N must be at least 2")
        if max(self.d, self.N) > MAX_DEGREE:
            raise TooLarge(f"degrees above {MAX_DEGREE} are outside the search budget")
        if self.N % self.d == 0 or self.d % self.N == 0:
            raise InvalidSpec(f"need d and N mutually non-dividing (got d={self.d}, N={self.N})")
        if self.t < 1 or math.gcd(self.d, self.N) % self.t:
            raise InvalidSpec(f"t = {self.t} must divide gcd(d, N) = {math.gcd(self.d, self.N)}")
        if not 0 <= self.samples <= MAX_SAMPLES:
            raise TooLarge(f"samples must lie in 0..{MAX_SAMPLES}")
        if self.mode not in ("random", "family"):
            raise InvalidSpec("mode must be 'random' or 'family'")
        if self.mode == "family" and self.N < self.d:
            raise InvalidSpec("family mode needs N >= d")
        if self.terms < 1 or self.num < 1 or self.den < 1:
            raise InvalidSpec("terms, num and den must be positive")

    def to_json(self) -> dict:
        return asdict(self)


def linear_rank(polys: list[Poly]) -> int:
    """Rank over Q of the linear parts of ``polys``."""
    rows = []
    for p in polys:
        lin = p.component(1)
        row = {}
        for mono, c in lin.terms.items():
            row[mono.index(1)] = c
        rows.append(row)
    nvars = polys[0].nvars
    reduced, pivots = rref(rows, nvars)
    return sum(1 for p in pivots if p < nvars)


def _random_h(rng, cfg: CandidateConfig) -> Poly:
    while True:
        h = rand_homogeneous(rng, cfg.nvars, cfg.t, cfg.terms, cfg.num, cfg.den)
        if cfg.t == 1 or is_power_up_to_scalar(h) is None:
            return h


def _random_linear(rng, cfg: CandidateConfig) -> Poly:
    return rand_homogeneous(rng, cfg.nvars, 1, cfg.nvars, cfg.num, cfg.den)


def _pick_G1(rng, cfg: CandidateConfig, F1: Poly) -> Poly:
    if cfg.degenerate:
        return F1.scale(rand_rational(rng, cfg.num, cfg.den))
    while True:
        G1 = _random_linear(rng, cfg)
        if linear_rank([F1, G1]) == 2:
            return G1


def _middle(rng, cfg: CandidateConfig, top: int) -> Poly:
    out = Poly.zero(cfg.nvars)
    for l in range(2, top):
        if rng.random() < 0.7:
            out = out + rand_homogeneous(rng, cfg.nvars, l, cfg.terms, cfg.num, cfg.den)
    return out


def _family_pair(rng, cfg: CandidateConfig, h: Poly) -> tuple[Poly, Poly]:
    t, n = cfg.t, cfg.nvars
    comps = {}
    for l in range(1, cfg.d):
        e = rng.randint(0, l // t)
        comps[l] = rand_homogeneous(rng, n, l - e * t, cfg.terms, cfg.num, cfg.den) * h ** e
    a = {cfg.N: rand_rational(rng, cfg.num, cfg.den)}
    for j in range(t, cfg.N, t):
        if rng.random() < 0.3:
            a[j] = rand_rational(rng, cfg.num, cfg.den)
    spec = FamilySpec(n, cfg.d, cfg.N, h, comps, a)
    i = smallest_buildable_threshold(spec)
    F, G = spec.F(), build_G(spec, i)
    F1 = F.component(1)
    keep = i == 1 and not cfg.degenerate and linear_rank([F1, G.component(1)]) == 2
    if not keep:
        G = G - G.component(1) + _pick_G1(rng, cfg, F1)
    return F, G


def generate_pair(cfg: CandidateConfig, index: int) -> tuple[Poly, Poly]:
    """Deterministic pair for ``(cfg.seed, index)`` with F(0) = G(0) = 0."""
    rng = rng_for(cfg.seed, "pair", index)
    h = _random_h(rng, cfg)
    if cfg.mode == "family":
        return _family_pair(rng, cfg, h)
    a = rand_rational(rng, cfg.num, cfg.den)
    b = rand_rational(rng, cfg.num, cfg.den)
    F1 = _random_linear(rng, cfg)
    G1 = _pick_G1(rng, cfg, F1)
    F = (h ** (cfg.d // cfg.t)).scale(a) + _middle(rng, cfg, cfg.d) + F1
    G = (h ** (cfg.N // cfg.t)).scale(b) + _middle(rng, cfg, cfg.N) + G1
    return F, G


def _power_base(P: Poly) -> Poly:
    root = is_power_up_to_scalar(P)
    return root[0] if root else P.monic()


def _divisors_above_one(m: int) -> list[int]:
    return [k for k in range(2, m + 1) if m % k == 0]


def approximate_root(F: Poly, g: Poly, m: int) -> Poly | None:
    """Q with top form g and deg(F/c - Q^m) <= deg F - deg g, where top(F) = c g^m.

    Components of Q are peeled off from the top by exact division by m g^(m-1);
    ``None`` means some division fails, so F is not c Q^m + lower powers of Q.
    """
    q, D = g.degree, F.degree
    c = F.leading_coefficient() / (g ** m).leading_coefficient()
    Fn = F.scale(1 / c)
    denom = (g ** (m - 1)).scale(m)
    Q = g
    for k in range(1, q):
        R = (Fn - Q ** m).component(D - k)
        if R.is_zero():
            continue
        part = exact_divide(denom, R)
        if part is None:
            return None
        Q = Q + part
    return Q


def expand_in(Q: Poly, P: Poly) -> tuple[Fraction, ...] | None:
    """Constants (b_0, ..., b_k) with P = sum b_l Q^l, or None if P is not in C[Q]."""
    q = Q.degree
    if q is NEG_INF or q < 1:
        raise ValueError("Q must be nonconstant")
    if Q.is_homogeneous() and is_power_up_to_scalar(Q) is None:
        try:
            return express_in_H(Q, P)
        except BracketLabError:
            return None
    coeffs: dict[int, Fraction] = {}
    R = P
    while not R.is_zero() and R.degree > 0:
        if R.degree % q:
            return None
        k = R.degree // q
        Qk = Q ** k
        b = R.leading_coefficient() / Qk.leading_coefficient()
        if R.component(R.degree) != Qk.component(R.degree).scale(b):
            return None
        coeffs[k] = b
        R = R - Qk.scale(b)
    if not R.is_zero():
        coeffs[0] = R.constant_term()
    if not coeffs:
        return ()
    return tuple(coeffs.get(l, Fraction(0)) for l in range(max(coeffs) + 1))


def heuristic_centralizer_filter(F: Poly) -> bool:
    """False when F = p(Q) for some Q of lower degree and deg p >= 2; True otherwise.

    Such a Q must have a top form g with top(F) = c g^m, so only proper-power
    top forms produce candidates; for each one the approximate m-th root of F
    is tested.  This is a necessary-condition filter for F generating its own
    centralizer, not a decision procedure.
    """
    deg = F.degree
    if deg is NEG_INF or deg <= 1:
        return True
    root = is_power_up_to_scalar(F.component(deg))
    if root is None:
        return True
    base, M = root
    for m in _divisors_above_one(M):
        Q = approximate_root(F, base ** (M // m), m)
        if Q is not None and expand_in(Q, F) is not None:
            return False
    return True


@dataclass
class PairReport:
    deg_F: object
    deg_G: object
    bracket_degree: object
    min_degree: object
    ratio: Fraction | None
    constant_free: bool
    linear_parts_independent: bool
    makar_limanov: bool
    degrees_non_dividing: bool
    top_forms_dependent: bool
    top_forms_common_h: bool
    shortcut_holds: bool | None
    centralizer_heuristic: bool

    @property
    def applicable(self) -> bool:
        return self.ratio is not None

    @property
    def hypotheses_ok(self) -> bool:
        return (self.constant_free and self.linear_parts_independent and self.degrees_non_dividing
                and self.top_forms_dependent and self.top_forms_common_h)

    def to_json(self) -> dict:
        return {
            "deg_F": str(self.deg_F),
            "deg_G": str(self.deg_G),
            "bracket_degree": str(self.bracket_degree),
            "min_degree": str(self.min_degree),
            "ratio": None if self.ratio is None else str(self.ratio),
            "applicable": self.applicable,
            "flags": {
                "constant_free": self.constant_free,
                "linear_parts_independent": self.linear_parts_independent,
                "makar_limanov": self.makar_limanov,
                "degrees_non_dividing": self.degrees_non_dividing,
                "top_forms_dependent": self.top_forms_dependent,
                "top_forms_common_h": self.top_forms_common_h,
                "hypotheses_ok": self.hypotheses_ok,
            },
            "independence_shortcut_holds": self.shortcut_holds,
            "centralizer_heuristic": self.centralizer_heuristic,
        }


def evaluate_pair(F: Poly, G: Poly) -> PairReport:
    dF, dG = F.degree, G.degree
    bd = bracket_degree(F, G)
    lo = min(dF, dG)
    ratio = None
    if bd is not NEG_INF and lo is not NEG_INF and lo > 0:
        ratio = Fraction(bd, lo)
    independent = linear_rank([F, G]) == 2
    nonconst = dF is not NEG_INF and dG is not NEG_INF and dF > 0 and dG > 0
    non_dividing = nonconst and dF % dG != 0 and dG % dF != 0
    shortcut = None
    top_dep = common_h = False
    if nonconst:
        topF, topG = F.component(dF), G.component(dG)
        top_dep = poisson_bracket(topF, topG).is_zero()
        common_h = _power_base(topF) == _power_base(topG)
        if not top_dep:
            shortcut = bd == dF + dG
    return PairReport(
        deg_F=dF, deg_G=dG, bracket_degree=bd, min_degree=lo, ratio=ratio,
        constant_free=F.constant_term() == 0 and G.constant_term() == 0,
        linear_parts_independent=independent, makar_limanov=not independent,
        degrees_non_dividing=non_dividing, top_forms_dependent=top_dep,
        top_forms_common_h=common_h, shortcut_holds=shortcut,
        centralizer_heuristic=heuristic_centralizer_filter(F) and heuristic_centralizer_filter(G),
    )


def _sample(args: tuple[CandidateConfig, int]) -> dict:
    cfg, index = args
    F, G = generate_pair(cfg, index)
    rep = evaluate_pair(F, G).to_json()
    rep.update(index=index, F=F.to_text(), G=G.to_text())
    return rep


def _ratio_key(text: str) -> Fraction:
    return Fraction(text)


def run_search(cfg: CandidateConfig, threads: int = 1) -> dict:
    """Evaluate ``cfg.samples`` pairs and summarize; identical for any ``threads``."""
    jobs = [(cfg, i) for i in range(cfg.samples)]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            pairs = list(pool.map(_sample, jobs, chunksize=max(1, len(jobs) // (4 * threads))))
    else:
        pairs = [_sample(j) for j in jobs]
    hist: dict[str, int] = {}
    for p in pairs:
        if p["ratio"] is not None:
            hist[p["ratio"]] = hist.get(p["ratio"], 0) + 1
    ratios = [_ratio_key(p["ratio"]) for p in pairs if p["ratio"] is not None]
    certified = [_ratio_key(p["ratio"]) for p in pairs
                 if p["ratio"] is not None and p["flags"]["hypotheses_ok"]]
    candidates = [p for p in pairs
                  if p["ratio"] is not None and _ratio_key(p["ratio"]) <= 1 and p["flags"]["hypotheses_ok"]]
    flag_counts = {}
    for p in pairs:
        for name, v in p["flags"].items():
            flag_counts[name] = flag_counts.get(name, 0) + bool(v)
    return {
        "header": {"tool": "bracketlab search-conjecture", "note": HEADER_NOTE},
        "config": cfg.to_json(),
        "samples": len(pairs),
        "inapplicable": sum(1 for p in pairs if p["ratio"] is None),
        "min_ratio": str(min(ratios)) if ratios else None,
        "min_ratio_hypotheses_ok": str(min(certified)) if certified else None,
        "histogram": [[k, hist[k]] for k in sorted(hist, key=_ratio_key)],
        "flag_counts": flag_counts,
        "candidates": [p["index"] for p in candidates],
        "pairs": pairs,
    }
