"""Desk-scale experiments around uniform bounds for Frobenius test exponents.

* ``uniform_bound_survey``: sample filter regular sequences of a fixed length
  and record Fte and HSL of H^0 for each generated ideal.
* ``power_family_sweep``: Fte over the grid of power sequences of one sequence.
* ``regular_case_check``: HSL of H^0 of R/(regular sequence) against a given h.
* ``nilpotent_annihilation_check``: m^(2^i n0) kills H^0_m(R/I_i) modulo its
  relatively nilpotent part, prefix by prefix.
* ``bound_report``: compare a survey with (d - t) h + c.

Verdicts are ``PASS``, ``FAIL``, ``INCONCLUSIVE`` or ``SKIPPED``.  One capped
closure makes a whole survey or sweep INCONCLUSIVE.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from typing import List, Optional, Sequence, Tuple

from .frobenius import (
    FrobeniusConfig,
    Status,
    fte as compute_fte,
    hsl0_from_closure,
)
from .ideals import Ideal, RingSpec, ideal_combine, power_of_maximal, saturate
from .sequences import (
    DEFAULT_RETRIES,
    ElementSequence,
    SamplerExhaustedError,
    is_filter_regular,
    is_parameter_part,
    is_regular_sequence,
    sample_filter_regular,
)

PASS, FAIL, INCONCLUSIVE, SKIPPED = "PASS", "FAIL", "INCONCLUSIVE", "SKIPPED"


@dataclass
class SurveyConfig:
    seed: int = 0
    max_degree: int = 2
    max_retries: int = DEFAULT_RETRIES
    threads: int = 1
    frobenius: FrobeniusConfig = field(default_factory=FrobeniusConfig)


def sample_seed(seed: int, index: int) -> int:
    """Per-sample seed, stable across runs and independent of scheduling."""
    return random.Random(f"{seed}:{index}").getrandbits(63)


def _map(fn, items, threads: int):
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _picklable(cfg: FrobeniusConfig) -> FrobeniusConfig:
    return replace(cfg, progress=None)


# ---------------------------------------------------------------------------
# survey


@dataclass
class SampleRecord:
    sample_index: int
    sequence: List[str]
    fte: Optional[int]
    hsl0: Optional[int]
    status: str
    closure: List[str] = field(default_factory=list)
    seed: Optional[int] = None


@dataclass
class SurveyReport:
    ring: str
    t: int
    d: int
    samples: List[SampleRecord]
    max_fte: Optional[int]
    all_certified: bool
    claimed_bound: Optional[dict] = None
    violations: List[str] = field(default_factory=list)
    verdict: str = INCONCLUSIVE
    kind: str = "survey"

    def to_dict(self) -> dict:
        return asdict(self)


def _survey_one(args) -> SampleRecord:
    ring, t, index, cfg = args
    seed = sample_seed(cfg.seed, index)
    try:
        seq = sample_filter_regular(ring, t, cfg.max_degree, seed, cfg.max_retries)
    except SamplerExhaustedError as exc:
        return SampleRecord(index, [], None, None, f"SamplerExhausted: {exc}", seed=seed)
    I = seq.ideal()
    res = compute_fte(ring, I, cfg.frobenius)
    h0 = hsl0_from_closure(ring, I, res.closure) if res.certified else None
    return SampleRecord(
        index,
        seq.strings(),
        res.fte,
        h0,
        str(res.status),
        [str(g) for g in res.closure.closure.gens],
        seed,
    )


def _bound_dict(d, t, h, c, h_source, c_source):
    if h is None or c is None:
        return None
    return {
        "d": d,
        "t": t,
        "h": h,
        "c": c,
        "value": (d - t) * h + c,
        "h_provenance": h_source,
        "c_provenance": c_source,
    }


def uniform_bound_survey(
    ring: RingSpec,
    t: int,
    n_samples: int,
    cfg: Optional[SurveyConfig] = None,
    h: Optional[int] = None,
    c: Optional[int] = None,
    h_provenance: str = "user",
    c_provenance: str = "user",
) -> SurveyReport:
    """Fte and HSL of H^0 over ``n_samples`` sampled filter regular sequences of length t."""
    cfg = cfg or SurveyConfig()
    d = ring.dim
    if not 1 <= t <= d:
        raise ValueError(f"t = {t} must lie in [1, dim R = {d}]")
    if not ring.homogeneous:
        raise ValueError("surveys need a homogeneous quotient ideal")
    job_cfg = replace(cfg, frobenius=_picklable(cfg.frobenius))
    samples = _map(_survey_one, [(ring, t, i, job_cfg) for i in range(n_samples)], cfg.threads)
    samples.sort(key=lambda s: s.sample_index)

    certified = [s for s in samples if s.status == str(Status.CERTIFIED)]
    all_certified = len(certified) == len(samples)
    max_fte = max((s.fte for s in certified), default=None)
    bound = _bound_dict(d, t, h, c, h_provenance, c_provenance)
    violations = []
    for s in certified:
        if s.hsl0 is not None and s.hsl0 > s.fte:
            violations.append(f"sample {s.sample_index}: hsl0 {s.hsl0} > fte {s.fte}")
        if bound is not None and s.fte > bound["value"]:
            violations.append(f"sample {s.sample_index}: fte {s.fte} > bound {bound['value']}")
    if violations:
        verdict = FAIL
    elif not all_certified:
        verdict = INCONCLUSIVE
    else:
        verdict = PASS
    return SurveyReport(
        ring.name or str(ring), t, d, samples, max_fte, all_certified, bound, violations, verdict
    )


# ---------------------------------------------------------------------------
# power family sweep


@dataclass
class GridPoint:
    exponents: List[int]
    fte: int
    status: str
    filter_regular: bool


@dataclass
class SweepReport:
    ring: str
    base: List[str]
    max_n: int
    grid: List[GridPoint]
    max_fte: Optional[int]
    verdict: str
    kind: str = "sweep"

    def to_dict(self) -> dict:
        return asdict(self)


def _sweep_one(args) -> GridPoint:
    ring, seq, ns, cfg = args
    powered = seq.powers(ns)
    frs = is_filter_regular(powered).ok
    res = compute_fte(ring, powered.ideal(), cfg)
    return GridPoint(list(ns), res.fte, str(res.status), frs)


def power_family_sweep(
    ring: RingSpec,
    seq: ElementSequence,
    max_n: int,
    cfg: Optional[FrobeniusConfig] = None,
    threads: int = 1,
) -> SweepReport:
    """Fte((x_1^n_1, ..., x_t^n_t)) for all 1 <= n_i <= max_n."""
    cfg = cfg or FrobeniusConfig()
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    if not is_filter_regular(seq).ok:
        raise ValueError("base sequence is not filter regular")
    grid_ns = list(itertools.product(range(1, max_n + 1), repeat=len(seq)))
    jobs = [(ring, seq, ns, _picklable(cfg)) for ns in grid_ns]
    grid = _map(_sweep_one, jobs, threads)
    certified = all(g.status == str(Status.CERTIFIED) for g in grid)
    if not all(g.filter_regular for g in grid):
        verdict = FAIL
    elif not certified:
        verdict = INCONCLUSIVE
    else:
        verdict = PASS
    max_fte = max((g.fte for g in grid if g.status == str(Status.CERTIFIED)), default=None)
    return SweepReport(ring.name or str(ring), seq.strings(), max_n, grid, max_fte, verdict)


# ---------------------------------------------------------------------------
# regular sequences and estimated h


@dataclass
class HEstimate:
    value: int
    provenance: str
    samples: List[Tuple[List[str], int]]


def estimate_h(
    ring: RingSpec, n_samples: int = 10, cfg: Optional[SurveyConfig] = None
) -> HEstimate:
    """Max Fte over sampled parameter ideals.

    For a Cohen-Macaulay ring this equals HSL(R) once the sample hits an ideal
    realising the maximum; for other rings it is only a heuristic lower bound.
    """
    cfg = cfg or SurveyConfig()
    d = ring.dim
    out = []
    for i in range(n_samples):
        seq = sample_filter_regular(ring, d, cfg.max_degree, sample_seed(cfg.seed, i), cfg.max_retries)
        if not is_parameter_part(seq).ok:
            raise ValueError(f"sampled sequence {seq} is not a system of parameters")
        res = compute_fte(ring, seq.ideal(), cfg.frobenius)
        if not res.certified:
            raise RuntimeError(f"capped Fte computation for {seq}; cannot estimate h")
        out.append((seq.strings(), res.fte))
    value = max(v for _, v in out)
    prov = f"estimated: max Fte over {n_samples} sampled parameter ideals (seed {cfg.seed})"
    return HEstimate(value, prov, out)


@dataclass
class RegularCaseResult:
    ok: bool
    hsl0: int
    h: int


def regular_case(
    ring: RingSpec, seq: ElementSequence, h: int, cfg: Optional[FrobeniusConfig] = None
) -> RegularCaseResult:
    if not is_regular_sequence(seq).ok:
        raise ValueError(f"{seq} is not a regular sequence")
    I = seq.ideal()
    res = compute_fte(ring, I, cfg)
    value = hsl0_from_closure(ring, I, res.closure)
    return RegularCaseResult(value <= h, value, h)


def regular_case_check(
    ring: RingSpec, seq: ElementSequence, h: int, cfg: Optional[FrobeniusConfig] = None
) -> bool:
    """hsl0((x_1..x_t)) <= h for a regular sequence x_1..x_t."""
    return regular_case(ring, seq, h, cfg).ok


# ---------------------------------------------------------------------------
# annihilation of H^0 modulo its nilpotent part


@dataclass
class PrefixCheck:
    i: int
    power: int
    holds: Optional[bool]
    status: str


def nilpotent_annihilation_check(
    ring: RingSpec,
    seq: ElementSequence,
    n0: int,
    cfg: Optional[FrobeniusConfig] = None,
) -> List[PrefixCheck]:
    """For each prefix i < t: m^(2^i n0) (I_i : m^inf) <= preimage of I_i^F.

    Only the H^0 part is checked; an n0 chosen for higher cohomology cannot be
    validated here.
    """
    if n0 < 0:
        raise ValueError("n0 must be non-negative")
    if not is_filter_regular(seq).ok:
        raise ValueError(f"{seq} is not filter regular")
    out = []
    for i in range(len(seq)):
        I = seq.prefix(i)
        res = compute_fte(ring, I, cfg).closure
        power = 2**i * n0
        if not res.certified:
            out.append(PrefixCheck(i, power, None, str(res.status)))
            continue
        sat, _ = saturate(ring.lift(I))
        product = ideal_combine(power_of_maximal(ring.ambient, power), sat, "product")
        out.append(PrefixCheck(i, power, product <= res.closure, str(res.status)))
    return out


# ---------------------------------------------------------------------------
# bound report


@dataclass
class BoundReport:
    ring: str
    d: int
    t: int
    h: Optional[int]
    c: Optional[int]
    bound: Optional[int]
    max_fte: Optional[int]
    h_provenance: str
    c_provenance: str
    verdict: str
    kind: str = "bound"

    def to_dict(self) -> dict:
        return asdict(self)


def bound_report(
    ring: RingSpec,
    t: int,
    h: Optional[int],
    c: Optional[int],
    survey: SurveyReport,
    h_provenance: str = "user",
    c_provenance: str = "user",
) -> BoundReport:
    """PASS iff every certified survey sample has Fte <= (d - t) h + c."""
    d = ring.dim
    bound = None if h is None or c is None else (d - t) * h + c
    if bound is None:
        verdict = SKIPPED
    elif not survey.all_certified:
        verdict = INCONCLUSIVE
    elif all(s.fte <= bound for s in survey.samples):
        verdict = PASS
    else:
        verdict = FAIL
    return BoundReport(
        ring.name or str(ring), d, t, h, c, bound, survey.max_fte,
        h_provenance if h is not None else "missing",
        c_provenance if c is not None else "missing",
        verdict,
    )
