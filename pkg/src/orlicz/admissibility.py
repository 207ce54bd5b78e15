"""Limit diagnostics for one-parameter Young families.

Three layers:

* sequence classification — given values of ``psi_q(t)`` or ``psi_q^{-1}(y)``
  along an increasing q-schedule, decide between ``zero``, ``finite``,
  ``infinite``, ``oscillating`` and ``undetermined`` using the tail of the
  schedule plus Richardson acceleration (one stage eliminates a ``C/q`` error
  term, a second stage the ``C/q^2`` term);
* admissibility verdicts — probe inverse values over a y-grid (the inverse
  side characterizes the admissibility thresholds), cross-examine with two
  phase-locked subsequences ``q = pi/2 + k*pi`` split by the parity of ``k``
  (which freezes ``sin q`` at ``+-1`` and exposes genuinely oscillating
  families), and corroborate against the value side, which can veto but never
  establish a verdict;
* growth-ratio monotonicity and the log-bump transfer function with its
  exponential comparison map.

Everything is deterministic and pure; reports are frozen dataclasses.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass, replace
from typing import Literal, Sequence

import numpy as np

from .measure import MeasureSpace
from .young import DomainError, E_MINUS_1, YoungFamily, YoungFunction, logbump_family

__all__ = [
    "AdmissibilityReport",
    "ClassifierConfig",
    "DEFAULT_CONFIG",
    "FixedPointReport",
    "LimitEstimate",
    "MonotonicityReport",
    "classify",
    "classify_sequence",
    "geometric_schedule",
    "growth_check",
    "growth_check_inverse_form",
    "limit_of_inverses",
    "limit_of_values",
    "logbump_transfer",
    "phase_locked_schedule",
    "tc_fixed_point_check",
    "tc_map",
]

Kind = Literal["zero", "finite", "infinite", "oscillating", "undetermined"]


@dataclass(frozen=True)
class ClassifierConfig:
    """Thresholds for the limit decision rules.

    ``class_tol`` is the resolution of every verdict: limits closer together
    than this are not distinguished, and extrapolated limits smaller than
    ``zero_tol`` (half of it) count as zero.
    """

    tail_len: int = 5
    big_value: float = 1e12
    small_value: float = 1e-12
    flat_tol: float = 1e-5
    osc_tol: float = 1e-3
    class_tol: float = 1e-2
    zero_tol: float = 5e-3
    growth_factor: float = 4.0
    big_slope: float = 1e2
    doublings: int = 12
    extra_doublings: int = 2
    phase_k_max: int = 64
    phase_k_factor: int = 3
    margin: float = 0.05
    mono_tol: float = 1e-8
    case_ii_slack: float = 1e-6


DEFAULT_CONFIG = ClassifierConfig()

_DEFAULT_T_GRID = tuple(float(t) for t in np.geomspace(0.05, 20.0, 33))
_DEFAULT_Y_GRID = (0.0005, 0.02, 0.2, 0.45, 0.75, 2.0, 10.0)


@dataclass(frozen=True)
class LimitEstimate:
    """Verdict for one sequence ``q -> value`` along a schedule.

    For ``finite`` kinds ``value`` is the accelerated limit and both liminf
    and limsup estimates equal it; for ``oscillating`` the two estimates are
    the separated subsequence limits.  ``evidence`` holds the raw ``(q,
    value)`` pairs sorted by ``q``.
    """

    kind: Kind
    value: float | None
    liminf_est: float
    limsup_est: float
    evidence: tuple[tuple[float, float], ...]


def geometric_schedule(q0: float = 1.0, doublings: int = 12) -> tuple[float, ...]:
    """``q0 * 2^j`` for ``j = 0..doublings``."""
    if not (math.isfinite(q0) and q0 > 0):
        raise DomainError(f"q0 must be positive and finite, got {q0!r}")
    return tuple(q0 * 2.0 ** j for j in range(doublings + 1))


def phase_locked_schedule(k_min: int = 1, k_max: int = 64,
                          parity: str | None = None) -> tuple[float, ...]:
    """``pi/2 + k*pi`` for ``k = k_min..k_max``, optionally one parity only.

    Along these q values ``sin q`` is frozen at ``-1`` (odd ``k``) or ``+1``
    (even ``k``).
    """
    ks = range(int(k_min), int(k_max) + 1)
    if parity == "odd":
        ks = [k for k in ks if k % 2 == 1]
    elif parity == "even":
        ks = [k for k in ks if k % 2 == 0]
    elif parity is not None:
        raise DomainError(f"parity must be 'odd', 'even' or None, got {parity!r}")
    return tuple(math.pi / 2.0 + k * math.pi for k in ks)


def _check_schedule(qs: Sequence[float]) -> tuple[float, ...]:
    qs = tuple(float(q) for q in qs)
    if len(qs) < 8 or any(b <= a for a, b in zip(qs, qs[1:])):
        raise ValueError("schedule needs at least 8 strictly increasing q values")
    return qs


def _richardson_stage(nodes: Sequence[float], vals: Sequence[float],
                      m: int) -> list[float]:
    """One Richardson stage with ``q^m`` weights: eliminates a ``C/q^m`` tail
    term between consecutive entries.  Non-finite inputs propagate as nan.
    The output aligns with ``nodes[1:]``.
    """
    out = []
    for (q1, v1), (q2, v2) in zip(zip(nodes, vals), zip(nodes[1:], vals[1:])):
        if math.isfinite(v1) and math.isfinite(v2):
            w1, w2 = q1 ** m, q2 ** m
            out.append((w2 * v2 - w1 * v1) / (w2 - w1))
        else:
            out.append(math.nan)
    return out


def _stable_tail(vals: Sequence[float], n: int, tol: float) -> float | None:
    """Last value when the tail of ``vals`` has settled within ``tol``."""
    tail = vals[-n:]
    if len(tail) < 2 or not all(math.isfinite(v) for v in tail):
        return None
    scale = max(1.0, abs(tail[-1]))
    if (max(tail) - min(tail) <= tol * scale
            and abs(tail[-1] - tail[-2]) <= tol * scale):
        return tail[-1]
    return None


def classify_sequence(qs: Sequence[float], vs: Sequence[float],
                      config: ClassifierConfig = DEFAULT_CONFIG) -> LimitEstimate:
    """Apply the tail decision rule to one sampled sequence.

    Order of tests: a flat tail (sequences with exponentially fast settling,
    where acceleration in ``1/q`` would only amplify the residue); monotone
    divergence (tail beyond ``big_value``, or sustained growth with a large
    accelerated slope); monotone decay (tail below ``small_value``, or the
    accelerated tail extrapolating below ``zero_tol``); a stable accelerated
    limit after two Richardson stages, or — for monotone tails only — three;
    alternating oscillation; otherwise undetermined.
    """
    qs = tuple(float(q) for q in qs)
    vs = tuple(float(v) for v in vs)
    evidence = tuple(zip(qs, vs))
    n = min(config.tail_len, len(vs))
    tail = vs[-n:]
    lim_lo, lim_hi = min(tail), max(tail)
    nondec = all(b >= a for a, b in zip(tail, tail[1:]))
    noninc = all(b <= a for a, b in zip(tail, tail[1:]))

    flat = _stable_tail(vs, n, config.flat_tol)
    if flat is not None:
        if abs(flat) <= config.small_value:
            return LimitEstimate("zero", None, 0.0, 0.0, evidence)
        return LimitEstimate("finite", flat, flat, flat, evidence)

    r1 = _richardson_stage(qs, vs, 1)
    r2 = _richardson_stage(qs[1:], r1, 2)
    r1_tail = r1[-n:]
    r1_ok = all(math.isfinite(r) for r in r1_tail) and len(r1_tail) >= 2

    if nondec and (tail[-1] > config.big_value or
                   (tail[0] > 0.0 and tail[-1] >= config.growth_factor * tail[0]
                    and r1_ok and r1_tail[-1] > config.big_slope)):
        return LimitEstimate("infinite", None, math.inf, math.inf, evidence)

    if noninc and (tail[-1] < config.small_value or
                   (r1_ok and abs(r1_tail[-1]) <= config.zero_tol
                    and abs(r1_tail[-2]) <= config.zero_tol)):
        return LimitEstimate("zero", None, 0.0, 0.0, evidence)

    value = _stable_tail(r2, n, config.osc_tol)
    if value is None and (nondec or noninc):
        # Monotone but still drifting after two stages: large low-order
        # coefficients (C/q with C in the hundreds) leave a C'/q^3 residue a
        # third stage removes.  Gating on monotonicity keeps oscillating
        # sequences out, since acceleration only inflates their swings.
        r3 = _richardson_stage(qs[2:], r2, 3)
        value = _stable_tail(r3, n, config.osc_tol)
    if value is not None:
        return LimitEstimate("finite", value, value, value, evidence)

    deltas = [b - a for a, b in zip(tail, tail[1:])]
    alternating = len(deltas) >= 3 and all(
        d1 * d2 < 0.0 for d1, d2 in zip(deltas, deltas[1:]))
    if alternating and (lim_hi - lim_lo) > config.osc_tol * max(1.0, abs(tail[-1])):
        return LimitEstimate("oscillating", None, lim_lo, lim_hi, evidence)

    return LimitEstimate("undetermined", None, lim_lo, lim_hi, evidence)


def limit_of_values(family: YoungFamily, t: float,
                    schedule: Sequence[float] | None = None,
                    config: ClassifierConfig = DEFAULT_CONFIG) -> LimitEstimate:
    """Classify ``q -> psi_q(t)``.

    With the default schedule the verdict aggregates the geometric scan with
    the two phase-locked subsequences (needed to certify oscillation); an
    explicit ``schedule`` is classified as-is.
    """
    t = float(t)
    if not (math.isfinite(t) and t > 0.0):
        raise DomainError(f"t must be positive and finite, got {t!r}")
    return _limit(family, family_value_at(family, t), schedule, config)


def limit_of_inverses(family: YoungFamily, y: float,
                      schedule: Sequence[float] | None = None,
                      config: ClassifierConfig = DEFAULT_CONFIG) -> LimitEstimate:
    """Classify ``q -> psi_q^{-1}(y)``; scheduling as in :func:`limit_of_values`."""
    y = float(y)
    if not (math.isfinite(y) and y > 0.0):
        raise DomainError(f"y must be positive and finite, got {y!r}")
    return _limit(family, family_inverse_at(family, y), schedule, config)


def _limit(family: YoungFamily, evaluate, schedule: Sequence[float] | None,
           config: ClassifierConfig) -> LimitEstimate:
    if schedule is not None:
        qs = _check_schedule(schedule)
        return classify_sequence(qs, [evaluate(q) for q in qs], config)
    base = geometric_schedule(family.schedule_q0, config.doublings)
    return _probe(family, evaluate, base, _parity_schedules(family, config),
                  False, config)


def _schedule_or_default(family: YoungFamily, schedule: Sequence[float] | None,
                         config: ClassifierConfig) -> tuple[float, ...]:
    if schedule is None:
        return geometric_schedule(family.schedule_q0, config.doublings)
    return _check_schedule(schedule)


@dataclass(frozen=True)
class AdmissibilityReport:
    """Classification of a family over a measure-space context.

    ``verdict`` is one of ``delta_admissible``, ``alpha_beta_admissible``,
    ``inadmissible_divergent``, ``inadmissible_vanishing``, ``undetermined``.
    Evidence pairs map each probe (a ``y`` for the inverse side, a ``t`` for
    the value side) to its aggregated :class:`LimitEstimate`.
    """

    verdict: str
    delta: float | None
    alpha: float | None
    beta: float | None
    context_mass: float
    inverse_evidence: tuple[tuple[float, LimitEstimate], ...]
    value_evidence: tuple[tuple[float, LimitEstimate], ...]


def _q_admissible(family: YoungFamily, q: float) -> bool:
    if family.q_min > 0.0:
        return q >= family.q_min
    return q > 0.0


def _parity_schedules(family: YoungFamily, config: ClassifierConfig,
                      k_max: int | None = None) -> tuple[tuple[float, ...], ...]:
    out = []
    for parity in ("odd", "even"):
        qs = tuple(q for q in phase_locked_schedule(
            1, k_max if k_max is not None else config.phase_k_max, parity)
            if _q_admissible(family, q))
        out.append(qs if len(qs) >= 8 else ())
    return tuple(out)


def _aggregate(geo: LimitEstimate, odd: LimitEstimate | None,
               even: LimitEstimate | None,
               config: ClassifierConfig) -> LimitEstimate:
    """Combine the geometric estimate with the two phase-locked ones.

    Disagreeing finite parity limits override everything (that is exactly the
    oscillation signature the phase lock exists to expose); a decisive
    geometric verdict stands otherwise; agreeing decisive parity verdicts
    rescue an undetermined geometric tail.
    """
    parts = [geo] + [e for e in (odd, even) if e is not None]
    ev = tuple(sorted(set(p for est in parts for p in est.evidence)))

    if (odd is not None and even is not None
            and odd.kind == "finite" and even.kind == "finite"
            and abs(odd.value - even.value) > config.class_tol):
        lo, hi = sorted((odd.value, even.value))
        return LimitEstimate("oscillating", None, lo, hi, ev)

    if geo.kind in ("zero", "finite", "infinite", "oscillating"):
        return replace(geo, evidence=ev)

    if odd is not None and even is not None and odd.kind == even.kind:
        if odd.kind == "finite":  # agree within class_tol by the test above
            value = 0.5 * (odd.value + even.value)
            return LimitEstimate("finite", value, value, value, ev)
        if odd.kind in ("zero", "infinite"):
            return replace(odd, evidence=ev)

    lo = min(p.liminf_est for p in parts)
    hi = max(p.limsup_est for p in parts)
    return LimitEstimate("undetermined", None, lo, hi, ev)


def _probe(family: YoungFamily, evaluate, base: tuple[float, ...],
           parity_scheds: tuple[tuple[float, ...], ...], extended: bool,
           config: ClassifierConfig) -> LimitEstimate:
    geo = classify_sequence(base, [evaluate(q) for q in base], config)
    if geo.kind == "undetermined" and not extended and config.extra_doublings > 0:
        # one deterministic refinement with a longer geometric tail
        longer = geometric_schedule(base[0], config.doublings + config.extra_doublings)
        geo = classify_sequence(longer, [evaluate(q) for q in longer], config)

    def parity_estimates(scheds):
        return [classify_sequence(s, [evaluate(q) for q in s], config) if s else None
                for s in scheds]

    odd, even = parity_estimates(parity_scheds)
    est = _aggregate(geo, odd, even, config)
    if est.kind == "undetermined" and config.phase_k_factor > 1:
        # Slow phase-locked settling (members converging like r^q with r near
        # 1): push the locked subsequences to larger k before giving up.
        longer = _parity_schedules(family, config,
                                   config.phase_k_max * config.phase_k_factor)
        odd, even = parity_estimates(longer)
        est = _aggregate(geo, odd, even, config)
    return est


def _probe_band(est: LimitEstimate) -> tuple[float, float]:
    """Lower/upper asymptotic band claimed by one aggregated probe."""
    if est.kind == "finite":
        return est.value, est.value
    return est.liminf_est, est.limsup_est


def classify(family: YoungFamily, space: MeasureSpace,
             schedule: Sequence[float] | None = None,
             t_grid: Sequence[float] | None = None,
             y_grid: Sequence[float] | None = None,
             config: ClassifierConfig = DEFAULT_CONFIG) -> AdmissibilityReport:
    """Admissibility verdict from inverse-limit probes with value-side vetoes.

    The inverse side is the characterization: a common finite inverse limit
    ``delta`` across probes yields ``delta_admissible``; separated or spread
    finite limits yield ``alpha_beta_admissible`` with the band ``[alpha,
    beta]`` spanned by all probe limits; inverse limits collapsing to 0 mean
    the members blow up pointwise (norms diverge), inverse limits growing
    without bound mean they vanish pointwise (norms vanish).  For a finite
    total mass only probes ``y >= 1/total_mass`` are meaningful and the
    below-threshold value limits must stay under ``1/total_mass``.

    The value side never establishes a verdict; a decisive value-side limit
    that contradicts the candidate (bounded above ``beta``, or failing to
    decay below ``alpha``) downgrades the verdict to ``undetermined``.
    """
    base = _schedule_or_default(family, schedule, config)
    ts = tuple(float(t) for t in (t_grid if t_grid is not None else _DEFAULT_T_GRID))
    ys = tuple(float(y) for y in (y_grid if y_grid is not None else _DEFAULT_Y_GRID))
    if any(t <= 0 or not math.isfinite(t) for t in ts):
        raise DomainError("t_grid must be positive and finite")
    if any(y <= 0 or not math.isfinite(y) for y in ys):
        raise DomainError("y_grid must be positive and finite")

    mass_floor = 1.0 / space.total_mass if space.finite else 0.0
    probe_ys = tuple(sorted(set(y for y in ys if y >= mass_floor)
                            | ({mass_floor} if space.finite else set())))
    parity_scheds = _parity_schedules(family, config)
    extended = schedule is not None  # caller pinned the schedule: no refinement

    inverse_evidence = tuple(
        (y, _probe(family, family_inverse_at(family, y), base, parity_scheds,
                   extended, config))
        for y in probe_ys)
    value_evidence = tuple(
        (t, _probe(family, family_value_at(family, t), base, parity_scheds,
                   extended, config))
        for t in ts)

    def report(verdict: str, delta=None, alpha=None, beta=None) -> AdmissibilityReport:
        return AdmissibilityReport(verdict, delta, alpha, beta, space.total_mass,
                                   inverse_evidence, value_evidence)

    if not inverse_evidence:
        return report("undetermined")

    kinds = [est.kind for _, est in inverse_evidence]

    if all(k == "zero" for k in kinds):
        return report("inadmissible_divergent")
    if all(k == "infinite" for k in kinds):
        return report("inadmissible_vanishing")

    if all(k == "finite" for k in kinds):
        values = [est.value for _, est in inverse_evidence]
        delta = statistics.median(values)
        if all(abs(v - delta) <= config.class_tol for v in values):
            if _value_side_veto(value_evidence, delta, delta, space, config):
                return report("undetermined")
            return report("delta_admissible", delta=delta)

    if all(k in ("finite", "oscillating") for k in kinds):
        bands = [_probe_band(est) for _, est in inverse_evidence]
        alpha = min(lo for lo, _ in bands)
        beta = max(hi for _, hi in bands)
        if _value_side_veto(value_evidence, alpha, beta, space, config):
            return report("undetermined")
        return report("alpha_beta_admissible", alpha=alpha, beta=beta)

    if all(k in ("zero", "finite", "oscillating") for k in kinds):
        bands = [_probe_band(est) for _, est in inverse_evidence
                 if est.kind != "zero"]
        beta = max(hi for _, hi in bands)
        if _value_side_veto(value_evidence, 0.0, beta, space, config):
            return report("undetermined")
        return report("alpha_beta_admissible", alpha=0.0, beta=beta)

    return report("undetermined")


def family_value_at(family: YoungFamily, t: float):
    """Evaluator ``q -> psi_q(t)`` (picklable-free local helper factory)."""
    def evaluate(q: float) -> float:
        return family.make(q)(t)
    return evaluate


def family_inverse_at(family: YoungFamily, y: float):
    """Evaluator ``q -> psi_q^{-1}(y)``."""
    def evaluate(q: float) -> float:
        return family.make(q).inverse(y)
    return evaluate


def _value_side_veto(value_evidence, alpha: float, beta: float,
                     space: MeasureSpace, config: ClassifierConfig) -> bool:
    """True when a decisive value-side limit contradicts the candidate band.

    Above ``beta`` the members must blow up, so a limit classified zero or
    finite there is a contradiction.  Below ``alpha`` (infinite mass) they
    must vanish, so infinite or finite-nonzero limits contradict; with finite
    total mass the limit must stay strictly below ``1/total_mass``.
    Undetermined value limits never veto — the inverse side carries the
    verdict and slow pointwise growth near the threshold is expected.
    """
    for t, est in value_evidence:
        if t > beta * (1.0 + config.margin):
            if est.kind in ("zero", "finite", "oscillating"):
                return True
        elif alpha > 0.0 and t < alpha * (1.0 - config.margin):
            if est.kind == "infinite":
                return True
            if est.kind in ("finite", "oscillating"):
                high = est.limsup_est
                if space.finite:
                    cap = (1.0 / space.total_mass) * (1.0 - config.case_ii_slack)
                    if high >= cap:
                        return True
                elif high > config.zero_tol:
                    return True
    return False


@dataclass(frozen=True)
class MonotonicityReport:
    """Result of a non-decreasing scan of a growth ratio over a grid.

    ``q_threshold`` is the smallest scheduled q from which every larger
    scheduled q passes; ``witness`` is ``(q, t1, t2, ratio1, ratio2)`` for the
    largest failing q when no threshold exists.
    """

    non_decreasing: bool
    interval: tuple[float, float]
    q_threshold: float | None
    witness: tuple[float, float, float, float, float] | None
    per_q: tuple[tuple[float, bool], ...]


def _scan_non_decreasing(ts, rs, mono_tol: float):
    worst = None
    for t1, t2, r1, r2 in zip(ts, ts[1:], rs, rs[1:]):
        drop = r1 - r2
        if drop > mono_tol * max(1.0, abs(r1)):
            if worst is None or drop > worst[0]:
                worst = (drop, t1, t2, r1, r2)
    if worst is None:
        return True, None
    return False, worst[1:]


def _monotonicity_report(schedule, ts, ratio_fn, interval,
                         config: ClassifierConfig) -> MonotonicityReport:
    per_q = []
    witnesses = {}
    for q in schedule:
        rs = ratio_fn(q)
        ok, witness = _scan_non_decreasing(ts, rs, config.mono_tol)
        per_q.append((float(q), ok))
        if not ok:
            witnesses[float(q)] = witness
    threshold = None
    for q, ok in reversed(per_q):
        if ok:
            threshold = q
        else:
            break
    if threshold is not None:
        return MonotonicityReport(True, interval, threshold, None, tuple(per_q))
    worst_q = per_q[-1][0]
    t1, t2, r1, r2 = witnesses[worst_q]
    return MonotonicityReport(False, interval, None,
                              (worst_q, t1, t2, r1, r2), tuple(per_q))


def growth_check(family: YoungFamily, phi: YoungFunction, k: float,
                 schedule: Sequence[float] | None = None, grid_points: int = 161,
                 config: ClassifierConfig = DEFAULT_CONFIG) -> MonotonicityReport:
    """Scan ``t -> t / psi_q^{-1}(phi(t))`` for non-decrease on ``(0, k]``.

    The grid is geometric from ``1e-9 * k`` to ``k``; the left endpoint 0 is
    excluded (the ratio is a 0/0 form there).
    """
    k = float(k)
    if not (math.isfinite(k) and k > 0.0):
        raise DomainError(f"k must be positive and finite, got {k!r}")
    qs = schedule if schedule is not None else geometric_schedule(
        family.schedule_q0, 5)
    qs = _growth_schedule(qs)
    ts = [float(t) for t in np.geomspace(1e-9 * k, k, grid_points)]
    phis = [phi(t) for t in ts]

    def ratio_fn(q: float):
        psi = family.make(q)
        return [t / psi.inverse(u) for t, u in zip(ts, phis)]

    return _monotonicity_report(qs, ts, ratio_fn, (0.0, k), config)


def growth_check_inverse_form(family: YoungFamily, phi: YoungFunction, k: float,
                              schedule: Sequence[float] | None = None,
                              grid_points: int = 161,
                              config: ClassifierConfig = DEFAULT_CONFIG,
                              ) -> MonotonicityReport:
    """Equivalent scan of ``u -> phi^{-1}(u) / psi_q^{-1}(u)`` on ``(0, phi(k)]``.

    The u-grid is the image under ``phi`` of the direct scan's t-grid, so the
    two forms examine the same effective points and their verdicts agree;
    gridding u geometrically instead would compress the small-t region where
    the violations of fast-growing comparisons live.
    """
    k = float(k)
    if not (math.isfinite(k) and k > 0.0):
        raise DomainError(f"k must be positive and finite, got {k!r}")
    u_hi = phi(k)
    if not (math.isfinite(u_hi) and u_hi > 0.0):
        raise DomainError(f"phi(k) must be positive and finite, got {u_hi!r}")
    qs = schedule if schedule is not None else geometric_schedule(
        family.schedule_q0, 5)
    qs = _growth_schedule(qs)
    us = [phi(float(t)) for t in np.geomspace(1e-9 * k, k, grid_points)]
    phi_invs = [phi.inverse(u) for u in us]

    def ratio_fn(q: float):
        psi = family.make(q)
        return [v / psi.inverse(u) for v, u in zip(phi_invs, us)]

    return _monotonicity_report(qs, us, ratio_fn, (0.0, u_hi), config)


def _growth_schedule(qs: Sequence[float]) -> tuple[float, ...]:
    qs = tuple(float(q) for q in qs)
    if len(qs) < 2 or any(b <= a for a, b in zip(qs, qs[1:])):
        raise ValueError("growth schedule needs at least 2 strictly increasing q values")
    return qs


def logbump_transfer(p: float, q0: float, q: float, t: float) -> float:
    """Transfer factor ``F(t) = t / psi_q^{-1}(psi_q0(t))`` for the log-bump
    family with exponent ``p``.

    At ``t = 0`` the continuous extension is ``log(e-1)^((q-q0)/p)``.  ``F``
    satisfies ``F(t)^p * log(e-1+t)^q0 = log(e-1 + t/F(t))^q`` and exceeds
    ``F(0)`` for every ``t > 0`` when ``q > q0``.
    """
    p = float(p)
    q0 = float(q0)
    q = float(q)
    t = float(t)
    if not (math.isfinite(p) and p >= 1.0):
        raise DomainError(f"p must be >= 1, got {p!r}")
    if not (math.isfinite(q0) and math.isfinite(q) and 0.0 < q0 < q):
        raise DomainError(f"need 0 < q0 < q, got q0={q0!r}, q={q!r}")
    if math.isnan(t) or math.isinf(t) or t < 0.0:
        raise DomainError(f"t must be finite and >= 0, got {t!r}")
    if t == 0.0:
        return math.log(E_MINUS_1) ** ((q - q0) / p)
    fam = logbump_family(p)
    return t / fam.make(q).inverse(fam.make(q0)(t))


def tc_map(p: float, q0: float, q: float, c: float, t: float) -> float:
    """Comparison map ``T_c(t) = c * exp(c^(p/q) * log(e-1+t)^(q0/q)) - c*(e-1)``."""
    return c * math.exp(c ** (p / q) * math.log(E_MINUS_1 + t) ** (q0 / q)) \
        - c * E_MINUS_1


@dataclass(frozen=True)
class FixedPointReport:
    """Fixed-point residual of ``T_c`` plus the concavity predicate on a grid."""

    fixed_point_ok: bool
    residual: float
    concave_on_grid: bool
    predicate_failures: tuple[float, ...]

    def __bool__(self) -> bool:
        return self.fixed_point_ok


def tc_fixed_point_check(p: float, q0: float, q: float, c: float, t1: float,
                         grid_hi: float | None = None, grid_points: int = 64,
                         tol: float = 1e-8) -> FixedPointReport:
    """Check ``T_c(t1) = t1`` for ``c = logbump_transfer(p, q0, q, t1)``.

    Also evaluates the concavity predicate
    ``q0 * c^(p/q) * log(e-1+t)^(q0/q) < q * log(e-1+t) + q - q0``
    on a uniform grid ``[0, grid_hi]`` and reports the failing points.
    """
    p, q0, q = float(p), float(q0), float(q)
    c, t1 = float(c), float(t1)
    if not (math.isfinite(c) and c > 0.0):
        raise DomainError(f"c must be positive, got {c!r}")
    if not (math.isfinite(t1) and t1 > 0.0):
        raise DomainError(f"t1 must be positive, got {t1!r}")
    if not (math.isfinite(q0) and math.isfinite(q) and 0.0 < q0 < q):
        raise DomainError(f"need 0 < q0 < q, got q0={q0!r}, q={q!r}")

    residual = abs(tc_map(p, q0, q, c, t1) - t1)
    ok = residual <= tol * max(1.0, t1)

    hi = float(grid_hi) if grid_hi is not None else max(1.0, 2.0 * t1)
    failures = []
    for t in np.linspace(0.0, hi, grid_points):
        t = float(t)
        lhs = q0 * c ** (p / q) * math.log(E_MINUS_1 + t) ** (q0 / q)
        rhs = q * math.log(E_MINUS_1 + t) + q - q0
        if not lhs < rhs:
            failures.append(t)
    return FixedPointReport(ok, residual, not failures, tuple(failures))
