"""Monte Carlo experiment drivers shared by the CLI and the acceptance tests.

Every driver returns an ExperimentResult: labelled curves (series name,
abscissa, estimate, standard error), pass/fail checks for identities the
run must satisfy at any configuration, and free-form metrics.  Stochastic
checks test exact finite-n identities (entry variances, chi moments) at a
wide five-sigma gate so they flag real bugs rather than unlucky seeds.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import gammaln

from .approx import approx_error_study
from .chebyshev import poly_p, poly_p_explicit, poly_product_check
from .gbe import gbe_sample_path, gbe_sample_stationary, iter_gbe_frames
from .grids import TimeGrid
from .limit import bhat_transform
from .moments import semicircular_cov_p, semicircular_cov_p_poly, semicircular_mixed_moment, MomentQuery
from .ou import ou_sample_vector
from .parallel import map_chunks
from .partitions import (
    PairPartition,
    PermutationCycles,
    catalan,
    double_factorial_odd,
    enumerate_nc2,
    enumerate_p2,
    is_noncrossing,
    perm_from_pairing,
    perm_multiplicity,
)
from .rng import derive_rng
from .spectral import eigen_cov_experiment
from .stats import MomentAccumulator, chi_mean, chi_var, covariance_curve, kurtosis_sum_experiment
from .tridiag import tridiagonalize

SIGMA_GATE = 5.0  # studentized deviation allowed before a sanity check fails


@dataclass(frozen=True)
class Curve:
    """One labelled curve destined for one CSV series."""

    series: str
    t: np.ndarray
    value: np.ndarray
    se: np.ndarray | None = None


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class ExperimentResult:
    name: str
    config: dict
    curves: list
    checks: list
    metrics: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def curve(self, series: str) -> Curve:
        for c in self.curves:
            if c.series == series:
                return c
        raise KeyError(series)


def _chi_mean_profile(dof: np.ndarray) -> np.ndarray:
    half = 0.5 * np.asarray(dof, dtype=float)
    return np.exp(0.5 * math.log(2.0) + gammaln(half + 0.5) - gammaln(half))


def _studentized_check(name: str, dev: np.ndarray, se: np.ndarray, floor: float = 0.0) -> Check:
    """Max |dev| / (se + floor) against the five-sigma gate."""
    scale = np.asarray(se, dtype=float) + floor
    z = float(np.max(np.abs(np.asarray(dev, dtype=float)) / scale))
    return Check(name=name, passed=z <= SIGMA_GATE, detail=f"max |dev|/se = {z:.3f} (gate {SIGMA_GATE:.1f})")


def _merge_chunks(parts: list) -> list:
    """Merge chunk tuples of accumulators into totals, preserving order."""
    totals = [acc.copy() for acc in parts[0]]
    for part in parts[1:]:
        for tot, acc in zip(totals, part):
            tot.merge(acc)
    return totals


# ---------------------------------------------------------------------------
# entry statistics


def entry_profile_experiment(n: int, beta: int, samples: int, seed, threads: int = 1) -> ExperimentResult:
    """Single-time statistics of every tridiagonal entry of a stationary draw.

    One full tridiagonalization per sample yields all diagonal entries a_j
    and off-diagonal entries b_j at once.  The exact finite-n marginals are
    a_j ~ N(0, 2) and b_j ~ chi with beta (n - j) degrees of freedom, so the
    profile checks hold at every n, not just asymptotically.
    """
    js = np.arange(1, n, dtype=float)  # off-diagonal index range
    dof = beta * (n - js)
    bmean = _chi_mean_profile(dof)

    def worker(lo: int, hi: int):
        acc_a = MomentAccumulator(n)
        acc_b = MomentAccumulator(n - 1)
        acc_bsq = MomentAccumulator(n - 1)
        ablock = np.empty((hi - lo, n))
        bblock = np.empty((hi - lo, n - 1))
        sqblock = np.empty((hi - lo, n - 1))
        for s in range(lo, hi):
            m = gbe_sample_stationary(n, beta, derive_rng(seed, 0, s))
            t = tridiagonalize(m, beta=beta)
            ablock[s - lo] = t.diag
            bblock[s - lo] = t.offdiag - bmean
            sqblock[s - lo] = t.offdiag**2 - dof
        acc_a.add_batch(ablock)
        acc_b.add_batch(bblock)
        acc_bsq.add_batch(sqblock)
        return acc_a, acc_b, acc_bsq

    acc_a, acc_b, acc_bsq = _merge_chunks(map_chunks(samples, worker, threads))
    ja = np.arange(1, n + 1, dtype=float)
    curves = [
        Curve("mean_a_profile", ja, acc_a.mean(), acc_a.mean_se()),
        Curve("var_a_profile", ja, acc_a.variance(), acc_a.variance_se_plugin()),
        Curve("mean_b_profile", js, acc_b.mean() + bmean, acc_b.mean_se()),
        Curve("theory_mean_b_profile", js, bmean),
        Curve("mean_bsq_profile", js, acc_bsq.mean() + dof, acc_bsq.mean_se()),
        Curve("theory_mean_bsq_profile", js, dof),
    ]
    checks = [
        _studentized_check("mean_a_is_zero", acc_a.mean(), acc_a.mean_se()),
        _studentized_check("var_a_is_two", acc_a.variance() - 2.0, acc_a.variance_se_plugin()),
        _studentized_check("mean_b_matches_chi", acc_b.mean(), acc_b.mean_se()),
        _studentized_check("mean_bsq_matches_dof", acc_bsq.mean(), acc_bsq.mean_se()),
    ]
    metrics = {
        "max_rel_err_bsq": float(np.max(np.abs(acc_bsq.mean()) / dof)),
        "var_a_range": [float(acc_a.variance().min()), float(acc_a.variance().max())],
    }
    config = {"n": n, "beta": beta, "samples": samples, "seed": seed}
    return ExperimentResult("entry-profile", config, curves, checks, metrics)


def entry_stats_experiment(
    n: int, beta: int, j: int, grid: TimeGrid, samples: int, seed, threads: int = 1
) -> ExperimentResult:
    """Time curves of mean, variance, and lag covariance for a_j and b_j.

    Each sample runs the matrix process along the grid and reads entry j
    from a j-step partial tridiagonalization of every frame.
    """
    if not 1 <= j <= n - 1:
        raise ValueError(f"need 1 <= j <= n-1, got j={j}, n={n}")
    dof = beta * (n - j)
    banchor = chi_mean(dof)

    def worker(lo: int, hi: int):
        acc_a = MomentAccumulator(grid.steps)
        acc_b = MomentAccumulator(grid.steps, anchor=banchor)
        acc_bsq = MomentAccumulator(grid.steps)
        ablock = np.empty((hi - lo, grid.steps))
        bblock = np.empty((hi - lo, grid.steps))
        for s in range(lo, hi):
            rng = derive_rng(seed, 0, s)
            for idx, m in iter_gbe_frames(n, beta, grid, rng):
                t = tridiagonalize(m, beta=beta, k=j)
                ablock[s - lo, idx] = t.diag[j - 1]
                bblock[s - lo, idx] = t.offdiag[j - 1]
        acc_a.add_batch(ablock)
        acc_b.add_batch(bblock)
        acc_bsq.add_batch(bblock**2 - dof)
        return acc_a, acc_b, acc_bsq

    acc_a, acc_b, acc_bsq = _merge_chunks(map_chunks(samples, worker, threads))
    t = grid.times
    curves = [
        Curve("mean_a", t, acc_a.mean(), acc_a.mean_se()),
        Curve("var_a", t, acc_a.variance(), acc_a.variance_se_plugin()),
        Curve("cov_a", t, acc_a.covariance_vs0(), acc_a.cov_se_plugin()),
        Curve("limit_cov_a", t, 2.0 * np.exp(-(2 * j - 1) * (t - t[0]))),
        Curve("mean_b", t, acc_b.mean(), acc_b.mean_se()),
        Curve("theory_mean_b", t, np.full(grid.steps, banchor)),
        Curve("var_b", t, acc_b.variance(), acc_b.variance_se_plugin()),
        Curve("theory_var_b", t, np.full(grid.steps, chi_var(dof))),
        Curve("cov_b", t, acc_b.covariance_vs0(), acc_b.cov_se_plugin()),
        Curve("limit_cov_b", t, 0.5 * np.exp(-2 * j * (t - t[0]))),
    ]
    checks = [
        _studentized_check("mean_a_is_zero", acc_a.mean(), acc_a.mean_se()),
        _studentized_check("var_a_is_two", acc_a.variance() - 2.0, acc_a.variance_se_plugin()),
        _studentized_check("mean_b_matches_chi", acc_b.mean() - banchor, acc_b.mean_se()),
        _studentized_check("mean_bsq_matches_dof", acc_bsq.mean(), acc_bsq.mean_se()),
    ]
    metrics = {
        "cov_a_gap_to_limit": float(np.max(np.abs(acc_a.covariance_vs0() - 2.0 * np.exp(-(2 * j - 1) * (t - t[0]))))),
    }
    config = {"n": n, "beta": beta, "j": j, "samples": samples, "seed": seed, "t_max": float(grid.span), "dt": grid.dt}
    return ExperimentResult("simulate-entries", config, curves, checks, metrics)


def compare_limit_experiment(
    n: int, beta: int, j: int, grid: TimeGrid, samples: int, seed, threads: int = 1
) -> ExperimentResult:
    """Lag covariance of a_j against the limiting OU law, three ways.

    Series: the matrix-process estimate, the exact limit curve
    2 exp(-(2j-1) t), and a Monte Carlo of the limit process itself (same
    sample count) to show what estimator noise alone looks like.
    """
    if not 1 <= j <= n - 1:
        raise ValueError(f"need 1 <= j <= n-1, got j={j}, n={n}")

    def worker(lo: int, hi: int):
        acc = MomentAccumulator(grid.steps)
        block = np.empty((hi - lo, grid.steps))
        for s in range(lo, hi):
            rng = derive_rng(seed, 0, s)
            for idx, m in iter_gbe_frames(n, beta, grid, rng):
                block[s - lo, idx] = tridiagonalize(m, beta=beta, k=j - 1).diag[j - 1]
        acc.add_batch(block)
        return (acc,)

    (acc,) = _merge_chunks(map_chunks(samples, worker, threads))
    t = grid.times
    lag = t - t[0]
    theory = 2.0 * np.exp(-(2 * j - 1) * lag)
    a_limit = math.sqrt(2.0) * ou_sample_vector(2 * j - 1, samples, grid, seed, stream=1).values.T
    lim = covariance_curve(t, a_limit)
    emp = acc.covariance_vs0()
    emp_se = acc.cov_se_plugin()
    curves = [
        Curve("cov_a_matrix", t, emp, emp_se),
        Curve("cov_a_limit_mc", t, lim.value, lim.se),
        Curve("cov_a_limit_exact", t, theory),
    ]
    checks = [
        _studentized_check("var_a_is_two", acc.variance() - 2.0, acc.variance_se_plugin()),
        _studentized_check("limit_mc_matches_exact", lim.value - theory, lim.se),
    ]
    metrics = {
        "max_gap_matrix_vs_exact": float(np.max(np.abs(emp - theory))),
        "max_se_matrix": float(np.max(emp_se)),
    }
    config = {"n": n, "beta": beta, "j": j, "samples": samples, "seed": seed, "t_max": float(grid.span), "dt": grid.dt}
    return ExperimentResult("compare-limit", config, curves, checks, metrics)


def bhat_experiment(
    n: int, beta: int, j: int, grid: TimeGrid, samples: int, seed, threads: int = 1
) -> ExperimentResult:
    """Off-diagonal entry b_j against the square-root transform of its limit.

    The matrix side reads b_j from partial tridiagonalizations; the limit
    side draws B_j = sqrt(2) OU(2j) and maps it through
    bhat = sqrt(beta n + sqrt(beta n) B).  Samples whose radicand dips
    non-positive are dropped from the limit curves and counted.
    """
    if not 1 <= j <= n - 1:
        raise ValueError(f"need 1 <= j <= n-1, got j={j}, n={n}")
    dof = beta * (n - j)
    banchor = chi_mean(dof)

    def worker(lo: int, hi: int):
        acc_b = MomentAccumulator(grid.steps, anchor=banchor)
        acc_bsq = MomentAccumulator(grid.steps)
        block = np.empty((hi - lo, grid.steps))
        for s in range(lo, hi):
            rng = derive_rng(seed, 0, s)
            for idx, m in iter_gbe_frames(n, beta, grid, rng):
                block[s - lo, idx] = tridiagonalize(m, beta=beta, k=j).offdiag[j - 1]
        acc_b.add_batch(block)
        acc_bsq.add_batch(block**2 - dof)
        return acc_b, acc_bsq

    acc_b, acc_bsq = _merge_chunks(map_chunks(samples, worker, threads))
    b_limit = math.sqrt(2.0) * ou_sample_vector(2 * j, samples, grid, seed, stream=1).values.T
    bhat, ok = bhat_transform(b_limit, n, beta=beta)
    flagged = int(samples - ok.sum())
    bhat = bhat[ok]
    nu = float(beta * n)
    t = grid.times
    lag = t - t[0]
    hat = covariance_curve(t, bhat, anchor=math.sqrt(nu))
    hat_mean = MomentAccumulator(grid.steps, anchor=math.sqrt(nu)).add_batch(bhat)
    curves = [
        Curve("mean_b", t, acc_b.mean(), acc_b.mean_se()),
        Curve("theory_mean_b", t, np.full(grid.steps, banchor)),
        Curve("var_b", t, acc_b.variance(), acc_b.variance_se_plugin()),
        Curve("theory_var_b", t, np.full(grid.steps, chi_var(dof))),
        Curve("cov_b", t, acc_b.covariance_vs0(), acc_b.cov_se_plugin()),
        Curve("mean_bhat", t, hat_mean.mean(), hat_mean.mean_se()),
        Curve("var_bhat", t, hat_mean.variance(), hat_mean.variance_se_plugin()),
        Curve("cov_bhat", t, hat.value, hat.se),
        Curve("limit_cov_b", t, 0.5 * np.exp(-2 * j * lag)),
    ]
    checks = [
        _studentized_check("mean_b_matches_chi", acc_b.mean() - banchor, acc_b.mean_se()),
        _studentized_check("var_b_matches_chi", acc_b.variance() - chi_var(dof), acc_b.variance_se_plugin()),
        _studentized_check("mean_bsq_matches_dof", acc_bsq.mean(), acc_bsq.mean_se()),
    ]
    gap = acc_b.covariance_vs0() - hat.value
    gap_se = np.sqrt(acc_b.cov_se_plugin() ** 2 + hat.se**2)
    metrics = {
        "max_cov_gap_b_vs_bhat": float(np.max(np.abs(gap))),
        "max_cov_gap_studentized": float(np.max(np.abs(gap) / gap_se)),
        "flagged_limit_samples": flagged,
        "chi_mean": banchor,
    }
    config = {"n": n, "beta": beta, "j": j, "samples": samples, "seed": seed, "t_max": float(grid.span), "dt": grid.dt}
    return ExperimentResult("bhat-compare", config, curves, checks, metrics)


# ---------------------------------------------------------------------------
# trace moments


def moment_check_experiment(
    n: int, deg_max: int, t_lag: float, samples: int, seed, threads: int = 1, slack_const: float = 5.0
) -> ExperimentResult:
    """Two-time trace moments of the monic semicircle family vs the exact kernel.

    Estimates (1/n) Tr[P_j(W(0)) P_k(W(t))] for all 0 <= j, k <= deg_max,
    with W(t) the trailing n x n block of the (n+1)-dimensional matrix
    process scaled by 1/sqrt(n), and compares against the limit
    delta_jk e^{-k t}.  Pass gate per pair: 3 SE plus slack_const / n for
    the finite-size remainder.
    """
    if not 1 <= deg_max <= 8:
        raise ValueError("deg_max must be in [1, 8]")
    if t_lag < 0:
        raise ValueError("t_lag must be >= 0")
    if n < 2 * deg_max + 2:
        raise ValueError("n too small for the requested degree")
    two_times = t_lag > 0
    grid = TimeGrid(t0=0.0, dt=t_lag if two_times else 1e-3, steps=2 if two_times else 1)
    d1 = deg_max + 1
    npairs = d1 * d1
    scale = 1.0 / math.sqrt(n)

    def powers(w: np.ndarray) -> list:
        ps = [np.eye(n), w]
        for _deg in range(2, d1):
            ps.append(w @ ps[-1] - ps[-2])
        return ps[:d1]

    def worker(lo: int, hi: int):
        acc = MomentAccumulator(npairs)
        block = np.empty((hi - lo, npairs))
        for s in range(lo, hi):
            rng = derive_rng(seed, 0, s)
            path = gbe_sample_path(n + 1, 1, grid, rng)
            p0 = powers(path.matrices[0, 1:, 1:] * scale)
            p1 = p0 if not two_times else powers(path.matrices[-1, 1:, 1:] * scale)
            for jj in range(d1):
                for kk in range(d1):
                    block[s - lo, jj * d1 + kk] = np.tensordot(p0[jj], p1[kk], axes=([0, 1], [1, 0])) / n
        acc.add_batch(block)
        return (acc,)

    (acc,) = _merge_chunks(map_chunks(samples, worker, threads))
    mean = acc.mean()
    se = acc.mean_se()
    exact = np.array([semicircular_cov_p(jj, kk, 0.0, t_lag) for jj in range(d1) for kk in range(d1)])
    curves = []
    checks = []
    worst = 0.0
    for jj in range(d1):
        for kk in range(d1):
            i = jj * d1 + kk
            tax = np.array([t_lag])
            curves.append(Curve(f"trace_j{jj}_k{kk}", tax, mean[i : i + 1], se[i : i + 1]))
            curves.append(Curve(f"exact_j{jj}_k{kk}", tax, exact[i : i + 1]))
            tol = 3.0 * se[i] + slack_const / n
            dev = abs(mean[i] - exact[i])
            worst = max(worst, dev - tol)
            checks.append(
                Check(
                    name=f"trace_j{jj}_k{kk}",
                    passed=bool(dev <= tol),
                    detail=f"|{mean[i]:.5f} - {exact[i]:.5f}| = {dev:.5f} vs tol {tol:.5f}",
                )
            )
    metrics = {"worst_margin": worst, "max_se": float(np.max(se))}
    config = {"n": n, "deg_max": deg_max, "t_lag": t_lag, "samples": samples, "seed": seed}
    return ExperimentResult("moment-check", config, curves, checks, metrics)


# ---------------------------------------------------------------------------
# exact combinatorics


def _cycles_of_mapping(mapping: dict) -> PermutationCycles:
    left = set(mapping)
    cycles = []
    while left:
        x0 = min(left)
        cyc = [x0]
        left.discard(x0)
        x = mapping[x0]
        while x != x0:
            cyc.append(x)
            left.discard(x)
            x = mapping[x]
        cycles.append(cyc)
    return PermutationCycles.from_cycles(cycles)


def verify_combinatorics(nc_max: int = 8, fact_max: int = 6, poly_max: int = 8) -> ExperimentResult:
    """Exact identity suite for the pairing, permutation, and polynomial layers.

    Every check is integer arithmetic (or floats whose values are exact
    integers), so any failure is a logic bug rather than noise.
    """
    checks = []

    def record(name: str, passed: bool, detail: str) -> None:
        checks.append(Check(name=name, passed=bool(passed), detail=detail))

    counts = [len(enumerate_nc2(2 * m)) for m in range(1, nc_max + 1)]
    cats = [catalan(m) for m in range(1, nc_max + 1)]
    record("noncrossing_catalan_counts", counts == cats, f"counts={counts}")

    brute_ok = True
    for m in range(1, 5):
        filtered = {p.pairs for p in enumerate_p2(range(1, 2 * m + 1)) if is_noncrossing(p.pairs)}
        direct = {p.pairs for p in enumerate_nc2(2 * m)}
        brute_ok &= filtered == direct
    record("noncrossing_equals_filtered_pairings", brute_ok, "brute-force filter agrees through size 8")

    pcounts = [len(enumerate_p2(range(2 * m))) for m in range(1, fact_max + 1)]
    facts = [double_factorial_odd(2 * m) for m in range(1, fact_max + 1)]
    record("pairing_double_factorial_counts", pcounts == facts, f"counts={pcounts}")

    mult_ok = True
    sums = []
    for m in range(1, fact_max + 1):
        js = tuple(range(1, m + 1))
        total = 0
        for image in itertools.permutations(js):
            total += perm_multiplicity(_cycles_of_mapping(dict(zip(js, image))))
        sums.append(total)
        mult_ok &= total == double_factorial_odd(2 * m)
    record("multiplicity_sums_double_factorial", mult_ok, f"sums={sums}")

    fiber_ok = True
    for m in range(1, 5):
        js = tuple(range(1, m + 1))
        doubled = [(r, j) for r in (1, 2) for j in js]
        fibers: dict = {}
        for pi in enumerate_p2(doubled):
            sigma = perm_from_pairing(pi, js)
            fibers[sigma] = fibers.get(sigma, 0) + 1
        fiber_ok &= all(cnt == perm_multiplicity(sig) for sig, cnt in fibers.items())
        fiber_ok &= sum(fibers.values()) == double_factorial_odd(2 * m)
    record("multiplicity_counts_each_fiber", fiber_ok, "fiber sizes match 2^(sum(|cycle|-1)) through |J|=4")

    pi = PairPartition.from_blocks([(((1, 1)), ((1, 3))), (((2, 3)), ((2, 2))), (((1, 2)), ((1, 4))), (((2, 4)), ((2, 1)))])
    pi2 = PairPartition.from_blocks([(((1, 1)), ((1, 2))), (((2, 2)), ((2, 1))), (((1, 3)), ((1, 4))), (((2, 4)), ((2, 3)))])
    got1 = perm_from_pairing(pi, (1, 2, 3, 4))
    got2 = perm_from_pairing(pi2, (1, 2, 3, 4))
    want1 = PermutationCycles.from_cycles([(1, 3, 2, 4)])
    want2 = PermutationCycles.from_cycles([(1, 2), (3, 4)])
    record(
        "pairing_walk_examples",
        got1 == want1 and got2 == want2,
        f"got {got1.cycles} and {got2.cycles}",
    )

    prod_ok = all(poly_product_check(j, k) for j in range(poly_max + 1) for k in range(poly_max + 1))
    record("product_linearization", prod_ok, f"P_j P_k expansions verified through degree {poly_max}")

    expl_ok = all(poly_p(k).coeffs == poly_p_explicit(k).coeffs for k in range(17))
    record("explicit_coefficients", expl_ok, "recurrence equals closed form through degree 16")

    cov_ok = True
    for j in range(7):
        for k in range(7):
            want = tuple([0] * k + [1]) if j == k else (0,)
            cov_ok &= semicircular_cov_p_poly(j, k) == want
    record("trace_covariance_collapses", cov_ok, "polynomial covariance equals delta_jk q^k through degree 6")

    cat_ok = True
    moments = []
    for m in range(1, nc_max + 1):
        val = semicircular_mixed_moment(MomentQuery(((2 * m, 0.0),)))
        moments.append(val)
        cat_ok &= val == float(catalan(m))
    record("equal_time_moments_catalan", cat_ok, f"moments={[int(v) for v in moments]}")

    config = {"nc_max": nc_max, "fact_max": fact_max, "poly_max": poly_max}
    return ExperimentResult("verify-combinatorics", config, [], checks)


# ---------------------------------------------------------------------------
# wrappers for the remaining studies


def kurtosis_experiment(n_list, j: int, grid: TimeGrid, samples: int, seed, beta: int = 1) -> ExperimentResult:
    """Excess kurtosis of a_j(0) + a_j(t) across matrix sizes (see stats)."""
    tables = kurtosis_sum_experiment(n_list, j, grid, samples, seed, beta=beta)
    curves = []
    metrics = {}
    for tab in tables:
        curves.append(Curve(f"kurtosis_j{tab.j}_n{tab.n}", tab.t, tab.kurtosis, tab.se_jackknife))
        peak = int(np.argmax(np.abs(tab.kurtosis[1:]))) + 1 if grid.steps > 1 else 0
        metrics[f"peak_abs_kurtosis_n{tab.n}"] = float(np.abs(tab.kurtosis[peak]))
        metrics[f"se_normal_n{tab.n}"] = tab.se_normal
    config = {
        "n_list": [int(v) for v in n_list],
        "beta": beta,
        "j": j,
        "samples": samples,
        "seed": seed,
        "t_max": float(grid.span),
        "dt": grid.dt,
    }
    return ExperimentResult("kurtosis", config, curves, [], metrics)


def eigen_cov_result(n: int, k_list, grid: TimeGrid, samples: int, seed, beta: int = 1) -> ExperimentResult:
    """Largest-eigenvalue covariance curves at full, corner, and limit level."""
    res = eigen_cov_experiment(n, k_list, grid, samples, seed, beta=beta)
    t = grid.times
    curves = [Curve("cov_full", t, res.full.value, res.full.se)]
    metrics: dict = {"flagged_limit_samples": res.flagged}
    for k in res.ks:
        tri = res.tri[k]
        lim = res.limit[k]
        curves.append(Curve(f"cov_tri_k{k}", t, tri.value, tri.se))
        curves.append(Curve(f"cov_limit_k{k}", t, lim.value, lim.se))
        metrics[f"int_gap_limit_vs_tri_k{k}"] = float(np.trapezoid(np.abs(lim.value - tri.value), t))
        metrics[f"int_gap_limit_vs_full_k{k}"] = float(np.trapezoid(np.abs(lim.value - res.full.value), t))
    config = {
        "n": n,
        "k_list": [int(k) for k in res.ks],
        "beta": beta,
        "samples": samples,
        "seed": seed,
        "t_max": float(grid.span),
        "dt": grid.dt,
    }
    return ExperimentResult("eigen-cov", config, curves, [], metrics)


def approx_error_result(ns, k: int, grid: TimeGrid, samples: int, seed) -> ExperimentResult:
    """Sup-over-time error medians of the series approximation, by matrix size."""
    study = approx_error_study(ns, k, grid, samples, seed)
    nax = np.array([float(v) for v in study.ns])
    curves = []
    for jj in range(k):
        curves.append(Curve(f"median_sup_err_a{jj + 1}", nax, study.sup_a[:, jj]))
        curves.append(Curve(f"p90_sup_err_a{jj + 1}", nax, study.p90_a[:, jj]))
        curves.append(Curve(f"median_sup_err_bsq{jj + 1}", nax, study.sup_b[:, jj]))
        curves.append(Curve(f"p90_sup_err_bsq{jj + 1}", nax, study.p90_b[:, jj]))
    metrics = {}
    for jj in range(1, k):
        med = study.sup_a[:, jj]
        if np.all(med > 0):
            metrics[f"decay_ratios_a{jj + 1}"] = [float(r) for r in med[1:] / med[:-1]]
    checks = []
    if k >= 1:
        exact = float(np.max(study.sup_a[:, 0]))
        checks.append(
            Check(
                name="first_diagonal_entry_exact",
                passed=exact <= 1e-10,
                detail=f"max sup-error of the exact j=1 entry: {exact:.2e}",
            )
        )
    config = {
        "n_list": [int(v) for v in study.ns],
        "k": k,
        "samples": samples,
        "seed": seed,
        "t_max": float(grid.span),
        "dt": grid.dt,
    }
    return ExperimentResult("approx-error", config, curves, checks, metrics)
