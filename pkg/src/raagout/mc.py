"""Monte Carlo harness over seeded random graphs.

Each trial draws its own sub-seed from the run seed and the trial index,
so trials are independent, order-insensitive, and reproducible; the
report reduction only counts and sums. Set ``RAAG_OUT_THREADS`` to run
trials through a thread pool (results are identical either way).
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .decide import decide
from .errors import InputError
from .gen import GnpConfig, gnp, hash_u64
from .order import order_pairs, leq
from .graph import is_connected

CSV_HEADER = (
    "n,p,samples,seed,freq_connected,freq_no_sil,freq_no_equiv_pair,"
    "freq_single_equiv_pair,out_yes,out_no,out_unknown,mean_order_pairs"
)


@dataclass(frozen=True)
class TrialReport:
    n: int
    p: float
    samples: int
    seed: int
    freq_connected: float
    freq_no_sil: float
    freq_no_equiv_pair: float
    freq_single_equiv_pair: float
    out_yes: int
    out_no: int
    out_unknown: int
    mean_order_pairs: float

    def csv_row(self) -> str:
        return ",".join(
            [
                str(self.n),
                repr(self.p),
                str(self.samples),
                str(self.seed),
                f"{self.freq_connected:.6f}",
                f"{self.freq_no_sil:.6f}",
                f"{self.freq_no_equiv_pair:.6f}",
                f"{self.freq_single_equiv_pair:.6f}",
                str(self.out_yes),
                str(self.out_no),
                str(self.out_unknown),
                f"{self.mean_order_pairs:.6f}",
            ]
        )


def trial_seed(seed: int, index: int) -> int:
    return hash_u64(seed, index)


def _one_trial(n: int, p: float, sub_seed: int) -> tuple[bool, bool, int, str, int]:
    g = gnp(GnpConfig(n, p, sub_seed))
    connected = is_connected(g)
    equiv = 0
    for i in range(n):
        for j in range(i + 1, n):
            if leq(g, i, j) and leq(g, j, i):
                equiv += 1
    decision = decide(g)
    # SIL-freeness is exactly what fires the no-SIL classification
    no_sil = decision.rule == "no_sil"
    return (connected, no_sil, equiv, decision.verdict.out_status, len(order_pairs(g)))


def run_trials(n: int, p: float, samples: int, seed: int) -> TrialReport:
    """Sample ``samples`` graphs and reduce the per-trial statistics."""
    if samples < 1:
        raise InputError("at least one sample is required")
    workers = int(os.environ.get("RAAG_OUT_THREADS", "1") or "1")
    seeds = [trial_seed(seed, i) for i in range(samples)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda s: _one_trial(n, p, s), seeds))
    else:
        results = [_one_trial(n, p, s) for s in seeds]
    connected = sum(1 for r in results if r[0])
    no_sil = sum(1 for r in results if r[1])
    no_equiv = sum(1 for r in results if r[2] == 0)
    single_equiv = sum(1 for r in results if r[2] == 1)
    out_yes = sum(1 for r in results if r[3] == "yes")
    out_no = sum(1 for r in results if r[3] == "no")
    out_unknown = samples - out_yes - out_no
    mean_pairs = sum(r[4] for r in results) / samples
    return TrialReport(
        n=n,
        p=p,
        samples=samples,
        seed=seed,
        freq_connected=connected / samples,
        freq_no_sil=no_sil / samples,
        freq_no_equiv_pair=no_equiv / samples,
        freq_single_equiv_pair=single_equiv / samples,
        out_yes=out_yes,
        out_no=out_no,
        out_unknown=out_unknown,
        mean_order_pairs=mean_pairs,
    )


def sweep(ns, ps, samples: int, seed: int) -> list[TrialReport]:
    """Cartesian product of runs, n-major then p."""
    if not ns or not ps:
        raise InputError("the sweep needs at least one n and one p")
    return [run_trials(n, p, samples, seed) for n in ns for p in ps]


def reports_csv(reports) -> str:
    return "\n".join([CSV_HEADER] + [r.csv_row() for r in reports]) + "\n"
