"""Seeded Monte Carlo runs of encode -> channel -> decode."""

import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .channel import corrupt
from .codec import decode, encode
from .errors import DecodeFailure, EncodingRejection
from .rng import MASK64, XorShift64Star

STAGES = (
    "encoding rejection", "size mismatch", "anchor RS failure",
    "ambiguous match", "TPC failure", "wrong payload",
)


@dataclass
class ExperimentReport:
    params: dict
    trials: int
    successes: int
    failures: dict
    wall_time: float
    seed: int

    def to_dict(self):
        return asdict(self)


def run_trial(params, trial_seed):
    """Return "success" or the name of the failing stage."""
    rng = XorShift64Star(trial_seed)
    payload = rng.random_bytes(params.capacity_bits // 8)
    try:
        codeword = encode(payload, params)
    except EncodingRejection:
        return "encoding rejection"
    received, _ = corrupt(codeword, params, rng.next_u64())
    try:
        out = decode(received, params, len(payload))
    except DecodeFailure as exc:
        return exc.stage
    return "success" if out == payload else "wrong payload"


def _run_range(params, master_seed, start, stop):
    return Counter(run_trial(params, (master_seed ^ i) & MASK64) for i in range(start, stop))


def worker_count():
    env = os.environ.get("ISC_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def run_experiment(params, trials, master_seed, workers=None):
    if trials < 1:
        raise ValueError("trials must be >= 1")
    workers = worker_count() if workers is None else max(1, workers)
    t0 = time.perf_counter()
    if workers == 1 or trials < 512:
        counts = _run_range(params, master_seed, 0, trials)
    else:
        step = -(-trials // (4 * workers))
        bounds = [(s, min(s + step, trials)) for s in range(0, trials, step)]
        counts = Counter()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_run_range, params, master_seed, a, b) for a, b in bounds]
            for fut in futures:
                counts.update(fut.result())
    return ExperimentReport(
        params=params.to_dict(),
        trials=trials,
        successes=counts.get("success", 0),
        failures={s: counts.get(s, 0) for s in STAGES},
        wall_time=round(time.perf_counter() - t0, 6),
        seed=master_seed,
    )
