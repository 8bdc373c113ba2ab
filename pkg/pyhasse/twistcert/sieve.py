"""Enumerate the primes meeting a condition set."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

import numpy as np

from ..constants import RESIDUE_CLASS, RESIDUE_MODULUS
from ..exceptions import InvalidParameterError
from ..logging import LOG_VERBOSE, _LOGGER, log_duration
from ..ntheory import primes_in_range
from .conditions import ConditionTrace, PrimeConditionSet


def _residue_table(ell: int) -> np.ndarray:
    """Return a boolean table of the nonzero squares modulo ell."""
    table = np.zeros(ell, dtype=bool)
    table[(np.arange(1, ell, dtype=np.int64) ** 2) % ell] = True
    return table


def _sieve_shard(conds: PrimeConditionSet, lo: int, hi: int) -> list[ConditionTrace]:
    """Return the traces of the qualifying primes in [lo, hi]."""
    if hi < lo:
        return []
    primes = np.array(primes_in_range(lo, hi), dtype=np.int64)
    mask = primes % RESIDUE_MODULUS == RESIDUE_CLASS
    mask &= ~np.isin(primes, np.array(sorted(conds.excluded), dtype=np.int64))
    for ell in conds.qr_primes:
        mask &= _residue_table(ell)[primes % ell]

    traces = []
    for p in primes[mask].tolist():
        trace = conds.check(p)
        if trace.passed:
            _LOGGER.log(LOG_VERBOSE, "Prime %d qualifies", p)
            traces.append(trace)
    return traces


def _shards(lo: int, hi: int, workers: int) -> list[tuple[int, int]]:
    """Split [lo, hi] into at most workers contiguous ranges."""
    size = -(-(hi - lo + 1) // workers)
    return [(start, min(start + size - 1, hi)) for start in range(lo, hi + 1, size)]


def enumerate_primes(
    conds: PrimeConditionSet, bound: int, workers: int = 1
) -> list[ConditionTrace]:
    """
    Return the primes p <= bound meeting conds, ascending, with their traces.

    The range above the Weil threshold is cut into contiguous shards, one
    per worker; the merged result does not depend on the worker count.
    """
    if bound < 3:
        raise InvalidParameterError(f"enumerate_primes needs bound >= 3, got {bound}")
    if workers < 1:
        raise InvalidParameterError(f"workers must be >= 1, got {workers}")

    lo = max(conds.weil_threshold_M + 1, 2)
    if lo > bound:
        return []
    shards = _shards(lo, bound, workers)
    if workers == 1 or len(shards) == 1:
        with log_duration("Sieving %d shard(s)", len(shards)):
            results = [_sieve_shard(conds, *shard) for shard in shards]
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(
                executor.map(
                    _sieve_shard,
                    [conds] * len(shards),
                    [start for start, _ in shards],
                    [stop for _, stop in shards],
                )
            )
    traces = [trace for shard in results for trace in shard]
    _LOGGER.info(
        "Found %d qualifying primes up to %d (%d shards)", len(traces), bound, len(shards)
    )
    return traces
