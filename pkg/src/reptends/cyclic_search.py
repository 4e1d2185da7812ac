"""Enumeration of cyclic and subcyclic primes, with resumable searches.

A cyclic prime arises by reading more than one full period of the repetend
stream of a/p (any numerator whose stream starts with a nonzero digit) and
landing on a prime.  A subcyclic prime is a prime read from a contiguous
circular substring of a single period.  Searches walk digit-count levels in
order; primality work within a level can fan out to worker processes, and a
checkpoint file (JSON, written atomically) makes long runs resumable.
"""

import json
import os
import tempfile
from dataclasses import dataclass, replace
from math import gcd
from typing import Callable, Iterator

from .digits import DigitString, from_integer
from .primality import DEFAULT_ROUNDS, PrimalityVerdict, classify
from .reptend import cycles, multiplicative_order

CHECKPOINT_FORMAT_VERSION = 1
DEFAULT_ELIDE_DIGITS = 1000


class CheckpointError(RuntimeError):
    """The checkpoint file cannot be used (corrupt or unreadable)."""


class CheckpointMismatchError(CheckpointError):
    """The checkpoint belongs to a different search (p, base or rounds)."""


@dataclass(frozen=True)
class CyclicPrimeRecord:
    """One prime (or probable prime) found in a repetend stream."""

    p: int
    base: int
    cycle_index: int
    rotation_numerator: int
    digit_count: int
    first_digit: int
    value_digits: DigitString | None
    verdict: PrimalityVerdict


@dataclass(frozen=True)
class SearchCheckpoint:
    """Resumable state of a search; found records carry no value digits."""

    format_version: int
    p: int
    base: int
    max_digits: int
    completed_through_digits: int
    found: tuple[CyclicPrimeRecord, ...]
    rounds: int


def digit_stream(p: int, base: int, a: int) -> Iterator[int]:
    """Yield the digits of a/p in the given base, indefinitely.

    >>> s = digit_stream(7, 10, 5)
    >>> [next(s) for _ in range(8)]
    [7, 1, 4, 2, 8, 5, 7, 1]
    """
    if not 1 <= a < p:
        raise ValueError(f"numerator must be in [1, {p - 1}], got {a}")
    if gcd(base, p) > 1:
        raise ValueError(f"base {base} shares a factor with {p}")
    r = a
    while True:
        r *= base
        yield r // p
        r %= p


def candidate_value(p: int, base: int, a: int, ndigits: int) -> int:
    """The integer formed by the first ndigits digits of a/p.

    Computed in closed form as a * base**ndigits // p, which agrees with
    assembling the digits one by one.  Streams opening with a zero digit are
    rejected: their prefixes would not have ndigits digits as numerals.
    """
    if not 1 <= a < p:
        raise ValueError(f"numerator must be in [1, {p - 1}], got {a}")
    if gcd(base, p) > 1:
        raise ValueError(f"base {base} shares a factor with {p}")
    if ndigits < 1:
        raise ValueError("ndigits must be at least 1")
    if a * base // p == 0:
        raise ValueError(f"stream of {a}/{p} opens with digit 0 in base {base}")
    return a * base**ndigits // p


def _cycle_index_map(p: int, base: int, period: int) -> dict[int, int]:
    indices = {}
    cycle = 0
    for a in range(1, p):
        if a in indices:
            continue
        member = a
        for _ in range(period):
            indices[member] = cycle
            member = member * base % p
        cycle += 1
    return indices


def _classify_task(args: tuple[int, int]) -> PrimalityVerdict:
    value, rounds = args
    return classify(value, rounds)


def _search_levels(
    p: int,
    base: int,
    period: int,
    start_digits: int,
    max_digits: int,
    rounds: int,
    jobs: int | None,
    elide_above: int,
) -> Iterator[tuple[int, list[CyclicPrimeRecord]]]:
    """Yield (ndigits, records found at that level) for each level in order."""
    cycle_of = _cycle_index_map(p, base, period)
    numerators = [a for a in range(1, p) if a * base // p > 0]
    first_digits = {a: a * base // p for a in numerators}
    # Stream state fast-forwarded to start_digits - 1 completed digits.
    values = {a: a * base ** (start_digits - 1) // p for a in numerators}
    remainders = {a: a * base ** (start_digits - 1) % p for a in numerators}

    executor = None
    if jobs is not None and jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        executor = ProcessPoolExecutor(max_workers=jobs)
    try:
        seen_values: set[int] = set()
        for ndigits in range(start_digits, max_digits + 1):
            candidates = []
            for a in numerators:
                r = remainders[a]
                values[a] = values[a] * base + r * base // p
                remainders[a] = r * base % p
                candidates.append((a, values[a]))
            if executor is None:
                verdicts = [classify(v, rounds) for _, v in candidates]
            else:
                verdicts = list(
                    executor.map(_classify_task, [(v, rounds) for _, v in candidates])
                )
            records = []
            for (a, value), verdict in zip(candidates, verdicts):
                if verdict.status == "composite" or value in seen_values:
                    continue
                seen_values.add(value)
                digits = from_integer(value, base) if ndigits <= elide_above else None
                records.append(
                    CyclicPrimeRecord(
                        p=p,
                        base=base,
                        cycle_index=cycle_of[a],
                        rotation_numerator=a,
                        digit_count=ndigits,
                        first_digit=first_digits[a],
                        value_digits=digits,
                        verdict=verdict,
                    )
                )
            records.sort(key=lambda rec: (rec.digit_count, rec.rotation_numerator))
            yield ndigits, records
    finally:
        if executor is not None:
            executor.shutdown()


def _checked_period(p: int, base: int, max_digits: int) -> int:
    period = multiplicative_order(base, p)
    if period is None:
        raise ValueError(f"base {base} shares a factor with {p}")
    if max_digits <= period:
        raise ValueError(f"max_digits must exceed the period {period}")
    return period


def enumerate_cyclic_primes(
    p: int,
    base: int,
    max_digits: int,
    rounds: int = DEFAULT_ROUNDS,
    jobs: int | None = None,
    elide_above: int = DEFAULT_ELIDE_DIGITS,
    on_level: Callable[[int, list[CyclicPrimeRecord]], None] | None = None,
) -> list[CyclicPrimeRecord]:
    """All non-composite repetend prefixes with period < digits <= max_digits.

    Every digit-count level checks the streams of all numerators that open
    with a nonzero digit; results are sorted by (digit_count, numerator) and
    deterministic for any number of jobs.
    """
    period = _checked_period(p, base, max_digits)
    found: list[CyclicPrimeRecord] = []
    for ndigits, records in _search_levels(
        p, base, period, period + 1, max_digits, rounds, jobs, elide_above
    ):
        found.extend(records)
        if on_level is not None:
            on_level(ndigits, records)
    found.sort(key=lambda rec: (rec.digit_count, rec.rotation_numerator))
    return found


def enumerate_subcyclic_primes(
    p: int, base: int, rounds: int = DEFAULT_ROUNDS
) -> list[int]:
    """Distinct primes among circular substrings of the period digits.

    Substrings of every cycle, lengths 1..period, with nonzero leading
    digit; the result is ascending and always finite.

    >>> enumerate_subcyclic_primes(7, 10)
    [2, 5, 7, 71, 571, 857, 2857, 28571]
    """
    primes = set()
    for representative in cycles(p, base):
        digits = representative.digits
        length = len(digits)
        for start in range(length):
            if digits[start] == 0:
                continue
            value = 0
            for offset in range(length):
                value = value * base + digits[(start + offset) % length]
                if classify(value, rounds).status != "composite":
                    primes.add(value)
    return sorted(primes)


def _record_to_json(record: CyclicPrimeRecord) -> dict:
    return {
        "p": record.p,
        "base": record.base,
        "cycle_index": record.cycle_index,
        "rotation_numerator": record.rotation_numerator,
        "digit_count": record.digit_count,
        "first_digit": record.first_digit,
        "verdict": {
            "status": record.verdict.status,
            "witness_rounds": record.verdict.witness_rounds,
        },
    }


def _record_from_json(doc: dict) -> CyclicPrimeRecord:
    verdict = doc["verdict"]
    return CyclicPrimeRecord(
        p=doc["p"],
        base=doc["base"],
        cycle_index=doc["cycle_index"],
        rotation_numerator=doc["rotation_numerator"],
        digit_count=doc["digit_count"],
        first_digit=doc["first_digit"],
        value_digits=None,
        verdict=PrimalityVerdict(verdict["status"], verdict["witness_rounds"]),
    )


def save_checkpoint(checkpoint: SearchCheckpoint, path: str) -> None:
    """Write the checkpoint atomically (temp file, then rename)."""
    doc = {
        "format_version": checkpoint.format_version,
        "p": checkpoint.p,
        "base": checkpoint.base,
        "max_digits": checkpoint.max_digits,
        "completed_through_digits": checkpoint.completed_through_digits,
        "found": [_record_to_json(rec) for rec in checkpoint.found],
        "rounds": checkpoint.rounds,
    }
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            json.dump(doc, handle, sort_keys=True)
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise


def load_checkpoint(path: str) -> SearchCheckpoint:
    """Read a checkpoint, failing closed on any structural problem."""
    try:
        with open(path, encoding="utf-8") as handle:
            doc = json.load(handle)
        checkpoint = SearchCheckpoint(
            format_version=doc["format_version"],
            p=doc["p"],
            base=doc["base"],
            max_digits=doc["max_digits"],
            completed_through_digits=doc["completed_through_digits"],
            found=tuple(_record_from_json(rec) for rec in doc["found"]),
            rounds=doc["rounds"],
        )
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise CheckpointError(f"unusable checkpoint {path}: {exc}") from exc
    if checkpoint.format_version != CHECKPOINT_FORMAT_VERSION:
        raise CheckpointMismatchError(
            f"checkpoint format {checkpoint.format_version} unsupported"
        )
    return checkpoint


def _rehydrate(record: CyclicPrimeRecord, elide_above: int) -> CyclicPrimeRecord:
    if record.digit_count > elide_above:
        return record
    value = candidate_value(
        record.p, record.base, record.rotation_numerator, record.digit_count
    )
    return replace(record, value_digits=from_integer(value, record.base))


def search_with_checkpoint(
    p: int,
    base: int,
    max_digits: int,
    rounds: int = DEFAULT_ROUNDS,
    checkpoint_path: str | None = None,
    jobs: int | None = None,
    elide_above: int = DEFAULT_ELIDE_DIGITS,
    on_level: Callable[[int, list[CyclicPrimeRecord]], None] | None = None,
) -> list[CyclicPrimeRecord]:
    """enumerate_cyclic_primes with progress persisted after each level.

    An existing checkpoint must describe the same (p, base, rounds) search;
    max_digits may differ, so an interrupted or shorter run can be extended.
    Resumption reproduces exactly the records an uninterrupted run returns.
    """
    if checkpoint_path is None:
        return enumerate_cyclic_primes(
            p, base, max_digits, rounds, jobs, elide_above, on_level
        )
    period = _checked_period(p, base, max_digits)
    found: list[CyclicPrimeRecord] = []
    completed = period
    if os.path.exists(checkpoint_path):
        checkpoint = load_checkpoint(checkpoint_path)
        if (checkpoint.p, checkpoint.base, checkpoint.rounds) != (p, base, rounds):
            raise CheckpointMismatchError(
                f"checkpoint is for p={checkpoint.p} base={checkpoint.base} "
                f"rounds={checkpoint.rounds}, not p={p} base={base} rounds={rounds}"
            )
        completed = checkpoint.completed_through_digits
        found = [
            _rehydrate(rec, elide_above)
            for rec in checkpoint.found
            if rec.digit_count <= max_digits
        ]
    if completed >= max_digits:
        found.sort(key=lambda rec: (rec.digit_count, rec.rotation_numerator))
        return found
    for ndigits, records in _search_levels(
        p, base, period, completed + 1, max_digits, rounds, jobs, elide_above
    ):
        found.extend(records)
        if on_level is not None:
            on_level(ndigits, records)
        save_checkpoint(
            SearchCheckpoint(
                format_version=CHECKPOINT_FORMAT_VERSION,
                p=p,
                base=base,
                max_digits=max_digits,
                completed_through_digits=ndigits,
                found=tuple(
                    replace(rec, value_digits=None)
                    for rec in sorted(
                        found, key=lambda r: (r.digit_count, r.rotation_numerator)
                    )
                ),
                rounds=rounds,
            ),
            checkpoint_path,
        )
    found.sort(key=lambda rec: (rec.digit_count, rec.rotation_numerator))
    return found
