"""Property suites over bounded enumerations, driven by the check command.

Each suite exhausts the bounded domain where that is feasible and extends it
with seeded random draws otherwise, so every run is reproducible from its
parameters.  Failures carry the offending instance in parseable text.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterator
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from . import oracle, rsk, specht, strings, tableaux
from .errors import InvariantViolation, ShapeViolation
from .multisegment import Multisegment
from .oracle import EnumerationBounds, enumerate_multisegments
from .tableaux import Partition

EXHAUSTIVE_TUPLES = 1_000_000
EXHAUSTIVE_INSTANCES = 50_000


@dataclass
class SuiteResult:
    """Outcome of one property suite."""

    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: SuiteResult) -> None:
        self.cases += other.cases
        self.failures.extend(other.failures)
        self.notes.extend(other.notes)


def _domain(bounds: EnumerationBounds) -> list[Multisegment]:
    return list(enumerate_multisegments(bounds))


def bounded_instances(
    bounds: EnumerationBounds, seed: int, sample: int
) -> tuple[list[Multisegment], int]:
    """Nonempty instances: exhaustive sizes while affordable, sampled beyond.

    Returns the instance list and the size up to which it is exhaustive.
    """
    pool = bounds.segments()
    exhaustive_size = 0
    total = 0
    for k in range(1, bounds.max_segments + 1):
        total += comb(len(pool) + k - 1, k)
        if total > EXHAUSTIVE_INSTANCES:
            break
        exhaustive_size = k
    instances: list[Multisegment] = []
    for k in range(1, exhaustive_size + 1):
        instances.extend(
            Multisegment(c) for c in itertools.combinations_with_replacement(pool, k)
        )
    if exhaustive_size < bounds.max_segments:
        rng = random.Random(seed)
        sizes = list(range(exhaustive_size + 1, bounds.max_segments + 1))
        weights = [comb(len(pool) + k - 1, k) for k in sizes]
        sample = min(sample, sum(weights))
        seen = set()
        drawn = []
        while len(drawn) < sample:
            k = rng.choices(sizes, weights=weights)[0]
            m = Multisegment(rng.choices(pool, k=k))
            if m not in seen:
                seen.add(m)
                drawn.append(m)
        instances.extend(drawn)
    return instances, exhaustive_size


def _repro(suite: str, bounds: EnumerationBounds, seed: int) -> str:
    return (
        f"segrsk check --suite {suite} --min {bounds.support_min} "
        f"--max {bounds.support_max} --max-segments {bounds.max_segments} "
        f"--seed {seed}"
    )


def suite_combi(
    bounds: EnumerationBounds, seed: int = 0, sample: int = 10_000
) -> SuiteResult:
    """C - C' = Phi, and Phi agrees with the string-form shift on BZ data."""
    result = SuiteResult("combi")
    domain = _domain(bounds)
    t = max(abs(bounds.support_min), abs(bounds.support_max))
    seq = strings.AdmissibleSequence.bz(t)
    repro = _repro("combi", bounds, seed)
    # BZ coordinates and weights are per-element data; hoist them out of the
    # quadratic tuple loop
    bz_coords = {m: strings.bz_string(m, t)[1] for m in domain}
    weights = {m: m.weight() for m in domain}

    def check(ms: tuple[Multisegment, ...]) -> None:
        result.cases += 1
        c = strings.c_tuple(ms)
        cp = strings.c_prime_tuple(ms)
        phi = strings.phi_multiseg(ms)
        if c - cp != phi:
            result.failures.append(
                f"C-C'={c - cp} but Phi={phi} on ({', '.join(map(str, ms))}) | {repro}"
            )
            return
        avecs = [bz_coords[m] for m in ms]
        betas = [weights[m] for m in ms]
        if strings.phi_weights(seq, avecs, betas) != phi:
            result.failures.append(
                f"string-form Phi mismatch on ({', '.join(map(str, ms))}) | {repro}"
            )

    for m in domain:
        check((m,))
    if len(domain) ** 2 <= EXHAUSTIVE_TUPLES:
        for pair in itertools.product(domain, repeat=2):
            check(pair)
    else:
        rng = random.Random(seed)
        for _ in range(sample):
            check((rng.choice(domain), rng.choice(domain)))
    if len(domain) ** 3 <= EXHAUSTIVE_TUPLES:
        for triple in itertools.product(domain, repeat=3):
            check(triple)
    else:
        rng = random.Random(seed + 1)
        for _ in range(sample):
            check((rng.choice(domain), rng.choice(domain), rng.choice(domain)))
    return result


def suite_rsk(
    bounds: EnumerationBounds, seed: int = 0, sample: int = 10_000
) -> SuiteResult:
    """RSK well-formedness, width, permissibility, injectivity, bitableaux."""
    result = SuiteResult("rsk")
    repro = _repro("rsk", bounds, seed)
    instances, exhaustive_size = bounded_instances(bounds, seed, sample)
    result.notes.append(f"exhaustive through size {exhaustive_size}")
    peel_images: dict[tuple[Multisegment, Multisegment], Multisegment] = {}
    for m in instances:
        result.cases += 1
        try:
            transform = rsk.rsk_transform(m)
        except (InvariantViolation, ShapeViolation) as exc:
            result.failures.append(f"RSK({m}) failed: {exc} | {repro}")
            continue
        wt_sum = Multisegment()
        for lad in transform:
            wt_sum = wt_sum + lad
        if wt_sum.weight() != m.weight() or wt_sum.begin_weight() != m.begin_weight():
            result.failures.append(f"RSK({m}) does not conserve wt/b | {repro}")
        if len(transform) != oracle.dilworth_width(m):
            result.failures.append(
                f"width({m})={len(transform)} != Dilworth "
                f"{oracle.dilworth_width(m)} | {repro}"
            )
        rest = m
        prev_width = oracle.dilworth_width(m)
        while rest:
            ladder, new_rest = rsk.knuth_viennot(rest)
            if len(m) <= oracle.PERMISSIBLE_GUARD and not oracle.brute_permissible(
                ladder, new_rest
            ):
                result.failures.append(
                    f"peel of {rest} not permissible per oracle | {repro}"
                )
            if new_rest:
                w = oracle.dilworth_width(new_rest)
                if w != prev_width - 1:
                    result.failures.append(
                        f"width drop {prev_width}->{w} peeling {rest} | {repro}"
                    )
                prev_width = w
            rest = new_rest
        first_peel = rsk.knuth_viennot(m)
        if first_peel in peel_images and peel_images[first_peel] != m:
            result.failures.append(
                f"peeling collision: {peel_images[first_peel]} and {m} | {repro}"
            )
        peel_images[first_peel] = m
        # bitableau layer on the same instance
        try:
            pq = rsk.bitableau_of(m)
        except (InvariantViolation, ShapeViolation) as exc:
            result.failures.append(f"bitableau of {m} failed: {exc} | {repro}")
            continue
        if tableaux.ladders_of(pq) != tuple(transform):
            result.failures.append(f"ladders_of(bitableau({m})) != RSK | {repro}")
        lads = list(transform)
        if strings.c_tuple(lads) != tableaux.c_count(pq):
            result.failures.append(f"C(ladders) != C(P,Q) for {m} | {repro}")
        derived_pair = tableaux.BitableauPair(pq.p.increment(), pq.q)
        if strings.c_prime_tuple(lads) != tableaux.c_count(derived_pair):
            result.failures.append(f"C'(ladders) != C(P',Q) for {m} | {repro}")
    return result


def suite_kv(bounds: EnumerationBounds, seed: int = 0) -> SuiteResult:
    """Peeling output is independent of the depth-class enumeration choice."""
    capped = EnumerationBounds(
        bounds.support_min,
        bounds.support_max,
        min(bounds.max_segments, oracle.KV_GUARD - 1),
    )
    result = SuiteResult("kv")
    repro = _repro("rsk", bounds, seed)
    for m in enumerate_multisegments(capped):
        if not m:
            continue
        result.cases += 1
        if not oracle.kv_choice_independence(m):
            result.failures.append(f"enumeration choice changes peel of {m} | {repro}")
    return result


def suite_strings(
    bounds: EnumerationBounds, seed: int = 0, sample: int = 10_000
) -> SuiteResult:
    """Derivative coherence and BZ-string additivity on the bounded domain."""
    result = SuiteResult("strings")
    repro = _repro("strings", bounds, seed)
    t = max(abs(bounds.support_min), abs(bounds.support_max))
    instances, exhaustive_size = bounded_instances(bounds, seed, sample)
    result.notes.append(f"exhaustive through size {exhaustive_size}")
    empties_logged = 0
    for m in instances:
        result.cases += 1
        try:
            d1 = strings.bz_derivative(m, t)
            d2 = strings.bz_derivative(m, t + 2)
        except InvariantViolation as exc:
            result.failures.append(f"BZ derivative of {m} failed: {exc} | {repro}")
            continue
        if d1 != m.derived() or d2 != m.derived():
            result.failures.append(f"BZ derivative of {m} is T-dependent | {repro}")
        if m.extended().derived() != m:
            result.failures.append(f"derive(extend({m})) != input | {repro}")
        ext = m.extended()
        derived_entries = [lad.derived() for lad in rsk.rsk_transform(ext)]
        empties_logged += sum(1 for lad in derived_entries if not lad)
        nonempty = [lad for lad in derived_entries if lad]
        if nonempty != list(rsk.rsk_transform(m)):
            result.failures.append(
                f"RSK(extend({m})) truncated entrywise != RSK({m}) | {repro}"
            )
    rng = random.Random(seed)
    nonempty_domain = instances or [Multisegment()]
    for _ in range(min(sample, 2000)):
        m1 = rng.choice(nonempty_domain)
        m2 = rng.choice(nonempty_domain)
        result.cases += 1
        _, a1 = strings.bz_string(m1, t)
        _, a2 = strings.bz_string(m2, t)
        _, a12 = strings.bz_string(m1 + m2, t)
        if tuple(x + y for x, y in zip(a1, a2)) != a12:
            result.failures.append(f"BZ string not additive on {m1}, {m2} | {repro}")
    result.notes.append(f"empty derived ladders logged: {empties_logged}")
    return result


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, reverse-lexicographic."""
    if n == 0:
        return (Partition(),)
    out: list[Partition] = []

    def build(remaining: int, cap: int, acc: tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(Partition(acc))
            return
        for part in range(min(cap, remaining), 0, -1):
            build(remaining - part, part, acc + (part,))

    build(n, n, ())
    return tuple(out)


def iter_multicharges(cmin: int, cmax: int, max_level: int) -> Iterator[specht.Multicharge]:
    for level in range(1, max_level + 1):
        for combo in itertools.combinations_with_replacement(
            range(cmax, cmin - 1, -1), level
        ):
            yield specht.Multicharge(combo)


def iter_multipartitions(level: int, max_total: int) -> Iterator[specht.Multipartition]:
    """All multipartitions with the given level and total size at most max_total."""

    def build(i: int, budget: int, acc: tuple[Partition, ...]) -> Iterator[tuple[Partition, ...]]:
        if i == level:
            yield acc
            return
        for n in range(budget + 1):
            for mu in partitions_of(n):
                yield from build(i + 1, budget - n, acc + (mu,))

    for components in build(0, max_total, ()):
        yield specht.Multipartition(components)


def suite_specht(
    charge_min: int = -2,
    charge_max: int = 2,
    max_level: int = 3,
    max_size: int = 8,
    seed: int = 0,
) -> SuiteResult:
    """Padding, the RSK dictionary and column removal over all restricted inputs."""
    result = SuiteResult("specht")
    repro = (
        f"segrsk check --suite specht --min {charge_min} --max {charge_max} "
        f"--max-segments {max_size} --level {max_level} --seed {seed}"
    )
    for kappa in iter_multicharges(charge_min, charge_max, max_level):
        for mp in iter_multipartitions(kappa.level(), max_size):
            if not specht.is_restricted(kappa, mp):
                continue
            result.cases += 1
            case = f"kappa=({kappa}) mp=({mp})"
            try:
                padded = specht.pad(kappa, mp)
            except InvariantViolation as exc:
                result.failures.append(f"pad failed on {case}: {exc} | {repro}")
                continue
            if not specht.is_proper(kappa, padded) or padded.cut() != mp:
                result.failures.append(f"pad postcondition broken on {case} | {repro}")
            try:
                report = specht.specht_rsk_verify(kappa, mp)
            except InvariantViolation as exc:
                result.failures.append(f"dictionary failed on {case}: {exc} | {repro}")
                continue
            if not report.gamma.is_positive():
                result.failures.append(f"gamma not positive on {case} | {repro}")
            if report.proper_case and not specht.proper_rsk_identity(kappa, mp):
                result.failures.append(f"proper RSK identity broken on {case} | {repro}")
            if not specht.column_removal_check(kappa, mp):
                result.failures.append(f"column removal broken on {case} | {repro}")
    return result


def suite_tableaux(max_partition_size: int = 6, charge_span: int = 2) -> SuiteResult:
    """Hook-length counts, residue weights and the cut-ladder identity."""
    result = SuiteResult("tableaux")
    for n in range(max_partition_size + 1):
        for mu in partitions_of(n):
            result.cases += 1
            fillings = tableaux.standard_tableaux(mu)
            if len(fillings) != oracle.hook_length_count(mu):
                result.failures.append(f"tableau count wrong for ({mu})")
            if len(set(fillings)) != len(fillings):
                result.failures.append(f"duplicate tableaux for ({mu})")
            for k in range(-charge_span, charge_span + 1):
                lad = specht.ladder_of_partition(k, mu)
                if lad.weight() != specht.content(k, mu.conjugate()):
                    result.failures.append(f"wt(ladder({k},{mu})) != content")
                if lad.derived() != specht.ladder_of_partition(k, mu.cut()):
                    result.failures.append(f"cut-ladder identity broken at ({k},{mu})")
                for filling in fillings:
                    if tableaux.residue_weight(k, filling) != specht.content(k, mu):
                        result.failures.append(
                            f"residue weight wrong for ({k},{mu},{filling})"
                        )
    return result


def run_suite(
    name: str,
    bounds: EnumerationBounds,
    seed: int = 0,
    sample: int = 10_000,
    max_level: int = 3,
) -> list[SuiteResult]:
    """Dispatch for the check command; 'all' runs every suite."""
    results: list[SuiteResult] = []
    if name in ("combi", "all"):
        results.append(suite_combi(bounds, seed, sample))
    if name in ("rsk", "all"):
        results.append(suite_rsk(bounds, seed, sample))
        results.append(suite_kv(bounds, seed))
        results.append(suite_tableaux())
    if name in ("strings", "all"):
        results.append(suite_strings(bounds, seed, sample))
    if name in ("specht", "all"):
        results.append(
            suite_specht(
                bounds.support_min,
                bounds.support_max,
                max_level,
                bounds.max_segments,
                seed,
            )
        )
    return results
