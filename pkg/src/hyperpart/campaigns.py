"""Seeded verification campaigns and the exhaustive threshold search.

Each suite runs ``trials`` independent instances and returns a JSON-able
report.  A trial that trips an internal consistency check is recorded as a
failure with its message rather than aborting the campaign, so a red run
still shows every result.
"""

from __future__ import annotations

import dataclasses
from itertools import combinations
from typing import Callable, Optional

from .colorful import (
    color_separating_hyperplane,
    helly_dual,
    is_partitionable,
    is_partitionable_by_enumeration,
    kirchberger_witness,
    witness_nonpartitionable,
)
from .counting import max_transversal_size, partition_count, witness_size_bound
from .errors import DomainError, VerificationError
from .generator import CampaignSpec, generate_instance, generate_pair
from .hdivision import hyperplane_division, projective_flip
from .partitions import minimal_transversals

SUITES = ("phi", "kirchberger", "main", "duality", "eta-bound")

_BOUND_SEARCH_MAX_N = 12


def _trial_phi(spec: CampaignSpec, trial: int) -> dict:
    config = generate_instance(spec, trial)
    count = len(hyperplane_division(config))
    expected = partition_count(spec.dim, spec.n)
    ok = count <= expected if spec.degenerate else count == expected
    return {"trial": trial, "count": count, "expected": expected, "ok": ok}


def _trial_kirchberger(spec: CampaignSpec, trial: int) -> dict:
    config = generate_instance(spec, trial)
    anchor = config.ids[0]
    direct = color_separating_hyperplane(config)
    dual = helly_dual(config, anchor).separating_hyperplane()
    agree = (direct is None) == (dual is None)
    record: dict = {
        "trial": trial,
        "anchor": anchor,
        "separable": direct is not None,
        "routes_agree": agree,
    }
    if direct is None:
        witness = kirchberger_witness(config, anchor)
        record["witness"] = list(witness) if witness else None
        record["ok"] = agree and witness is not None and len(witness) <= spec.dim + 2
    else:
        record["ok"] = agree
    return record


def _trial_main(spec: CampaignSpec, trial: int) -> dict:
    config = generate_instance(spec, trial)
    certificate = is_partitionable(config)
    by_enumeration = is_partitionable_by_enumeration(config)
    agree = (certificate is not None) == by_enumeration
    record: dict = {
        "trial": trial,
        "partitionable": certificate is not None,
        "routes_agree": agree,
        "ok": agree,
    }
    if certificate is None and agree:
        report = witness_nonpartitionable(config)
        record["witness_size"] = len(report.witness_ids)
        record["size_bound"] = report.size_bound
        record["ok"] = len(report.witness_ids) <= report.size_bound
    return record


def _trial_duality(spec: CampaignSpec, trial: int) -> dict:
    config = generate_instance(spec, trial)
    a, b = generate_pair(spec, trial, config)
    division = hyperplane_division(config)
    base = division.separating(a, b)[0]
    result = projective_flip(config, a, b, base)
    expected = partition_count(spec.dim, spec.n)
    total = result.separating_before + result.separating_after
    return {
        "trial": trial,
        "pair": [a, b],
        "separating_before": result.separating_before,
        "separating_after": result.separating_after,
        "expected_total": expected,
        "ok": total == expected,
    }


def _trial_eta_bound(spec: CampaignSpec, trial: int) -> dict:
    config = generate_instance(spec, trial)
    division = hyperplane_division(config).division
    sizes = [t.size for t in minimal_transversals(division)]
    bound = max_transversal_size(spec.dim, spec.n)
    largest = max(sizes) if sizes else 0
    return {
        "trial": trial,
        "largest_minimal_transversal": largest,
        "bound": bound,
        "ok": largest <= bound,
    }


_TRIALS: dict[str, Callable[[CampaignSpec, int], dict]] = {
    "phi": _trial_phi,
    "kirchberger": _trial_kirchberger,
    "main": _trial_main,
    "duality": _trial_duality,
    "eta-bound": _trial_eta_bound,
}


def _check_suite_shape(spec: CampaignSpec) -> CampaignSpec:
    if spec.suite not in SUITES:
        raise DomainError(f"unknown suite {spec.suite!r}; choose from {SUITES}")
    if spec.suite in ("phi", "duality", "eta-bound") and spec.colors:
        raise DomainError(f"suite {spec.suite!r} runs on uncolored configurations")
    if spec.suite == "kirchberger" and spec.colors != 2:
        raise DomainError("suite 'kirchberger' needs exactly 2 colors")
    if spec.suite == "main" and spec.colors < 2:
        raise DomainError("suite 'main' needs at least 2 colors")
    if spec.suite == "duality" and spec.n < 2:
        raise DomainError("suite 'duality' needs at least 2 points")
    if spec.suite == "eta-bound" and not spec.degenerate:
        spec = dataclasses.replace(spec, degenerate=True)
    return spec


def run_suite(spec: CampaignSpec) -> dict:
    """Run one named suite; the report carries every trial's verdict."""
    spec = _check_suite_shape(spec)
    trial_fn = _TRIALS[spec.suite]
    results = []
    for trial in range(spec.trials):
        try:
            results.append(trial_fn(spec, trial))
        except VerificationError as err:
            results.append({"trial": trial, "ok": False, "error": str(err)})
    passed = sum(1 for r in results if r["ok"])
    return {
        "suite": spec.suite,
        "dim": spec.dim,
        "n": spec.n,
        "colors": spec.colors,
        "trials": spec.trials,
        "seed": spec.seed,
        "degenerate": spec.degenerate,
        "results": results,
        "passed": passed,
        "failed": spec.trials - passed,
        "ok": passed == spec.trials,
    }


def smallest_blocked_subset_size(config) -> Optional[int]:
    """Size of the smallest subset that no hyperplane family splits along
    colors, or None when the whole configuration is partitionable.

    Partitionability is inherited by subsets, so scanning sizes upward and
    stopping at the first hit is exhaustive.
    """
    if is_partitionable(config) is not None:
        return None
    ids = config.ids
    for size in range(3, len(ids) + 1):
        for chosen in combinations(ids, size):
            if is_partitionable(config.subset(chosen)) is None:
                return size
    raise VerificationError(
        "configuration reported non-partitionable but every proper scan "
        "level was partitionable"
    )  # pragma: no cover - contradiction guard


def bound_search(spec: CampaignSpec) -> dict:
    """Exhaustively locate, per trial, the smallest non-partitionable subset
    and compare it with the guaranteed witness-size bound."""
    if spec.colors < 2:
        raise DomainError("bound search needs at least 2 colors")
    if spec.n > _BOUND_SEARCH_MAX_N:
        raise DomainError(
            f"bound search is exhaustive; n is capped at {_BOUND_SEARCH_MAX_N}"
        )
    bound = witness_size_bound(spec.dim, spec.colors)
    results = []
    for trial in range(spec.trials):
        config = generate_instance(spec, trial)
        threshold = smallest_blocked_subset_size(config)
        record: dict = {"trial": trial, "partitionable": threshold is None}
        if threshold is None:
            record["threshold"] = None
            record["ok"] = True
        else:
            # Every subset smaller than the threshold is partitionable.
            record["threshold"] = threshold
            record["largest_safe_size"] = threshold - 1
            record["ok"] = threshold <= bound
        results.append(record)
    thresholds = [r["threshold"] for r in results if r["threshold"] is not None]
    passed = sum(1 for r in results if r["ok"])
    return {
        "suite": "bound-search",
        "dim": spec.dim,
        "n": spec.n,
        "colors": spec.colors,
        "trials": spec.trials,
        "seed": spec.seed,
        "degenerate": spec.degenerate,
        "size_bound": bound,
        "max_threshold": max(thresholds) if thresholds else None,
        "results": results,
        "passed": passed,
        "failed": spec.trials - passed,
        "ok": passed == spec.trials,
    }
