"""Seeded random search for presentation matrices realizing each class."""

from __future__ import annotations

import hashlib
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product
from pathlib import Path

from .docio import dumps, matrix_document
from .example import example_matrix
from .pfaffian import SkewMatrix, pfaffians
from .polyring import Poly, PrimeField, Ring, field_from_name
from .trimclass import ClassificationError, build_cbar, classify_linear, permute_cbar, trim_permutation

VARIABLES = ("x", "y", "z")
RATIONAL_COEFF_RANGE = 3


@dataclass(frozen=True)
class SearchConfig:
    field: str = "F2"
    degree: int = 2
    trials: int = 1000
    seed: int = 0
    trim_sizes: tuple = (1, 2, 3)
    inject_example: bool = True
    workers: int = 1

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("degree bound must be >= 1")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not set(self.trim_sizes) <= {1, 2, 3, 4, 5}:
            raise ValueError(f"trim sizes must lie in 1..5, got {self.trim_sizes}")
        field_from_name(self.field)


def monomials(nvars: int, degree: int) -> list:
    """Exponent vectors of total degree 1..degree."""
    return [e for e in product(range(degree + 1), repeat=nvars) if 1 <= sum(e) <= degree]


def trial_rng(seed: int, trial: int) -> random.Random:
    digest = hashlib.sha256(f"gortrim/{seed}/{trial}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def random_coefficient(f, rng: random.Random):
    if isinstance(f, PrimeField):
        return rng.randrange(f.p)
    return rng.randint(-RATIONAL_COEFF_RANGE, RATIONAL_COEFF_RANGE)


def random_skew_matrix(ring: Ring, degree: int, rng: random.Random, m: int = 5) -> SkewMatrix:
    """Upper-triangle entries with every monomial of degree 1..degree drawn
    independently; the lower triangle is the negated transpose."""
    mons = monomials(ring.nvars, degree)
    f = ring.field
    upper = {}
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            terms = {e: random_coefficient(f, rng) for e in mons}
            upper[(i, j)] = Poly(ring, terms)
    return SkewMatrix.from_upper(ring, upper, m)


def _trims(sizes):
    return [s for k in sizes for s in combinations(range(1, 6), k)]


def classify_trial(T: SkewMatrix, trims) -> dict:
    """``{trim: class string}``; empty when some pfaffian vanishes."""
    if any(not p for p in pfaffians(T)):
        return {}
    c = build_cbar(T)
    out = {}
    for S in trims:
        perm = trim_permutation(S)
        try:
            _, _, _, _, cls = classify_linear(permute_cbar(c, perm), len(S))
        except ClassificationError:
            out[S] = "miss"
            continue
        out[S] = str(cls)
    return out


def _run_chunk(args):
    config, trial_ids = args
    ring = Ring(field_from_name(config.field), VARIABLES)
    trims = _trims(config.trim_sizes)
    results = []
    for n in trial_ids:
        if n == 0:
            T = example_matrix()
        else:
            T = random_skew_matrix(ring, config.degree, trial_rng(config.seed, n))
        results.append((n, T, classify_trial(T, trims)))
    return results


@dataclass
class SearchResult:
    config: SearchConfig
    census: dict = field(default_factory=dict)  # "t=<t> <class>" -> count
    witnesses: dict = field(default_factory=dict)  # same key -> (trial, trim, SkewMatrix)
    skipped: int = 0

    def classes_found(self) -> set:
        return set(self.census)

    def to_dict(self) -> dict:
        return {
            "config": {
                "field": self.config.field,
                "degree": self.config.degree,
                "trials": self.config.trials,
                "seed": self.config.seed,
                "trim_sizes": list(self.config.trim_sizes),
                "inject_example": self.config.inject_example,
            },
            "skipped_trials": self.skipped,
            "census": {k: self.census[k] for k in sorted(self.census)},
            "witnesses": {
                k: {"trial": w[0], "trim": list(w[1])} for k, w in sorted(self.witnesses.items())
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False) + "\n"

    def emit_witnesses(self, directory) -> list:
        d = Path(directory)
        d.mkdir(parents=True, exist_ok=True)
        paths = []
        for key, (trial, trim, T) in sorted(self.witnesses.items()):
            name = key.replace("=", "").replace(" ", "_").replace("(", "").replace(")", "").replace(",", "-")
            doc = matrix_document(T)
            doc["trial"] = trial
            doc["trim"] = list(trim)
            doc["class"] = key.split(" ", 1)[1]
            path = d / f"{name}.json"
            path.write_text(dumps(doc))
            paths.append(path)
        return paths


def run_search(config: SearchConfig) -> SearchResult:
    # the embedded example lives over F2 only
    first = 0 if config.inject_example and config.field in ("F2", "GF2") else 1
    ids = list(range(first, config.trials + 1))
    if config.workers > 1:
        size = max(1, len(ids) // (config.workers * 4))
        chunks = [(config, ids[a : a + size]) for a in range(0, len(ids), size)]
        with ProcessPoolExecutor(config.workers) as pool:
            batches = list(pool.map(_run_chunk, chunks))
        results = [r for b in batches for r in b]
    else:
        results = _run_chunk((config, ids))
    out = SearchResult(config)
    for n, T, classes in results:
        if not classes:
            out.skipped += 1
            continue
        for S, cls in classes.items():
            key = f"t={len(S)} {cls}"
            out.census[key] = out.census.get(key, 0) + 1
            out.witnesses.setdefault(key, (n, S, T))
    return out
