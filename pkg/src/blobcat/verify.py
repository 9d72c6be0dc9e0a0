"""
Self-contained verification suites behind the `verify` subcommand: golden
table reproduction, exhaustive-oracle versus closed-formula agreement,
triangle identities, and the rewriting-kernel property checks.

Each suite returns a list of Check records; a run passes iff every record
does.  The counting functions are injectable so a deliberately broken
formula can be shown to produce mismatches.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

from . import enumeration, normal_forms, tables, triangles
from .algebra import AlgebraLevel, in_index_set, quotient_image_check, reduce_word, sb_basis, structure_constants
from .words import is_reduced_fc

CONFLUENCE_SEED = 20240817
CONFLUENCE_RANKS = (2, 3, 4)
CONFLUENCE_WORDS_PER_RANK = 70
CONFLUENCE_MAX_LEN = 12


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str


def _check(name: str, mismatches: list[str], detail_ok: str) -> Check:
    if mismatches:
        return Check(name, False, "; ".join(mismatches))
    return Check(name, True, detail_ok)


def verify_tables(
    max_n: int = 9,
    d_fn: Callable[[int, int], int] | None = None,
    b_fn: Callable[[int, int], int] | None = None,
    p_fn: Callable[[int], int] | None = None,
) -> list[Check]:
    d_fn = d_fn or enumeration.d_count
    b_fn = b_fn or enumeration.b_count
    p_fn = p_fn or enumeration.p_dim
    max_n = min(max_n, 9)
    checks = []
    mismatches = []
    cells = 0
    for n in range(1, max_n + 1):
        for s in range(10):
            cells += 1
            got = d_fn(n, s)
            want = tables.EXCLUDED_TABLE[n - 1][s]
            if got != want:
                mismatches.append(f"(n={n},s={s}) got {got} want {want}")
    checks.append(_check("tables:excluded", mismatches, f"{cells} cells"))
    mismatches = []
    for n in range(1, max_n + 1):
        for s in range(10):
            got = b_fn(n, s)
            want = tables.BLOBBED_TABLE[n - 1][s]
            if got != want:
                mismatches.append(f"(n={n},s={s}) got {got} want {want}")
    checks.append(_check("tables:blobbed", mismatches, f"{cells} cells"))
    mismatches = []
    for n in range(1, max_n + 1):
        got = p_fn(n)
        want = tables.DIMENSION_SEQUENCE[n - 1]
        if got != want:
            mismatches.append(f"n={n} got {got} want {want}")
    checks.append(_check("tables:dimension-sequence", mismatches, f"{max_n} terms"))
    return checks


def verify_oracle(max_n: int = 5) -> list[Check]:
    checks = []
    max_n = min(max_n, 5)
    for n in range(1, max_n + 1):
        mismatches = []
        pairs = 0
        for s in range(0, min(n + 1, 6) + 1):
            pairs += 1
            got = enumeration.oracle_positive_count(n, s)
            want = triangles.blobbed_entry(2 * n, 2 * s)
            if got != want:
                mismatches.append(f"positive (n={n},s={s}) got {got} want {want}")
            got = enumeration.oracle_blobbed_count(n, s)
            want = enumeration.b_count(n, s)
            if got != want:
                mismatches.append(f"blobbed (n={n},s={s}) got {got} want {want}")
        checks.append(_check(f"oracle:n={n}", mismatches, f"{pairs} affine lengths"))
    return checks


def verify_triangle(max_i: int = 64, max_ident: int = 40, max_decomp: int = 30) -> list[Check]:
    checks = []
    mismatches = []
    for i in range(0, max_i + 1):
        for j in range(i % 2, i + 1, 2):
            if triangles.blobbed_closed(i, j) != triangles.blobbed_entry(i, j):
                mismatches.append(f"({i},{j})")
    checks.append(_check("triangle:closed-form", mismatches, f"i <= {max_i}"))
    mismatches = []
    for j in range(0, max_ident + 1):
        if triangles.blobbed_entry(j, 0) != triangles.blobbed_entry(j - 1, 1):
            mismatches.append(f"column identity at {j}")
    for i in range(1, max_ident + 1):
        for j in range(1, max_ident + 1):
            lhs = triangles.blobbed_entry(i, j)
            if lhs != sum(
                triangles.blobbed_entry(i - 1 - k, j + 1 - k) for k in range(j + 1)
            ):
                mismatches.append(f"row-sum identity at ({i},{j})")
            if lhs != sum(
                triangles.blobbed_entry(i - 1 - k, j - 1 + k) for k in range(i + 1)
            ):
                mismatches.append(f"diagonal-sum identity at ({i},{j})")
    checks.append(_check("triangle:identities", mismatches, f"indices <= {max_ident}"))
    mismatches = []
    for i in range(1, max_decomp + 1):
        total = sum(w * c for _, w, c in triangles.central_binomial_decomposition(i))
        if total != triangles.binomial(2 * i, i):
            mismatches.append(f"central at {i}")
        for j in range(1, i + 1):
            total = sum(
                w * c for _, w, c in triangles.general_binomial_decomposition(i, j)
            )
            if total != triangles.binomial(2 * i - j, i):
                mismatches.append(f"general at ({i},{j})")
    checks.append(_check("triangle:decompositions", mismatches, f"i <= {max_decomp}"))
    return checks


def verify_algebra(max_n: int = 3) -> list[Check]:
    checks = []
    rng = random.Random(CONFLUENCE_SEED)
    mismatches = []
    cases = 0
    for level in AlgebraLevel:
        for n in CONFLUENCE_RANKS:
            for _ in range(CONFLUENCE_WORDS_PER_RANK):
                length = rng.randint(0, CONFLUENCE_MAX_LEN)
                word = tuple(rng.randint(0, n) for _ in range(length))
                left = reduce_word(level, n, word, "leftmost")
                right = reduce_word(level, n, word, "rightmost")
                cases += 1
                if left != right:
                    mismatches.append(f"{level.name} n={n} {word}")
                    continue
                scalar, out = left
                if not is_reduced_fc(n, out) or not in_index_set(level, n, out):
                    mismatches.append(f"unsound output {level.name} n={n} {word}->{out}")
    checks.append(_check("algebra:confluence", mismatches, f"{cases} random words"))
    mismatches = []
    swept = 0
    for n in sorted({2, min(max(max_n, 2), 3)}):
        for s in range(0, 3):
            for nf in normal_forms.fc_forms(n, s):
                word = normal_forms.word_of_normal_form(n, nf)
                if normal_forms.is_positive(n, nf):
                    continue
                swept += 1
                if not quotient_image_check(
                    AlgebraLevel.TL, AlgebraLevel.TWO_BOUNDARY, n, word
                ):
                    mismatches.append(f"n={n} {word}")
    checks.append(_check("algebra:quotient-identities", mismatches, f"{swept} elements"))
    mismatches = []
    sizes = []
    for n in range(1, min(max_n, 3) + 1):
        table = structure_constants(n)
        basis = sb_basis(n)
        sizes.append(len(table))
        if len(table) != len(basis) ** 2:
            mismatches.append(f"n={n} table size {len(table)}")
        for (_, _), (_, target) in table.items():
            if target not in set(basis):
                mismatches.append(f"n={n} target {target} left the basis")
                break
    checks.append(_check("algebra:blob-closure", mismatches, f"table sizes {sizes}"))
    return checks


SUITES: dict[str, Callable[..., list[Check]]] = {
    "tables": verify_tables,
    "oracle": verify_oracle,
    "triangle": verify_triangle,
    "algebra": verify_algebra,
}


def run_suites(names: Sequence[str], max_n: int | None = None) -> list[Check]:
    """Run the named suites concurrently; results come back in name order."""
    def run(name: str) -> list[Check]:
        suite = SUITES[name]
        if max_n is None:
            return suite()
        return suite(max_n)

    with ThreadPoolExecutor(max_workers=len(names) or 1) as pool:
        results = list(pool.map(run, names))
    return [check for result in results for check in result]
