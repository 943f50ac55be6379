"""Invariant suites behind the `kkbounds selftest` command.

Each suite checks one family of identities or inequalities exhaustively at a
quick or full scale, returning how many checks ran and which ones failed.
Failure messages name the first offending identity so a broken build is
diagnosable from the command line.
"""

from __future__ import annotations

import math
import random
from itertools import combinations

from . import approx, binomials, cascade, colored, complexes

MAX_REPORTED = 3
ORDERING_SLACK = 1e-9


def narrow_window_margin(x: float, k: int, p: int) -> float:
    """Margin of: (x(x-1)...(x-k+1))^(1/k) < ((x-c)...(x-c-p+1))^(1/p), c=(k-p)/2.

    Positive means the inequality holds.  Requires k > p > 0 and x > k-1.
    """
    c = (k - p) / 2
    lhs = math.prod(x - i for i in range(k)) ** (1 / k)
    rhs = math.prod(x - c - i for i in range(p)) ** (1 / p)
    return rhs - lhs


def shifted_root_margin(x: float, p: int, c: float) -> float:
    """Margin of: ((x+c)...(x+c-p+1))^(1/p) > (x(x-1)...(x-p+1))^(1/p) + c.

    Positive means the inequality holds.  Strict only for p >= 2 (at p = 1
    both sides equal x + c), so callers should sample p >= 2.
    """
    lhs = math.prod(x + c - i for i in range(p)) ** (1 / p)
    rhs = math.prod(x - i for i in range(p)) ** (1 / p) + c
    return lhs - rhs


def check_complex_soundness(
    cx: complexes.SimplicialComplex, slack: float = ORDERING_SLACK
) -> tuple[int, list[str]]:
    """Compare every applicable bound against the true face counts of cx.

    Covers the exact shadow bounds, all closed-form approximations, colored
    bounds for every color count the complex admits, and the flag bounds when
    the complex is flag.  Returns (checks run, failure messages).
    """
    checks, failures = 0, []
    fv = complexes.f_vector(cx)
    entries = fv.entries

    checks += 1
    result = cascade.validate_face_vector(fv)
    if not result.ok:
        failures.append(
            f"validate_face_vector{entries} rejected a real complex at k={result.failing_k}"
        )
    checks += 1
    if not approx.symmetric_chain(fv).strictly_decreasing:
        failures.append(f"symmetric chain not strictly decreasing for {entries}")

    n_verts = len(cx.vertices)
    chromatic = next(
        r for r in range(1, max(n_verts, 1) + 1) if complexes.is_r_colorable(cx, r)
    )
    flag = complexes.is_flag(cx)
    top = fv.dimension + 1

    for r in range(chromatic, max(n_verts, chromatic) + 1):
        checks += 1
        res = colored.validate_colored_face_vector(fv, r)
        if not res.ok:
            failures.append(
                f"validate_colored_face_vector{entries} with r={r} failed at k={res.failing_k}"
            )

    for k in range(2, len(entries)):
        m = entries[k]
        for p in range(1, k):
            true_count = entries[p]
            evaluated = [
                ("shadow_bound", cascade.shadow_bound(m, k, p), 0.0),
                ("lovasz_bound", approx.lovasz_bound(m, k, p), slack),
                ("withoutr_bound", approx.withoutr_bound(m, k, p), slack),
                ("noreasy_bound", approx.noreasy_bound(m, k, p), slack),
            ]
            for r in range(max(k, chromatic), n_verts + 1):
                evaluated.append(
                    (
                        f"colored_shadow_bound[r={r}]",
                        colored.colored_shadow_bound(m, k, p, r),
                        0.0,
                    )
                )
                evaluated.append(
                    (
                        f"colorapprox_bound[r={r}]",
                        approx.colorapprox_bound(m, k, p, r),
                        slack,
                    )
                )
            if flag:
                fr = approx.flag_r(m, k)
                evaluated.append(
                    (f"flag bound[r={fr}]", approx.colorapprox_bound(m, k, p, fr), slack)
                )
                if k <= top:
                    evaluated.append(
                        (
                            f"flag-dim bound[r={top}]",
                            approx.colorapprox_bound(m, k, p, top),
                            slack,
                        )
                    )
            for name, value, tol in evaluated:
                checks += 1
                if value > true_count * (1 + tol):
                    failures.append(
                        f"{name}(m={m},k={k},p={p}) = {value} exceeds true count {true_count}"
                    )
    return checks, failures


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------


def _suite_turan_oracle(scale: str) -> tuple[int, list[str]]:
    n_max = 12 if scale == "full" else 8
    checks, failures = 0, []
    for n in range(n_max + 1):
        for r in range(1, max(n, 1) + 1):
            for k in range(n + 1):
                checks += 1
                a = binomials.turan_coefficient(n, k, r)
                b = binomials.turan_clique_count_oracle(n, k, r)
                if a != b:
                    failures.append(
                        f"turan_coefficient({n},{k},{r})={a} != clique oracle {b}"
                    )
    return checks, failures


def _suite_full_level_identities(scale: str) -> tuple[int, list[str]]:
    n_max = 12 if scale == "full" else 9
    checks, failures = 0, []
    for p in range(1, 5):
        for r in range(1, 7):
            for k in range(1, r + 1):
                checks += 1
                lhs = binomials.turan_coefficient(p * r, k, r)
                rhs = binomials.binomial(r, k) * p**k
                if lhs != rhs:
                    failures.append(
                        f"turan_coefficient({p * r},{k},{r})={lhs} != C({r},{k})*{p}^{k}={rhs}"
                    )
    for n in range(2, n_max + 1):
        for k in range(2, n + 1):
            for p in range(1, k):
                checks += 1
                lhs = cascade.shadow_bound(binomials.binomial(n, k), k, p)
                rhs = binomials.binomial(n, p)
                if lhs != rhs:
                    failures.append(
                        f"shadow_bound(C({n},{k}),{k},{p})={lhs} != C({n},{p})={rhs}"
                    )
    return checks, failures


def _suite_cascade_roundtrip(scale: str) -> tuple[int, list[str]]:
    m_max, k_max = (5000, 6) if scale == "full" else (500, 4)
    checks, failures = 0, []
    for k in range(1, k_max + 1):
        for m in range(1, m_max + 1):
            checks += 1
            back = cascade.cascade_evaluate(cascade.cascade_decompose(m, k))
            if back != m:
                failures.append(f"cascade roundtrip: decompose({m},{k}) sums to {back}")
    return checks, failures


def _suite_colored_roundtrip(scale: str) -> tuple[int, list[str]]:
    m_max, r_max = (2000, 5) if scale == "full" else (200, 4)
    checks, failures = 0, []
    for r in range(1, r_max + 1):
        for k in range(1, r + 1):
            for m in range(1, m_max + 1):
                checks += 1
                rep = colored.colored_cascade_decompose(m, k, r)
                back = colored.colored_cascade_evaluate(rep)
                if back != m:
                    failures.append(
                        f"colored roundtrip: decompose({m},{k},{r}) sums to {back}"
                    )
    return checks, failures


def _suite_revlex_sharpness(scale: str) -> tuple[int, list[str]]:
    """shadow_bound equals the face counts of the rev-lex complex, every level."""
    m_max, k_max = (500, 5) if scale == "full" else (120, 4)
    checks, failures = 0, []
    for k in range(2, k_max + 1):
        seen: set[tuple[int, ...]] = set()
        counts = [0] * (k + 1)
        previous: dict[int, int] = {}
        for m, kset in enumerate(complexes.revlex_ksets(m_max, k), start=1):
            facet = tuple(sorted(kset))
            for size in range(1, k + 1):
                for sub in combinations(facet, size):
                    if sub not in seen:
                        seen.add(sub)
                        counts[size] += 1
            for p in range(1, k):
                checks += 1
                bound = cascade.shadow_bound(m, k, p)
                if bound != counts[p]:
                    failures.append(
                        f"shadow_bound({m},{k},{p})={bound} != rev-lex face count {counts[p]}"
                    )
                if bound < previous.get(p, 0):
                    failures.append(
                        f"shadow_bound({m},{k},{p})={bound} < shadow_bound({m - 1},{k},{p})"
                    )
                previous[p] = bound
    return checks, failures


def _suite_bound_ordering(scale: str) -> tuple[int, list[str]]:
    samples = 200 if scale == "full" else 40
    m_end = binomials.binomial(51, 10)
    checks, failures = 0, []
    for m in geometric_grid(1, m_end, samples):
        checks += 1
        nr = approx.noreasy_bound(m, 10, 7)
        wr = approx.withoutr_bound(m, 10, 7)
        lv = approx.lovasz_bound(m, 10, 7)
        kk = cascade.shadow_bound(m, 10, 7)
        if not (
            nr < wr * (1 + ORDERING_SLACK)
            and wr < lv * (1 + ORDERING_SLACK)
            and lv <= kk * (1 + ORDERING_SLACK)
        ):
            failures.append(
                f"ordering noreasy<withoutr<lovasz<=kk_exact broken at m={m}: "
                f"{nr}, {wr}, {lv}, {kk}"
            )
    checks += 1
    m = binomials.binomial(50, 10)
    if approx.lovasz_bound(m, 10, 7) != float(binomials.binomial(50, 7)):
        failures.append("lovasz_bound != kk_exact at m=C(50,10)")
    return checks, failures


def _suite_zoom_facts(scale: str) -> tuple[int, list[str]]:
    del scale
    checks, failures = 0, []
    low = binomials.binomial(50, 10)
    boundary = low + binomials.binomial(49, 9)
    top = binomials.binomial(51, 10)
    checks += 1
    if approx.best_r(boundary, 10) != 50 or approx.best_r(boundary + 1, 10) != 51:
        failures.append("best_r does not jump 50 -> 51 right after C(50,10)+C(49,9)")
    for m in (low + 1, (low + boundary) // 2, boundary):
        checks += 1
        wr = approx.colorapprox_bound(m, 10, 7, 50)
        lv = approx.lovasz_bound(m, 10, 7)
        if wr < lv * (1 - ORDERING_SLACK):
            failures.append(f"colorapprox(r=50)={wr} below lovasz={lv} at m={m}")
    checks += 1
    m = top - 1
    flag = approx.colorapprox_bound(m, 10, 7, 50)
    kk = cascade.shadow_bound(m, 10, 7)
    if not flag > kk:
        failures.append(f"flag bound {flag} does not exceed kk_exact {kk} at m=C(51,10)-1")
    return checks, failures


def _suite_lemma_inequalities(scale: str) -> tuple[int, list[str]]:
    points = 10_000 if scale == "full" else 1_000
    checks, failures = 0, []
    rng = random.Random(1729)
    for _ in range(points):
        k = rng.randint(2, 10)
        p = rng.randint(1, k - 1)
        x = (k - 1) + math.exp(rng.uniform(math.log(1e-3), math.log(200.0)))
        checks += 1
        if not narrow_window_margin(x, k, p) > 0.0:
            failures.append(f"window inequality fails at x={x}, k={k}, p={p}")
    for _ in range(points):
        p = rng.randint(2, 8)
        x = (p - 1) + math.exp(rng.uniform(math.log(1e-3), math.log(200.0)))
        c = math.exp(rng.uniform(math.log(1e-2), math.log(50.0)))
        checks += 1
        if not shifted_root_margin(x, p, c) > 0.0:
            failures.append(f"shift inequality fails at x={x}, p={p}, c={c}")
    return checks, failures


def _suite_fuzz_soundness(scale: str) -> tuple[int, list[str]]:
    instances = 200 if scale == "full" else 30
    checks, failures = 0, []
    for seed in range(instances):
        cx = complexes.random_complex(
            n=4 + seed % 5,
            density=(0.2, 0.35, 0.5, 0.65, 0.8)[(seed // 5) % 5],
            seed=seed,
            prune=(0.0, 0.3, 0.6)[seed % 3],
        )
        c, f = check_complex_soundness(cx)
        checks += c
        failures.extend(f"seed={seed}: {msg}" for msg in f)
    return checks, failures


def geometric_grid(m_start: int, m_end: int, samples: int) -> list[int]:
    """samples strictly increasing integers from m_start to m_end, equal ratios."""
    if m_start < 1 or m_end < m_start:
        raise ValueError(f"need 1 <= m_start <= m_end, got {m_start}, {m_end}")
    if samples < 2:
        raise ValueError(f"samples must be >= 2, got {samples}")
    if samples > m_end - m_start + 1:
        raise ValueError(
            f"cannot place {samples} distinct integers in [{m_start}, {m_end}]"
        )
    log_start, log_end = math.log(m_start), math.log(m_end)
    out: list[int] = []
    prev = m_start - 1
    for i in range(samples):
        t = i / (samples - 1)
        target = math.exp(log_start + t * (log_end - log_start))
        v = max(round(target), prev + 1)
        v = min(v, m_end - (samples - 1 - i))
        out.append(v)
        prev = v
    return out


SUITES = (
    ("turan_oracle", _suite_turan_oracle),
    ("full_level_identities", _suite_full_level_identities),
    ("cascade_roundtrip", _suite_cascade_roundtrip),
    ("colored_roundtrip", _suite_colored_roundtrip),
    ("revlex_sharpness", _suite_revlex_sharpness),
    ("bound_ordering", _suite_bound_ordering),
    ("zoom_facts", _suite_zoom_facts),
    ("lemma_inequalities", _suite_lemma_inequalities),
    ("fuzz_soundness", _suite_fuzz_soundness),
)


def run_selftest(scale: str = "quick", echo=print) -> bool:
    """Run every suite at the given scale; report one line per suite."""
    if scale not in ("quick", "full"):
        raise ValueError(f"scale must be 'quick' or 'full', got {scale!r}")
    all_ok = True
    total = 0
    for name, suite in SUITES:
        checks, failures = suite(scale)
        total += checks
        if failures:
            all_ok = False
            echo(f"[FAIL] {name}: {len(failures)} of {checks} checks failed")
            for message in failures[:MAX_REPORTED]:
                echo(f"       {message}")
        else:
            echo(f"[PASS] {name} ({checks} checks)")
    echo(f"{'OK' if all_ok else 'FAILED'}: {total} checks at scale={scale}")
    return all_ok
