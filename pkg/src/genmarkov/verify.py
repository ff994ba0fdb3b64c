"""Named invariant suites behind `genmarkov verify`.

Each suite returns a list of CheckResult; the CLI aggregates pass counts and
exits nonzero on any failure.  Random corpora are drawn from a seeded
generator so runs are reproducible; the seed is the CLI --seed flag.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, sqrt

from . import contfrac, farey, limits, markov, signseq, snakegraph

DEFAULT_SEED = 20240801


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    ok: bool
    detail: str = ""


def _result(suite: str, name: str, ok: bool, detail: str = "") -> CheckResult:
    return CheckResult(suite, name, bool(ok), detail)


def _random_cf(rng: random.Random, max_len: int = 50, max_entry: int = 9) -> tuple[int, ...]:
    n = rng.randint(1, max_len)
    return tuple(rng.randint(1, max_entry) for _ in range(n))


def _random_canonical_cf(rng: random.Random, max_len: int = 12, max_entry: int = 6) -> tuple[int, ...]:
    n = rng.randint(1, max_len)
    if n == 1:
        return (rng.randint(2, max_entry),)
    mid = tuple(rng.randint(1, max_entry) for _ in range(n - 2))
    return (rng.randint(2, max_entry),) + mid + (rng.randint(2, max_entry),)


def _fraction_value(entries) -> Fraction:
    """Right-to-left fold; the independent oracle for evaluate()."""
    val = Fraction(entries[-1])
    for a in reversed(entries[:-1]):
        val = a + 1 / val
    return val


def verify_contfrac(seed: int = DEFAULT_SEED) -> list[CheckResult]:
    rng = random.Random(seed)
    out = []
    corpus = [_random_cf(rng) for _ in range(10_000)]

    ok = all(
        contfrac.continuant(e) == contfrac.continuant(contfrac.reverse_entries(e))
        for e in corpus
    )
    out.append(_result("contfrac", "reversal_invariance", ok))

    def backward(entries):
        h_prev, h = 0, 1
        for a in reversed(entries):
            h_prev, h = h, a * h + h_prev
        return h

    ok = all(contfrac.continuant(e) == backward(e) for e in corpus)
    out.append(_result("contfrac", "forward_backward_recurrence", ok))

    ok = all(
        contfrac.continuant((1,) + e) == contfrac.continuant((e[0] + 1,) + e[1:])
        for e in corpus
    )
    out.append(_result("contfrac", "one_at_front_fold", ok))

    ok = True
    for _ in range(400):
        k = rng.randint(2, 12)
        a = [rng.randint(1, 9) for _ in range(k)]
        hill_x = tuple(a[1:k - 1]) + (a[k - 1] + 1, a[k - 1]) + tuple(reversed(a[1:k - 1])) + (a[0],)
        hill_y = tuple(a[:k - 1]) + (a[k - 1] + 1, a[k - 1]) + tuple(reversed(a[1:k - 1]))
        diff = contfrac.continuant(hill_x) - contfrac.continuant(hill_y)
        if diff != (1 if k % 2 == 0 else -1):
            ok = False
            break
    out.append(_result("contfrac", "hill_swap_off_by_one", ok))

    ok = all(gcd(*contfrac.evaluate(e)) == 1 for e in corpus[:2000])
    out.append(_result("contfrac", "numerator_denominator_coprime", ok))

    ok = all(
        Fraction(*contfrac.evaluate(e)) == _fraction_value(e) for e in corpus[:2000]
    )
    out.append(_result("contfrac", "evaluate_matches_fraction_fold", ok))

    ok = True
    for _ in range(2000):
        e = _random_cf(rng, max_len=20)
        for first in "-+":
            if contfrac.signs_to_runs(contfrac.runs_to_signs(e, first)) != e:
                ok = False
    out.append(_result("contfrac", "sign_run_codec_roundtrip", ok))
    return out


def verify_farey(seed: int = DEFAULT_SEED) -> list[CheckResult]:
    rng = random.Random(seed + 1)
    out = []

    pairs = []
    for q in range(2, 200):
        for p in range(1, q):
            if gcd(p, q) == 1:
                pairs.append((p, q))
    for _ in range(3000):
        q = rng.randint(2, 10_000)
        p = rng.randint(1, q - 1)
        g = gcd(p, q)
        pairs.append((p // g, q // g))
    ok = True
    for p, q in pairs:
        f = farey.ReducedFraction(p, q)
        left, right = farey.farey_parents(f)
        if farey.mediant(left, right) != f:
            ok = False
            break
    out.append(_result("farey", "mediant_of_parents_identity", ok, f"{len(pairs)} labels"))

    ok = True
    for kind in (farey.ORDINARY, farey.GENERALIZED):
        for node in farey.generate_tree(kind, 8):
            if not node.triple.satisfies_equation():
                ok = False
            for pos in (1, 2, 3):
                stepped = farey.vieta_step(node.triple, pos)
                if not stepped.satisfies_equation():
                    ok = False
                if farey.vieta_step(stepped, pos).entries != node.triple.entries:
                    ok = False
    out.append(_result("farey", "tree_equations_and_involution", ok))

    nodes = farey.generate_tree(farey.GENERALIZED, 8)
    values = farey.tree_value_at(nodes)
    ok = all(
        markov.gen_markov(label).value == value for label, value in values.items()
    )
    out.append(_result("farey", "tree_matches_sign_word_values", ok, f"{len(values)} labels"))
    return out


def verify_signseq(seed: int = DEFAULT_SEED) -> list[CheckResult]:
    out = []
    labels = [(p, q) for q in range(2, 61) for p in range(1, q) if gcd(p, q) == 1 and p + q <= 60]
    labels.append((1, 1))

    ok = True
    for p, q in labels:
        if p >= q:
            continue
        geo = signseq.sign_sequence(p, q)
        closed = signseq.sign_sequence_closed_form(p, q)
        if geo.signs != closed.signs:
            ok = False
            break
    out.append(_result("signseq", "closed_form_matches_geometry", ok, f"{len(labels)} labels"))

    ok = all(
        signseq.antisymmetric_within(signseq.sign_sequence(p, q)) for p, q in labels
    )
    out.append(_result("signseq", "antisymmetry_within_word", ok))

    ok = True
    for p, q in labels:
        if p == q:
            continue
        a = signseq.sign_sequence(p, q)
        b = signseq.sign_sequence(q, p)
        if not signseq.opposite_orientations(a, b):
            ok = False
            break
    out.append(_result("signseq", "orientation_antisymmetry", ok))

    ok = all(
        signseq.sign_sequence(p, q).signs[2] == "-" for p, q in labels if p < q
    )
    out.append(_result("signseq", "second_even_sign_is_minus", ok))

    ok = True
    for p, q in labels:
        plus = signseq.sign_sequence(p, q, signseq.MIDPOINT_PLUS).runs()
        minus = signseq.sign_sequence(p, q, signseq.MIDPOINT_MINUS).runs()
        if contfrac.continuant(plus) != contfrac.continuant(minus):
            ok = False
            break
    out.append(_result("signseq", "numerator_independent_of_midpoint", ok))

    ok = True
    for p, q in [(pp, qq) for qq in range(1, 20) for pp in range(1, qq + 1)
                 if gcd(pp, qq) == 1 and pp + qq <= 20]:
        for k in range(2, 6):
            left = signseq.deformed_runs(p, q, k, signseq.LEFT)
            right = signseq.deformed_runs(p, q, k, signseq.RIGHT)
            if contfrac.continuant(left) != contfrac.continuant(right):
                ok = False
    out.append(_result("signseq", "deformation_left_right_numerators_equal", ok))
    return out


def verify_snake(seed: int = DEFAULT_SEED) -> list[CheckResult]:
    rng = random.Random(seed + 2)
    out = []

    ok = True
    for _ in range(1000):
        e = _random_canonical_cf(rng)
        g = snakegraph.SnakeGraph.from_cf(e)
        if snakegraph.count_matchings(g) != contfrac.continuant(e):
            ok = False
            break
        if g.cf_entries() != e:
            ok = False
            break
    out.append(_result("snake", "matching_count_equals_numerator", ok, "1000 random words"))

    ok = True
    for _ in range(120):
        e = _random_canonical_cf(rng, max_len=6, max_entry=5)
        g = snakegraph.SnakeGraph.from_cf(e)
        if g.num_tiles > 24 or snakegraph.count_matchings(g) > 3000:
            continue
        if len(snakegraph.enumerate_matchings(g)) != snakegraph.count_matchings(g):
            ok = False
            break
    out.append(_result("snake", "enumeration_cardinality_matches_count", ok))

    def compositions(total, min_end):
        # all entry words with the given sum, boundary entries >= min_end
        def rec(remaining, parts):
            if remaining == 0:
                if parts and parts[-1] >= min_end:
                    yield tuple(parts)
                return
            for nxt in range(1, remaining + 1):
                if not parts and nxt < min_end:
                    continue
                parts.append(nxt)
                yield from rec(remaining - nxt, parts)
                parts.pop()

        yield from rec(total, [])

    ok = True
    checked = 0
    for total in range(2, 15):
        for e in compositions(total, 2):
            g = snakegraph.SnakeGraph.from_cf(e)
            if not snakegraph.dominant_parity_holds(g):
                ok = False
            checked += 1
    for _ in range(2000):
        e = _random_canonical_cf(rng, max_len=10)
        if sum(e) > 20:
            continue
        if not snakegraph.dominant_parity_holds(snakegraph.SnakeGraph.from_cf(e)):
            ok = False
        checked += 1
    out.append(_result("snake", "dominant_edge_parity_law", ok, f"{checked} graphs"))
    return out


def verify_band(seed: int = DEFAULT_SEED) -> list[CheckResult]:
    rng = random.Random(seed + 3)
    out = []

    ok = True
    for q in range(1, 13):
        for p in range(1, q + 1):
            if gcd(p, q) != 1:
                continue
            rec = markov.band_markov(farey.ReducedFraction(p, q))
            if rec.value != 6 * markov.gen_markov(farey.ReducedFraction(p, q)).value - 1:
                ok = False
    out.append(_result("band", "band_count_is_6m_minus_1", ok, "all coprime p <= q <= 12"))

    ok = True
    for _ in range(250):
        e = _random_canonical_cf(rng, max_len=6, max_entry=5)
        g = snakegraph.SnakeGraph.from_cf(e)
        if g.num_tiles > 24 or snakegraph.count_matchings(g) > 3000:
            continue
        for glue in (snakegraph.DOMINANT, snakegraph.NONDOMINANT):
            band = snakegraph.build_band(g, glue)
            if snakegraph.count_good_bruteforce(band) != snakegraph.count_good_formula(e, glue):
                ok = False
    out.append(_result("band", "good_matching_formula_vs_bruteforce", ok))
    return out


def verify_markov(seed: int = DEFAULT_SEED, tree_depth: int = 12) -> list[CheckResult]:
    out = []

    nodes = farey.generate_tree(farey.GENERALIZED, tree_depth)
    ok = all(n.triple.satisfies_equation() for n in nodes)
    ok = ok and all(
        farey.vieta_step(farey.vieta_step(n.triple, pos), pos).entries == n.triple.entries
        for n in nodes
        for pos in (1, 2, 3)
    )
    onodes = farey.generate_tree(farey.ORDINARY, tree_depth)
    ok = ok and all(n.triple.satisfies_equation() for n in onodes)
    out.append(_result("markov", f"tree_equations_depth_{tree_depth}", ok, f"{len(nodes)} nodes/kind"))

    values = farey.tree_value_at(nodes)
    ok = all(markov.gen_markov(lab).value == val for lab, val in values.items())
    out.append(_result("markov", f"tree_alignment_depth_{tree_depth}", ok, f"{len(values)} labels"))

    ovalues = farey.tree_value_at(onodes)
    ok = all(markov.ord_markov(lab).value == val for lab, val in ovalues.items())
    out.append(_result("markov", "ordinary_tree_alignment", ok))

    ok = True
    for q, p in [(1, 1), (2, 1), (3, 1), (3, 2), (5, 2), (7, 3)]:
        m = markov.gen_markov(farey.ReducedFraction(p, q)).value
        band = 6 * m - 1
        prev, cur = 0, m
        for k in range(1, 51):
            if k > 1:
                prev, cur = cur, band * cur - prev
            if markov.chebyshev_U(k - 1, band) * m != cur:
                ok = False
    out.append(_result("markov", "recurrence_equals_chebyshev_k_50", ok))

    ok = True
    for q in range(1, 12):
        for p in range(1, q + 1):
            if gcd(p, q) != 1 or p + q > 12:
                continue
            for k in range(2, 5):
                rec = markov.extended_markov(q, p, k)
                if not rec.consistent:
                    ok = False
    out.append(_result("markov", "extended_matches_rewrite_numerators", ok))

    ok = True
    for family in markov.FAMILY_SEEDS:
        values_list = markov.family_recurrence(family, 30)
        labels = markov.family_labels(family, 30)
        for val, lab in zip(values_list, labels):
            if markov.gen_markov(lab).value != val:
                ok = False
    out.append(_result("markov", "families_match_sign_words_30_terms", ok))

    ok = True
    failures = []
    for q in range(2, 41):
        for p in range(1, q):
            if gcd(p, q) != 1:
                continue
            rep = markov.structure_report(farey.ReducedFraction(p, q))
            if not rep.all_pass:
                ok = False
                failures.append((p, q, rep.failures))
    out.append(
        _result("markov", "structure_claims_p_q_le_40", ok, str(failures[:3]) if failures else "")
    )

    dups = farey.duplicate_max_scan(farey.GENERALIZED, 12)
    out.append(
        _result(
            "markov",
            "duplicate_max_scan_depth_12",
            True,
            "no duplicate maxima" if not dups else f"duplicates: {dups}",
        )
    )
    return out


def verify_limits(seed: int = DEFAULT_SEED) -> list[CheckResult]:
    out = []

    ok = True
    for z1, z2, r in [(1, 3, 1), (5, 3, 1), (1, 1, 1), (2, 7, 1), (3, 4, 1)]:
        pl = limits.periodic_limit(z1, z2, r)
        if not pl.converged or pl.selected is None:
            ok = False
            continue
        val = float(pl.selected)
        residual = r * z2 * val * val + (1 - r * (1 + z1 * z2)) * val - z1
        if abs(residual) > 1e-9:
            ok = False
    out.append(_result("limits", "selected_root_satisfies_quadratic", ok))

    ok = True
    for family, target in (
        ("one_over_q", (5 + sqrt(21)) / 2),
        ("q_minus_1_over_q", (17 + sqrt(285)) / 2),
    ):
        rep = limits.family_limit(family, 60)
        if abs(float(rep.surd) - target) > 1e-12:
            ok = False
        errs = [e for _, _, e in rep.rows]
        for prev, cur in zip(errs, errs[1:]):
            if prev > 1e-12 and cur > 1e-12 and cur / prev > 0.9:
                ok = False
        if rep.identity_ok is False:
            ok = False
    out.append(_result("limits", "family_errors_decay_geometrically", ok))

    rep = limits.family_limit("one_over_q", 10)
    shift = limits.chi_limit(limits.LaurentPoint(1, 1, 1), limits.RATIO_SHIFT)
    out.append(
        _result(
            "limits",
            "cross_family_consistency",
            abs(float(rep.surd) - shift) < 1e-12,
        )
    )

    ok = True
    for coords in [(1, 1, 1), (1, 2, 3), (0.7, 1.9, 2.3), (3, 1, 2)]:
        pt = limits.LaurentPoint(*coords)
        for variant, part in ((limits.UNPRIMED, limits.RATIO_HAT), (limits.PRIMED, limits.RATIO_SHIFT)):
            target = limits.chi_limit(pt, part)
            truncs = [limits.L_truncation(pt, n, variant) for n in range(2, 26)]
            if abs(limits.L_truncation(pt, 40, variant) - target) > 1e-8:
                ok = False
            below = [t for t in truncs if t < target - 1e-12]
            above = [t for t in truncs if t > target + 1e-12]
            for seq in (below, above):
                for a, b in zip(seq, seq[1:]):
                    if abs(b - target) > abs(a - target) + 1e-12:
                        ok = False
    out.append(_result("limits", "truncations_bracket_and_converge", ok))
    return out


SUITES = {
    "contfrac": verify_contfrac,
    "farey": verify_farey,
    "signseq": verify_signseq,
    "snake": verify_snake,
    "band": verify_band,
    "markov": verify_markov,
    "limits": verify_limits,
}


def run_suites(names: list[str], seed: int = DEFAULT_SEED) -> list[CheckResult]:
    results = []
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}")
        results.extend(SUITES[name](seed))
    return results
