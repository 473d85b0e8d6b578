"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line with its timing.

Criterion 1 asks for strict associativity and unitality as data.  The required
composition rule (lexicographic pullback, but the other span's middle verbatim
when a pulled-back leg is an identity) is strictly unital, and the pure
lexicographic rule is strictly associative, but the two together are not: if t
has an identity right leg, (s o t) o u orders the triple pullback by
(c, u.left(f), f) and s o (t o u) by (c, f).  The test checks the criterion as
stated and stays red; the composites still agree up to isomorphism.

Criterion 2 asks for rank B_G(G/H, G/K) = |H\\G/K|.  The rank actually equals
the number of pairs (double coset HgK, conjugacy class of subgroups of
H ∩ gKg⁻¹), which is larger whenever some intersection is nontrivial (e.g.
C2 with H = K = C2 gives 2 against 1 double coset).  The test checks the
stated equation as written and stays red; the corrected count is checked
alongside it so the failure is confined to the stated formula.
"""

import itertools
import random
import time

import numpy as np
import pytest

import oracles
from builders import random_gset, random_span, replace_by_iso
from mackeypc.abgroups import AbGroup
from mackeypc.burnside import (burnside_ring, compose_elements, mark_hom, pi0_enrichment, ring_element,
                               span_to_element, table_of_marks)
from mackeypc.catalog import CLOSED_TRIPLES, PERMCATS, group, mixed_torsion_mackey, permcat
from mackeypc.closed import (check_curry, check_trilinear_eval, composition_bilinear, enumerate_lax_functors,
                             eval_bilinear, hom_permcat)
from mackeypc.groups import conjugacy_classes_of_subgroups, double_cosets
from mackeypc.gsets import class_orbit, disjoint_union, orbits, point_gset, stabilizer
from mackeypc.machine import kg_pi0, mackey_to_pcfunctor, suspension_pcfunctor
from mackeypc.mackey import burnside_mackey, constant_mackey, mackey_iso, span_action
from mackeypc.permcat import validate_lax, validate_multilinear, validate_permcat
from mackeypc.spans import canonicalize_span, compose_spans, identity_span, representative_span, transitive_span_basis

SEED = 20240917


def _report(n: int, title: str, ok: bool, elapsed: float, limit: float, detail: str = ""):
    within = elapsed < limit
    status = "PASS" if ok and within else "FAIL"
    extra = f"; {detail}" if detail else ""
    print(f"\nACCEPTANCE {n} {status}: {title} ({elapsed:.2f}s, limit {limit:.0f}s){extra}")
    assert ok, detail
    assert within, f"runtime {elapsed:.2f}s exceeds {limit}s"


def _same(s, t) -> bool:
    return s.left == t.left and s.right == t.right


def test_criterion_1_span_strictness():
    t0 = time.perf_counter()
    rng = random.Random(SEED)
    names = ["C2", "C3", "S3", "D4"]
    bad, shortcut, iso_ok = [], 0, True
    for trial in range(1000):
        g = group(names[trial % len(names)])
        a, b, c, d = (random_gset(g, rng) for _ in range(4))
        s, t, u = random_span(a, b, rng), random_span(b, c, rng), random_span(c, d, rng)
        if trial % 2:
            st_, tu = compose_spans(s, t), compose_spans(t, u)
            lhs, rhs = compose_spans(st_, u), compose_spans(s, tu)
            ok = _same(lhs, rhs)
            if not ok:
                iso_ok &= canonicalize_span(lhs) == canonicalize_span(rhs)
                shortcut += any(m.is_identity for m in (s.right, t.left, t.right, u.left, st_.right, tu.left))
        else:
            ok = _same(compose_spans(identity_span(a), s), s) and _same(compose_spans(s, identity_span(b)), s)
        if not ok:
            bad.append(trial)
    detail = (f"failing trials {bad[:5]} ({len(bad)} total, all associativity: {all(k % 2 for k in bad)}); "
              f"an identity-leg shortcut fires in {shortcut} of them; equal up to iso: {iso_ok}") if bad else ""
    _report(1, "span composition strictly associative and unital on 1000 samples", not bad,
            time.perf_counter() - t0, 60, detail)


def test_criterion_2_burnside_rank_formula():
    t0 = time.perf_counter()
    mismatches, corrected_ok, pairs = [], True, 0
    for name in ["C2", "C3", "S3", "D4", "Q8"]:
        g = group(name)
        classes = conjugacy_classes_of_subgroups(g)
        for ci, cj in itertools.product(classes, repeat=2):
            pairs += 1
            rank = len(transitive_span_basis(class_orbit(g, ci.index), class_orbit(g, cj.index)))
            dc = len(double_cosets(g, ci.representative, cj.representative))
            corrected = oracles.transitive_spans_over_orbits(g.elements, ci.representative.perms,
                                                             cj.representative.perms)
            corrected_ok &= rank == corrected
            if rank != dc:
                mismatches.append((name, ci.index, cj.index, rank, dc))
    detail = (f"{len(mismatches)} of {pairs} class pairs have rank != |H\\G/K|, first "
              f"{mismatches[0][0]} H{mismatches[0][1]},H{mismatches[0][2]}: rank {mismatches[0][3]} vs "
              f"{mismatches[0][4]} double cosets; rank matches the double-coset-and-subgroup-class count "
              f"on all pairs: {corrected_ok}") if mismatches else ""
    assert corrected_ok
    _report(2, "rank B_G(G/H, G/K) = |H\\G/K| as stated", not mismatches, time.perf_counter() - t0, 30, detail)


def test_criterion_3_marks():
    t0 = time.perf_counter()
    problems = []
    for name in ["C2", "C3", "S3", "D4", "Q8"]:
        g = group(name)
        m = table_of_marks(g)
        if round(abs(np.linalg.det(m.astype(float)))) == 0:
            problems.append((name, "singular marks"))
        ring = burnside_ring(g)
        n = ring.rank
        for i, j in itertools.product(range(n), repeat=2):
            ei, ej = np.eye(n, dtype=np.int64)[i], np.eye(n, dtype=np.int64)[j]
            prod = mark_hom(ring_element(g, ring.multiply(ei, ej)))
            if prod.tolist() != (m[i] * m[j]).tolist():
                problems.append((name, i, j))
    c2 = group("C2")
    square = burnside_ring(c2).multiply([1, 0], [1, 0]).tolist()
    if square != [2, 0]:
        problems.append(("C2", "[C2/e]^2", square))
    _report(3, "marks invertible, mark homomorphism multiplicative, [C2/e]^2 = 2[C2/e]", not problems,
            time.perf_counter() - t0, 30, f"problems {problems[:5]}" if problems else "")


def test_criterion_4_coherence():
    t0 = time.perf_counter()
    failures, reports = [], 0

    def record(rep):
        nonlocal reports
        reports += 1
        if not rep.ok:
            failures.append((rep.subject, rep.failures[0].axiom))

    cats = {name: permcat(name) for name in PERMCATS}
    for c in cats.values():
        record(validate_permcat(c))
    for a, b in itertools.product(cats, repeat=2):
        for f in enumerate_lax_functors(cats[a], cats[b]):
            record(validate_lax(f))
    for a, b, c in CLOSED_TRIPLES:
        ca, cb, cc = cats[a], cats[b], cats[c]
        record(validate_permcat(hom_permcat(ca, cb)))
        record(validate_multilinear(eval_bilinear(ca, cb)))
        record(validate_multilinear(composition_bilinear(ca, cb, cc)))
        record(check_trilinear_eval(ca, cb, cc))
        record(check_curry(ca, cb, cc))
    _report(4, f"coherence battery over the catalog ({reports} reports)", not failures,
            time.perf_counter() - t0, 120, f"failures {failures[:5]}" if failures else "")


def test_criterion_5_mackey_emergence():
    t0 = time.perf_counter()
    bad, count = [], 0
    for name in ["C2", "S3"]:
        g = group(name)
        n = len(conjugacy_classes_of_subgroups(g))
        orbs = [class_orbit(g, i) for i in range(n)]
        functors = {"burnside": burnside_mackey(point_gset(g)), "constant Z": constant_mackey(g, AbGroup.free(1))}
        for a, b, e in itertools.product(range(n), repeat=3):
            for kx in transitive_span_basis(orbs[a], orbs[b]):
                x = representative_span(orbs[a], orbs[b], kx)
                for ky in transitive_span_basis(orbs[b], orbs[e]):
                    y = representative_span(orbs[b], orbs[e], ky)
                    yx = compose_spans(x, y)
                    for label, m in functors.items():
                        count += 1
                        if not span_action(m, yx).equals(span_action(m, y).then(span_action(m, x))):
                            bad.append((name, label, a, b, e))
    _report(5, f"span action contravariantly functorial on {count} basis compositions", not bad,
            time.perf_counter() - t0, 60, f"failures {bad[:5]}" if bad else "")


def test_criterion_6_eilenberg_maclane():
    t0 = time.perf_counter()
    battery = []
    for name in ["C2", "S3"]:
        g = group(name)
        battery += [(name, "burnside", burnside_mackey(point_gset(g))),
                    (name, "constant Z", constant_mackey(g, AbGroup.free(1))),
                    (name, "constant Z/2", constant_mackey(g, AbGroup.cyclic(2)))]
    battery.append(("C2", "mixed torsion", mixed_torsion_mackey(group("C2"))))
    bad = [(n, label) for n, label, m in battery if mackey_iso(kg_pi0(mackey_to_pcfunctor(m)), m) is None]
    _report(6, f"pi0 round trip isomorphic on {len(battery)} Mackey functors", not bad,
            time.perf_counter() - t0, 60, f"no isomorphism for {bad}" if bad else "")


def test_criterion_7_suspension():
    t0 = time.perf_counter()
    bad, count = [], 0
    for name in ["C2", "S3"]:
        g = group(name)
        n = len(conjugacy_classes_of_subgroups(g))
        xs = [("pt", point_gset(g))] + [(f"G/H{i}", class_orbit(g, i)) for i in range(n)]
        xs += [(f"G/H{i} + G/H{j}", disjoint_union(class_orbit(g, i), class_orbit(g, j)))
               for i in range(n) for j in range(i, n)]
        for label, x in xs:
            count += 1
            if mackey_iso(kg_pi0(suspension_pcfunctor(x)), burnside_mackey(x)) is None:
                bad.append((name, label))
    _report(7, f"suspension input has the represented Burnside functor as pi0 ({count} G-sets)", not bad,
            time.perf_counter() - t0, 60, f"no isomorphism for {bad}" if bad else "")


def _oracle_rank(a, b) -> int:
    """Sum of transitive span counts over pairs of orbits, from the brute-force oracle."""
    g = a.group
    total = 0
    for oa in orbits(a):
        for ob in orbits(b):
            total += oracles.transitive_spans_over_orbits(g.elements, stabilizer(a, oa[0]).perms,
                                                          stabilizer(b, ob[0]).perms)
    return total


def test_criterion_8_change_of_enrichment():
    t0 = time.perf_counter()
    rng = random.Random(SEED + 8)
    bad = []
    for name in ["C2", "C3", "S3"]:
        g = group(name)
        n = len(conjugacy_classes_of_subgroups(g))
        sets = [point_gset(g)] + [class_orbit(g, i) for i in range(n)] + [disjoint_union(class_orbit(g, 0),
                                                                                        class_orbit(g, n - 1))]
        for a, b in itertools.product(sets, repeat=2):
            h = pi0_enrichment(a, b)
            if h.group.invariants() != AbGroup.free(_oracle_rank(a, b)).invariants():
                bad.append(("rank", name, a.n, b.n))
    names = ["C2", "C3", "S3", "D4"]
    for trial in range(200):
        g = group(names[trial % len(names)])
        a, b, e = (random_gset(g, rng) for _ in range(3))
        s, t = random_span(a, b, rng), random_span(b, e, rng)
        s2, t2 = replace_by_iso(s, rng), replace_by_iso(t, rng)
        c1, c2 = compose_spans(s, t), compose_spans(s2, t2)
        ok = canonicalize_span(c1) == canonicalize_span(c2) and \
            pi0_enrichment(a, e).project(c1) == pi0_enrichment(a, e).project(c2) and \
            compose_elements(span_to_element(t2), span_to_element(s2)) == span_to_element(c1)
        if not ok:
            bad.append(("descent", trial))
    _report(8, "pi0 hom groups free on transitive span classes; composition descends (200 samples)", not bad,
            time.perf_counter() - t0, 30, f"failures {bad[:5]}" if bad else "")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-s", "-q"]))
