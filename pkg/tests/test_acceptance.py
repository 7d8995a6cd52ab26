"""Acceptance suite: ten criteria, one test each, all exact.

Criteria 1-7 replay the bundled scenarios and pin their headline values
and runtime budgets; 8-10 are property suites (route agreement on
randomized representations, character-table validity, face-test
soundness against a brute-force oracle).
"""

import itertools
import random
from fractions import Fraction

from oracles import brute_force_faces
from permpoly.characters import (
    character_table,
    constituents,
    stably_equivalent_by_characters,
)
from permpoly.cyclotomic import cyclo_rational
from permpoly.groups import FiniteGroup, generator_correspondence, isomorphisms
from permpoly.reps import (
    NotFaithfulError,
    PermRep,
    compose_with_map,
    stably_equivalent_by_kernel,
)
from permpoly.scenarios import (
    alt6_reps,
    klein_volume_reps,
    main_example_reps,
    run_scenario,
    z4_family_reps,
)


def run_within(name, budget_seconds):
    report = run_scenario(name)
    failing = [c.name for c in report.checks if not c.passed]
    assert report.passed, "%s failed checks: %s" % (name, failing)
    assert report.elapsed_ms is not None
    assert report.elapsed_ms < budget_seconds * 1000, \
        "%s took %d ms (budget %d s)" % (name, report.elapsed_ms, budget_seconds)
    return {c.name: c for c in report.checks}


def test_criterion_01_intro_pair():
    checks = run_within("intro-pair", 1)
    assert checks["isomorphism-count"].computed == 6
    assert checks["dims"].computed == (2, 3)
    assert checks["stable-under-each-isomorphism"].computed == [False] * 6
    assert checks["effective-witness"].computed is None


def test_criterion_02_z4_family():
    checks = run_within("z4-family", 1)
    assert checks["vertex-counts"].computed == [4] * 5
    assert checks["dims"].computed == [3] * 5
    pairs = {name.rsplit("-", 2)[0] for name in checks
             if name.startswith("pair-")}
    assert len(pairs) == 10
    for pair in pairs:
        assert checks[pair + "-witness-valid"].computed is True
        assert checks[pair + "-vertex-bijection"].computed == [0, 1, 2, 3]


def test_criterion_03_klein_volume():
    checks = run_within("klein-volume", 1)
    assert checks["index-regular"].computed == 1
    assert checks["index-degree6"].computed == 2
    assert checks["volume-regular"].computed == Fraction(1, 6)
    assert checks["volume-degree6"].computed == Fraction(2, 6)
    assert checks["half-sum-membership"].computed == (True, True, True, False)
    assert checks["stable-by-kernel"].computed is True
    assert checks["stable-by-characters"].computed is True


def test_criterion_04_a6_almost():
    checks = run_within("a6-almost", 600)
    assert checks["equal-vertex-sets"].computed is True
    assert checks["vertex-count"].computed == 360
    assert checks["stable-by-kernel"].computed is False
    assert checks["effective-witness-found"].computed is True
    assert checks["witness-verifies"].computed is True


def test_criterion_05_main_example():
    checks = run_within("main-example", 300)
    assert checks["vertex-counts"].computed == (48, 48)
    assert checks["dims"].computed == (14, 14)
    assert checks["max-constituent-orders"].computed == (12, 6)
    assert checks["shapes"].computed == ("product(3, 11)", "product(3, 11)")
    assert checks["automorphism-count"].computed == 384
    assert checks["automorphisms-closed-under-composition"].computed is True
    assert checks["effective-witness"].computed is None


def test_criterion_06_face_census():
    checks = run_within("face-census", 300)
    assert checks["order-24-subgroup-count"].computed == 7
    assert checks["face-counts"].computed == (4, 4)
    assert checks["face-dims-first"].computed == (8, 12, 12, 12)
    assert checks["face-dims-second"].computed == (8, 8, 8, 12)


def test_criterion_07_isotype_suite():
    checks = run_within("isotype-suite", 120)
    for name, check in checks.items():
        if name.endswith("-identities"):
            assert check.computed is True, name
    assert checks["q8-quarter-fraction"].computed == Fraction(1, 4)


# criterion 8: the two equivalence routes agree on every scenario pair and
# on randomized coset-action sums of groups of order <= 24

POOL_SPECS = [
    (["(1 2 3 4)"], 4),
    (["(1 2)", "(3 4)"], 4),
    (["(1 2 3 4 5 6)"], 6),
    (["(1 2)", "(1 2 3)"], 3),
    (["(1 2 3 4 5 6 7 8)"], 8),
    (["(1 2)", "(3 4 5 6)"], 6),
    (["(1 2 3 4)", "(1 3)"], 4),
    (["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"], 8),
    (["(1 2 3)", "(2 3 4)"], 4),
    (["(1 2 3 4 5 6)", "(2 6)(3 5)"], 6),
    (["(1 2)", "(1 2 3 4)"], 4),
]


def all_subgroups(group):
    subs = []
    for k in range(1, group.order + 1):
        if group.order % k == 0:
            subs.extend(group.subgroups_of_order(k))
    return subs


def random_coset_sum(rng, group, subs):
    while True:
        chosen = [rng.choice(subs) for _ in range(rng.randint(1, 3))]
        if sum(group.order // s.order for s in chosen) > 30:
            continue
        try:
            return PermRep.from_coset_actions(
                group, [group.coset_action(s) for s in chosen])
        except NotFaithfulError:
            continue


def routes_agree(repA, repB, table):
    a = stably_equivalent_by_kernel(repA, repB)
    b = stably_equivalent_by_characters(repA, repB, table)
    assert a == b, "route disagreement: kernel %s, characters %s" % (a, b)


def test_criterion_08_route_agreement():
    pairs = []
    g_klein, kv1, kv2 = klein_volume_reps()
    pairs.append((kv1, kv2))
    g_main, m1, m2 = main_example_reps()
    pairs.append((m1, m2))
    g6, _, _, _, a6r1, a6r2 = alt6_reps()
    pairs.append((a6r1, a6r2))
    g1 = FiniteGroup.from_cycle_strings(["(1 2)", "(3 4)"], 4)
    g2 = FiniteGroup.from_cycle_strings(["(1 2)(3 4)", "(1 3)(2 4)"], 4)
    nat1, nat2 = PermRep.natural(g1), PermRep.natural(g2)
    for phi in isomorphisms(g1, g2):
        pairs.append((nat1, compose_with_map(nat2, phi)))
    family = z4_family_reps()
    base = family[0]
    for other in family[1:]:
        corr = generator_correspondence(base.group, other.group)
        pairs.append((base, compose_with_map(other, corr)))
    for repA, repB in pairs:
        routes_agree(repA, repB, character_table(repA.group))

    rng = random.Random(20240811)
    pool = []
    for gens, degree in POOL_SPECS:
        group = FiniteGroup.from_cycle_strings(gens, degree)
        assert group.order <= 24
        pool.append((group, all_subgroups(group)))
    for _ in range(50):
        group, subs = pool[rng.randrange(len(pool))]
        repA = random_coset_sum(rng, group, subs)
        repB = random_coset_sum(rng, group, subs)
        routes_agree(repA, repB, character_table(group))


# criterion 9: character-table validity on both construction routes


def assert_orthogonality(table):
    n = table.group.order
    m = table.conductor
    r = table.count
    for i in range(r):
        for k in range(r):
            s = cyclo_rational(m, 0)
            for j, size in enumerate(table.sizes):
                s = s + size * (table.values[i][j]
                                * table.values[k][table.inverse_class[j]])
            assert s == (n if i == k else 0)
    for j in range(r):
        for l in range(r):
            s = cyclo_rational(m, 0)
            for i in range(r):
                s = s + (table.values[i][j]
                         * table.values[i][table.inverse_class[l]])
            assert s == (n // table.sizes[j] if j == l else 0)
    assert sum(d * d for d in table.degrees) == n


def test_criterion_09_character_table_validity():
    abelian = [
        (["(1 2)", "(3 4)"], 4),
        (["(1 2 3 4)"], 4),
        (["(1 2 3 4 5 6)"], 6),
        (["(1 2)", "(3 4 5 6)"], 6),
        (["(1 2 3 4 5 6 7 8 9 10 11 12)"], 12),
    ]
    for gens, degree in abelian:
        table = character_table(FiniteGroup.from_cycle_strings(gens, degree))
        assert table.route == "cyclic-chain"
        assert_orthogonality(table)
    dixon = [
        (["(1 2)", "(1 2 3)"], 3),
        (["(1 2 3 4 5)", "(3 4 5)"], 5),
        (["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"], 8),
    ]
    for gens, degree in dixon:
        table = character_table(FiniteGroup.from_cycle_strings(gens, degree))
        assert table.route == "class-matrix"
        assert_orthogonality(table)

    g6, _, _, _, rep1, rep2 = alt6_reps()
    table = character_table(g6)
    assert table.route == "class-matrix"
    assert_orthogonality(table)
    assert table.count == 7
    found = []
    for rep in (rep1, rep2):
        assert rep.degree == 6
        cons = constituents(rep, table)
        assert cons.multiplicities[0] == 1
        nontrivial = sorted(cons.nontrivial)
        assert len(nontrivial) == 1
        (i,) = nontrivial
        assert cons.multiplicities[i] == 1
        assert table.degrees[i] == 5
        found.append(i)
    assert found[0] != found[1]


def test_criterion_10_face_test_soundness(small_polytopes):
    from permpoly.polytopes import is_face
    for poly in small_polytopes:
        assert poly.dim <= 4
        expected = brute_force_faces(poly)
        n = poly.vertex_count
        for size in range(1, n + 1):
            for subset in itertools.combinations(range(n), size):
                assert is_face(poly, subset).is_face == \
                    (frozenset(subset) in expected), \
                    "face disagreement on %r of %r" % (subset, poly)
