"""Whole-pipeline checks on pseudo-random small groups (fixed seed).

The counting statements verified here are theorems for cyclic-defect
blocks, so they must hold for any valid input group; running them on
groups outside the shipped corpus guards the machinery itself.
"""

import json
import random

from blocktool.blocks import block_partition, defect_group, heights_and_height_zero
from blocktool.chartab import character_table
from blocktool.cyclicblocks import (
    analyze_cyclic_block,
    brauer_tree,
    derived_brauer_characters,
    unitriangular_labeling,
)
from blocktool.errors import CentralDefect, NotCyclicDefect
from blocktool.fileio import canonical_json, table_from_obj, table_to_obj
from blocktool.permcore import PermGroup, Permutation
from blocktool.verify import am_check, in_refinement_check
from blocktool.weights import baw_count_check


def random_groups(count=14, degree=6, seed=20240811):
    rng = random.Random(seed)
    out = []
    per_order = {}
    while len(out) < count:
        gens = []
        for _ in range(2):
            images = list(range(degree))
            rng.shuffle(images)
            g = Permutation(images)
            if rng.random() < 0.5:
                g = g ** rng.choice((2, 3))  # bias toward proper subgroups
            gens.append(g)
        G = PermGroup(degree, gens)
        if not 1 < G.order() <= 720:
            continue
        if per_order.get(G.order(), 0) >= 2:
            continue
        per_order[G.order()] = per_order.get(G.order(), 0) + 1
        out.append(G)
    return out


GROUPS = random_groups()


def test_tables_and_partitions_on_random_groups():
    for G in GROUPS:
        T = character_table(G)  # construction validates both orthogonalities
        assert sum(T.degree(i) ** 2 for i in range(T.k)) == G.order()
        for p in (2, 3, 5):
            if G.order() % p:
                continue
            part = block_partition(T, p)
            assert sum(b.size() for b in part) == T.k
            for B in part:
                D = defect_group(B)
                assert D.order == p ** B.defect
                heights, irr0 = heights_and_height_zero(B)
                assert irr0


def test_cyclic_block_theorems_on_random_groups():
    cyclic_seen = 0
    for G in GROUPS:
        T = character_table(G)
        for p in (2, 3, 5):
            if G.order() % p:
                continue
            for B in block_partition(T, p):
                if B.defect == 0:
                    ibr, count, ok = baw_count_check(B)
                    assert ok
                    continue
                try:
                    data = analyze_cyclic_block(B)
                except (NotCyclicDefect, CentralDefect):
                    continue
                cyclic_seen += 1
                D = defect_group(B)
                assert B.size() == data.e + (D.order - 1) // data.e
                tree = brauer_tree(B, data)
                dm = unitriangular_labeling(tree)
                derived_brauer_characters(B, dm)
                assert dm.cartan_determinant() == D.order
                count_g, count_l, ok = am_check(B)
                assert ok, (G, p, B)
                ok, _witness = in_refinement_check(B)
                assert ok, (G, p, B)
                ibr, wcount, ok = baw_count_check(B)
                assert ok and ibr == data.e, (G, p, B)
    assert cyclic_seen >= 5


def test_table_serialization_round_trip_on_random_groups():
    for G in GROUPS[:6]:
        T = character_table(G)
        obj = json.loads(canonical_json(table_to_obj(T)))
        T2 = table_from_obj(G, obj)
        assert T2.characters == T.characters
        assert canonical_json(table_to_obj(T2)) == canonical_json(table_to_obj(T))


def test_omega_values_are_integral_on_random_groups():
    from blocktool.blocks import central_character

    for G in GROUPS[:6]:
        T = character_table(G)
        for i in range(T.k):
            for j in range(T.k):
                assert central_character(T, i, j).is_integral()


def psl_2_11():
    g1 = Permutation.from_cycles(12, [(1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11)])
    images = [0] * 12
    images[11] = 0
    images[0] = 11
    for x in range(1, 11):
        images[x] = (-pow(x, -1, 11)) % 11
    return PermGroup(12, [g1, Permutation(images)])


def test_psl_2_11_scale():
    # order 660, exponent 330: exercises degree-10 reduction fields and a
    # five-edge tree; every counting statement must hold at both primes
    from blocktool.verify import full_group_report

    G = psl_2_11()
    assert G.order() == 660
    T = character_table(G)
    assert sorted(T.degrees) == [1, 5, 5, 10, 10, 11, 12, 12]
    B = block_partition(T, 11).principal_block()
    data = analyze_cyclic_block(B)
    assert data.e == 5 and data.multiplicity == 2
    tree = brauer_tree(B, data)
    assert len(tree.edges) == 5
    dm = unitriangular_labeling(tree)
    assert dm.cartan_determinant() == 11
    derived_brauer_characters(B, dm)
    for p in (11, 5):
        report = full_group_report(G, p, name="PSL(2,11)")
        assert report["overall"], p


def test_m11_at_p11_scale():
    # Mathieu group M11, order 7920: principal 11-block with e = 5, m = 2;
    # the whole counting suite must pass, and the derived Brauer degrees
    # come out as 1, 9, 10, 10, 16
    from blocktool.verify import full_group_report

    a = Permutation.from_cycles(11, [(1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11)])
    b = Permutation.from_cycles(11, [(3, 7, 11, 8), (4, 10, 5, 6)])
    G = PermGroup(11, [a, b])
    assert G.order() == 7920
    T = character_table(G)
    assert sorted(T.degrees) == [1, 10, 10, 10, 11, 16, 16, 44, 45, 55]
    report = full_group_report(G, 11, name="M11")
    assert report["overall"]
    principal = next(b for b in report["blocks"] if b["cyclic"])
    c = principal["cyclic"]
    assert c["e"] == 5 and c["multiplicity"] == 2
    assert sorted(c["tree"]["brauer_degrees"]) == [1, 9, 10, 10, 16]
    assert principal["checks"]["am"] == {"height_zero": 7, "local_height_zero": 7, "ok": True}
    assert principal["checks"]["baw"] == {"ibr": 5, "weights": 5, "ok": True}
    assert sum(1 for b in report["blocks"] if b["defect"] == 0) == 3
    # p = 5 has another cyclic principal block (e = 4) plus five defect-zero blocks
    report5 = full_group_report(G, 5, name="M11")
    assert report5["overall"]
    principal5 = next(b for b in report5["blocks"] if b["cyclic"])
    assert principal5["cyclic"]["e"] == 4 and principal5["cyclic"]["multiplicity"] == 1
    assert principal5["checks"]["am"]["height_zero"] == 5
