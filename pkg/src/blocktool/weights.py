"""Weight enumeration: defect-zero characters of N_G(Q)/Q attached to blocks.

A weight for B is a pair (Q, chi-bar) with Q radical and chi-bar of defect
zero in N_G(Q)/Q, whose inflation to N_G(Q) lies in a block inducing to B.
Undefined inductions are reported per candidate, never silently dropped.
"""

from __future__ import annotations

from .arith import v_p
from .blocks import Block, BlockPartition, block_partition, defect_group, induced_block_from_subgroup
from .chartab import CharacterTable, character_table, inflate_row, quotient_class_map
from .cyclicblocks import inertial_index
from .errors import GroupTooLarge, InternalInconsistency, NotSupported
from .permcore import (
    DEFAULT_MAX_ORDER,
    PermGroup,
    SubgroupHandle,
    coset_action,
    is_cyclic,
    normalizer,
    radical_p_subgroups,
)


class Weight:
    """(radical subgroup, defect-zero character of N/Q, induced block)."""

    def __init__(self, radical_index: int, subgroup: SubgroupHandle, normalizer_order: int,
                 quotient_table: CharacterTable, char_index: int, induced_block: Block):
        self.radical_index = radical_index
        self.subgroup = subgroup
        self.normalizer_order = normalizer_order
        self.quotient_table = quotient_table
        self.char_index = char_index
        self.induced_block = induced_block

    @property
    def degree(self) -> int:
        return self.quotient_table.degree(self.char_index)

    def __repr__(self):
        return (f"<weight at |Q|={self.subgroup.order}: degree {self.degree}, "
                f"induces block {self.induced_block.index}>")


class _LocalData:
    """Per-radical-class quotient data, computed once per (G, p, star)."""

    def __init__(self, radical_index, Q, N, table_N, table_Q, qmap, local_partition):
        self.radical_index = radical_index
        self.Q = Q
        self.N = N
        self.table_N = table_N
        self.table_Q = table_Q
        self.qmap = qmap
        self.local_partition = local_partition


def _local_data(G: PermGroup, p: int, star, max_order=None):
    cache = getattr(G, "_weight_locals", None)
    if cache is None:
        cache = G._weight_locals = {}
    key = (p, star.m)
    if key in cache:
        return cache[key]
    bound = DEFAULT_MAX_ORDER if max_order is None else max_order
    out = []
    for r, Q in enumerate(radical_p_subgroups(G, p, max_order)):
        N = normalizer(G, Q)
        if N.order // Q.order > bound:
            raise GroupTooLarge(f"|N_G(Q)/Q| = {N.order // Q.order} exceeds the bound")
        TN = character_table(N.group, max_order)
        if Q.order == 1:
            TQ = TN
            qmap = tuple(range(TN.k))
        else:
            action = coset_action(N.group, SubgroupHandle(N.group, Q.generators))
            if action.kernel.order != Q.order:
                raise InternalInconsistency("radical subgroup is not the kernel of its coset action")
            TQ = character_table(action.image, max_order)
            qmap = quotient_class_map(action, TN, TQ)
        local_partition = block_partition(TN, p, star)
        out.append(_LocalData(r, Q, N, TN, TQ, qmap, local_partition))
    cache[key] = tuple(out)
    return cache[key]


def dz_characters(Q: SubgroupHandle, G: PermGroup, p: int, max_order=None):
    """Defect-zero characters of N_G(Q)/Q: (quotient table, char indices)."""
    N = normalizer(G, Q)
    bound = DEFAULT_MAX_ORDER if max_order is None else max_order
    if N.order // Q.order > bound:
        raise GroupTooLarge(f"|N_G(Q)/Q| = {N.order // Q.order} exceeds the bound")
    if Q.order == 1:
        TQ = character_table(N.group, max_order)
    else:
        action = coset_action(N.group, SubgroupHandle(N.group, Q.generators))
        TQ = character_table(action.image, max_order)
    full = v_p(TQ.order, p)
    indices = tuple(i for i in range(TQ.k) if v_p(TQ.degree(i), p) == full)
    return TQ, indices


def weights_of_block(B: Block, max_order=None):
    """All weights of B over a radical transversal, plus skip warnings."""
    G = B.table.group
    p, star = B.p, B.star
    weights = []
    warnings = []
    for local in _local_data(G, p, star, max_order):
        TQ = local.table_Q
        full = v_p(TQ.order, p)
        for i in range(TQ.k):
            if v_p(TQ.degree(i), p) != full:
                continue
            inflated = inflate_row(TQ.characters[i], local.qmap)
            lifted_index = local.table_N.row_index(inflated)
            Bprime = local.local_partition.block_of_character(lifted_index)
            induced = induced_block_from_subgroup(local.N, Bprime, B.partition)
            if induced is None:
                warnings.append(
                    f"radical class {local.radical_index}: induction of the block of "
                    f"defect-zero character {i} (degree {TQ.degree(i)}) is undefined; skipped")
                continue
            if induced is B:
                weights.append(Weight(local.radical_index, local.Q, local.N.order,
                                      TQ, i, induced))
    return weights, warnings


def baw_count_check(B: Block, max_order=None):
    """(|IBr(B)|, weight count, equal?) for cyclic or defect-zero blocks."""
    if B.defect == 0:
        ibr = 1
    else:
        D = defect_group(B)
        if not is_cyclic(D):
            raise NotSupported(
                "weight counting against |IBr| supports cyclic-defect and defect-zero blocks only")
        ibr, _b0, _t = inertial_index(B)
    weights, _warnings = weights_of_block(B, max_order)
    return ibr, len(weights), ibr == len(weights)


def radical_class_report(G: PermGroup, p: int, partition: BlockPartition, max_order=None):
    """JSON-able weight overview: one entry per radical class."""
    out = []
    for local in _local_data(G, p, partition.star, max_order):
        TQ = local.table_Q
        full = v_p(TQ.order, p)
        chars = []
        for i in range(TQ.k):
            if v_p(TQ.degree(i), p) != full:
                continue
            inflated = inflate_row(TQ.characters[i], local.qmap)
            Bprime = local.local_partition.block_of_character(local.table_N.row_index(inflated))
            induced = induced_block_from_subgroup(local.N, Bprime, partition)
            chars.append({
                "degree": TQ.degree(i),
                "induced_block": None if induced is None else induced.index,
            })
        out.append({
            "radical_class": local.radical_index,
            "order": local.Q.order,
            "generators": [g.one_based() for g in local.Q.generators],
            "normalizer_quotient_order": TQ.order if local.Q.order > 1 else local.N.order,
            "defect_zero_characters": chars,
        })
    return out
