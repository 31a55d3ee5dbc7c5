"""Permutation-group engine.

Groups act on {1..n} in all I/O; internally points are 0-based. The engine
is deliberately enumeration-friendly: orders and membership come from a
deterministic Schreier-Sims stabilizer chain, while conjugacy classes,
centralizers, normalizers and subgroup conjugacy fall back to exact
element-list searches guarded by a configurable order bound. Correctness
over asymptotics, desk scale.
"""

from __future__ import annotations

import itertools
from math import lcm

from .arith import v_p
from .errors import GroupTooLarge, InternalInconsistency, NotAMember, NotASubgroup

#: Default cap on |G| for operations that enumerate the whole group.
DEFAULT_MAX_ORDER = 200_000

#: Absolute cap for element enumeration regardless of caller overrides.
_HARD_ELEMENT_CAP = 5_000_000


class Permutation:
    """An immutable permutation of {0..n-1} stored as its image tuple."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        if sorted(images) != list(range(n)):
            raise ValueError(f"not a permutation of 0..{n - 1}: {images!r}")
        object.__setattr__(self, "images", images)

    @classmethod
    def _unsafe(cls, images: tuple) -> "Permutation":
        """Trusted constructor: images must already be a bijection tuple."""
        self = object.__new__(cls)
        object.__setattr__(self, "images", images)
        return self

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation._unsafe(tuple(range(n)))

    @classmethod
    def from_one_based(cls, images) -> "Permutation":
        return cls(i - 1 for i in images)

    @classmethod
    def from_cycles(cls, degree: int, cycles, base: int = 1) -> "Permutation":
        """Build from disjoint cycles given in `base`-based points."""
        images = list(range(degree))
        for cycle in cycles:
            pts = [c - base for c in cycle]
            for a, b in zip(pts, pts[1:]):
                images[a] = b
            if pts:
                images[pts[-1]] = pts[0]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def one_based(self) -> list[int]:
        return [i + 1 for i in self.images]

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # apply self first, then other; closed on bijections, no revalidation
        o = other.images
        return Permutation._unsafe(tuple(o[i] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation._unsafe(tuple(inv))

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        out = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugated_by(self, g: "Permutation") -> "Permutation":
        """g^-1 * self * g."""
        return g.inverse() * self * g

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[list[int]]:
        """Nontrivial cycles, 0-based, each starting at its least point."""
        seen = set()
        out = []
        for i in range(self.degree):
            if i in seen or self.images[i] == i:
                continue
            cyc = [i]
            j = self.images[i]
            while j != i:
                seen.add(j)
                cyc.append(j)
                j = self.images[j]
            out.append(cyc)
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """All cycle lengths including fixed points, descending."""
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * (self.degree - sum(lengths))
        return tuple(sorted(lengths, reverse=True))

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other):
        return self.images < other.images

    def __repr__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cyc)


class PermGroup:
    """A permutation group given by generators on {0..n-1} (internal)."""

    def __init__(self, degree: int, generators):
        self.degree = degree
        gens = []
        seen = set()
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(g)
            if g.degree != degree:
                raise ValueError("generator degree mismatch")
            if g.is_identity() or g.images in seen:
                continue
            seen.add(g.images)
            gens.append(g)
        self.generators = tuple(sorted(gens))
        self._chain = None
        self._order = None
        self._elements = None
        self._element_set = None
        self._classes = None
        self._class_of = None

    # -- stabilizer chain -------------------------------------------------

    def _build_chain(self):
        """Deterministic Schreier-Sims; levels are (base point, transversal, gens)."""
        levels = []

        def extend(level_gens, depth):
            if not level_gens:
                return
            base = min(min(i for i, j in enumerate(g.images) if i != j) for g in level_gens)
            orbit = {base: Permutation.identity(self.degree)}
            queue = [base]
            while queue:
                pt = queue.pop(0)
                for g in level_gens:
                    img = g(pt)
                    if img not in orbit:
                        orbit[img] = orbit[pt] * g
                        queue.append(img)
            levels.append((base, orbit, list(level_gens)))
            # Schreier generators for the stabilizer of `base`
            stab_gens = []
            stab_seen = set()
            for pt in sorted(orbit):
                for g in level_gens:
                    s = orbit[pt] * g * orbit[g(pt)].inverse()
                    if not s.is_identity() and s.images not in stab_seen:
                        stab_seen.add(s.images)
                        stab_gens.append(s)
            # sift against nothing (fresh level); recurse
            extend(stab_gens, depth + 1)

        extend(list(self.generators), 0)
        self._chain = levels

    @property
    def chain(self):
        if self._chain is None:
            self._build_chain()
        return self._chain

    def order(self) -> int:
        if self._order is None:
            n = 1
            for _base, orbit, _gens in self.chain:
                n *= len(orbit)
            self._order = n
        return self._order

    def __contains__(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            return False
        for base, orbit, _gens in self.chain:
            img = p(base)
            if img not in orbit:
                return False
            p = p * orbit[img].inverse()
        return p.is_identity()

    def is_trivial(self) -> bool:
        return self.order() == 1

    # -- enumeration ------------------------------------------------------

    def elements(self) -> tuple[Permutation, ...]:
        """All elements, sorted by image tuple (canonical order)."""
        if self._elements is None:
            if self.order() > _HARD_ELEMENT_CAP:
                raise GroupTooLarge(f"group of order {self.order()} too large to enumerate")
            found = {Permutation.identity(self.degree).images}
            queue = [Permutation.identity(self.degree)]
            elements = [queue[0]]
            while queue:
                x = queue.pop(0)
                for g in self.generators:
                    y = x * g
                    if y.images not in found:
                        found.add(y.images)
                        elements.append(y)
                        queue.append(y)
            if len(elements) != self.order():
                raise InternalInconsistency("element enumeration disagrees with chain order")
            self._elements = tuple(sorted(elements))
            self._element_set = frozenset(found)
        return self._elements

    def element_set(self) -> frozenset:
        if self._element_set is None:
            self.elements()
        return self._element_set

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, gens={list(self.generators)!r})"


class SubgroupHandle:
    """A subgroup of an ambient group, given by generators inside it."""

    def __init__(self, ambient: PermGroup, generators, check: bool = True):
        self.ambient = ambient
        self.group = PermGroup(ambient.degree, generators)
        if check:
            for g in self.group.generators:
                if g not in ambient:
                    raise NotASubgroup(f"generator {g!r} lies outside the ambient group")
        if self.order and self.ambient.order() % self.order != 0:
            raise InternalInconsistency("Lagrange check failed")

    @property
    def generators(self) -> tuple[Permutation, ...]:
        return self.group.generators

    @property
    def order(self) -> int:
        return self.group.order()

    def elements(self) -> tuple[Permutation, ...]:
        return self.group.elements()

    def element_set(self) -> frozenset:
        return self.group.element_set()

    def contains_subgroup(self, other: "SubgroupHandle") -> bool:
        return all(g in self.group for g in other.generators)

    def canonical_key(self) -> tuple:
        """Element-set fingerprint; equal iff equal as subgroups."""
        return tuple(sorted(self.element_set()))

    def __repr__(self):
        return f"<subgroup of order {self.order}: {list(self.generators)!r}>"


def trivial_subgroup(G: PermGroup) -> SubgroupHandle:
    return SubgroupHandle(G, [], check=False)


def full_subgroup(G: PermGroup) -> SubgroupHandle:
    return SubgroupHandle(G, G.generators, check=False)


def subgroup_from_elements(G: PermGroup, elements) -> SubgroupHandle:
    """Subgroup handle with a reduced generating set drawn from `elements`."""
    gens: list[Permutation] = []
    H = PermGroup(G.degree, [])
    for x in sorted(elements):
        if isinstance(x, tuple):
            x = Permutation(x)
        if x.is_identity() or x in H:
            continue
        gens.append(x)
        H = PermGroup(G.degree, gens)
    return SubgroupHandle(G, gens, check=False)


# -- orders, classes ------------------------------------------------------


def group_order(G: PermGroup) -> int:
    """Exact order via the stabilizer chain."""
    return G.order()


class ConjugacyClass:
    """One conjugacy class; representative is the lex-least member."""

    __slots__ = ("representative", "size", "element_order", "index")

    def __init__(self, representative: Permutation, size: int, element_order: int, index: int):
        self.representative = representative
        self.size = size
        self.element_order = element_order
        self.index = index

    def __repr__(self):
        return f"<class {self.index}: rep {self.representative!r}, size {self.size}, order {self.element_order}>"


def _check_order(G: PermGroup, max_order):
    bound = DEFAULT_MAX_ORDER if max_order is None else max_order
    if G.order() > bound:
        raise GroupTooLarge(f"|G| = {G.order()} exceeds the bound {bound}")


def conjugacy_classes(G: PermGroup, max_order=None) -> tuple[ConjugacyClass, ...]:
    """Complete class list in canonical order.

    Canonical order: (element order, class size, lex-least representative
    image tuple). Computed by orbit partition of the full element list.
    """
    if G._classes is not None:
        return G._classes
    _check_order(G, max_order)
    els = G.elements()
    assigned: dict[tuple, int] = {}
    raw_classes: list[list[Permutation]] = []
    gens = G.generators
    for x in els:
        if x.images in assigned:
            continue
        members = [x]
        assigned[x.images] = len(raw_classes)
        queue = [x]
        while queue:
            y = queue.pop(0)
            for g in gens:
                z = y.conjugated_by(g)
                if z.images not in assigned:
                    assigned[z.images] = len(raw_classes)
                    members.append(z)
                    queue.append(z)
        raw_classes.append(members)
    keyed = []
    for members in raw_classes:
        rep = min(members)
        keyed.append((rep.order(), len(members), rep.images, members, rep))
    keyed.sort(key=lambda t: (t[0], t[1], t[2]))
    classes = []
    class_of = {}
    members_by_index = []
    for idx, (order, size, _img, members, rep) in enumerate(keyed):
        classes.append(ConjugacyClass(rep, size, order, idx))
        members_by_index.append(tuple(sorted(members)))
        for m in members:
            class_of[m.images] = idx
    if sum(c.size for c in classes) != G.order():
        raise InternalInconsistency("class sizes do not sum to |G|")
    G._classes = tuple(classes)
    G._class_of = class_of
    G._class_members = members_by_index
    return G._classes


def class_of(G: PermGroup, x: Permutation) -> int:
    """Index of the class of x in canonical order."""
    conjugacy_classes(G)
    try:
        return G._class_of[x.images]
    except KeyError:
        raise NotAMember(f"{x!r} is not an element of the group") from None


def class_members(G: PermGroup, index: int) -> tuple[Permutation, ...]:
    conjugacy_classes(G)
    return G._class_members[index]


# -- centralizer / normalizer / Sylow ------------------------------------


def centralizer(G: PermGroup, x: Permutation) -> SubgroupHandle:
    """Exact centralizer of an element, by direct search."""
    if x not in G:
        raise NotAMember(f"{x!r} is not in the group")
    members = [g for g in G.elements() if g * x == x * g]
    return subgroup_from_elements(G, members)


def centralizer_subgroup(G: PermGroup, Q: SubgroupHandle) -> SubgroupHandle:
    """Pointwise centralizer of a subgroup."""
    gens = Q.generators
    if not gens:
        return full_subgroup(G)
    members = [g for g in G.elements() if all(g * s == s * g for s in gens)]
    return subgroup_from_elements(G, members)


def normalizer(G: PermGroup, Q: SubgroupHandle) -> SubgroupHandle:
    """Exact normalizer of a subgroup, by direct search."""
    for g in Q.generators:
        if g not in G:
            raise NotASubgroup("subgroup does not lie in the ambient group")
    qset = Q.element_set()
    gens = Q.generators
    members = []
    for g in G.elements():
        ginv = g.inverse()
        if all((ginv * s * g).images in qset for s in gens):
            members.append(g)
    return subgroup_from_elements(G, members)


def sylow_subgroup(G: PermGroup, p: int) -> SubgroupHandle:
    """A Sylow p-subgroup, grown by the normalizer climb.

    A proper p-subgroup is never self-normalizing inside a Sylow group, so
    some p-element outside S normalizes S; adjoining it keeps a p-group.
    """
    target = v_p(G.order(), p)
    S = trivial_subgroup(G)
    while v_p(S.order, p) < target or S.order != p ** v_p(S.order, p):
        N = normalizer(G, S)
        sset = S.element_set()
        grown = False
        for x in N.elements():
            o = x.order()
            if o == 1 or x.images in sset:
                continue
            if o == p ** v_p(o, p):
                S = SubgroupHandle(G, list(S.generators) + [x], check=False)
                grown = True
                break
        if not grown:
            raise InternalInconsistency("Sylow climb stalled")
    if S.order != p ** target:
        raise InternalInconsistency("Sylow subgroup has wrong order")
    return S


def p_core(H: SubgroupHandle, p: int) -> SubgroupHandle:
    """O_p(H): the core of a Sylow p-subgroup of H."""
    Hg = H.group
    S = sylow_subgroup(Hg, p)
    if S.order == 1:
        return SubgroupHandle(H.ambient, [], check=False)
    sset = S.element_set()
    members = []
    for x in S.elements():
        if all((g.inverse() * x * g).images in sset for g in Hg.elements()):
            members.append(x)
    return subgroup_from_elements(H.ambient, members)


def is_cyclic(Q: SubgroupHandle) -> bool:
    return Q.order == 1 or any(x.order() == Q.order for x in Q.elements())


def is_abelian(Q: SubgroupHandle) -> bool:
    gens = Q.generators
    return all(a * b == b * a for a, b in itertools.combinations(gens, 2))


# -- subgroup conjugacy ----------------------------------------------------


def _subgroup_signature(Q: SubgroupHandle) -> tuple:
    return (Q.order, tuple(sorted(x.cycle_type() for x in Q.elements())))


def conjugating_element(G: PermGroup, A: SubgroupHandle, B: SubgroupHandle):
    """A g with A^g = B, or None. Exhaustive with cheap pruning."""
    if _subgroup_signature(A) != _subgroup_signature(B):
        return None
    bset = B.element_set()
    agens = A.generators
    if not agens:
        return Permutation.identity(G.degree)
    for g in G.elements():
        ginv = g.inverse()
        if all((ginv * s * g).images in bset for s in agens):
            return g
    return None


def are_conjugate_subgroups(G: PermGroup, A: SubgroupHandle, B: SubgroupHandle) -> bool:
    return conjugating_element(G, A, B) is not None


def conjugate_subgroup(G: PermGroup, Q: SubgroupHandle, g: Permutation) -> SubgroupHandle:
    ginv = g.inverse()
    return SubgroupHandle(G, [ginv * s * g for s in Q.generators], check=False)


# -- radical p-subgroups ---------------------------------------------------


def _all_subgroups_of(P: SubgroupHandle) -> list[SubgroupHandle]:
    """Every subgroup of a small group, by closure growth."""
    G = P.ambient
    seen: dict[tuple, SubgroupHandle] = {}
    triv = trivial_subgroup(G)
    seen[triv.canonical_key()] = triv
    frontier = [triv]
    pelems = P.elements()
    while frontier:
        new_frontier = []
        for H in frontier:
            hset = H.element_set()
            for x in pelems:
                if x.images in hset or x.is_identity():
                    continue
                K = SubgroupHandle(G, list(H.generators) + [x], check=False)
                key = K.canonical_key()
                if key not in seen:
                    seen[key] = K
                    new_frontier.append(K)
        frontier = new_frontier
    return list(seen.values())


def radical_p_subgroups(G: PermGroup, p: int, max_order=None) -> tuple[SubgroupHandle, ...]:
    """A G-transversal of the radical p-subgroups (Q = O_p(N_G(Q))).

    Every p-subgroup is conjugate into a fixed Sylow group, so candidates
    are the subgroups of one Sylow p-subgroup, deduplicated by exhaustive
    conjugacy testing.
    """
    _check_order(G, max_order)
    P = sylow_subgroup(G, p)
    radicals = []
    for Q in _all_subgroups_of(P):
        N = normalizer(G, Q)
        core = p_core(N, p)
        if core.canonical_key() == Q.canonical_key():
            radicals.append(Q)
    # dedupe by conjugacy, keep the canonically least representative per class
    radicals.sort(key=lambda Q: (Q.order, Q.canonical_key()))
    transversal: list[SubgroupHandle] = []
    for Q in radicals:
        if not any(are_conjugate_subgroups(G, Q, R) for R in transversal):
            transversal.append(Q)
    return tuple(transversal)


# -- coset actions ---------------------------------------------------------


class CosetAction:
    """The action of G on right cosets of H, with projection and kernel."""

    def __init__(self, group: PermGroup, subgroup: SubgroupHandle, image: PermGroup,
                 reps: tuple[Permutation, ...], kernel: SubgroupHandle):
        self.group = group
        self.subgroup = subgroup
        self.image = image
        self.reps = reps
        self.kernel = kernel
        self._coset_index = {self._coset_key(r): i for i, r in enumerate(reps)}

    def _coset_key(self, x: Permutation) -> tuple:
        hset = self.subgroup.elements()
        return min((h * x).images for h in hset) if hset else x.images

    def coset_index(self, x: Permutation) -> int:
        return self._coset_index[self._coset_key(x)]

    def project(self, g: Permutation) -> Permutation:
        """Image of g as a permutation of the coset space."""
        return Permutation(self.coset_index(r * g) for r in self.reps)


def coset_action(G: PermGroup, H: SubgroupHandle) -> CosetAction:
    """Realize G acting on the right cosets of H <= G.

    The image is isomorphic to G/core_G(H); for H normal this is G/H.
    """
    for g in H.generators:
        if g not in G:
            raise NotASubgroup("H is not a subgroup of G")
    hels = H.elements()

    def key(x):
        return min((h * x).images for h in hels)

    identity = Permutation.identity(G.degree)
    reps = [identity]
    index = {key(identity): 0}
    queue = [identity]
    while queue:
        r = queue.pop(0)
        for g in G.generators:
            x = r * g
            k = key(x)
            if k not in index:
                index[k] = len(reps)
                reps.append(x)
                queue.append(x)
    n = len(reps)

    def project(g):
        return Permutation(index[key(r * g)] for r in reps)

    image = PermGroup(n, [project(g) for g in G.generators])
    # kernel = core_G(H) = elements of H all of whose conjugates by coset reps stay in H
    hset = H.element_set()
    kernel_members = [x for x in hels
                      if all((r * x * r.inverse()).images in hset for r in reps)]
    kernel = subgroup_from_elements(G, kernel_members)
    if image.order() * kernel.order != G.order():
        raise InternalInconsistency("coset action order check failed")
    return CosetAction(G, H, image, tuple(reps), kernel)
