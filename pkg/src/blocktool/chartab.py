"""Ordinary character tables via Dixon-Schneider, plus fusion/restriction.

The table is computed over F_l for a prime l = 1 (mod exponent), by
simultaneous diagonalization of the class-sum matrices, and the entries are
lifted back to exact cyclotomic numbers by Fourier inversion over the
eigenvalues of each class representative. Everything downstream (blocks,
trees, weights) consumes the exact lifted values only.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt, lcm

from .arith import is_prime, prime_factors, primitive_root
from .cyclo import CycNum
from .errors import InternalInconsistency, InvalidInput, NotASubgroup
from .permcore import (
    CosetAction,
    PermGroup,
    SubgroupHandle,
    class_of,
    conjugacy_classes,
)


class CharacterTable:
    """Exact ordinary character table with canonical class/character order."""

    def __init__(self, group: PermGroup, classes, exponent: int, power_maps, characters):
        self.group = group
        self.classes = tuple(classes)
        self.exponent = exponent
        self.power_maps = dict(power_maps)
        self.characters = tuple(tuple(row) for row in characters)
        self._inverse_classes = None

    @property
    def k(self) -> int:
        return len(self.classes)

    @property
    def order(self) -> int:
        return self.group.order()

    def degree(self, i: int) -> int:
        return int(self.characters[i][0].as_fraction())

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(self.degree(i) for i in range(self.k))

    def value(self, i: int, j: int) -> CycNum:
        return self.characters[i][j]

    def inverse_class(self, j: int) -> int:
        if self._inverse_classes is None:
            self._inverse_classes = tuple(
                class_of(self.group, c.representative.inverse()) for c in self.classes)
        return self._inverse_classes[j]

    def inner(self, row_a, row_b) -> CycNum:
        """<a, b> = (1/|G|) sum_K |K| a(K) conj(b(K)); rows may be indices."""
        if isinstance(row_a, int):
            row_a = self.characters[row_a]
        if isinstance(row_b, int):
            row_b = self.characters[row_b]
        total = CycNum.zero()
        for c, va, vb in zip(self.classes, row_a, row_b):
            total = total + va * vb.conjugate() * c.size
        return total * Fraction(1, self.order)

    def row_index(self, values) -> int:
        values = tuple(values)
        for i, row in enumerate(self.characters):
            if row == values:
                return i
        raise InternalInconsistency("value vector does not match any table row")

    def class_index_of(self, x) -> int:
        return class_of(self.group, x)


# -- Dixon-Schneider -----------------------------------------------------------


def character_table(G: PermGroup, max_order=None) -> CharacterTable:
    """Compute (and cache on the group) the exact character table."""
    cached = getattr(G, "_chartab", None)
    if cached is not None:
        return cached
    classes = conjugacy_classes(G, max_order)
    k = len(classes)
    exponent = lcm(*(c.element_order for c in classes))
    if k == 1:
        table = CharacterTable(G, classes, 1, {}, [(CycNum.one(),)])
    else:
        table = _dixon_schneider(G, classes, exponent)
    _validate_table(table)
    G._chartab = table
    return table


def _choose_modulus(m: int, order: int) -> int:
    ell = m + 1
    while True:
        if is_prime(ell) and order % ell != 0 and ell * ell > 4 * order:
            return ell
        ell += m
    # unreachable


def _dixon_schneider(G: PermGroup, classes, exponent: int) -> CharacterTable:
    k = len(classes)
    order = G.order()
    els = G.elements()
    cls_of = {x.images: class_of(G, x) for x in els}
    reps = [c.representative for c in classes]

    # class-sum structure constants: A[i][j][l] = #{(x,y) in K_i x K_j : xy = z_l}
    A = [[[0] * k for _ in range(k)] for _ in range(k)]
    for l, z in enumerate(reps):
        for x in els:
            i = cls_of[x.images]
            j = cls_of[(x.inverse() * z).images]
            A[i][j][l] += 1

    ell = _choose_modulus(exponent, order)

    # split F_l^k into common eigenspaces of the commuting matrices A_i
    spaces = [_echelon([tuple(int(r == c) for c in range(k)) for r in range(k)], ell)]
    for i in range(k):
        new_spaces = []
        for space in spaces:
            if len(space[0]) == 1:
                new_spaces.append(space)
                continue
            new_spaces.extend(_split_space(space, A[i], ell))
        spaces = new_spaces
        if all(len(s[0]) == 1 for s in spaces):
            break
    if len(spaces) != k:
        raise InternalInconsistency("eigenspace splitting did not separate all characters")

    inv_class = [cls_of[r.inverse().images] for r in reps]
    sizes = [c.size for c in classes]
    zroot = pow(primitive_root(ell), (ell - 1) // exponent, ell)

    rows = []
    for space in spaces:
        u = list(space[0][0])
        u = [(x * pow(u[0], -1, ell)) % ell for x in u]  # omega(identity class) = 1
        denom = sum(u[l] * u[inv_class[l]] * pow(sizes[l], -1, ell) for l in range(k)) % ell
        dsq = order * pow(denom, -1, ell) % ell
        degree = next(d for d in range(1, isqrt(order) + 1) if d * d % ell == dsq)
        vals_mod = [degree * u[j] * pow(sizes[j], -1, ell) % ell for j in range(k)]
        row = [None] * k
        for j, rep in enumerate(reps):
            o = classes[j].element_order
            eta = pow(zroot, exponent // o, ell)
            powers = [vals_mod[cls_of[(rep ** s).images]] for s in range(o)]
            o_inv = pow(o, -1, ell)
            coeffs = {}
            for c in range(o):
                n_c = o_inv * sum(powers[s] * pow(eta, (-c * s) % o, ell) for s in range(o)) % ell
                if n_c > degree:
                    raise InternalInconsistency("root-of-unity multiplicity exceeds the degree")
                if n_c:
                    coeffs[c] = n_c
            # build at the element-order conductor: values then canonicalize
            # inside Q(zeta_o) instead of descending from the group exponent
            row[j] = CycNum(o, coeffs)
        rows.append(tuple(row))

    rows.sort(key=lambda row: (row[0].sort_key(), [v.sort_key() for v in row]))
    power_maps = {
        q: tuple(cls_of[(rep ** q).images] for rep in reps) for q in prime_factors(exponent)
    }
    return CharacterTable(G, classes, exponent, power_maps, rows)


def _validate_table(T: CharacterTable):
    """Both orthogonality relations, degree sum, counts; exact arithmetic."""
    k = T.k
    if len(T.characters) != k:
        raise InternalInconsistency("character count differs from class count")
    if sum(T.degree(i) ** 2 for i in range(T.k)) != T.order:
        raise InternalInconsistency("degree squares do not sum to |G|")
    for i in range(k):
        if T.order % T.degree(i) != 0:
            raise InternalInconsistency("character degree does not divide |G|")
        for j in range(i, k):
            expect = CycNum.one() if i == j else CycNum.zero()
            if T.inner(i, j) != expect:
                raise InternalInconsistency(f"row orthogonality fails at ({i}, {j})")
    for a in range(k):
        for b in range(a, k):
            total = CycNum.zero()
            for i in range(k):
                total = total + T.value(i, a) * T.value(i, b).conjugate()
            centralizer_order = T.order // T.classes[a].size
            expect = CycNum.rational(centralizer_order if a == b else 0)
            if total != expect:
                raise InternalInconsistency(f"column orthogonality fails at ({a}, {b})")


# -- F_l linear algebra -------------------------------------------------------


def _echelon(vectors, ell):
    """Reduced echelon basis (rows, pivots) of the span of the vectors."""
    rows: list[list[int]] = []
    pivots: list[int] = []
    for v in vectors:
        v = list(v)
        for row, piv in zip(rows, pivots):
            if v[piv]:
                f = v[piv]
                v = [(a - f * b) % ell for a, b in zip(v, row)]
        piv = next((i for i, a in enumerate(v) if a), None)
        if piv is None:
            continue
        inv = pow(v[piv], -1, ell)
        v = [a * inv % ell for a in v]
        for r, (row, p2) in enumerate(zip(rows, pivots)):
            if row[piv]:
                f = row[piv]
                rows[r] = [(a - f * b) % ell for a, b in zip(row, v)]
        rows.append(v)
        pivots.append(piv)
    order = sorted(range(len(rows)), key=lambda r: pivots[r])
    return ([tuple(rows[r]) for r in order], [pivots[r] for r in order])


def _coords_in(space, v, ell):
    rows, pivots = space
    v = list(v)
    out = []
    for row, piv in zip(rows, pivots):
        c = v[piv]
        out.append(c)
        if c:
            v = [(a - c * b) % ell for a, b in zip(v, row)]
    if any(v):
        raise InternalInconsistency("vector left the invariant subspace")
    return out


def _matvec(A, v, ell):
    k = len(v)
    return tuple(sum(A[j][l] * v[l] for l in range(k)) % ell for j in range(k))


def _kernel(M, ell):
    """Kernel basis of a square matrix over F_l."""
    d = len(M)
    rows = [list(r) for r in M]
    pivots = {}
    r = 0
    for c in range(d):
        sel = next((rr for rr in range(r, d) if rows[rr][c] % ell), None)
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        inv = pow(rows[r][c], -1, ell)
        rows[r] = [a * inv % ell for a in rows[r]]
        for rr in range(d):
            if rr != r and rows[rr][c] % ell:
                f = rows[rr][c]
                rows[rr] = [(a - f * b) % ell for a, b in zip(rows[rr], rows[r])]
        pivots[c] = r
        r += 1
    free = [c for c in range(d) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * d
        v[fc] = 1
        for c, rr in pivots.items():
            v[c] = (-rows[rr][fc]) % ell
        basis.append(tuple(v))
    return basis


def _split_space(space, A, ell):
    rows, _pivots = space
    d = len(rows)
    imgs = [_coords_in(space, _matvec(A, b, ell), ell) for b in rows]
    M = [[imgs[r][s] for r in range(d)] for s in range(d)]
    out = []
    total = 0
    for lam in range(ell):
        shifted = [[(M[s][r] - (lam if s == r else 0)) % ell for r in range(d)] for s in range(d)]
        ker = _kernel(shifted, ell)
        if not ker:
            continue
        vecs = []
        for coeffs in ker:
            v = [0] * len(rows[0])
            for c, row in zip(coeffs, rows):
                if c:
                    v = [(a + c * b) % ell for a, b in zip(v, row)]
            vecs.append(tuple(v))
        out.append(_echelon(vecs, ell))
        total += len(ker)
        if total == d:
            break
    if total != d:
        raise InternalInconsistency("class-sum matrix is not diagonalizable mod l")
    return out


# -- fusion / restriction -------------------------------------------------------


class ClassFusion:
    """Total map from the classes of a subgroup into the classes of G."""

    def __init__(self, subgroup: SubgroupHandle, group: PermGroup, mapping):
        self.subgroup = subgroup
        self.group = group
        self.mapping = tuple(mapping)

    def __getitem__(self, i: int) -> int:
        return self.mapping[i]

    def __len__(self):
        return len(self.mapping)


def class_fusion(H: SubgroupHandle, G: PermGroup) -> ClassFusion:
    """Fuse each H-class into the unique G-class containing it."""
    for g in H.generators:
        if g not in G:
            raise NotASubgroup("fusion source is not a subgroup")
    h_classes = conjugacy_classes(H.group)
    mapping = [class_of(G, c.representative) for c in h_classes]
    return ClassFusion(H, G, mapping)


def restrict(row, fusion: ClassFusion):
    """Restriction of a G-class function along a fusion, as an H-class row."""
    return tuple(row[g_idx] for g_idx in fusion.mapping)


def p_regular_classes(T: CharacterTable, p: int) -> tuple[int, ...]:
    """Indices of classes whose element order is coprime to p."""
    return tuple(i for i, c in enumerate(T.classes) if c.element_order % p != 0)


def p_singular_classes(T: CharacterTable, p: int) -> tuple[int, ...]:
    return tuple(i for i, c in enumerate(T.classes) if c.element_order % p == 0)


def restrict_to_p_regular(row, T: CharacterTable, p: int):
    """The map chi -> chi^0: values on the p-regular classes only."""
    if isinstance(row, int):
        row = T.characters[row]
    regular = p_regular_classes(T, p)
    return tuple(row[j] for j in regular)


# -- quotient groups -------------------------------------------------------------


def quotient_class_map(action: CosetAction, T: CharacterTable, TQ: CharacterTable):
    """Class map G -> G/N induced by a coset action: class index to class index."""
    return tuple(
        class_of(TQ.group, action.project(c.representative)) for c in T.classes)


def inflate_row(row_on_quotient, qmap):
    """Inflation of a quotient-class function to a G-class function."""
    return tuple(row_on_quotient[qj] for qj in qmap)


def ingest_table(G: PermGroup, classes, exponent, power_maps, characters) -> CharacterTable:
    """Build a table from external data, re-validating before use."""
    T = CharacterTable(G, classes, exponent, power_maps, characters)
    try:
        _validate_table(T)
    except InternalInconsistency as exc:
        raise InvalidInput(f"ingested character table is invalid: {exc}") from exc
    return T
