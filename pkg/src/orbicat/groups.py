"""Finite groups as Cayley tables: construction, conjugacy, isomorphism, embeddings.

Elements are referred to by name (str) externally and by index internally.
All searches are deterministic and return the lexicographically least witness.
"""

from functools import lru_cache
from itertools import product


class GroupError(ValueError):
    pass


class AbstractGroup:
    """A finite group given by an explicit multiplication table on indices.

    `table[i][j]` is the index of elements[i] * elements[j].  The table is
    validated exhaustively on construction (identity, inverses,
    associativity); intended scale is |G| <= 64.
    """

    def __init__(self, elements, table, name="G"):
        self.elements = tuple(str(e) for e in elements)
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        self.name = name
        self._index = {e: i for i, e in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise GroupError("duplicate element names")
        self._validate()

    def _validate(self):
        n = len(self.elements)
        if n == 0:
            raise GroupError("empty element set")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise GroupError("ragged multiplication table")
        for row in self.table:
            for x in row:
                if not 0 <= x < n:
                    raise GroupError("table entry out of range")
        rng = range(n)
        identity = None
        for e in rng:
            if all(self.table[e][x] == x == self.table[x][e] for x in rng):
                identity = e
                break
        if identity is None:
            raise GroupError("no identity element")
        self.identity = identity
        inv = [None] * n
        for a in rng:
            for b in rng:
                if self.table[a][b] == identity == self.table[b][a]:
                    inv[a] = b
                    break
            if inv[a] is None:
                raise GroupError("element %r has no inverse" % self.elements[a])
        self.inverse = tuple(inv)
        for a in rng:
            for b in rng:
                ab = self.table[a][b]
                for c in rng:
                    if self.table[ab][c] != self.table[a][self.table[b][c]]:
                        raise GroupError(
                            "non-associative triple (%s, %s, %s)"
                            % (self.elements[a], self.elements[b], self.elements[c])
                        )

    @property
    def order(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return "AbstractGroup(%s, order=%d)" % (self.name, len(self))

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise GroupError("unknown element %r" % (name,)) from None

    def mul(self, i, j):
        return self.table[i][j]

    def mul_named(self, a, b):
        return self.elements[self.table[self.index(a)][self.index(b)]]

    def inv_named(self, a):
        return self.elements[self.inverse[self.index(a)]]

    def conj(self, h, g):
        """h g h^-1 on indices."""
        return self.table[self.table[h][g]][self.inverse[h]]

    def element_order(self, i):
        k, x = 1, i
        while x != self.identity:
            x = self.table[x][i]
            k += 1
        return k

    def order_profile(self):
        prof = {}
        for i in range(len(self)):
            d = self.element_order(i)
            prof[d] = prof.get(d, 0) + 1
        return prof

    def is_abelian(self):
        n = len(self)
        return all(self.table[i][j] == self.table[j][i] for i in range(n) for j in range(n))

    def closure(self, seed):
        """Index set of the subgroup generated by `seed` (indices)."""
        got = {self.identity}
        got.update(seed)
        frontier = sorted(got)
        while frontier:
            new = []
            for a in frontier:
                for b in sorted(got):
                    for c in (self.table[a][b], self.table[b][a], self.inverse[a]):
                        if c not in got:
                            got.add(c)
                            new.append(c)
            frontier = new
        return frozenset(got)

    def is_subgroup(self, indices):
        sub = set(indices)
        if self.identity not in sub:
            return False
        return all(
            self.table[a][b] in sub and self.inverse[a] in sub for a in sub for b in sub
        )

    def subgroup(self, indices, name=None):
        """The subgroup on the given index subset, as its own AbstractGroup."""
        sub = sorted(set(indices))
        if not self.is_subgroup(sub):
            raise GroupError("subset is not a subgroup: %s" % [self.elements[i] for i in sub])
        pos = {g: k for k, g in enumerate(sub)}
        table = [[pos[self.table[a][b]] for b in sub] for a in sub]
        return AbstractGroup(
            [self.elements[i] for i in sub], table, name=name or self.name + "-sub"
        )

    def centralizer(self, g, within=None):
        """Indices commuting with g, intersected with `within` if given."""
        pool = range(len(self)) if within is None else within
        return frozenset(h for h in pool if self.table[h][g] == self.table[g][h])


def conjugacy_classes(group):
    """Partition of the elements under conjugation, blocks sorted by least index.

    Returns (classes, count) where classes is a list of element-name tuples.
    """
    n = len(group)
    seen = [False] * n
    classes = []
    for g in range(n):
        if seen[g]:
            continue
        cls = set()
        for h in range(n):
            cls.add(group.conj(h, g))
        for x in cls:
            seen[x] = True
        classes.append(tuple(group.elements[i] for i in sorted(cls)))
    return classes, len(classes)


# ---------------------------------------------------------------------------
# standard groups

def trivial_group(name="1"):
    return AbstractGroup(["e"], [[0]], name=name)


def cyclic_group(n, name=None):
    elements = ["e"] + ["r%d" % k if k > 1 else "r" for k in range(1, n)]
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return AbstractGroup(elements, table, name=name or "Z%d" % n)


def dihedral_group(order, name=None):
    """Dihedral group of the given (even) order: n rotations, n reflections."""
    if order % 2 or order < 2:
        raise GroupError("dihedral order must be even and >= 2")
    n = order // 2
    # element 2k+f = s^f r^k; r s = s r^-1
    def mul(a, b):
        f1, k1 = a % 2, a // 2
        f2, k2 = b % 2, b // 2
        if f2 == 0:
            return 2 * ((k1 + k2) % n) + f1
        return 2 * ((k2 - k1) % n) + (f1 ^ 1)

    names = []
    for k in range(n):
        names.append("e" if k == 0 else ("r" if k == 1 else "r%d" % k))
        names.append("s" if k == 0 else "sr%d" % k if k > 1 else "sr")
    table = [[mul(i, j) for j in range(order)] for i in range(order)]
    return AbstractGroup(names, table, name=name or "D%d" % order)


def product_group(a, b, name=None):
    elements = ["%s|%s" % (x, y) for x in a.elements for y in b.elements]
    nb = len(b)
    table = [
        [
            a.table[i // nb][j // nb] * nb + b.table[i % nb][j % nb]
            for j in range(len(elements))
        ]
        for i in range(len(elements))
    ]
    return AbstractGroup(elements, table, name=name or "%sx%s" % (a.name, b.name))


def symmetric_group(n, name=None):
    perms = sorted(_permutations(tuple(range(n))))
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(p[q[k]] for k in range(n))] for q in perms] for p in perms
    ]
    names = ["".join(str(v) for v in p) for p in perms]
    return AbstractGroup(names, table, name=name or "S%d" % n)


def _permutations(base):
    if len(base) <= 1:
        return [base]
    out = []
    for i, v in enumerate(base):
        for rest in _permutations(base[:i] + base[i + 1:]):
            out.append((v,) + rest)
    return out


def quaternion_group(name=None):
    # 0..7 = 1, -1, i, -i, j, -j, k, -k
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    def mul(a, b):
        sa, ua = a % 2, a // 2
        sb, ub = b % 2, b // 2
        # unit table on {1,i,j,k} with sign
        prod = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ]
        sign, unit = prod[ua][ub]
        return 2 * unit + (sa ^ sb ^ sign)
    table = [[mul(i, j) for j in range(8)] for i in range(8)]
    return AbstractGroup(names, table, name=name or "Q8")


# ---------------------------------------------------------------------------
# isomorphism and embedding search

def _generating_sequence(group):
    """A short generating sequence, chosen deterministically."""
    gens = []
    have = group.closure([])
    for i in range(len(group)):
        if i not in have:
            gens.append(i)
            have = group.closure(gens)
            if len(have) == len(group):
                break
    return gens


def _close_mapping(a, b, gen_images, gens):
    """Extend generator images to a full homomorphism table, or None."""
    mapping = {a.identity: b.identity}
    for g, img in zip(gens, gen_images):
        mapping[g] = img
    frontier = sorted(mapping)
    while frontier:
        new = []
        for x in frontier:
            for y in sorted(mapping):
                for xy, im in (
                    (a.table[x][y], b.table[mapping[x]][mapping[y]]),
                    (a.table[y][x], b.table[mapping[y]][mapping[x]]),
                ):
                    if xy in mapping:
                        if mapping[xy] != im:
                            return None
                    else:
                        mapping[xy] = im
                        new.append(xy)
        frontier = new
    if len(mapping) != len(a):
        # gens did not generate; should not happen
        return None
    return mapping


def _hom_search(a, b, injective, surjective):
    if injective and len(a) > len(b):
        return None
    if surjective and len(a) < len(b):
        return None
    if injective:
        pa, pb = a.order_profile(), b.order_profile()
        for d, cnt in pa.items():
            if pb.get(d, 0) < cnt:
                return None
    gens = _generating_sequence(a)
    # candidate images per generator: same element order (injective homs
    # preserve order exactly)
    cands = []
    for g in gens:
        d = a.element_order(g)
        cands.append([i for i in range(len(b)) if b.element_order(i) == d])

    def extend(k, images):
        if k == len(gens):
            mapping = _close_mapping(a, b, images, gens)
            if mapping is None:
                return None
            if injective and len(set(mapping.values())) != len(mapping):
                return None
            if surjective and len(set(mapping.values())) != len(b):
                return None
            return mapping
        for img in cands[k]:
            got = extend(k + 1, images + [img])
            if got is not None:
                return got
        return None

    if not gens:  # trivial group
        mapping = {a.identity: b.identity}
        if surjective and len(b) > 1:
            return None
        return mapping
    return extend(0, [])


def group_isomorphic(a, b):
    """An isomorphism a -> b as a name mapping, or None (definitive).

    Pre-screens by order, element-order profile, abelianness and class count
    before backtracking over generator images.
    """
    if len(a) != len(b):
        return None
    if sorted(a.order_profile().items()) != sorted(b.order_profile().items()):
        return None
    if a.is_abelian() != b.is_abelian():
        return None
    if conjugacy_classes(a)[1] != conjugacy_classes(b)[1]:
        return None
    mapping = _hom_search(a, b, injective=True, surjective=True)
    if mapping is None:
        return None
    return {a.elements[x]: b.elements[y] for x, y in sorted(mapping.items())}


def group_embeds(a, b):
    """An injective homomorphism a -> b as a name mapping, or None.

    Lagrange prune: |a| must divide |b|.
    """
    if len(b) % len(a) != 0:
        return None
    mapping = _hom_search(a, b, injective=True, surjective=False)
    if mapping is None:
        return None
    return {a.elements[x]: b.elements[y] for x, y in sorted(mapping.items())}


@lru_cache(maxsize=None)
def _cached_embeds_key(key_a, key_b):
    a = AbstractGroup(*key_a[:2])
    b = AbstractGroup(*key_b[:2])
    return group_embeds(a, b) is not None


def embeds(a, b):
    """Cached boolean embedding test (hot path of certificate searches)."""
    key_a = (a.elements, a.table)
    key_b = (b.elements, b.table)
    if key_a == key_b:
        return True
    return _cached_embeds_key(key_a, key_b)
