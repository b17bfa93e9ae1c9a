"""Seeded random corpora shared by the property and acceptance suites.

Groupoids are assembled orbit by orbit as pair-groupoid x point-groupoid
products, so every instance has a known reference skeleton to check against.
"""

import random

from orbicat.constructions import (disjoint_union, pair_groupoid,
                                   point_groupoid, product_groupoid,
                                   skeleton_groupoid)
from orbicat.groups import (cyclic_group, dihedral_group, product_group,
                            quaternion_group, symmetric_group, trivial_group)

GROUP_BUILDERS = [
    ("1", trivial_group),
    ("Z2", lambda: cyclic_group(2)),
    ("Z3", lambda: cyclic_group(3)),
    ("Z4", lambda: cyclic_group(4)),
    ("V4", lambda: product_group(cyclic_group(2), cyclic_group(2), name="V4")),
    ("Z5", lambda: cyclic_group(5)),
    ("Z6", lambda: cyclic_group(6)),
    ("S3", lambda: symmetric_group(3)),
    ("Z7", lambda: cyclic_group(7)),
    ("Z8", lambda: cyclic_group(8)),
    ("Z2xZ4", lambda: product_group(cyclic_group(2), cyclic_group(4))),
    ("D8", lambda: dihedral_group(8)),
    ("Q8", quaternion_group),
    ("Z9", lambda: cyclic_group(9)),
    ("Z3xZ3", lambda: product_group(cyclic_group(3), cyclic_group(3))),
    ("Z10", lambda: cyclic_group(10)),
    ("D10", lambda: dihedral_group(10)),
    ("Z11", lambda: cyclic_group(11)),
    ("Z12", lambda: cyclic_group(12)),
    ("D12", lambda: dihedral_group(12)),
    ("Z2xZ6", lambda: product_group(cyclic_group(2), cyclic_group(6))),
]


def random_group(rng, max_order=12):
    pool = [b for _, b in GROUP_BUILDERS if len(b()) <= max_order]
    return rng.choice(pool)()


def orbit_groupoid_block(group, size, tag):
    """One orbit with the given isotropy: Pair(size) x point(group)."""
    base = pair_groupoid(["%s%d" % (tag, i) for i in range(size)])
    return product_groupoid(base, point_groupoid(group))


def random_groupoid(rng, max_objects=12, max_iso=12, max_arrows=400):
    """A random finite groupoid with its reference orbit data.

    Returns (groupoid, blocks) where blocks is the list of (orbit size,
    isotropy group) actually used.
    """
    while True:
        n_orbits = rng.randint(1, 3)
        blocks = []
        total_objects = 0
        total_arrows = 0
        for _ in range(n_orbits):
            size = rng.randint(1, 4)
            grp = random_group(rng, max_order=max_iso)
            if total_objects + size > max_objects:
                continue
            if total_arrows + size * size * len(grp) > max_arrows:
                continue
            blocks.append((size, grp))
            total_objects += size
            total_arrows += size * size * len(grp)
        if blocks:
            break
    g = None
    for i, (size, grp) in enumerate(blocks):
        piece = orbit_groupoid_block(grp, size, "o%d" % i)
        g = piece if g is None else disjoint_union(g, piece)
    return g, blocks


def random_skeleton_pair(rng, related, max_iso=12):
    """A skeleton groupoid and an inflation of it (or a mismatched one).

    When `related`, the second groupoid inflates each orbit by a random size,
    so the pair is Morita equivalent through the star-injective inclusion.
    Otherwise one isotropy group is swapped for a non-isomorphic one.
    """
    n = rng.randint(1, 3)
    groups = [random_group(rng, max_order=max_iso) for _ in range(n)]

    class _Rec:
        def __init__(self, rep, group):
            self.representative = rep
            self.group = group

    skel = skeleton_groupoid([_Rec("p%d" % i, g) for i, g in enumerate(groups)])
    if related:
        inflated_groups = groups
    else:
        swaps = {
            4: [lambda: cyclic_group(4),
                lambda: product_group(cyclic_group(2), cyclic_group(2))],
            6: [lambda: cyclic_group(6), lambda: symmetric_group(3)],
            8: [lambda: cyclic_group(8), lambda: dihedral_group(8),
                quaternion_group],
        }
        k = rng.randrange(n)
        old = groups[k]
        candidates = [b() for b in swaps.get(len(old), [])]
        candidates = [c for c in candidates
                      if sorted(c.order_profile().items())
                      != sorted(old.order_profile().items())]
        if candidates:
            new = rng.choice(candidates)
        else:
            new = cyclic_group(len(old) + 1)
        inflated_groups = list(groups)
        inflated_groups[k] = new
    g = None
    for i, grp in enumerate(inflated_groups):
        size = rng.randint(1, 3)
        piece = orbit_groupoid_block(grp, size, "q%d" % i)
        g = piece if g is None else disjoint_union(g, piece)
    return skel, g


def seeded(seed):
    return random.Random(seed)
