"""Independent brute-force oracles for cross-checking the library.

Deliberately implemented with plain Python dicts and tuples, no numpy and no
shared code with the package's decision procedures, so that agreement is
meaningful.  Only usable at desk scale.
"""

import itertools


class BruteRing:
    """Dict-based multiplication oracle built straight from the table."""

    def __init__(self, ring):
        self.k = ring.modulus
        self.d = ring.dim
        self.table = [
            [tuple(int(c) for c in cell) for cell in row] for row in ring.table
        ]
        self.elements = [
            t for t in itertools.product(range(self.k), repeat=self.d)
        ]
        self.zero = (0,) * self.d

    def index(self, x):
        v = 0
        for c in x:
            v = v * self.k + c
        return v

    def add(self, x, y):
        return tuple((a + b) % self.k for a, b in zip(x, y))

    def sub(self, x, y):
        return tuple((a - b) % self.k for a, b in zip(x, y))

    def mul(self, x, y):
        acc = [0] * self.d
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                cell = self.table[i][j]
                for l in range(self.d):
                    acc[l] += xi * yj * cell[l]
        return tuple(c % self.k for c in acc)

    def comm(self, x, y):
        return self.sub(self.mul(x, y), self.mul(y, x))

    def assoc(self, x, y, z):
        return self.sub(self.mul(self.mul(x, y), z), self.mul(x, self.mul(y, z)))

    # -- exhaustive elementwise predicates ---------------------------------

    def associative(self):
        for x in self.elements:
            for y in self.elements:
                xy = self.mul(x, y)
                for z in self.elements:
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)):
                        return False
        return True

    def alternative(self):
        for x in self.elements:
            for y in self.elements:
                if self.assoc(x, x, y) != self.zero or self.assoc(y, x, x) != self.zero:
                    return False
        return True

    def flexible(self):
        for x in self.elements:
            for y in self.elements:
                if self.assoc(x, y, x) != self.zero:
                    return False
        return True

    def nucleus_elements(self):
        out = []
        for u in self.elements:
            if all(
                self.assoc(u, x, y) == self.zero
                and self.assoc(x, u, y) == self.zero
                and self.assoc(x, y, u) == self.zero
                for x in self.elements
                for y in self.elements
            ):
                out.append(u)
        return out

    def commutant_elements(self):
        return [
            u
            for u in self.elements
            if all(self.comm(u, x) == self.zero for x in self.elements)
        ]

    def centre_elements(self):
        nuc = set(self.nucleus_elements())
        return [u for u in self.commutant_elements() if u in nuc]


def brute_condition_scan(ring, frame, side, commutant_elems):
    """All s in R11+R22 with [s, component] = 0, split by commutant
    membership; works elementwise, independent of the kernel machinery."""
    br = BruteRing(ring)
    comp = frame.r12 if side == "12" else frame.r21
    comp_elems = [tuple(e.coeffs) for e in comp.elements()]
    commut = set(commutant_elems)
    diag = [tuple(e.coeffs) for e in frame.diagonal_sum().elements()]
    hyp = [
        s
        for s in diag
        if all(br.comm(s, c) == br.zero for c in comp_elems)
    ]
    good = [s for s in hyp if s in commut]
    bad = sorted((s for s in hyp if s not in commut), key=br.index)
    return hyp, good, bad
