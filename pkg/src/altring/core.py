"""Finite structure-constant rings over Z/kZ: elements, arithmetic, submodules.

A ring is presented by a modulus k, basis labels and a d x d table of
coefficient vectors; multiplication is the bilinear extension of the table
and nothing else is assumed (no associativity, no commutativity).  The
additive group is the free Z/kZ-module on the basis, so every element has a
canonical mixed-radix index in [0, k**d).
"""

from __future__ import annotations

import itertools

import numpy as np

from . import zmod

# n*n index tables are only materialised for rings up to this many elements;
# everything bigger must stay on the basis-criterion code paths.
INDEX_TABLE_LIMIT = 4096


class RingMismatchError(ValueError):
    """Raised when elements of different rings are combined."""


class RingSpec:
    """Immutable presentation of a finite nonassociative ring.

    ``table[i, j]`` is the coefficient vector of ``basis[i] * basis[j]``.
    Equality ignores the display name and compares modulus, labels and the
    full table, so independently constructed copies interoperate.
    """

    def __init__(self, name: str, modulus: int, basis_labels, table):
        if not isinstance(modulus, int) or modulus < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {modulus!r}")
        labels = tuple(str(s) for s in basis_labels)
        if not labels:
            raise ValueError("at least one basis label required")
        if len(set(labels)) != len(labels):
            raise ValueError("basis labels must be pairwise distinct")
        d = len(labels)
        t = np.array(table, dtype=np.int64)
        if t.shape != (d, d, d):
            raise ValueError(f"table must have shape {(d, d, d)}, got {t.shape}")
        if t.min(initial=0) < 0 or t.max(initial=0) >= modulus:
            bad = np.argwhere((t < 0) | (t >= modulus))[0]
            i, j, l = (int(v) for v in bad)
            raise ValueError(
                f"table[{i}][{j}][{l}] = {int(t[i, j, l])} out of range [0, {modulus})"
            )
        t.setflags(write=False)
        self.name = str(name)
        self.modulus = modulus
        self.basis_labels = labels
        self.table = t
        self._hash = hash((modulus, labels, t.tobytes()))
        self._cache: dict[str, object] = {}

    # -- identity ---------------------------------------------------------

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, RingSpec):
            return NotImplemented
        return (
            self.modulus == other.modulus
            and self.basis_labels == other.basis_labels
            and np.array_equal(self.table, other.table)
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"RingSpec({self.name!r}, Z_{self.modulus}, dim={self.dim})"

    @property
    def dim(self) -> int:
        return len(self.basis_labels)

    @property
    def size(self) -> int:
        return self.modulus ** self.dim

    def compatible(self, other: "RingSpec") -> bool:
        return self is other or self == other

    # -- elements ---------------------------------------------------------

    def element(self, coeffs) -> "Element":
        c = tuple(int(v) % self.modulus for v in coeffs)
        if len(c) != self.dim:
            raise ValueError(f"expected {self.dim} coefficients, got {len(c)}")
        return Element(self, c)

    def zero(self) -> "Element":
        return Element(self, (0,) * self.dim)

    def basis_element(self, i: int) -> "Element":
        return self.element([1 if j == i else 0 for j in range(self.dim)])

    def basis_elements(self) -> list["Element"]:
        return [self.basis_element(i) for i in range(self.dim)]

    def from_index(self, index: int) -> "Element":
        if not 0 <= index < self.size:
            raise ValueError(f"element index {index} out of range [0, {self.size})")
        coeffs = []
        for _ in range(self.dim):
            index, c = divmod(index, self.modulus)
            coeffs.append(c)
        return Element(self, tuple(reversed(coeffs)))

    def elements(self):
        """All ring elements in ascending element-index order."""
        for coeffs in itertools.product(range(self.modulus), repeat=self.dim):
            yield Element(self, coeffs)

    def parse_element(self, text: str) -> "Element":
        """Parse 'e+a11', '2*a11+c21' or a decimal element index."""
        text = text.strip()
        if not text:
            raise ValueError("empty element expression")
        try:
            return self.from_index(int(text))
        except ValueError:
            pass
        by_label = {lab: i for i, lab in enumerate(self.basis_labels)}
        coeffs = [0] * self.dim
        for term in text.split("+"):
            term = term.strip()
            if "*" in term:
                factor, _, lab = term.partition("*")
                try:
                    scale = int(factor.strip())
                except ValueError:
                    raise ValueError(f"bad coefficient {factor!r} in {text!r}") from None
            else:
                scale, lab = 1, term
            lab = lab.strip()
            if lab not in by_label:
                raise ValueError(f"unknown basis label {lab!r} in {text!r}")
            coeffs[by_label[lab]] = (coeffs[by_label[lab]] + scale) % self.modulus
        return self.element(coeffs)

    # -- bulk data --------------------------------------------------------

    @property
    def index_weights(self) -> np.ndarray:
        w = self._cache.get("weights")
        if w is None:
            d, k = self.dim, self.modulus
            w = np.array([k ** (d - 1 - j) for j in range(d)], dtype=np.int64)
            self._cache["weights"] = w
        return w

    def elements_matrix(self) -> np.ndarray:
        """(size, dim) array of all coefficient vectors in index order."""
        e = self._cache.get("elements")
        if e is None:
            n, d, k = self.size, self.dim, self.modulus
            idx = np.arange(n, dtype=np.int64)
            e = np.empty((n, d), dtype=np.int64)
            for j in range(d - 1, -1, -1):
                idx, e[:, j] = np.divmod(idx, k)
            e.setflags(write=False)
            self._cache["elements"] = e
        return e

    def _index_table(self, key: str, build) -> np.ndarray:
        t = self._cache.get(key)
        if t is None:
            if self.size > INDEX_TABLE_LIMIT:
                raise ValueError(
                    f"ring has {self.size} elements; index tables are limited "
                    f"to {INDEX_TABLE_LIMIT}"
                )
            t = build()
            t.setflags(write=False)
            self._cache[key] = t
        return t

    def mul_index_table(self) -> np.ndarray:
        """(n, n) table: mul[i, j] = index of element_i * element_j."""

        def build():
            e, w, k, n = self.elements_matrix(), self.index_weights, self.modulus, self.size
            out = np.empty((n, n), dtype=np.int64)
            step = max(1, (1 << 21) // max(1, n * self.dim))
            for lo in range(0, n, step):
                blk = np.einsum(
                    "ai,ijl,bj->abl", e[lo : lo + step], self.table, e, optimize=True
                ) % k
                out[lo : lo + step] = blk @ w
            return out

        return self._index_table("mul_idx", build)

    def add_index_table(self) -> np.ndarray:
        """(n, n) table: add[i, j] = index of element_i + element_j."""

        def build():
            e, w, k, n = self.elements_matrix(), self.index_weights, self.modulus, self.size
            out = np.empty((n, n), dtype=np.int64)
            step = max(1, (1 << 21) // max(1, n * self.dim))
            for lo in range(0, n, step):
                out[lo : lo + step] = ((e[lo : lo + step, None, :] + e[None, :, :]) % k) @ w
            return out

        return self._index_table("add_idx", build)

    def neg_index_vector(self) -> np.ndarray:
        """(n,) table: neg[i] = index of -element_i."""

        def build():
            e, w, k = self.elements_matrix(), self.index_weights, self.modulus
            return ((-e) % k) @ w

        return self._index_table("neg_idx", build)

    def commutator_index_table(self) -> np.ndarray:
        """(n, n) table of [x, y] element indices."""

        def build():
            m = self.mul_index_table()
            neg = self.neg_index_vector()
            add = self.add_index_table()
            return add[m, neg[m.T]]

        return self._index_table("comm_idx", build)

    # -- linear maps of multiplication -------------------------------------

    def left_mul_matrix(self, x) -> np.ndarray:
        """Matrix L with coeffs(x*u) = L @ coeffs(u) (columns = basis images)."""
        v = x.vector() if isinstance(x, Element) else np.asarray(x, dtype=np.int64)
        return np.einsum("i,iml->lm", v, self.table) % self.modulus

    def right_mul_matrix(self, x) -> np.ndarray:
        """Matrix R with coeffs(u*x) = R @ coeffs(u)."""
        v = x.vector() if isinstance(x, Element) else np.asarray(x, dtype=np.int64)
        return np.einsum("i,mil->lm", v, self.table) % self.modulus


class Element:
    """A ring element: an immutable coefficient vector tied to its ring."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: RingSpec, coeffs: tuple[int, ...]):
        self.ring = ring
        self.coeffs = coeffs

    def vector(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=np.int64)

    @property
    def index(self) -> int:
        k = self.ring.modulus
        v = 0
        for c in self.coeffs:
            v = v * k + c
        return v

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _peer(self, other) -> "Element":
        if not isinstance(other, Element):
            raise TypeError(f"expected Element, got {type(other).__name__}")
        if not self.ring.compatible(other.ring):
            raise RingMismatchError(
                f"elements of {self.ring.name!r} and {other.ring.name!r} cannot be combined"
            )
        return other

    def __add__(self, other):
        other = self._peer(other)
        k = self.ring.modulus
        return Element(self.ring, tuple((a + b) % k for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        other = self._peer(other)
        k = self.ring.modulus
        return Element(self.ring, tuple((a - b) % k for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        k = self.ring.modulus
        return Element(self.ring, tuple((-a) % k for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            k = self.ring.modulus
            return Element(self.ring, tuple((a * other) % k for a in self.coeffs))
        other = self._peer(other)
        r = self.ring
        out = np.einsum("i,j,ijl->l", self.vector(), other.vector(), r.table) % r.modulus
        return Element(r, tuple(int(c) for c in out))

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.ring.compatible(other.ring) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring._hash, self.coeffs))

    def label(self) -> str:
        parts = []
        for c, lab in zip(self.coeffs, self.ring.basis_labels):
            if c == 1:
                parts.append(lab)
            elif c:
                parts.append(f"{c}*{lab}")
        return "+".join(parts) if parts else "0"

    def __repr__(self):
        return f"<{self.label()} in {self.ring.name}>"


def commutator(x: Element, y: Element) -> Element:
    """[x, y] = xy - yx."""
    return x * y - y * x


def associator(x: Element, y: Element, z: Element) -> Element:
    """(x, y, z) = (xy)z - x(yz)."""
    return (x * y) * z - x * (y * z)


class Submodule:
    """An additive subgroup of the ring closed under Z/kZ scaling, held as a
    canonical Howell-form row basis.  Two submodules are equal iff their row
    matrices are identical."""

    def __init__(self, ring: RingSpec, rows: np.ndarray):
        rows = np.asarray(rows, dtype=np.int64)
        rows.setflags(write=False)
        self.ring = ring
        self.rows = rows

    @classmethod
    def span(cls, ring: RingSpec, gens) -> "Submodule":
        vecs = [g.vector() if isinstance(g, Element) else np.asarray(g) for g in gens]
        return cls(ring, zmod.howell(vecs, ring.modulus, width=ring.dim))

    @classmethod
    def zero(cls, ring: RingSpec) -> "Submodule":
        return cls(ring, np.zeros((0, ring.dim), dtype=np.int64))

    @classmethod
    def full(cls, ring: RingSpec) -> "Submodule":
        return cls(ring, zmod.howell(np.eye(ring.dim, dtype=np.int64), ring.modulus))

    @property
    def rank(self) -> int:
        return len(self.rows)

    def is_zero(self) -> bool:
        return self.rank == 0

    def span_size(self) -> int:
        return zmod.span_count(self.rows, self.ring.modulus)

    def contains(self, x: Element) -> bool:
        return zmod.member(self.rows, x.vector(), self.ring.modulus)

    def __contains__(self, x: Element) -> bool:
        return self.contains(x)

    def contains_submodule(self, other: "Submodule") -> bool:
        return all(
            zmod.member(self.rows, row, self.ring.modulus) for row in other.rows
        )

    def __le__(self, other: "Submodule") -> bool:
        return other.contains_submodule(self)

    def __add__(self, other: "Submodule") -> "Submodule":
        if not self.ring.compatible(other.ring):
            raise RingMismatchError("submodules of different rings")
        merged = np.vstack([self.rows, other.rows]) if self.rows.size or other.rows.size else self.rows
        return Submodule(self.ring, zmod.howell(merged, self.ring.modulus, width=self.ring.dim))

    def __and__(self, other: "Submodule") -> "Submodule":
        if not self.ring.compatible(other.ring):
            raise RingMismatchError("submodules of different rings")
        return Submodule(
            self.ring, zmod.intersect(self.rows, other.rows, self.ring.modulus, self.ring.dim)
        )

    def __eq__(self, other):
        if not isinstance(other, Submodule):
            return NotImplemented
        return self.ring.compatible(other.ring) and np.array_equal(self.rows, other.rows)

    def __hash__(self):
        return hash((self.ring._hash, self.rows.tobytes()))

    def elements(self):
        """Iterate every element of the span exactly once."""
        for vec in zmod.span_elements(self.rows, self.ring.modulus, self.ring.dim):
            yield Element(self.ring, tuple(int(c) for c in vec))

    def elements_by_index(self) -> list[Element]:
        return sorted(self.elements(), key=lambda e: e.index)

    def basis(self) -> list[Element]:
        return [Element(self.ring, tuple(int(c) for c in row)) for row in self.rows]

    def __repr__(self):
        return f"Submodule(rank={self.rank} of {self.ring.name})"


def canonicalize(ring: RingSpec, gens) -> Submodule:
    """Canonical submodule spanned by the given elements."""
    return Submodule.span(ring, gens)


def kernel_submodule(ring: RingSpec, matrix) -> Submodule:
    """Submodule {v : matrix @ v == 0 mod k} in canonical form."""
    return Submodule(ring, zmod.kernel(matrix, ring.modulus))
