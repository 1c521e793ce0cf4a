"""Set-maps between finite rings and the Lie-theoretic map predicates.

Maps are stored as full value tables indexed by element index, never as
basis images: a Lie multiplicative map need not be additive, so its basis
images do not determine it.  Verifiers run over all argument tuples using
the rings' cached index tables; the searcher enumerates value tables by
backtracking with incremental bracket-constraint checks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import analysis
from .core import Element, RingSpec, Submodule
from .analysis import Verdict


class MapTable:
    """A total function between two rings, tabulated by element index."""

    def __init__(self, domain: RingSpec, codomain: RingSpec, values):
        vals = np.array(values, dtype=np.int64)
        if vals.shape != (domain.size,):
            raise ValueError(
                f"map must assign all {domain.size} elements, got shape {vals.shape}"
            )
        if vals.size and (vals.min() < 0 or vals.max() >= codomain.size):
            bad = int(np.argmax((vals < 0) | (vals >= codomain.size)))
            raise ValueError(
                f"values[{bad}] = {int(vals[bad])} outside [0, {codomain.size})"
            )
        vals.setflags(write=False)
        self.domain = domain
        self.codomain = codomain
        self.values = vals

    @classmethod
    def identity(cls, ring: RingSpec) -> "MapTable":
        return cls(ring, ring, np.arange(ring.size))

    @classmethod
    def from_callable(cls, domain: RingSpec, codomain: RingSpec, fn) -> "MapTable":
        vals = [fn(domain.from_index(i)).index for i in range(domain.size)]
        return cls(domain, codomain, vals)

    def __call__(self, x: Element) -> Element:
        if not self.domain.compatible(x.ring):
            raise ValueError("element outside the map's domain")
        return self.codomain.from_index(int(self.values[x.index]))

    def is_bijective(self) -> bool:
        return (
            self.domain.size == self.codomain.size
            and len(np.unique(self.values)) == self.domain.size
        )

    def compose(self, inner: "MapTable") -> "MapTable":
        """self after inner: x -> self(inner(x))."""
        if not inner.codomain.compatible(self.domain):
            raise ValueError("composition domain mismatch")
        return MapTable(inner.domain, self.codomain, self.values[inner.values])

    def __eq__(self, other):
        if not isinstance(other, MapTable):
            return NotImplemented
        return (
            self.domain.compatible(other.domain)
            and self.codomain.compatible(other.codomain)
            and np.array_equal(self.values, other.values)
        )

    def __hash__(self):
        return hash((self.domain._hash, self.codomain._hash, self.values.tobytes()))

    def __repr__(self):
        return f"MapTable({self.domain.name} -> {self.codomain.name})"


def _first_mismatch(mask: np.ndarray) -> tuple[int, int]:
    """Lex-least (i, j) with mask True; mask is 2-D and nonempty somewhere."""
    flat = int(np.argmax(mask.reshape(-1)))
    return divmod(flat, mask.shape[1])


def is_lie_multiplicative(phi: MapTable) -> Verdict:
    """phi([x, y]) == [phi(x), phi(y)] over all ordered pairs."""
    cd = phi.domain.commutator_index_table()
    cc = phi.codomain.commutator_index_table()
    v = phi.values
    lhs = v[cd]
    rhs = cc[v[:, None], v[None, :]]
    bad = lhs != rhs
    if not bad.any():
        return Verdict(True)
    i, j = _first_mismatch(bad)
    return Verdict(
        False, (phi.domain.from_index(i), phi.domain.from_index(j)), "lie-multiplicative"
    )


def is_lie_derivable(d: MapTable) -> Verdict:
    """D([x, y]) == [D(x), y] + [x, D(y)] over all ordered pairs (self-maps)."""
    if not d.domain.compatible(d.codomain):
        raise ValueError("derivability is defined for self-maps only")
    ring = d.domain
    c = ring.commutator_index_table()
    a = ring.add_index_table()
    v = d.values
    n = ring.size
    idx = np.arange(n)
    lhs = v[c]
    rhs = a[c[v[:, None], idx[None, :]], c[idx[:, None], v[None, :]]]
    bad = lhs != rhs
    if not bad.any():
        return Verdict(True)
    i, j = _first_mismatch(bad)
    return Verdict(False, (ring.from_index(i), ring.from_index(j)), "lie-derivable")


def is_lie_triple_derivable(d: MapTable) -> Verdict:
    """D([[x,y],z]) == [[D(x),y],z] + [[x,D(y)],z] + [[x,y],D(z)] over all
    ordered triples.  The identity is not multilinear in a set-map D, so the
    scan is genuinely cubic; it is chunked over z and vectorised."""
    if not d.domain.compatible(d.codomain):
        raise ValueError("derivability is defined for self-maps only")
    ring = d.domain
    c = ring.commutator_index_table()
    a = ring.add_index_table()
    v = d.values
    n = ring.size
    idx = np.arange(n)
    dx_y = c[v[:, None], idx[None, :]]  # [D(x), y]
    x_dy = c[idx[:, None], v[None, :]]  # [x, D(y)]
    xy = c  # [x, y]
    for z in range(n):
        col = c[:, z]
        lhs = v[col[xy]]
        rhs = a[a[col[dx_y], col[x_dy]], c[:, int(v[z])][xy]]
        bad = lhs != rhs
        if bad.any():
            i, j = _first_mismatch(bad)
            return Verdict(
                False,
                (ring.from_index(i), ring.from_index(j), ring.from_index(z)),
                "lie-triple-derivable",
            )
    return Verdict(True)


def derivable_report(d: MapTable) -> dict[str, Verdict]:
    """Both derivability predicates, cross-checked: a Lie derivable map is
    always Lie triple derivable, so derivable=True with triple=False would
    indicate an internal inconsistency and raises."""
    simple = is_lie_derivable(d)
    triple = is_lie_triple_derivable(d)
    if simple.ok and not triple.ok:
        raise AssertionError(
            "map verified Lie derivable but not Lie triple derivable; "
            "the verifiers disagree"
        )
    return {"lie_derivable": simple, "lie_triple_derivable": triple}


def additivity_defect(phi: MapTable, a: Element, b: Element) -> Element:
    """phi(a+b) - phi(a) - phi(b), an element of the codomain."""
    return phi(a + b) - phi(a) - phi(b)


@dataclass
class DefectReport:
    """All pairwise additivity defects of a map, classified against the
    centre of the codomain."""

    phi: MapTable
    defects: np.ndarray  # (n, n) codomain element indices
    centre: Submodule
    all_zero: bool
    all_central: bool
    witness: tuple[Element, Element, Element] | None  # (a, b, defect) non-central
    sample_nonzero: tuple[Element, Element, Element] | None

    def defect(self, a: Element, b: Element) -> Element:
        return self.phi.codomain.from_index(int(self.defects[a.index, b.index]))


def check_almost_additive(phi: MapTable, centre: Submodule | None = None) -> DefectReport:
    """Is every additivity defect central in the codomain?

    ``centre`` defaults to the codomain's centre (nucleus intersected with
    the commutant); pass another submodule to grade against a different
    reference.
    """
    dom, cod = phi.domain, phi.codomain
    if centre is None:
        centre = analysis.centre(cod)
    ad = dom.add_index_table()
    ac = cod.add_index_table()
    neg = cod.neg_index_vector()
    v = phi.values
    negv = neg[v]
    defects = ac[ac[v[ad], negv[:, None]], negv[None, :]]
    central_mask = np.zeros(cod.size, dtype=bool)
    for e in centre.elements():
        central_mask[e.index] = True
    all_zero = not defects.any()
    bad = ~central_mask[defects]
    witness = None
    if bad.any():
        i, j = _first_mismatch(bad)
        witness = (
            dom.from_index(i),
            dom.from_index(j),
            cod.from_index(int(defects[i, j])),
        )
    sample = None
    if defects.any():
        i, j = _first_mismatch(defects != 0)
        sample = (
            dom.from_index(i),
            dom.from_index(j),
            cod.from_index(int(defects[i, j])),
        )
    return DefectReport(
        phi=phi,
        defects=defects,
        centre=centre,
        all_zero=all_zero,
        all_central=not bad.any(),
        witness=witness,
        sample_nonzero=sample,
    )


def inner_lie_derivation(ring: RingSpec, x: Element) -> MapTable:
    """The map y -> [x, y]."""
    if not ring.compatible(x.ring):
        raise ValueError("element outside the ring")
    c = ring.commutator_index_table()
    return MapTable(ring, ring, c[x.index, :].copy())


def central_shift(phi: MapTable, shift) -> MapTable:
    """phi plus a central offset: x -> phi(x) + s(x).

    ``shift`` maps domain elements to codomain elements (dict or callable;
    missing/None means zero).  Every shift value must lie in the centre of
    the codomain, and the shift must vanish on every commutator value of
    the domain: brackets kill central offsets, so these two requirements
    are exactly what keeps the result Lie multiplicative whenever phi is.
    """
    dom, cod = phi.domain, phi.codomain
    zero = cod.zero()

    def lookup(x: Element) -> Element:
        if callable(shift):
            v = shift(x)
        else:
            v = shift.get(x)
        return zero if v is None else v

    cen = analysis.centre(cod)
    offsets = np.zeros(dom.size, dtype=np.int64)
    for i in range(dom.size):
        s = lookup(dom.from_index(i))
        if not cod.compatible(s.ring):
            raise ValueError("shift value outside the codomain")
        if s not in cen:
            raise ValueError(f"shift value {s.label()} is not central in the codomain")
        offsets[i] = s.index
    comm_values = np.unique(dom.commutator_index_table())
    for cv in comm_values:
        if offsets[int(cv)]:
            raise ValueError(
                f"shift must vanish on commutator values; "
                f"{dom.from_index(int(cv)).label()} is one"
            )
    ac = cod.add_index_table()
    return MapTable(dom, cod, ac[phi.values, offsets])


@dataclass
class SearchResult:
    maps: list[MapTable]
    complete: bool
    nodes: int


def search_lie_multiplicative_bijections(
    domain: RingSpec,
    codomain: RingSpec | None = None,
    budget: int | None = None,
    require_bijection: bool = True,
) -> SearchResult:
    """Enumerate Lie multiplicative maps by backtracking.

    Images are assigned in ascending element-index order with phi(0) = 0
    forced (phi(0) = phi([0,0]) = [phi(0), phi(0)] = 0 for any Lie
    multiplicative map).  At each assignment the bracket constraint is
    checked against every pair of already-assigned arguments whose
    commutator is also assigned, which keeps the search sound and complete.
    ``budget`` bounds the number of assignment attempts; when it runs out
    the result carries complete=False.
    """
    cod = codomain if codomain is not None else domain
    if domain.size != cod.size:
        raise ValueError("domain and codomain must have the same number of elements")
    n = domain.size
    cd = domain.commutator_index_table()
    cc = cod.commutator_index_table()
    rev: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for u in range(n):
        for w in range(n):
            rev[int(cd[u, w])].append((u, w))

    values = np.zeros(n, dtype=np.int64)
    used = np.zeros(n, dtype=bool)
    used[0] = True
    found: list[MapTable] = []
    nodes = 0
    aborted = False

    def feasible(m: int, y: int) -> bool:
        for u in range(m + 1):
            yu = y if u == m else int(values[u])
            c1 = int(cd[m, u])
            if c1 <= m:
                fc = y if c1 == m else int(values[c1])
                if fc != int(cc[y, yu]):
                    return False
            c2 = int(cd[u, m])
            if c2 <= m:
                fc = y if c2 == m else int(values[c2])
                if fc != int(cc[yu, y]):
                    return False
        for (u, w) in rev[m]:
            if u <= m and w <= m:
                yu = y if u == m else int(values[u])
                yw = y if w == m else int(values[w])
                if int(cc[yu, yw]) != y:
                    return False
        return True

    def dfs(m: int) -> bool:
        nonlocal nodes, aborted
        if m == n:
            found.append(MapTable(domain, cod, values.copy()))
            return True
        for y in range(n):
            if require_bijection and used[y]:
                continue
            if budget is not None and nodes >= budget:
                aborted = True
                return False
            nodes += 1
            if feasible(m, y):
                values[m] = y
                used_before = used[y]
                used[y] = True
                ok = dfs(m + 1)
                used[y] = used_before if not require_bijection else False
                values[m] = 0
                if not ok:
                    return False
        return True

    if n == 1:
        found.append(MapTable(domain, cod, values.copy()))
    else:
        dfs(1)
    return SearchResult(maps=found, complete=not aborted, nodes=nodes)
