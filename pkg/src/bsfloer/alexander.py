"""Alexander functions and functors over Z, Z[G], and Q[H].

The function takes a deficiency-d presentation and d vectors in row
coordinates and returns the determinant of the matrix with those vectors
appended as columns; it is declared zero when the presentation map has a
kernel (componentwise over Q[H]).

The functor evaluates the function on the normalized diagram's presentation
with the new-beta unit vectors standing in for the boundary classes: both
the incoming rows (for I, ascending) and the outgoing rows (for the
complement of J, ascending) are appended with sign -1, and the entry carries
the sign (-1)^(inv(J, J^c) + c*(n1 - |J|)).  The identity fixture then
reproduces its invariant matrix on the nose.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import exterior as X
from .bsda import bsda_z, bsda_zh, map_transform
from .diagram import HeegaardDiagram, normalize, normalized_roles
from .homology import Presentation, presentation_matrix
from .rings import (
    ZZ,
    GroupRing,
    Matrix,
    QHRing,
    det_exact,
    integer_kernel_is_zero,
    rank_over_fractions,
)

RING_TAGS = ("z", "zg", "qh")


def to_free_part(zh_elem: dict) -> dict:
    """Project a group-ring element along torsion -> 1, landing in the
    free-part Laurent ring (torsion coordinate pinned to 0)."""
    out: dict = {}
    for g, c in zh_elem.items():
        key = (*g[:-1], 0)
        out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def _coerce(ring, x):
    return ring.from_int(x) if isinstance(x, int) else x


def _injective_domain(ring, entries, cols: int) -> bool:
    if cols == 0:
        return True
    if ring is ZZ:
        return integer_kernel_is_zero(entries)
    return rank_over_fractions(ring, entries) == cols


def alexander_function(pres, u):
    """det of the presentation with the deficiency-many vectors appended as
    columns on the right; zero whenever the presentation is not injective."""
    m = pres.matrix if isinstance(pres, Presentation) else pres
    ring = m.ring
    rows, cols = m.rows, m.cols
    d = rows - cols
    if d < 0:
        raise ValueError("presentation has negative deficiency")
    if len(u) != d:
        raise ValueError(f"expected {d} appended vectors, got {len(u)}")
    for v in u:
        if len(v) != rows:
            raise ValueError("appended vector has wrong length")

    if isinstance(ring, QHRing):
        out = []
        for ci, comp in enumerate(ring.components):
            centries = [[e[ci] for e in row] for row in m.entries]
            if not _injective_domain(comp, centries, cols):
                out.append(comp.zero())
                continue
            square = [
                centries[i]
                + [_coerce(comp, v[i]) if not isinstance(v[i], tuple)
                   else v[i][ci] for v in u]
                for i in range(rows)
            ]
            out.append(det_exact(comp, square))
        return tuple(out)

    if not _injective_domain(ring, m.entries, cols):
        return ring.zero()
    square = [
        list(m.entries[i]) + [_coerce(ring, v[i]) for v in u]
        for i in range(rows)
    ]
    return det_exact(ring, square)


def _presentation_in_ring(h_norm: HeegaardDiagram, ring_tag: str):
    if ring_tag == "z":
        return presentation_matrix(h_norm, "z")
    pres = presentation_matrix(h_norm, "zh")
    zh = pres.matrix
    if ring_tag == "zg":
        R = GroupRing(h_norm.group.free_rank, 1)
        entries = [[to_free_part(e) for e in row] for row in zh.entries]
    else:
        R = QHRing(h_norm.group)
        entries = [[R.from_zh(e) for e in row] for row in zh.entries]
    m = Matrix(R, entries, list(zh.row_labels), list(zh.col_labels))
    return Presentation(m, pres.roles)


def entry_vectors(h_norm: HeegaardDiagram) -> dict:
    """Appended vectors for every degree-compatible idempotent pair, as
    integer row vectors: -e(new-in row) for each element of I ascending,
    then -e(new-out row) for each element of the complement of J."""
    outs, _, ins = normalized_roles(h_norm)
    n0, n1, c = h_norm.n0, h_norm.n1, h_norm.degree
    beta_ids = h_norm.beta_ids()
    rows = len(beta_ids)
    row_of = {bid: i for i, bid in enumerate(beta_ids)}

    def neg_unit(row: int):
        return tuple(-1 if t == row else 0 for t in range(rows))

    out: dict = {}
    for I in X.subsets(n0):
        size_j = len(I) + c
        if size_j < 0 or size_j > n1:
            continue
        for J in X.subsets(n1, size_j):
            jc = tuple(j for j in range(1, n1 + 1) if j not in J)
            out[(I, J)] = ([neg_unit(row_of[ins[i - 1]]) for i in I]
                           + [neg_unit(row_of[outs[j - 1]]) for j in jc])
    return out


def alexander_functor(h_norm: HeegaardDiagram,
                      ring_tag: str = "z") -> X.GradedMap:
    if ring_tag not in RING_TAGS:
        raise ValueError(f"ring must be one of {RING_TAGS}")
    pres = _presentation_in_ring(h_norm, ring_tag)
    ring = pres.matrix.ring
    n0, n1 = h_norm.n0, h_norm.n1
    c = h_norm.degree
    entries: dict = {}
    if pres.matrix.rows < pres.matrix.cols:
        return X.GradedMap(ring, n0, n1, c, entries)
    for (I, J), u in entry_vectors(h_norm).items():
        val = alexander_function(pres, u)
        if ring.is_zero(val):
            continue
        jc = tuple(j for j in range(1, n1 + 1) if j not in J)
        exp = X.cross_inversions(J, jc) + c * (n1 - len(J))
        entries[(I, J)] = val if exp % 2 == 0 else ring.neg(val)
    return X.GradedMap(ring, n0, n1, c, entries)


def bsda_map(h: HeegaardDiagram, ring_tag: str) -> X.GradedMap:
    """The invariant matrix in the requested coefficients."""
    if ring_tag == "z":
        return bsda_z(h)
    f = bsda_zh(h)
    if ring_tag == "zh":
        return f
    if ring_tag == "zg":
        R = GroupRing(h.group.free_rank, 1)
        return map_transform(f, R, to_free_part)
    if ring_tag == "qh":
        R = QHRing(h.group)
        return map_transform(f, R, R.from_zh)
    raise ValueError(f"unknown ring tag {ring_tag!r}")


def random_equivalent_presentation(pres: Presentation, seed: int):
    """A presentation of the same cokernel, built by one block stabilization
    and a run of unimodular row/column operations.

    Returns (presentation, transport) where transport is the new-rows by
    old-rows change of basis: appended vectors must be multiplied through
    it before evaluating on the new presentation.
    """
    rnd = random.Random(seed)
    ring = pres.matrix.ring
    m = [list(r) for r in pres.matrix.entries]
    b = len(m)
    a = len(m[0]) if m else 0

    def draw():
        x = ring.from_int(rnd.randint(-2, 2))
        if isinstance(ring, GroupRing) and ring.free_rank and rnd.random() < 0.4:
            e = [0] * ring.free_rank
            e[rnd.randrange(ring.free_rank)] = rnd.choice((-1, 1))
            x = ring.mul(x, ring.monomial((*e, 0)))
        return x

    k = rnd.randint(1, 2)
    eta = [[draw() for _ in range(k)] for _ in range(b)]
    for i in range(b):
        m[i] = m[i] + [ring.neg(eta[i][t]) for t in range(k)]
    for t in range(k):
        m.append([ring.zero()] * a
                 + [ring.from_int(1 if s == t else 0) for s in range(k)])
    rows = b + k
    cols = a + k
    transport = [[ring.from_int(1 if j == i else 0) for j in range(b)]
                 for i in range(rows)]

    for _ in range(rnd.randint(4, 9)):
        kind = rnd.choice(("row_add", "col_add", "row_swap", "col_swap",
                           "row_neg", "col_neg"))
        if kind == "row_add" and rows > 1:
            i, j = rnd.sample(range(rows), 2)
            q = draw()
            m[i] = [ring.add(x, ring.mul(q, y)) for x, y in zip(m[i], m[j])]
            transport[i] = [ring.add(x, ring.mul(q, y))
                            for x, y in zip(transport[i], transport[j])]
        elif kind == "col_add" and cols > 1:
            i, j = rnd.sample(range(cols), 2)
            q = draw()
            for r in range(rows):
                m[r][i] = ring.add(m[r][i], ring.mul(q, m[r][j]))
        elif kind == "row_swap" and rows > 1:
            i, j = rnd.sample(range(rows), 2)
            m[i], m[j] = m[j], m[i]
            transport[i], transport[j] = transport[j], transport[i]
        elif kind == "col_swap" and cols > 1:
            i, j = rnd.sample(range(cols), 2)
            for r in range(rows):
                m[r][i], m[r][j] = m[r][j], m[r][i]
        elif kind == "row_neg":
            i = rnd.randrange(rows)
            m[i] = [ring.neg(x) for x in m[i]]
            transport[i] = [ring.neg(x) for x in transport[i]]
        elif kind == "col_neg":
            i = rnd.randrange(cols)
            for r in range(rows):
                m[r][i] = ring.neg(m[r][i])

    return Presentation(Matrix(ring, m), ()), transport


def transport_vector(ring, transport, v):
    """Push a row-coordinate vector through the change of basis."""
    old = [_coerce(ring, x) for x in v]
    return tuple(
        ring.sum(ring.mul(t, x) for t, x in zip(row, old))
        for row in transport
    )


@dataclass(frozen=True)
class CompareReport:
    ring: str
    match: bool
    unit: object
    bsda: X.GradedMap
    alexander: X.GradedMap


def compare_bsda_alexander(h: HeegaardDiagram,
                           ring_tag: str = "z") -> CompareReport:
    """Normalize, compute both maps, and compare up to one global unit."""
    if ring_tag not in RING_TAGS:
        raise ValueError(f"ring must be one of {RING_TAGS}")
    hn = normalize(h)
    f = bsda_map(hn, ring_tag)
    g = alexander_functor(hn, ring_tag)
    ok, unit = X.eq_up_to_global_unit(g, f)
    return CompareReport(ring_tag, ok, unit, f, g)
