"""Generators, the mod-2 grading, and the invariant matrices.

A generator picks one intersection point per beta circle so that the chosen
alpha curves are pairwise distinct, every alpha circle is used, and arcs are
used at most once.  Its grading adds four pieces: the local intersection
parities, the inversions of the permutation matching beta order to the total
alpha order, the inversions of the shuffle (unoccupied out-arcs, occupied
out-arcs), and the correction (a + n1) * k, everything mod 2.

The matrix of the invariant sends the incoming idempotent I to the outgoing
idempotent J = unoccupied out-arcs, summing (-1)^grading, optionally times
the product of the point weights.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import exterior as X
from .diagram import HeegaardDiagram, reinterpret_one_sided
from .rings import ZZ, GroupRing, augmentation


@dataclass(frozen=True)
class Generator:
    """One chosen point per beta circle, aligned with the beta order."""

    points: tuple

    def alpha_ids(self) -> tuple:
        return tuple(p.alpha for p in self.points)


def enumerate_generators(h: HeegaardDiagram) -> list:
    """Backtracking over beta circles in stored order; the output order is
    lexicographic in (beta order, point order)."""
    by_beta = [h.points_on_beta(bid) for bid in h.beta_ids()]
    circles = set(h.alpha_circles)
    out: list = []
    chosen: list = []
    used: set = set()

    def rec(i: int) -> None:
        if len(circles - used) > len(by_beta) - i:
            return
        if i == len(by_beta):
            out.append(Generator(tuple(chosen)))
            return
        for p in by_beta[i]:
            if p.alpha in used:
                continue
            used.add(p.alpha)
            chosen.append(p)
            rec(i + 1)
            chosen.pop()
            used.discard(p.alpha)

    rec(0)
    return out


@dataclass(frozen=True)
class GradingData:
    intersection_parity: int
    inv_sigma_x: int
    inv_idempotent: int
    correction: int
    total: int
    o_l: tuple
    obar_l: tuple
    o_r: tuple
    obar_r: tuple
    k: int
    l: int


def _check_generator(h: HeegaardDiagram, x: Generator) -> None:
    ids = h.beta_ids()
    if len(x.points) != len(ids):
        raise ValueError("generator does not assign every beta circle")
    point_set = set(h.points)
    for bid, p in zip(ids, x.points):
        if p not in point_set or p.beta != bid:
            raise ValueError(f"generator point not on beta circle {bid!r}")
    alphas = x.alpha_ids()
    if len(set(alphas)) != len(alphas):
        raise ValueError("generator occupies an alpha curve twice")
    if not set(h.alpha_circles) <= set(alphas):
        raise ValueError("generator leaves an alpha circle unoccupied")


def gr_da(h: HeegaardDiagram, x: Generator) -> GradingData:
    _check_generator(h, x)
    i_sum = sum(1 for p in x.points if p.sign == -1)
    pos = {aid: i for i, aid in enumerate(h.alpha_order())}
    inv_sigma = X.perm_inversions([pos[p.alpha] for p in x.points])
    occupied = set(x.alpha_ids())
    o_l = tuple(j + 1 for j, (aid, _) in enumerate(h.alpha_out)
                if aid in occupied)
    obar_l = tuple(j + 1 for j, (aid, _) in enumerate(h.alpha_out)
                   if aid not in occupied)
    o_r = tuple(i + 1 for i, (aid, _) in enumerate(h.alpha_in)
                if aid in occupied)
    obar_r = tuple(i + 1 for i, (aid, _) in enumerate(h.alpha_in)
                   if aid not in occupied)
    k = len(o_r)
    inv_idem = X.cross_inversions(obar_l, o_l)
    correction = (h.a * k + h.n1 * k) % 2
    total = (i_sum + inv_sigma + inv_idem + correction) % 2
    return GradingData(
        intersection_parity=i_sum % 2,
        inv_sigma_x=inv_sigma,
        inv_idempotent=inv_idem,
        correction=correction,
        total=total,
        o_l=o_l, obar_l=obar_l, o_r=o_r, obar_r=obar_r,
        k=k, l=len(obar_l),
    )


def bsda_z(h: HeegaardDiagram) -> X.GradedMap:
    """Integer matrix: entry (I, J) sums (-1)^grading over the generators
    with occupied in-arcs I and unoccupied out-arcs J."""
    entries: dict = {}
    for x in enumerate_generators(h):
        g = gr_da(h, x)
        key = (g.o_r, g.obar_l)
        entries[key] = entries.get(key, 0) + (1 if g.total % 2 == 0 else -1)
    entries = {k: v for k, v in entries.items() if v}
    return X.GradedMap(ZZ, h.n0, h.n1, h.degree, entries)


def weight_ring(h: HeegaardDiagram) -> GroupRing:
    return GroupRing(h.group.free_rank, h.group.torsion_order)


def bsda_zh(h: HeegaardDiagram) -> X.GradedMap:
    """Weighted matrix over Z[H]: each generator contributes its sign times
    the product of its point weights."""
    ring = weight_ring(h)
    entries: dict = {}
    for x in enumerate_generators(h):
        g = gr_da(h, x)
        w = h.group.identity()
        for p in x.points:
            w = h.group.mul_weight(w, p.weight)
        term = ring.monomial(w.monomial(),
                             ring.coeff.from_int(1 if g.total % 2 == 0 else -1))
        key = (g.o_r, g.obar_l)
        entries[key] = ring.add(entries.get(key, ring.zero()), term)
    entries = {k: v for k, v in entries.items() if not ring.is_zero(v)}
    return X.GradedMap(ring, h.n0, h.n1, h.degree, entries)


def map_transform(f: X.GradedMap, new_ring, fn) -> X.GradedMap:
    """Entrywise ring change; zero images are dropped."""
    entries = {}
    for k, v in f.entries.items():
        w = fn(v)
        if not new_ring.is_zero(w):
            entries[k] = w
    return X.GradedMap(new_ring, f.source_rank, f.target_rank, f.degree, entries)


def augment_map(f_zh: X.GradedMap) -> X.GradedMap:
    """Send every weight to 1, landing back in the integer matrix."""
    return map_transform(f_zh, ZZ, augmentation)


def bsdd_element(h: HeegaardDiagram) -> X.ExtElement:
    """The one-sided form of the invariant, as a single element of the
    rank n0+n1 exterior algebra (incoming block first).

    Each generator lands on the basis monomial indexed by its unoccupied
    in-arcs and (shifted) unoccupied out-arcs; the sign is the one-sided
    grading plus the basis correction |unoccupied in-arcs|.
    """
    hdd = reinterpret_one_sided(h)
    n0 = h.n0
    terms: dict = {}
    for x in enumerate_generators(h):
        g = gr_da(h, x)
        gdd = gr_da(hdd, x)
        key = g.obar_r + tuple(n0 + j for j in g.obar_l)
        sign = 1 if (gdd.total + len(g.obar_r)) % 2 == 0 else -1
        terms[key] = terms.get(key, 0) + sign
    return X.ExtElement(ZZ, h.n0 + h.n1, terms)
