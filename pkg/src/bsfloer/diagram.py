"""Formal arc diagrams and bordered Heegaard diagrams.

Diagrams here are purely combinatorial: curves are ids, intersections are
(alpha id, beta id, sign, weight) records, and the geometry is represented
only through orderings and orientation flags.  Every downstream formula
consumes exactly this data, so nothing about positions along curves is
stored, and gluing merges point sets by union.

All orderings are array orders.  The total order on alpha curves is always
(outgoing arcs, circles, incoming arcs).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, replace

from .rings import GroupDescriptor, GroupRing, HWeight, parse_weight


# ---------------------------------------------------------------------------
# arc diagrams


@dataclass(frozen=True)
class ArcDiagram:
    """A finite union of intervals and circles with 2k matched points.

    Points are numbered consecutively through the components array; the
    matching is an ordered list of k pairs, and that list order is the arc
    order used everywhere.
    """

    components: tuple = ()
    matching: tuple = ()
    type_tag: str = "alpha"

    def __post_init__(self) -> None:
        comps = tuple((str(kind), int(count)) for kind, count in self.components)
        object.__setattr__(self, "components", comps)
        pairs = tuple(tuple(sorted((int(p), int(q)))) for p, q in self.matching)
        object.__setattr__(self, "matching", pairs)

    @property
    def arc_count(self) -> int:
        return len(self.matching)

    @property
    def point_count(self) -> int:
        return sum(c for _, c in self.components)

    def is_empty(self) -> bool:
        return not self.components and not self.matching

    def violations(self) -> list:
        out = []
        if self.type_tag not in ("alpha", "beta"):
            out.append(f"arc diagram type {self.type_tag!r} not alpha/beta")
        for kind, count in self.components:
            if kind not in ("interval", "circle"):
                out.append(f"component kind {kind!r} not interval/circle")
            if count < 0:
                out.append("negative point count on a component")
        seen: set = set()
        for p, q in self.matching:
            for x in (p, q):
                if not 0 <= x < self.point_count:
                    out.append(f"matched point {x} out of range")
                if x in seen:
                    out.append(f"point {x} matched twice")
                seen.add(x)
        if p_missing := self.point_count - len(seen):
            if not out:
                out.append(f"{p_missing} points left unmatched")
        return out


EMPTY_ARCS = ArcDiagram()


def build_arc_diagram(components, matching, type_tag: str = "alpha") -> ArcDiagram:
    z = ArcDiagram(tuple(components), tuple(matching), type_tag)
    bad = z.violations()
    if bad:
        raise ValueError("; ".join(bad))
    return z


def interval_arcs(n: int, matching=None) -> ArcDiagram:
    """Single interval with 2n points; default matching pairs neighbours."""
    if n == 0:
        return EMPTY_ARCS
    if matching is None:
        matching = [(2 * i, 2 * i + 1) for i in range(n)]
    return build_arc_diagram([("interval", 2 * n)], matching)


def arc_eq(z1: ArcDiagram, z2: ArcDiagram) -> bool:
    """Structural equality, used as the gluing-interface test."""
    return (z1.components == z2.components and z1.matching == z2.matching
            and z1.type_tag == z2.type_tag)


def dual(z: ArcDiagram) -> ArcDiagram:
    """Combinatorial shadow of the dual: same arcs, type flipped."""
    flip = "beta" if z.type_tag == "alpha" else "alpha"
    return ArcDiagram(z.components, z.matching, flip)


def reverse(z: ArcDiagram) -> ArcDiagram:
    """Reverse the orientation of every component by reversing positions."""
    remap = {}
    base = 0
    for _, count in z.components:
        for i in range(count):
            remap[base + i] = base + count - 1 - i
        base += count
    matching = tuple((remap[p], remap[q]) for p, q in z.matching)
    return ArcDiagram(z.components, matching, z.type_tag)


def concat_arcs(z1: ArcDiagram, z2: ArcDiagram) -> ArcDiagram:
    if z1.is_empty():
        return z2
    if z2.is_empty():
        return z1
    if z1.type_tag != z2.type_tag:
        raise ValueError("cannot concatenate arc diagrams of different types")
    shift = z1.point_count
    matching = z1.matching + tuple((p + shift, q + shift) for p, q in z2.matching)
    return ArcDiagram(z1.components + z2.components, matching, z1.type_tag)


# ---------------------------------------------------------------------------
# Heegaard diagrams


@dataclass(frozen=True)
class Point:
    alpha: str
    beta: str
    sign: int
    weight: HWeight


ROLE_RE = re.compile(r"^(core|newOut\((\d+)\)|newIn\((\d+)\))$")


def parse_role(role: str):
    m = ROLE_RE.match(role)
    if not m:
        raise ValueError(f"malformed role {role!r}")
    if role == "core":
        return ("core", None)
    kind = "newOut" if role.startswith("newOut") else "newIn"
    return (kind, int(m.group(2) or m.group(3)))


@dataclass(frozen=True)
class HeegaardDiagram:
    group: GroupDescriptor
    boundary_left: ArcDiagram       # Z1, read by the outgoing arcs
    boundary_right: ArcDiagram      # Z0, read by the incoming arcs
    alpha_out: tuple                # (id, orient) per Z1 arc
    alpha_circles: tuple            # ids
    alpha_in: tuple                 # (id, orient) per Z0 arc
    beta_circles: tuple             # (id, role or None)
    points: tuple

    @property
    def n1(self) -> int:
        return self.boundary_left.arc_count

    @property
    def n0(self) -> int:
        return self.boundary_right.arc_count

    @property
    def a(self) -> int:
        return len(self.alpha_circles)

    @property
    def b(self) -> int:
        return len(self.beta_circles)

    @property
    def degree(self) -> int:
        """Homogeneity degree of the associated map: n1 + circles - betas."""
        return self.n1 + self.a - self.b

    def alpha_order(self) -> tuple:
        """Total alpha order: outgoing arcs, circles, incoming arcs."""
        return (tuple(i for i, _ in self.alpha_out) + self.alpha_circles
                + tuple(i for i, _ in self.alpha_in))

    def beta_ids(self) -> tuple:
        return tuple(i for i, _ in self.beta_circles)

    def points_on_alpha(self, aid: str) -> tuple:
        return tuple(p for p in self.points if p.alpha == aid)

    def points_on_beta(self, bid: str) -> tuple:
        return tuple(p for p in self.points if p.beta == bid)

    def is_ordinary(self) -> bool:
        return self.n0 == 0 and self.n1 == 0


def make_diagram(group, boundary_left, boundary_right, alpha_out,
                 alpha_circles, alpha_in, beta_circles, points,
                 check: bool = True) -> HeegaardDiagram:
    h = HeegaardDiagram(
        group=group,
        boundary_left=boundary_left if boundary_left is not None else EMPTY_ARCS,
        boundary_right=boundary_right if boundary_right is not None else EMPTY_ARCS,
        alpha_out=tuple((str(i), str(o)) for i, o in alpha_out),
        alpha_circles=tuple(str(i) for i in alpha_circles),
        alpha_in=tuple((str(i), str(o)) for i, o in alpha_in),
        beta_circles=tuple((str(i), r) for i, r in beta_circles),
        points=tuple(points),
    )
    if check:
        bad = validate(h)
        if bad:
            raise ValueError("; ".join(bad))
    return h


def validate(h: HeegaardDiagram) -> list:
    """All structural violations as strings; empty list means well formed."""
    out = []
    for side, z in (("left", h.boundary_left), ("right", h.boundary_right)):
        out.extend(f"boundary {side}: {v}" for v in z.violations())
        if not z.is_empty() and z.type_tag != "alpha":
            out.append(f"boundary {side} must be an alpha arc diagram")
    if len(h.alpha_out) != h.boundary_left.arc_count:
        out.append(f"{len(h.alpha_out)} outgoing arcs for "
                   f"{h.boundary_left.arc_count} matching arcs")
    if len(h.alpha_in) != h.boundary_right.arc_count:
        out.append(f"{len(h.alpha_in)} incoming arcs for "
                   f"{h.boundary_right.arc_count} matching arcs")
    alpha_ids = list(h.alpha_order())
    if len(set(alpha_ids)) != len(alpha_ids):
        out.append("duplicate alpha id")
    beta_ids = list(h.beta_ids())
    if len(set(beta_ids)) != len(beta_ids):
        out.append("duplicate beta id")
    for _, orient in h.alpha_out + h.alpha_in:
        if orient not in ("same", "opposite"):
            out.append(f"orientation flag {orient!r} not same/opposite")
    aset, bset = set(alpha_ids), set(beta_ids)
    for p in h.points:
        if p.alpha not in aset:
            out.append(f"point references missing alpha {p.alpha!r}")
        if p.beta not in bset:
            out.append(f"point references missing beta {p.beta!r}")
        if p.sign not in (1, -1):
            out.append(f"point sign {p.sign!r} not +1/-1")
        if len(p.weight.free) != h.group.free_rank:
            out.append("point weight has wrong free rank")
        elif not 0 <= p.weight.tors < h.group.torsion_order:
            out.append("point weight torsion exponent out of range")
    out.extend(_role_violations(h))
    return out


def _role_violations(h: HeegaardDiagram) -> list:
    roles = [r for _, r in h.beta_circles]
    if all(r is None for r in roles):
        return []
    if any(r is None for r in roles):
        return ["role tags must be all present or all absent"]
    parsed = []
    for r in roles:
        try:
            parsed.append(parse_role(r))
        except ValueError as e:
            return [str(e)]
    kinds = [k for k, _ in parsed]
    order = {"newOut": 0, "core": 1, "newIn": 2}
    if [order[k] for k in kinds] != sorted(order[k] for k in kinds):
        return ["roles must run (newOut, core, newIn)"]
    for kind in ("newOut", "newIn"):
        js = [j for k, j in parsed if k == kind]
        if js != list(range(1, len(js) + 1)):
            return [f"{kind} indices must run 1..{len(js)}"]
    return []


# ---------------------------------------------------------------------------
# builders


def empty_diagram(group=None) -> HeegaardDiagram:
    group = group if group is not None else GroupDescriptor(0)
    return make_diagram(group, None, None, [], [], [], [], [])


def half_identity(z: ArcDiagram, side: str, group=None) -> HeegaardDiagram:
    """One beta circle per arc of z, meeting only that side's arc once.

    Outgoing side points carry sign -1, incoming side +1.
    """
    if z.type_tag != "alpha":
        raise ValueError("half identity needs an alpha arc diagram")
    if side not in ("out", "in"):
        raise ValueError("side must be out or in")
    group = group if group is not None else GroupDescriptor(0)
    n = z.arc_count
    one = group.identity()
    betas = [(f"b{j+1}", None) for j in range(n)]
    if side == "out":
        arcs = [(f"aOut{j+1}", "same") for j in range(n)]
        points = [Point(arcs[j][0], betas[j][0], -1, one) for j in range(n)]
        return make_diagram(group, z, None, arcs, [], [], betas, points)
    arcs = [(f"aIn{j+1}", "opposite") for j in range(n)]
    points = [Point(arcs[j][0], betas[j][0], 1, one) for j in range(n)]
    return make_diagram(group, None, z, [], [], arcs, betas, points)


def identity_diagram(z: ArcDiagram, group=None) -> HeegaardDiagram:
    """Both boundaries z; beta_j crosses aOut_j with sign -1 and aIn_j with
    sign +1, no alpha circles."""
    if z.type_tag != "alpha":
        raise ValueError("identity diagram needs an alpha arc diagram")
    group = group if group is not None else GroupDescriptor(0)
    n = z.arc_count
    one = group.identity()
    outs = [(f"aOut{j+1}", "same") for j in range(n)]
    ins = [(f"aIn{j+1}", "opposite") for j in range(n)]
    betas = [(f"b{j+1}", None) for j in range(n)]
    points = []
    for j in range(n):
        points.append(Point(outs[j][0], betas[j][0], -1, one))
        points.append(Point(ins[j][0], betas[j][0], 1, one))
    return make_diagram(group, z, z, outs, [], ins, betas, points)


# ---------------------------------------------------------------------------
# gluing and disjoint union


def _flags_compatible(in_flag: str, out_flag: str) -> bool:
    # the incoming arc runs against its Z exactly when the outgoing arc
    # runs with it; a consistently reversed pair also matches up
    return (in_flag == "opposite") == (out_flag == "same")


def glue(h_left: HeegaardDiagram, h_right: HeegaardDiagram) -> HeegaardDiagram:
    """Glue h_right's outgoing boundary to h_left's incoming boundary.

    The composite reads right-to-left: h_left receives the output of
    h_right.  Arc j of each side merges into a new alpha circle G<j>,
    placed between the left and right circles in the circle order.
    """
    if h_left.group != h_right.group:
        raise ValueError("glue requires equal group descriptors")
    iface = h_left.boundary_right
    if iface.is_empty():
        raise ValueError("empty gluing interface: use disjoint")
    if not arc_eq(iface, h_right.boundary_left):
        raise ValueError("gluing interface mismatch")
    for (_, fin), (_, fout) in zip(h_left.alpha_in, h_right.alpha_out):
        if not _flags_compatible(fin, fout):
            raise ValueError("gluing interface arc orientations disagree")
    k = iface.arc_count
    lmap = {aid: f"L.{aid}" for aid in h_left.alpha_order()}
    rmap = {aid: f"R.{aid}" for aid in h_right.alpha_order()}
    for j in range(k):
        lmap[h_left.alpha_in[j][0]] = f"G{j+1}"
        rmap[h_right.alpha_out[j][0]] = f"G{j+1}"
    lbeta = {bid: f"L.{bid}" for bid in h_left.beta_ids()}
    rbeta = {bid: f"R.{bid}" for bid in h_right.beta_ids()}

    alpha_out = [(lmap[i], o) for i, o in h_left.alpha_out]
    alpha_in = [(rmap[i], o) for i, o in h_right.alpha_in]
    circles = ([lmap[i] for i in h_left.alpha_circles]
               + [f"G{j+1}" for j in range(k)]
               + [rmap[i] for i in h_right.alpha_circles])
    # the composite is not a normalize output, so role tags do not survive
    betas = ([(lbeta[i], None) for i, _ in h_left.beta_circles]
             + [(rbeta[i], None) for i, _ in h_right.beta_circles])
    points = ([Point(lmap[p.alpha], lbeta[p.beta], p.sign, p.weight)
               for p in h_left.points]
              + [Point(rmap[p.alpha], rbeta[p.beta], p.sign, p.weight)
                 for p in h_right.points])
    return make_diagram(h_left.group, h_left.boundary_left,
                        h_right.boundary_right, alpha_out, circles,
                        alpha_in, betas, points)


def disjoint(h: HeegaardDiagram, h2: HeegaardDiagram) -> HeegaardDiagram:
    """Disjoint union with every ordering concatenated, h first."""
    if h.group != h2.group:
        raise ValueError("disjoint union requires equal group descriptors")
    amap = {aid: f"A.{aid}" for aid in h.alpha_order()}
    bmap = {aid: f"B.{aid}" for aid in h2.alpha_order()}
    abeta = {bid: f"A.{bid}" for bid in h.beta_ids()}
    bbeta = {bid: f"B.{bid}" for bid in h2.beta_ids()}
    alpha_out = ([(amap[i], o) for i, o in h.alpha_out]
                 + [(bmap[i], o) for i, o in h2.alpha_out])
    alpha_in = ([(amap[i], o) for i, o in h.alpha_in]
                + [(bmap[i], o) for i, o in h2.alpha_in])
    circles = ([amap[i] for i in h.alpha_circles]
               + [bmap[i] for i in h2.alpha_circles])
    betas = ([(abeta[i], None) for i, _ in h.beta_circles]
             + [(bbeta[i], None) for i, _ in h2.beta_circles])
    points = ([Point(amap[p.alpha], abeta[p.beta], p.sign, p.weight)
               for p in h.points]
              + [Point(bmap[p.alpha], bbeta[p.beta], p.sign, p.weight)
                 for p in h2.points])
    return make_diagram(h.group, concat_arcs(h.boundary_left, h2.boundary_left),
                        concat_arcs(h.boundary_right, h2.boundary_right),
                        alpha_out, circles, alpha_in, betas, points)


# ---------------------------------------------------------------------------
# normalization


def _fresh(base: str, used: set) -> str:
    name = base
    while name in used:
        name += "'"
    used.add(name)
    return name


def normalize(h: HeegaardDiagram) -> HeegaardDiagram:
    """Glue identity diagrams onto both boundaries, built directly.

    Each outgoing arc j is promoted to a circle (keeping its id and points)
    that picks up one +1 point on a new beta circle B^out_j, while a fresh
    outgoing arc meets that beta circle once with sign -1; incoming arcs are
    treated the same way with the two signs swapped.  Role tags record which
    beta circle came from which side.
    """
    group = h.group
    one = group.identity()
    used = set(h.alpha_order()) | set(h.beta_ids())
    n1, n0 = h.n1, h.n0

    new_out_beta = [_fresh(f"BOut{j+1}", used) for j in range(n1)]
    new_in_beta = [_fresh(f"BIn{i+1}", used) for i in range(n0)]
    fresh_out = [_fresh(f"nOut{j+1}", used) for j in range(n1)]
    fresh_in = [_fresh(f"nIn{i+1}", used) for i in range(n0)]

    betas = ([(new_out_beta[j], f"newOut({j+1})") for j in range(n1)]
             + [(bid, "core") for bid, _ in h.beta_circles]
             + [(new_in_beta[i], f"newIn({i+1})") for i in range(n0)])
    circles = (tuple(i for i, _ in h.alpha_out) + h.alpha_circles
               + tuple(i for i, _ in h.alpha_in))
    alpha_out = [(fresh_out[j], "same") for j in range(n1)]
    alpha_in = [(fresh_in[i], "opposite") for i in range(n0)]

    points = list(h.points)
    for j in range(n1):
        points.append(Point(h.alpha_out[j][0], new_out_beta[j], 1, one))
        points.append(Point(fresh_out[j], new_out_beta[j], -1, one))
    for i in range(n0):
        points.append(Point(h.alpha_in[i][0], new_in_beta[i], -1, one))
        points.append(Point(fresh_in[i], new_in_beta[i], 1, one))
    return make_diagram(group, h.boundary_left, h.boundary_right,
                        alpha_out, circles, alpha_in, betas, points)


def normalized_roles(h: HeegaardDiagram):
    """Split the beta circles of a normalized diagram by role.

    Returns (out beta ids indexed by arc j, core beta ids, in beta ids
    indexed by arc i); raises when the tags are absent or incomplete.
    """
    outs: dict = {}
    cores = []
    ins: dict = {}
    for bid, role in h.beta_circles:
        if role is None:
            raise ValueError("diagram lacks role tags: not a normalize output")
        kind, idx = parse_role(role)
        if kind == "core":
            cores.append(bid)
        elif kind == "newOut":
            outs[idx] = bid
        else:
            ins[idx] = bid
    if sorted(outs) != list(range(1, h.n1 + 1)):
        raise ValueError("newOut roles do not cover the outgoing arcs")
    if sorted(ins) != list(range(1, h.n0 + 1)):
        raise ValueError("newIn roles do not cover the incoming arcs")
    return ([outs[j] for j in range(1, h.n1 + 1)], cores,
            [ins[i] for i in range(1, h.n0 + 1)])


# ---------------------------------------------------------------------------
# one-sided reinterpretation and capping


def _flip(orient: str) -> str:
    return "opposite" if orient == "same" else "same"


def reinterpret_one_sided(h: HeegaardDiagram) -> HeegaardDiagram:
    """Move every arc to the outgoing side: former incoming arcs first, with
    reversed orientation, then the outgoing arcs.  Points are untouched."""
    boundary = concat_arcs(reverse(h.boundary_right), h.boundary_left)
    alpha_out = ([(i, _flip(o)) for i, o in h.alpha_in]
                 + list(h.alpha_out))
    return make_diagram(h.group, boundary, None, alpha_out,
                        h.alpha_circles, [], h.beta_circles, h.points)


def cap(h_norm: HeegaardDiagram, I, J) -> HeegaardDiagram:
    """Close a normalized diagram along the arcs: cap the outgoing side at
    each j outside J (new circle hits B^out_j once, sign -1) and the
    incoming side at each i in I (new circle hits B^in_i once, sign +1),
    then delete all arcs and their points."""
    out_betas, _, in_betas = normalized_roles(h_norm)
    n1, n0 = h_norm.n1, h_norm.n0
    I = sorted({int(i) for i in I})
    J = sorted({int(j) for j in J})
    if I and not (1 <= I[0] and I[-1] <= n0):
        raise ValueError("I must index incoming arcs")
    if J and not (1 <= J[0] and J[-1] <= n1):
        raise ValueError("J must index outgoing arcs")
    jc = [j for j in range(1, n1 + 1) if j not in set(J)]
    one = h_norm.group.identity()
    used = set(h_norm.alpha_order()) | set(h_norm.beta_ids())
    cap_out = [(_fresh(f"capOut{j}", used), j) for j in jc]
    cap_in = [(_fresh(f"capIn{i}", used), i) for i in I]
    arc_ids = {i for i, _ in h_norm.alpha_out} | {i for i, _ in h_norm.alpha_in}
    points = [p for p in h_norm.points if p.alpha not in arc_ids]
    points += [Point(cid, out_betas[j - 1], -1, one) for cid, j in cap_out]
    points += [Point(cid, in_betas[i - 1], 1, one) for cid, i in cap_in]
    circles = ([cid for cid, _ in cap_out] + list(h_norm.alpha_circles)
               + [cid for cid, _ in cap_in])
    return make_diagram(h_norm.group, None, None, [], circles, [],
                        h_norm.beta_circles, points)


# ---------------------------------------------------------------------------
# reweighting


def reweight(h: HeegaardDiagram, curve_id: str, w: HWeight) -> HeegaardDiagram:
    """Multiply the weight of every point on the named curve: by w on an
    alpha curve, by w^{-1} on a beta circle."""
    if curve_id in set(h.alpha_order()):
        factor = w
        on = lambda p: p.alpha == curve_id
    elif curve_id in set(h.beta_ids()):
        factor = h.group.inv_weight(w)
        on = lambda p: p.beta == curve_id
    else:
        raise ValueError(f"no curve named {curve_id!r}")
    points = tuple(
        replace(p, weight=h.group.mul_weight(p.weight, factor)) if on(p) else p
        for p in h.points)
    return replace(h, points=points)


# ---------------------------------------------------------------------------
# canonical signatures (id-insensitive comparison)


def diagram_signature(h: HeegaardDiagram):
    """Canonical form with ids replaced by positions; role tags ignored."""
    apos = {aid: ("a", i) for i, aid in enumerate(h.alpha_order())}
    bpos = {bid: ("b", i) for i, bid in enumerate(h.beta_ids())}
    points = sorted((apos[p.alpha], bpos[p.beta], p.sign, p.weight.monomial())
                    for p in h.points)
    return (
        (h.group.free_rank, h.group.torsion_order),
        (h.boundary_left.components, h.boundary_left.matching),
        (h.boundary_right.components, h.boundary_right.matching),
        tuple(o for _, o in h.alpha_out),
        h.a,
        tuple(o for _, o in h.alpha_in),
        h.b,
        tuple(points),
    )


# ---------------------------------------------------------------------------
# JSON serialization


def _check_keys(obj: dict, allowed, where: str) -> None:
    if not isinstance(obj, dict):
        raise ValueError(f"{where} must be an object")
    extra = set(obj) - set(allowed)
    if extra:
        raise ValueError(f"unknown field(s) {sorted(extra)} in {where}")


def _arcs_to_json(z: ArcDiagram):
    if z.is_empty():
        return None
    return {
        "components": [{"kind": k, "points": c} for k, c in z.components],
        "matching": [[p, q] for p, q in z.matching],
        "type": z.type_tag,
    }


def _arcs_from_json(obj, where: str) -> ArcDiagram:
    if obj is None:
        return EMPTY_ARCS
    if not isinstance(obj, dict):
        raise ValueError(f"{where} must be an object or null")
    _check_keys(obj, ("components", "matching", "type"), where)
    comps = []
    for c in obj.get("components", []):
        _check_keys(c, ("kind", "points"), f"{where}.components[]")
        comps.append((c["kind"], c["points"]))
    matching = [tuple(pair) for pair in obj.get("matching", [])]
    return ArcDiagram(tuple(comps), tuple(matching), obj.get("type", "alpha"))


def to_json_dict(h: HeegaardDiagram) -> dict:
    ring = GroupRing(h.group.free_rank, h.group.torsion_order)
    betas = []
    for bid, role in h.beta_circles:
        entry = {"id": bid}
        if role is not None:
            entry["role"] = role
        betas.append(entry)
    points = []
    for p in h.points:
        entry = {"alpha": p.alpha, "beta": p.beta, "sign": p.sign}
        if not p.weight.is_identity():
            entry["weight"] = ring.mono_str(p.weight.monomial())
        points.append(entry)
    return {
        "group": {"free_rank": h.group.free_rank,
                  "torsion_order": h.group.torsion_order},
        "boundary_left": _arcs_to_json(h.boundary_left),
        "boundary_right": _arcs_to_json(h.boundary_right),
        "alpha": {
            "out": [{"id": i, "orient": o} for i, o in h.alpha_out],
            "circles": list(h.alpha_circles),
            "in": [{"id": i, "orient": o} for i, o in h.alpha_in],
        },
        "beta": {"circles": betas},
        "points": points,
    }


def from_json_dict(obj: dict) -> HeegaardDiagram:
    if not isinstance(obj, dict):
        raise ValueError("diagram document must be a JSON object")
    _check_keys(obj, ("group", "boundary_left", "boundary_right",
                      "alpha", "beta", "points", "comment"), "diagram")
    gobj = obj.get("group", {})
    _check_keys(gobj, ("free_rank", "torsion_order"), "group")
    group = GroupDescriptor(gobj.get("free_rank", 0),
                            gobj.get("torsion_order", 1))
    zl = _arcs_from_json(obj.get("boundary_left"), "boundary_left")
    zr = _arcs_from_json(obj.get("boundary_right"), "boundary_right")
    aobj = obj.get("alpha", {})
    _check_keys(aobj, ("out", "circles", "in"), "alpha")

    def arc_list(lst, default_orient, where):
        out = []
        for e in lst:
            _check_keys(e, ("id", "orient"), where)
            if "id" not in e:
                raise ValueError(f"missing id in {where}")
            out.append((str(e["id"]), e.get("orient", default_orient)))
        return out

    alpha_out = arc_list(aobj.get("out", []), "same", "alpha.out[]")
    alpha_in = arc_list(aobj.get("in", []), "opposite", "alpha.in[]")
    circles = [str(c) for c in aobj.get("circles", [])]
    bobj = obj.get("beta", {})
    _check_keys(bobj, ("circles",), "beta")
    betas = []
    for e in bobj.get("circles", []):
        _check_keys(e, ("id", "role"), "beta.circles[]")
        if "id" not in e:
            raise ValueError("missing id in beta.circles[]")
        betas.append((str(e["id"]), e.get("role")))
    points = []
    for e in obj.get("points", []):
        _check_keys(e, ("alpha", "beta", "sign", "weight"), "points[]")
        for key in ("alpha", "beta", "sign"):
            if key not in e:
                raise ValueError(f"missing {key} in points[]")
        w = parse_weight(group, e.get("weight", "1"))
        points.append(Point(str(e["alpha"]), str(e["beta"]), e["sign"], w))
    return make_diagram(group, zl, zr, alpha_out, circles, alpha_in,
                        betas, points)


def dumps(h: HeegaardDiagram, comment: str = None) -> str:
    obj = to_json_dict(h)
    if comment is not None:
        obj["comment"] = comment
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def loads(text: str) -> HeegaardDiagram:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"invalid JSON: {e}") from None
    try:
        return from_json_dict(obj)
    except (TypeError, KeyError, AttributeError) as e:
        raise ValueError(f"malformed diagram data: {e}") from None
