"""Reidemeister and cobordism moves on Gauss diagrams.

Move kinds:

    r1_delete   remove a crossing whose two endpoints are adjacent
    r1_insert   add a kink on an arc
    r2_delete   cancel two opposite-sign crossings whose over endpoints
                are adjacent and whose under endpoints are adjacent
    r2_insert   poke: add such a cancelling pair across two arcs
    r3          slide: swap the endpoint pairs of a triangle
    saddle      oriented band resplice (merge or split components)
    birth       create a chordless circle
    death       delete a chordless circle

Virtual and mixed moves act as the identity on Gauss diagrams and have
no move kind; planar isotopy likewise.

Arc indexing: a cyclic component with k endpoints has arcs 0..k-1, arc i
running from endpoint i to endpoint i+1 (a chordless circle has the
single arc 0).  The open strand with k endpoints has arcs 0..k, arc i
being the gap before endpoint i.

Insertions place new endpoints into an arc; for r2_insert the over pair
is inserted first and the under-arc index q refers to the diagram with
the over pair already present (this only matters when both pairs land on
the same arc).

All moves are applied functionally: the input diagram is unchanged and
each application also yields the exact inverse move, so that certificate
paths can be reversed step by step.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .diagram import OVER, UNDER, DiagramError, GaussDiagram, make_diagram

R_MOVE_KINDS = frozenset(
    {"r1_delete", "r1_insert", "r2_delete", "r2_insert", "r3"}
)
COBORDISM_KINDS = frozenset({"saddle", "birth", "death"})
ALL_KINDS = R_MOVE_KINDS | COBORDISM_KINDS

_KIND_TO_TEXT = {
    "r1_delete": "r1-",
    "r1_insert": "r1+",
    "r2_delete": "r2-",
    "r2_insert": "r2+",
    "r3": "r3",
    "saddle": "saddle",
    "birth": "birth",
    "death": "death",
}
_TEXT_TO_KIND = {v: k for k, v in _KIND_TO_TEXT.items()}


class MoveError(ValueError):
    """Move is malformed or not applicable to the given diagram."""


@dataclass(frozen=True)
class Move:
    kind: str
    params: tuple[tuple[str, object], ...] = ()

    def __post_init__(self):
        if self.kind not in ALL_KINDS:
            raise MoveError(f"unknown move kind {self.kind!r}")

    def __getitem__(self, name: str):
        for key, value in self.params:
            if key == name:
                return value
        raise KeyError(name)

    def text(self) -> str:
        head = _KIND_TO_TEXT[self.kind]
        if not self.params:
            return head
        body = " ".join(f"{k}={v}" for k, v in self.params)
        return f"{head} {body}"

    @staticmethod
    def of(kind: str, **params) -> "Move":
        order = _PARAM_ORDER[kind]
        if set(params) != set(order):
            raise MoveError(
                f"{kind} takes parameters {order}, got {sorted(params)}"
            )
        return Move(kind, tuple((k, params[k]) for k in order))


_PARAM_ORDER = {
    "r1_delete": ("x",),
    "r1_insert": ("c", "pos", "sign", "order"),
    "r2_delete": ("a", "b"),
    "r2_insert": ("c1", "p", "c2", "q", "sign", "order"),
    "r3": ("a", "b", "c"),
    "saddle": ("c1", "p", "c2", "q"),
    "birth": (),
    "death": ("c",),
}

_INT_PARAMS = {"x", "c", "pos", "a", "b", "c1", "p", "c2", "q"}


def parse_move(line: str) -> Move:
    parts = line.split()
    if not parts or parts[0] not in _TEXT_TO_KIND:
        raise MoveError(f"unrecognized move line {line!r}")
    kind = _TEXT_TO_KIND[parts[0]]
    params = {}
    for item in parts[1:]:
        if "=" not in item:
            raise MoveError(f"bad parameter {item!r} in {line!r}")
        key, value = item.split("=", 1)
        if key in _INT_PARAMS:
            try:
                params[key] = int(value)
            except ValueError:
                raise MoveError(f"bad integer {value!r} in {line!r}") from None
        elif key == "sign":
            if value not in ("+", "-"):
                raise MoveError(f"bad sign {value!r} in {line!r}")
            params[key] = 1 if value == "+" else -1
        else:
            params[key] = value
    if kind in ("r1_insert", "r2_insert"):
        params["sign"] = params.get("sign", 1)
    try:
        return Move.of(kind, **params)
    except MoveError:
        raise
    except Exception as err:  # missing keys etc.
        raise MoveError(f"bad move line {line!r}: {err}") from None


def render_move(m: Move) -> str:
    head = _KIND_TO_TEXT[m.kind]
    out = [head]
    for key, value in m.params:
        if key == "sign":
            value = "+" if value > 0 else "-"
        out.append(f"{key}={value}")
    return " ".join(out)


# -- application ---------------------------------------------------------


def apply_move(d: GaussDiagram, m: Move) -> GaussDiagram:
    """Apply a move; raises MoveError if the pattern does not match."""
    return apply_move_with_inverse(d, m)[0]


def apply_move_with_inverse(d: GaussDiagram, m: Move) -> tuple[GaussDiagram, Move]:
    """Apply a move and return (result, exact inverse move on the result)."""
    handler = _HANDLERS[m.kind]
    return handler(d, m)


def _is_cyclic(d: GaussDiagram, c: int) -> bool:
    return not (d.long and c == 0)


def _check_comp(d: GaussDiagram, c) -> int:
    if not isinstance(c, int) or not 0 <= c < d.n_components:
        raise MoveError(f"no component {c}")
    return c


def _check_arc(d: GaussDiagram, c: int, arc) -> int:
    n = d.arc_count(c)
    if not isinstance(arc, int) or not 0 <= arc < n:
        raise MoveError(f"no arc {arc} on component {c} ({n} arcs)")
    return arc


def _slot_of_arc(d: GaussDiagram, c: int, arc: int) -> int:
    """Endpoint index at which an insertion into this arc lands."""
    k = len(d.components[c])
    if not _is_cyclic(d, c):
        return arc
    if k == 0:
        return 0
    return arc + 1  # slot k appends, equivalent to the wrap arc


def _arc_of_slot(d_comp_len: int, cyclic: bool, slot: int) -> int:
    """Arc index whose insertion slot is `slot`, in a component of the
    given length."""
    if not cyclic:
        return slot
    if d_comp_len == 0:
        return 0
    return (slot - 1) % d_comp_len


def _endpoint_index(d: GaussDiagram) -> dict[tuple[int, int], tuple[int, int]]:
    index = {}
    for c, comp in enumerate(d.components):
        for p, (cid, role) in enumerate(comp):
            index[(cid, role)] = (c, p)
    return index


def _fresh_ids(d: GaussDiagram, count: int) -> list[int]:
    base = max(d.crossing_ids, default=0)
    return [base + i + 1 for i in range(count)]


def _adjacent(d: GaussDiagram, c: int, i: int, j: int) -> bool:
    """Is endpoint j immediately after endpoint i on component c?"""
    k = len(d.components[c])
    if _is_cyclic(d, c):
        return k >= 2 and j == (i + 1) % k
    return j == i + 1


# -- R1 ------------------------------------------------------------------


def _apply_r1_delete(d: GaussDiagram, m: Move):
    x = m["x"]
    index = _endpoint_index(d)
    if (x, OVER) not in index:
        raise MoveError(f"no crossing {x}")
    c_o, p_o = index[(x, OVER)]
    c_u, p_u = index[(x, UNDER)]
    if c_o != c_u:
        raise MoveError(f"crossing {x} spans two components; not an r1 kink")
    c = c_o
    if _adjacent(d, c, p_o, p_u):
        i, order = p_o, "OU"
    elif _adjacent(d, c, p_u, p_o):
        i, order = p_u, "UO"
    else:
        raise MoveError(f"endpoints of crossing {x} are not adjacent")

    comp = list(d.components[c])
    k = len(comp)
    cyclic = _is_cyclic(d, c)
    if cyclic and i == k - 1:  # wrap pair (k-1, 0)
        new_comp = comp[1 : k - 1]
        slot = len(new_comp)
    else:
        new_comp = comp[:i] + comp[i + 2 :]
        slot = i
    comps = [list(x_) for x_ in d.components]
    comps[c] = new_comp
    signs = dict(d.signs)
    sign = signs.pop(x)
    result = make_diagram(comps, signs, d.long)
    inv = Move.of(
        "r1_insert",
        c=c,
        pos=_arc_of_slot(len(new_comp), cyclic, slot),
        sign=sign,
        order=order,
    )
    return result, inv


def _apply_r1_insert(d: GaussDiagram, m: Move):
    c = _check_comp(d, m["c"])
    pos = _check_arc(d, c, m["pos"])
    sign = m["sign"]
    order = m["order"]
    if sign not in (1, -1) or order not in ("OU", "UO"):
        raise MoveError(f"bad r1_insert parameters sign={sign} order={order}")
    (nid,) = _fresh_ids(d, 1)
    pair = [(nid, OVER), (nid, UNDER)] if order == "OU" else [(nid, UNDER), (nid, OVER)]
    slot = _slot_of_arc(d, c, pos)
    comps = [list(x) for x in d.components]
    comps[c] = comps[c][:slot] + pair + comps[c][slot:]
    signs = dict(d.signs)
    signs[nid] = sign
    result = make_diagram(comps, signs, d.long)
    return result, Move.of("r1_delete", x=nid)


# -- R2 ------------------------------------------------------------------


def _find_adjacent_pair(d: GaussDiagram, spots: list[tuple[int, int, int]]):
    """Given the two located endpoints [(id, comp, pos), ...] check
    adjacency in either order; returns (comp, first_pos, first_id)."""
    (ida, ca, pa), (idb, cb, pb) = spots
    if ca == cb and _adjacent(d, ca, pa, pb):
        return ca, pa, ida
    if ca == cb and _adjacent(d, cb, pb, pa):
        return ca, pb, idb
    return None


def _apply_r2_delete(d: GaussDiagram, m: Move):
    a, b = m["a"], m["b"]
    if a == b:
        raise MoveError("r2_delete needs two distinct crossings")
    index = _endpoint_index(d)
    for x in (a, b):
        if (x, OVER) not in index:
            raise MoveError(f"no crossing {x}")
    if d.sign_of(a) != -d.sign_of(b):
        raise MoveError(f"crossings {a},{b} do not have opposite signs")
    over = _find_adjacent_pair(
        d, [(a, *index[(a, OVER)]), (b, *index[(b, OVER)])]
    )
    under = _find_adjacent_pair(
        d, [(a, *index[(a, UNDER)]), (b, *index[(b, UNDER)])]
    )
    if over is None or under is None:
        raise MoveError(f"crossings {a},{b} do not form an r2 pattern")
    oc, opos, first_over = over
    uc, upos, first_under = under
    # Normalize names so the over pair reads (O_a, O_b).
    if first_over != a:
        a, b = b, a
    order = "UO" if first_under == b else "OU"

    # Rotate affected cyclic components so neither pair wraps; slot
    # bookkeeping for the inverse insertion is then exact.  The rotation
    # is invisible to the canonical key.
    comps = [list(x) for x in d.components]
    if _is_cyclic(d, oc) and comps[oc]:
        comps[oc] = comps[oc][opos:] + comps[oc][:opos]
        opos = 0
        if uc == oc:
            upos = comps[oc].index((first_under, UNDER))
    if uc != oc and _is_cyclic(d, uc) and comps[uc]:
        comps[uc] = comps[uc][upos:] + comps[uc][:upos]
        upos = 0

    signs = dict(d.signs)
    sign = signs.pop(a)
    signs.pop(b)

    if oc == uc:
        comp = comps[oc]
        k = len(comp)
        cyclic = _is_cyclic(d, oc)
        minus_unders = comp[:upos] + comp[upos + 2 :]
        so = opos if opos < upos else opos - 2  # O_a slot in minus_unders
        su = upos  # under-pair slot in minus_unders
        final = minus_unders[:so] + minus_unders[so + 2 :]
        comps[oc] = final
        kf = len(final)
        if cyclic:
            # The applier inserts the over pair at slot p+1 in 1..kf; if
            # that differs from `so` the intermediate is rotated, so the
            # under slot must be transported into the applier's frame.
            p = (so - 1) % kf if kf else 0
            slot_applier = p + 1 if kf else 0
            ki = kf + 2
            su_app = (su - so + slot_applier) % ki
            q = (su_app if su_app else ki) - 1
        else:
            p, q = so, su
    else:
        cyclic_u = _is_cyclic(d, uc)
        comps[uc] = comps[uc][:upos] + comps[uc][upos + 2 :]
        q = _arc_of_slot(len(comps[uc]), cyclic_u, upos)
        cyclic_o = _is_cyclic(d, oc)
        comps[oc] = comps[oc][:opos] + comps[oc][opos + 2 :]
        p = _arc_of_slot(len(comps[oc]), cyclic_o, opos)

    result = make_diagram(comps, signs, d.long)
    inv = Move.of("r2_insert", c1=oc, p=p, c2=uc, q=q, sign=sign, order=order)
    return result, inv


def _raw_adjacent(cyclic: bool, k: int, i: int, j: int) -> bool:
    if cyclic:
        return k >= 2 and j == (i + 1) % k
    return j == i + 1


def _apply_r2_insert(d: GaussDiagram, m: Move):
    c1 = _check_comp(d, m["c1"])
    p = _check_arc(d, c1, m["p"])
    sign = m["sign"]
    order = m["order"]
    if sign not in (1, -1) or order not in ("OU", "UO"):
        raise MoveError(f"bad r2_insert parameters sign={sign} order={order}")
    a, b = _fresh_ids(d, 2)
    slot = _slot_of_arc(d, c1, p)
    comps = [list(x) for x in d.components]
    comps[c1] = comps[c1][:slot] + [(a, OVER), (b, OVER)] + comps[c1][slot:]
    signs = dict(d.signs)
    signs[a], signs[b] = sign, -sign

    # The under-arc index q refers to the intermediate lists with the
    # over pair already inserted.
    c2 = m["c2"]
    if not isinstance(c2, int) or not 0 <= c2 < len(comps):
        raise MoveError(f"no component {c2}")
    q = m["q"]
    k2 = len(comps[c2])
    cyclic2 = _is_cyclic(d, c2)
    n_arcs = max(k2, 1) if cyclic2 else k2 + 1
    if not isinstance(q, int) or not 0 <= q < n_arcs:
        raise MoveError(f"no arc {q} on component {c2} ({n_arcs} arcs)")
    if cyclic2:
        slot2 = 0 if k2 == 0 else q + 1
    else:
        slot2 = q
    pair = [(b, UNDER), (a, UNDER)] if order == "UO" else [(a, UNDER), (b, UNDER)]
    comps[c2] = comps[c2][:slot2] + pair + comps[c2][slot2:]
    # The under pair must not land between the two over endpoints, or the
    # result is not an r2 pattern.
    final1 = comps[c1]
    pa, pb = final1.index((a, OVER)), final1.index((b, OVER))
    cyclic1 = _is_cyclic(d, c1)
    if not (
        _raw_adjacent(cyclic1, len(final1), pa, pb)
        or _raw_adjacent(cyclic1, len(final1), pb, pa)
    ):
        raise MoveError("under arc q splits the over pair; not an r2 insertion")
    result = make_diagram(comps, signs, d.long)
    return result, Move.of("r2_delete", a=a, b=b)


# -- R3 ------------------------------------------------------------------


def _r3_triangles(d: GaussDiagram, ids: tuple[int, int, int] | None = None):
    """Yield legal r3 triangles as triples of adjacency sites.

    A site is (comp, first_pos, (id_i, role_i), (id_j, role_j)).  The
    three sites are position-disjoint, cover three distinct crossings
    twice each, show the profile {both-over, both-under, mixed}, and
    satisfy the sign/orientation compatibility test (_r3_legal): only
    such triangles bound an embedded disk a strand can slide across.
    Swapping an incompatible triangle is a forbidden move and changes
    the underlying knot, so those triples are never offered.
    """
    wanted = set(ids) if ids is not None else None
    sites = []
    for c, comp in enumerate(d.components):
        k = len(comp)
        if k < 2:
            continue
        pairs: Iterable[tuple[int, int]]
        if _is_cyclic(d, c):
            pairs = ((i, (i + 1) % k) for i in range(k))
        else:
            pairs = ((i, i + 1) for i in range(k - 1))
        for i, j in pairs:
            e1, e2 = comp[i], comp[j]
            if e1[0] == e2[0]:
                continue
            if wanted is not None and not {e1[0], e2[0]} <= wanted:
                continue
            sites.append((c, i, e1, e2))

    def profile(site):
        roles = (site[2][1], site[3][1])
        if roles == (OVER, OVER):
            return "OO"
        if roles == (UNDER, UNDER):
            return "UU"
        return "M"

    n = len(sites)
    for x in range(n):
        for y in range(x + 1, n):
            for z in range(y + 1, n):
                triple = (sites[x], sites[y], sites[z])
                counts: dict[int, int] = {}
                for site in triple:
                    counts[site[2][0]] = counts.get(site[2][0], 0) + 1
                    counts[site[3][0]] = counts.get(site[3][0], 0) + 1
                if len(counts) != 3 or set(counts.values()) != {2}:
                    continue
                if sorted(profile(s) for s in triple) != ["M", "OO", "UU"]:
                    continue
                if not _sites_disjoint(d, triple):
                    continue
                if not _r3_legal(d, triple):
                    continue
                yield triple


def _sites_disjoint(d: GaussDiagram, triple) -> bool:
    used: set[tuple[int, int]] = set()
    for c, i, _, _ in triple:
        k = len(d.components[c])
        j = (i + 1) % k if _is_cyclic(d, c) else i + 1
        if (c, i) in used or (c, j) in used:
            return False
        used.add((c, i))
        used.add((c, j))
    return True


def _r3_legal(d: GaussDiagram, triple) -> bool:
    """Sign/orientation compatibility of an r3 triangle.

    Realize the triangle by three transverse strands: A over at both of
    its crossings, C under at both, B mixed.  Name the crossings ab (on
    sites A and B), ac (A and C), bc (B and C), and for each strand read
    an order bit: +1 when, following the strand's orientation, it meets
    the crossing it shares with the top strand first (for A itself: the
    crossing shared with B).  Enumerating every planar placement — two
    triangle chiralities times eight strand co-orientations — shows a
    triple is realizable, hence a legal slide, exactly when

        sign(ab)*oA*oB == sign(ac)*oA*oC == sign(bc)*oB*oC

    (both sides of the move satisfy it: the swap flips all three order
    bits and keeps signs).  The 48 incompatible patterns are forbidden
    moves and must be rejected.
    """
    by_profile = {}
    for site in triple:
        roles = (site[2][1], site[3][1])
        if roles == (OVER, OVER):
            by_profile["A"] = site
        elif roles == (UNDER, UNDER):
            by_profile["C"] = site
        else:
            by_profile["B"] = site
    a, b, c = by_profile["A"], by_profile["B"], by_profile["C"]
    ids = lambda s: {s[2][0], s[3][0]}
    ab = (ids(a) & ids(b)).pop()
    ac = (ids(a) & ids(c)).pop()
    bc = (ids(b) & ids(c)).pop()
    o_a = 1 if a[2][0] == ab else -1
    o_b = 1 if b[2][0] == ab else -1
    o_c = 1 if c[2][0] == ac else -1
    return (
        d.sign_of(ab) * o_a * o_b
        == d.sign_of(ac) * o_a * o_c
        == d.sign_of(bc) * o_b * o_c
    )


def _apply_r3(d: GaussDiagram, m: Move):
    ids = (m["a"], m["b"], m["c"])
    if len(set(ids)) != 3:
        raise MoveError("r3 needs three distinct crossings")
    index = _endpoint_index(d)
    for x in ids:
        if (x, OVER) not in index:
            raise MoveError(f"no crossing {x}")
    triple = next(iter(_r3_triangles(d, ids)), None)
    if triple is None:
        raise MoveError(f"crossings {ids} do not form an r3 triangle")
    comps = [list(x) for x in d.components]
    for c, i, _, _ in triple:
        k = len(d.components[c])
        j = (i + 1) % k if _is_cyclic(d, c) else i + 1
        comps[c][i], comps[c][j] = comps[c][j], comps[c][i]
    result = make_diagram(comps, dict(d.signs), d.long)
    return result, m


# -- cobordism moves -----------------------------------------------------


def _rotate_after(comp: list, arc: int) -> list:
    """Cyclic component re-read starting just after the given arc."""
    if not comp:
        return []
    cutpoint = (arc + 1) % len(comp)
    return comp[cutpoint:] + comp[:cutpoint]


def _apply_saddle(d: GaussDiagram, m: Move):
    c1 = _check_comp(d, m["c1"])
    c2 = _check_comp(d, m["c2"])
    p = _check_arc(d, c1, m["p"])
    q = _check_arc(d, c2, m["q"])
    comps = [list(x) for x in d.components]
    signs = dict(d.signs)

    if c1 == c2:
        # Split one component into two.
        if _is_cyclic(d, c1):
            comp = comps[c1]
            k = len(comp)
            if k == 0 or p == q:
                # Same-arc saddle buds off a chordless circle.
                piece1, piece2 = _rotate_after(comp, p), []
            else:
                start1, end1 = (p + 1) % k, (q + 1) % k
                piece1 = (
                    comp[start1:end1]
                    if start1 <= end1
                    else comp[start1:] + comp[:end1]
                )
                start2, end2 = end1, start1
                piece2 = (
                    comp[start2:end2]
                    if start2 <= end2
                    else comp[start2:] + comp[:end2]
                )
            comps[c1] = piece1
            comps.append(piece2)
            result = make_diagram(comps, signs, d.long)
            inv = Move.of(
                "saddle",
                c1=c1,
                p=max(len(piece1) - 1, 0),
                c2=len(comps) - 1,
                q=max(len(piece2) - 1, 0),
            )
            return result, inv
        # Split the open strand: gaps p and q sever off a circle.
        lo, hi = min(p, q), max(p, q)
        word = comps[0]
        circle = word[lo:hi]
        comps[0] = word[:lo] + word[hi:]
        comps.append(circle)
        result = make_diagram(comps, signs, d.long)
        inv = Move.of(
            "saddle", c1=0, p=lo, c2=len(comps) - 1,
            q=max(len(circle) - 1, 0),
        )
        return result, inv

    # Merge two distinct components.
    if d.long and c2 == 0:
        c1, c2 = c2, c1
        p, q = q, p
    if d.long and c1 == 0:
        slot = p  # strand arc index is its insertion slot
        inserted = _rotate_after(comps[c2], q)
        merged = comps[0][:slot] + inserted + comps[0][slot:]
        inv = Move.of("saddle", c1=0, p=slot, c2=0, q=slot + len(inserted))
    else:
        part1 = _rotate_after(comps[c1], p)
        part2 = _rotate_after(comps[c2], q)
        merged = part1 + part2
        merged_idx = c1 if c1 < c2 else c1 - 1
        km = len(merged)
        # Splitting the merged component at the two junction arcs
        # recovers the parts; if a part is empty both arcs coincide.
        inv_p = (len(part1) - 1) % km if km else 0
        inv_q = km - 1 if km else 0
        inv = Move.of("saddle", c1=merged_idx, p=inv_p, c2=merged_idx, q=inv_q)
    comps[c1] = merged
    del comps[c2]
    result = make_diagram(comps, signs, d.long)
    return result, inv


def _apply_birth(d: GaussDiagram, m: Move):
    comps = [list(x) for x in d.components] + [[]]
    result = make_diagram(comps, dict(d.signs), d.long)
    return result, Move.of("death", c=len(comps) - 1)


def _apply_death(d: GaussDiagram, m: Move):
    c = _check_comp(d, m["c"])
    if d.long and c == 0:
        raise MoveError("cannot kill the open strand")
    if d.components[c]:
        raise MoveError(f"component {c} has endpoints; death needs a chordless circle")
    comps = [list(x) for i, x in enumerate(d.components) if i != c]
    result = make_diagram(comps, dict(d.signs), d.long)
    return result, Move.of("birth")


_HANDLERS = {
    "r1_delete": _apply_r1_delete,
    "r1_insert": _apply_r1_insert,
    "r2_delete": _apply_r2_delete,
    "r2_insert": _apply_r2_insert,
    "r3": _apply_r3,
    "saddle": _apply_saddle,
    "birth": _apply_birth,
    "death": _apply_death,
}


# -- convenience wrappers ------------------------------------------------


def saddle(d: GaussDiagram, c1: int, p: int, c2: int, q: int) -> GaussDiagram:
    return apply_move(d, Move.of("saddle", c1=c1, p=p, c2=c2, q=q))


def birth(d: GaussDiagram) -> GaussDiagram:
    return apply_move(d, Move.of("birth"))


def death(d: GaussDiagram, c: int) -> GaussDiagram:
    return apply_move(d, Move.of("death", c=c))


# -- enumeration ---------------------------------------------------------


def enumerate_moves(
    d: GaussDiagram,
    kinds: Iterable[str] = ALL_KINDS,
) -> list[Move]:
    """All applicable moves of the requested kinds, deletions first.

    The order is: r1/r2 deletions, r3, insertions, cobordism moves, so a
    consumer that expands in list order is biased toward simplification.
    """
    kinds = set(kinds)
    unknown = kinds - ALL_KINDS
    if unknown:
        raise MoveError(f"unknown move kinds {sorted(unknown)}")
    out: list[Move] = []
    if "r1_delete" in kinds:
        out.extend(_enum_r1_delete(d))
    if "r2_delete" in kinds:
        out.extend(_enum_r2_delete(d))
    if "r3" in kinds:
        out.extend(_enum_r3(d))
    if "r1_insert" in kinds:
        out.extend(_enum_r1_insert(d))
    if "r2_insert" in kinds:
        out.extend(_enum_r2_insert(d))
    if "saddle" in kinds:
        out.extend(_enum_saddle(d))
    if "birth" in kinds:
        out.append(Move.of("birth"))
    if "death" in kinds:
        out.extend(_enum_death(d))
    return out


def _enum_r1_delete(d: GaussDiagram) -> Iterator[Move]:
    index = _endpoint_index(d)
    for cid in d.crossing_ids:
        c_o, p_o = index[(cid, OVER)]
        c_u, p_u = index[(cid, UNDER)]
        if c_o == c_u and (
            _adjacent(d, c_o, p_o, p_u) or _adjacent(d, c_o, p_u, p_o)
        ):
            yield Move.of("r1_delete", x=cid)


def _enum_r2_delete(d: GaussDiagram) -> Iterator[Move]:
    index = _endpoint_index(d)
    ids = d.crossing_ids
    for i, a in enumerate(ids):
        for b in ids[i + 1 :]:
            if d.sign_of(a) != -d.sign_of(b):
                continue
            over = _find_adjacent_pair(
                d, [(a, *index[(a, OVER)]), (b, *index[(b, OVER)])]
            )
            under = _find_adjacent_pair(
                d, [(a, *index[(a, UNDER)]), (b, *index[(b, UNDER)])]
            )
            if over is not None and under is not None:
                yield Move.of("r2_delete", a=a, b=b)


def _enum_r3(d: GaussDiagram) -> Iterator[Move]:
    seen: set[tuple[int, int, int]] = set()
    for triple in _r3_triangles(d):
        ids = set()
        for site in triple:
            ids.add(site[2][0])
            ids.add(site[3][0])
        key = tuple(sorted(ids))
        if key in seen:
            continue
        seen.add(key)
        yield Move.of("r3", a=key[0], b=key[1], c=key[2])


def _all_arcs(d: GaussDiagram) -> list[tuple[int, int]]:
    return [(c, arc) for c in range(d.n_components) for arc in range(d.arc_count(c))]


def _enum_r1_insert(d: GaussDiagram) -> Iterator[Move]:
    for c, arc in _all_arcs(d):
        for sign in (1, -1):
            for order in ("OU", "UO"):
                yield Move(
                    "r1_insert",
                    (("c", c), ("pos", arc), ("sign", sign), ("order", order)),
                )


def _enum_r2_insert(d: GaussDiagram) -> Iterator[Move]:
    # q indexes arcs of the intermediate diagram (over pair inserted);
    # the arc between the two new over endpoints is excluded.
    for c1, p in _all_arcs(d):
        slot_over = _slot_of_arc(d, c1, p)
        for c2 in range(d.n_components):
            k2 = len(d.components[c2]) + (2 if c2 == c1 else 0)
            cyclic2 = _is_cyclic(d, c2)
            n_arcs = max(k2, 1) if cyclic2 else k2 + 1
            banned = (slot_over if cyclic2 else slot_over + 1) if c2 == c1 else None
            for q in range(n_arcs):
                if q == banned:
                    continue
                for sign in (1, -1):
                    for order in ("OU", "UO"):
                        yield Move(
                            "r2_insert",
                            (
                                ("c1", c1),
                                ("p", p),
                                ("c2", c2),
                                ("q", q),
                                ("sign", sign),
                                ("order", order),
                            ),
                        )


def _enum_saddle(d: GaussDiagram) -> Iterator[Move]:
    arcs = _all_arcs(d)
    for i, (c1, p) in enumerate(arcs):
        # Same-arc saddles (i itself) just bud off a chordless circle;
        # they are legal and enumerated like any other pair.
        for c2, q in arcs[i:]:
            yield Move("saddle", (("c1", c1), ("p", p), ("c2", c2), ("q", q)))


def _enum_death(d: GaussDiagram) -> Iterator[Move]:
    start = 1 if d.long else 0
    for c in range(start, d.n_components):
        if not d.components[c]:
            yield Move.of("death", c=c)
