"""Canonical keys for Gauss diagrams.

Two diagrams get the same key exactly when they agree after

  * rotating cyclic components,
  * reordering components (the open strand of a long diagram stays first),
  * renumbering crossings.

Nothing else is quotiented; in particular Reidemeister-equivalent
diagrams keep distinct keys.  The key doubles as the dedup identity for
search, so besides the key itself `canonicalize` records the normalizing
isomorphism (component permutation, per-component rotation, id
relabeling), which lets references be transported between diagrams
sharing a key.

The minimum is taken over label-free encodings of (component order,
rotation) candidates.  Every encoding starts each component with the
negated length, so only orders sorted by descending length can win;
permutations are enumerated within equal-length groups only, and
encoding aborts as soon as a candidate exceeds the incumbent best
(search canonicalizes every child diagram, so this path is hot).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .diagram import OVER, GaussDiagram, relabel_first_appearance


@dataclass(frozen=True)
class Iso:
    """Normalization map from a source diagram to its canonical form.

    comp_perm[i] is the canonical index of source component i.
    rotations[i] = r means the canonical sequence of that component is
    seq[r:] + seq[:r] (always 0 for the open strand).
    id_map is the source-id -> canonical-id relabeling.
    """

    comp_perm: tuple[int, ...]
    rotations: tuple[int, ...]
    id_map: tuple[tuple[int, int], ...]

    def map_id(self, cid: int) -> int:
        return dict(self.id_map)[cid]


@dataclass(frozen=True)
class CanonicalResult:
    key: str
    diagram: GaussDiagram
    iso: Iso


@lru_cache(maxsize=1 << 18)
def canonical_key(d: GaussDiagram) -> str:
    order, rots = _best_candidate(d)
    return _render_candidate(d, order, rots)


@lru_cache(maxsize=1 << 14)
def canonicalize(d: GaussDiagram) -> CanonicalResult:
    """Canonical key plus the normal form and normalizing iso."""
    order, rots = _best_candidate(d)

    n = len(d.components)
    comp_perm = [0] * n
    rotations = [0] * n
    for new_idx, old_idx in enumerate(order):
        comp_perm[old_idx] = new_idx
        rotations[old_idx] = rots[new_idx]

    comps = []
    for new_idx, old_idx in enumerate(order):
        seq = d.components[old_idx]
        r = rots[new_idx]
        comps.append(seq[r:] + seq[:r] if seq else ())
    permuted = GaussDiagram(tuple(comps), d.signs, d.long)
    normal, id_map = relabel_first_appearance(permuted)

    iso = Iso(tuple(comp_perm), tuple(rotations), tuple(sorted(id_map.items())))
    return CanonicalResult(_render_candidate(d, order, rots), normal, iso)


def _candidate_orders(d: GaussDiagram):
    """All component orders that can minimize the encoding: the strand
    pinned first, chorded components by descending length (permuting
    only within equal-length groups), chordless circles last."""
    chorded = [i for i in range(len(d.components)) if d.components[i]]
    circles = [i for i in range(len(d.components)) if not d.components[i]]
    head: list[int] = []
    if d.long:
        head = [0]
        chorded = [i for i in chorded if i != 0]
        if 0 in circles:
            circles.remove(0)

    groups: list[list[int]] = []
    for i in sorted(chorded, key=lambda i: -len(d.components[i])):
        if groups and len(d.components[groups[-1][0]]) == len(d.components[i]):
            groups[-1].append(i)
        else:
            groups.append([i])
    for perm_parts in itertools.product(
        *(itertools.permutations(g) for g in groups)
    ):
        order = list(head)
        for part in perm_parts:
            order.extend(part)
        yield order + circles


def _lead_rotations(seq, sign) -> tuple[int, ...]:
    """Rotations of a leading component that can start the minimal
    encoding.

    The leading chorded component is encoded before any crossing id is
    assigned, so its first two tokens encode label-free as
    (role, sign, second-id-is-new, role, sign); only rotations realizing
    the minimal such prefix can win.
    """
    k = len(seq)
    if k <= 1:
        return (0,)
    best = None
    rots: list[int] = []
    for r in range(k):
        cid0, role0 = seq[r]
        cid1, role1 = seq[r + 1 - k]
        sig = (role0, sign[cid0], 1 if cid1 == cid0 else 2, role1, sign[cid1])
        if best is None or sig < best:
            best, rots = sig, [r]
        elif sig == best:
            rots.append(r)
    return tuple(rots)


@lru_cache(maxsize=1 << 16)
def _best_candidate(d: GaussDiagram) -> tuple[tuple[int, ...], tuple[int, ...]]:
    best_code: list | None = None
    best_order: tuple[int, ...] = ()
    best_rots: tuple[int, ...] = ()
    for order in _candidate_orders(d):
        rot_ranges = []
        lead = True  # no crossing ids assigned before this component
        for i in order:
            if (d.long and i == 0) or not d.components[i]:
                rot_ranges.append((0,))
                lead = lead and not d.components[i]
            elif lead:
                rot_ranges.append(_lead_rotations(d.components[i], d._sign_map))
                lead = False
            else:
                rot_ranges.append(tuple(range(len(d.components[i]))))
        for rots in itertools.product(*rot_ranges):
            code = _encode_abort(d, order, rots, best_code)
            if code is not None:
                best_code, best_order, best_rots = code, tuple(order), rots
    return best_order, best_rots


def _encode_abort(d: GaussDiagram, order, rots, best) -> list | None:
    """Label-free encoding of one candidate; None once it provably
    compares greater-or-equal to `best`.

    All candidates of one diagram encode to the same length, so a
    non-strictly-smaller candidate can be dropped as soon as it matches
    or exceeds the incumbent prefix.
    """
    sign = d._sign_map
    id_map: dict[int, int] = {}
    out: list[int] = []
    pos = 0
    better = best is None
    for i, r in zip(order, rots):
        seq = d.components[i]
        k = len(seq)
        for step in range(-1, 3 * k):
            if step == -1:
                v = -k
            else:
                cid, role = seq[(r + step // 3) % k]
                which = step % 3
                if which == 0:
                    new = id_map.get(cid)
                    if new is None:
                        new = len(id_map) + 1
                        id_map[cid] = new
                    v = new
                elif which == 1:
                    v = role
                else:
                    v = sign[cid]
            if not better:
                bv = best[pos]
                if v > bv:
                    return None
                if v < bv:
                    better = True
            out.append(v)
            pos += 1
    return out if better else None


def _render_candidate(d: GaussDiagram, order, rots) -> str:
    """Canonical key string: the Gauss code of the winning candidate,
    relabeled by first appearance (identical to rendering the normal
    form)."""
    sign = d._sign_map
    id_map: dict[int, int] = {}
    parts = []
    for i, r in zip(order, rots):
        seq = d.components[i]
        if not seq:
            parts.append("()")
            continue
        seq = seq[r:] + seq[:r]
        toks = []
        for cid, role in seq:
            new = id_map.get(cid)
            if new is None:
                new = len(id_map) + 1
                id_map[cid] = new
            toks.append(
                ("O" if role == OVER else "U")
                + str(new)
                + ("+" if sign[cid] > 0 else "-")
            )
        parts.append("".join(toks))
    body = ";".join(parts)
    if d.long:
        if len(d.components) == 1 and not d.components[0]:
            return "L:"
        return "L:" + body
    return body


def map_arc(iso: Iso, d: GaussDiagram, comp: int, arc: int) -> tuple[int, int]:
    """Transport an arc reference of `d` through its normalizing iso.

    Returns (canonical component index, canonical arc index).
    """
    k = len(d.components[comp])
    new_comp = iso.comp_perm[comp]
    if d.long and comp == 0:
        return new_comp, arc
    if k == 0:
        return new_comp, 0
    return new_comp, (arc - iso.rotations[comp]) % k


def unmap_arc(iso: Iso, d: GaussDiagram, new_comp: int, new_arc: int) -> tuple[int, int]:
    """Inverse of map_arc: canonical arc reference back to `d` coordinates."""
    comp = iso.comp_perm.index(new_comp)
    k = len(d.components[comp])
    if d.long and comp == 0:
        return comp, new_arc
    if k == 0:
        return comp, 0
    return comp, (new_arc + iso.rotations[comp]) % k


def unmap_id(iso: Iso, new_id: int) -> int:
    for cid, mapped in iso.id_map:
        if mapped == new_id:
            return cid
    raise KeyError(new_id)
