"""Gauss-diagram model for round and long virtual link diagrams.

A diagram is a list of components, each a sequence of endpoints; an
endpoint is a passage of the strand through a classical crossing, either
on the over or the under branch.  Virtual crossings carry no information
and are never recorded: two planar pictures differing only in virtual
crossings have the same Gauss diagram.

Components of a round diagram are cyclic.  A long diagram has exactly one
open component (the strand, always component 0, read left to right);
further components are closed.  A chordless closed component is written
``()`` in the textual code; the empty string is the empty link.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator

OVER = 0
UNDER = 1

_ROLE_CHAR = {OVER: "O", UNDER: "U"}
_SIGN_CHAR = {1: "+", -1: "-"}

Endpoint = tuple[int, int]  # (crossing id, role)


class DiagramError(ValueError):
    """Malformed Gauss code or broken diagram invariant."""


@dataclass(frozen=True)
class CrossingRecord:
    """One classical crossing: sign plus the locations of its two passages."""

    id: int
    sign: int
    over_endpoint: tuple[int, int]  # (component index, position index)
    under_endpoint: tuple[int, int]


@dataclass(frozen=True)
class GaussDiagram:
    components: tuple[tuple[Endpoint, ...], ...]
    signs: tuple[tuple[int, int], ...]  # sorted (crossing id, sign) pairs
    long: bool = False
    _sign_map: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_sign_map", dict(self.signs))
        _check_invariants(self)

    # -- basic queries ---------------------------------------------------

    def sign_of(self, crossing_id: int) -> int:
        return self._sign_map[crossing_id]

    @property
    def crossing_ids(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.signs)

    @property
    def n_crossings(self) -> int:
        return len(self.signs)

    @property
    def n_components(self) -> int:
        return len(self.components)

    @property
    def writhe(self) -> int:
        return sum(s for _, s in self.signs)

    @property
    def strand(self) -> tuple[Endpoint, ...]:
        if not self.long:
            raise DiagramError("round diagram has no open strand")
        return self.components[0]

    def crossings(self) -> tuple[CrossingRecord, ...]:
        """Per-crossing records with endpoint back-references."""
        over: dict[int, tuple[int, int]] = {}
        under: dict[int, tuple[int, int]] = {}
        for c, comp in enumerate(self.components):
            for p, (cid, role) in enumerate(comp):
                (over if role == OVER else under)[cid] = (c, p)
        return tuple(
            CrossingRecord(cid, self._sign_map[cid], over[cid], under[cid])
            for cid in sorted(self._sign_map)
        )

    def endpoint_count(self, comp: int) -> int:
        return len(self.components[comp])

    def arc_count(self, comp: int) -> int:
        """Number of arcs of a component.

        Cyclic component with k endpoints: k arcs (one arc for a chordless
        circle).  Open strand with k endpoints: k + 1 arcs, arc i being the
        gap before endpoint i (arc k is the outgoing tail).
        """
        k = len(self.components[comp])
        if self.long and comp == 0:
            return k + 1
        return max(k, 1)


def _check_invariants(d: GaussDiagram) -> None:
    # Hot path (every move application builds a diagram): tally each id
    # as over=1 / under=4, so a well-formed crossing totals exactly 5;
    # the slow diagnosis below runs only on failure.
    seen: dict[int, int] = {}
    get = seen.get
    for comp in d.components:
        for cid, role in comp:
            if role == OVER:
                seen[cid] = get(cid, 0) + 1
            elif role == UNDER:
                seen[cid] = get(cid, 0) + 4
            else:
                raise DiagramError(f"bad role {role!r} for crossing {cid}")
    sign_map = d._sign_map
    if len(seen) != len(sign_map):
        _diagnose(d)
    for cid, v in seen.items():
        if v != 5 or cid not in sign_map:
            _diagnose(d)
    prev = None
    for cid, s in d.signs:
        if s != 1 and s != -1:
            raise DiagramError(f"crossing {cid} has sign {s}, expected +1 or -1")
        if cid <= 0:
            raise DiagramError(f"crossing id {cid} is not a positive integer")
        if prev is not None and cid <= prev:
            raise DiagramError("sign table is not sorted")
        prev = cid
    if d.long and not d.components:
        raise DiagramError("long diagram must have an open strand component")


def _diagnose(d: GaussDiagram) -> None:
    """Pinpoint which endpoint invariant broke; always raises."""
    roles_of: dict[int, list[int]] = {}
    for comp in d.components:
        for cid, role in comp:
            roles_of.setdefault(cid, []).append(role)
    if set(roles_of) != set(d._sign_map):
        raise DiagramError(
            f"crossing ids in components {sorted(roles_of)} do not match "
            f"sign table {sorted(d._sign_map)}"
        )
    for cid, roles in roles_of.items():
        if len(roles) != 2:
            raise DiagramError(f"crossing {cid} appears {len(roles)} times, expected 2")
        if sorted(roles) != [OVER, UNDER]:
            which = "over" if roles[0] == OVER else "under"
            raise DiagramError(f"crossing {cid} has two {which} endpoints")
    raise AssertionError("invariant tally failed but diagnosis found nothing")


def make_diagram(
    components,
    signs: dict[int, int],
    long: bool = False,
) -> GaussDiagram:
    """Build a diagram from component lists and an id -> sign mapping."""
    comps = tuple(tuple(comp) for comp in components)
    if long and not comps:
        comps = ((),)
    return GaussDiagram(comps, tuple(sorted(signs.items())), long)


# -- textual grammar -----------------------------------------------------
#
#   diagram   := [ "L:" ] component ( ";" component )*
#   component := "()" | token+
#   token     := ("O"|"U") integer ("+"|"-")
#
# Whitespace is ignored.  The first component of a long code is the open
# strand; "L:" alone denotes the long unknot (empty strand).

_TOKEN_RE = re.compile(r"([OU])(\d+)([+-])")


def parse_gauss(text: str) -> GaussDiagram:
    """Parse a Gauss code string into a diagram."""
    stripped = re.sub(r"\s+", "", text)
    long = False
    if stripped.startswith("L:"):
        long = True
        stripped = stripped[2:]
    components: list[tuple[Endpoint, ...]] = []
    signs: dict[int, int] = {}
    if stripped:
        for part in stripped.split(";"):
            components.append(_parse_component(part, signs))
    if long and not components:
        components = [()]
    try:
        return GaussDiagram(tuple(components), tuple(sorted(signs.items())), long)
    except DiagramError as err:
        raise DiagramError(f"invalid Gauss code {text!r}: {err}") from None


def _parse_component(part: str, signs: dict[int, int]) -> tuple[Endpoint, ...]:
    if part == "()":
        return ()
    if not part:
        raise DiagramError("empty component (write '()' for a chordless circle)")
    endpoints: list[Endpoint] = []
    pos = 0
    while pos < len(part):
        m = _TOKEN_RE.match(part, pos)
        if m is None:
            raise DiagramError(f"syntax error at {part[pos:]!r}")
        role = OVER if m.group(1) == "O" else UNDER
        cid = int(m.group(2))
        sign = 1 if m.group(3) == "+" else -1
        if cid in signs and signs[cid] != sign:
            raise DiagramError(f"crossing {cid} carries both signs")
        signs[cid] = sign
        endpoints.append((cid, role))
        pos = m.end()
    return tuple(endpoints)


def render_gauss(d: GaussDiagram) -> str:
    """Render a diagram, renumbering crossings by first appearance."""
    relabeled, _ = relabel_first_appearance(d)
    parts = []
    for comp in relabeled.components:
        if not comp:
            parts.append("()")
        else:
            parts.append(
                "".join(
                    f"{_ROLE_CHAR[role]}{cid}{_SIGN_CHAR[relabeled.sign_of(cid)]}"
                    for cid, role in comp
                )
            )
    body = ";".join(parts)
    if d.long:
        if relabeled.components == ((),):
            return "L:"
        return "L:" + body
    return body


def relabel_first_appearance(d: GaussDiagram) -> tuple[GaussDiagram, dict[int, int]]:
    """Renumber crossing ids 1.. in order of first appearance.

    Returns the relabeled diagram and the old-id -> new-id map.
    """
    id_map: dict[int, int] = {}
    for comp in d.components:
        for cid, _ in comp:
            if cid not in id_map:
                id_map[cid] = len(id_map) + 1
    comps = tuple(
        tuple((id_map[cid], role) for cid, role in comp) for comp in d.components
    )
    signs = tuple(sorted((id_map[cid], s) for cid, s in d.signs))
    return GaussDiagram(comps, signs, d.long), id_map


# -- unary and binary operations ----------------------------------------


def reverse(d: GaussDiagram) -> GaussDiagram:
    """Reverse the orientation: every component's endpoint order flips."""
    comps = tuple(tuple(reversed(comp)) for comp in d.components)
    return GaussDiagram(comps, d.signs, d.long)


def mirror(d: GaussDiagram, mode: str) -> GaussDiagram:
    """Mirror a diagram.

    mode="switch": swap every crossing's over/under roles and flip its
    sign; endpoint sequences are unchanged.  Works on round and long
    diagrams.

    mode="reflect": reflect a long diagram through a vertical line.  The
    open strand's word order reverses (the left-to-right convention
    re-orients it), closed components keep their order, all signs flip,
    roles are unchanged.
    """
    if mode == "switch":
        comps = tuple(
            tuple((cid, OVER if role == UNDER else UNDER) for cid, role in comp)
            for comp in d.components
        )
        signs = tuple(sorted((cid, -s) for cid, s in d.signs))
        return GaussDiagram(comps, signs, d.long)
    if mode == "reflect":
        if not d.long:
            raise DiagramError("mode=reflect requires a long diagram")
        comps = (tuple(reversed(d.components[0])),) + d.components[1:]
        signs = tuple(sorted((cid, -s) for cid, s in d.signs))
        return GaussDiagram(comps, signs, True)
    raise DiagramError(f"unknown mirror mode {mode!r}")


def inverse(k: GaussDiagram) -> GaussDiagram:
    """Group inverse of a long knot: reverse of the vertical reflection."""
    if not k.long:
        raise DiagramError("inverse requires a long diagram")
    return reverse(mirror(k, "reflect"))


def connected_sum(a: GaussDiagram, b: GaussDiagram) -> GaussDiagram:
    """Concatenate two long diagrams, a on the left."""
    if not (a.long and b.long):
        raise DiagramError("connected sum requires long diagrams")
    shift = max(a.crossing_ids, default=0)
    b_comps = tuple(
        tuple((cid + shift, role) for cid, role in comp) for comp in b.components
    )
    strand = a.components[0] + b_comps[0]
    comps = (strand,) + a.components[1:] + b_comps[1:]
    signs = tuple(sorted(a.signs + tuple((cid + shift, s) for cid, s in b.signs)))
    return GaussDiagram(comps, signs, True)


def closure(k: GaussDiagram) -> GaussDiagram:
    """Join the two ends of a long diagram; the strand becomes cyclic."""
    if not k.long:
        raise DiagramError("closure requires a long diagram")
    return GaussDiagram(k.components, k.signs, False)


def cut(d: GaussDiagram, comp: int, pos: int) -> GaussDiagram:
    """Open a round diagram at an arc, producing a long diagram.

    The arc `pos` of component `comp` is severed and the cyclic sequence
    is read from the endpoint after the cut onward.  The chosen component
    becomes the open strand; all others are carried along closed.
    """
    if d.long:
        raise DiagramError("cut requires a round diagram")
    if not 0 <= comp < len(d.components):
        raise DiagramError(f"no component {comp}")
    target = d.components[comp]
    k = len(target)
    if not 0 <= pos < max(k, 1):
        raise DiagramError(f"no arc {pos} on component {comp} ({max(k, 1)} arcs)")
    if k:
        start = (pos + 1) % k
        strand = target[start:] + target[:start]
    else:
        strand = ()
    comps = (strand,) + d.components[:comp] + d.components[comp + 1 :]
    return GaussDiagram(comps, d.signs, True)


def diagram_stats(d: GaussDiagram) -> tuple[int, int, int]:
    """(crossing count, component count, writhe)."""
    return d.n_crossings, d.n_components, d.writhe


# -- forgetful image -----------------------------------------------------


@dataclass(frozen=True)
class FlatDiagram:
    """Chord pairing with signs and over/under roles forgotten.

    Chords are numbered by first appearance, so two flat diagrams compare
    equal exactly when their pairing structure and component shape agree.
    Used as a fast non-equality prefilter: diagrams with different flat
    images are certainly different.
    """

    components: tuple[tuple[int, ...], ...]
    long: bool = False

    def reversed(self) -> FlatDiagram:
        comps = [tuple(reversed(comp)) for comp in self.components]
        return _renumber_flat(comps, self.long)


def _renumber_flat(components, long: bool) -> FlatDiagram:
    id_map: dict[int, int] = {}
    out = []
    for comp in components:
        row = []
        for cid in comp:
            if cid not in id_map:
                id_map[cid] = len(id_map) + 1
            row.append(id_map[cid])
        out.append(tuple(row))
    return FlatDiagram(tuple(out), long)


def flatten(d: GaussDiagram) -> FlatDiagram:
    """Forget signs and roles, keeping chord pairing and component shape."""
    return _renumber_flat(
        [[cid for cid, _ in comp] for comp in d.components], d.long
    )
