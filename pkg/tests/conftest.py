"""Shared fixtures and generators for the test suite."""

from __future__ import annotations

import random

import pytest

from vknots import GaussDiagram, apply_move_with_inverse, enumerate_moves, parse_gauss

KINK = "O1+U1+"
TREFOIL = "O1+U2+O3+U1+O2+U3+"
VIRTUAL_TREFOIL = "O1+U2+U1+O2+"
KISHINO = "O1+U2-U1+O2-U3-O4+O3-U4+"

# 30 hand-picked diagrams: knots, links, long knots, degenerate cases.
CORPUS = [
    "()",
    "L:",
    KINK,
    "O1-U1-",
    "U1+O1+",
    TREFOIL,
    VIRTUAL_TREFOIL,
    KISHINO,
    "O1-U2-O3-U1-O2-U3-",          # left trefoil
    "O1+U2-U1+O2-",                 # virtual trefoil variant
    "O1+O2+U1+U2+",
    "O1+U1+O2-U2-",
    "O1+U2+;U1+O2+",                # 2-component link
    "O1+U1+;()",
    "();()",
    "O1-U2+U1-O2+;O3+U3+",
    "L:O1+U1+",
    "L:O1+U2-U1+O2-",
    "L:" + KISHINO,
    "L:O1+;U1+",                    # long with closed companion
    "L:();O1+U1+",                  # chordless strand, closed kink
    "O1+U2+O3+U1+O2+U3+;()",
    "U1-U2-O1-O2-",
    "U1+O2+O1+U2+",                 # interleaved chords
    "O1+U2-O3+U4-U1+O2-U3+O4-",
    "L:O1+U2+U1+O2+",
    "O1+U1+O2+U2+O3+U3+",
    "O1-U2-U1-O2-O3+U3+",
    "O1+U2+U3+O4+U1+O2+O3+U4+",
    "L:O1-U1-;O2+U2+",
]
assert len(CORPUS) == 30


def random_diagram(rng: random.Random, max_crossings: int = 5) -> GaussDiagram:
    """A uniform-ish random valid diagram: any placement of O/U endpoint
    pairs on any components is a valid virtual diagram."""
    n = rng.randint(0, max_crossings)
    n_comps = rng.randint(1, 3)
    long = rng.random() < 0.4
    tokens = []
    for cid in range(1, n + 1):
        sign = rng.choice("+-")
        tokens.append(f"O{cid}{sign}")
        tokens.append(f"U{cid}{sign}")
    rng.shuffle(tokens)
    comps = [[] for _ in range(n_comps)]
    for tok in tokens:
        comps[rng.randrange(n_comps)].append(tok)
    parts = ["".join(c) if c else "()" for c in comps]
    return parse_gauss(("L:" if long else "") + ";".join(parts))


def random_walk(
    d: GaussDiagram,
    rng: random.Random,
    steps: int,
    kinds: set[str],
    max_crossings: int = 8,
):
    """Apply `steps` random legal moves; returns (diagrams, moves, inverses).

    diagrams[0] is `d`; diagrams[i+1] = moves[i] applied to diagrams[i].
    """
    diagrams = [d]
    moves = []
    inverses = []
    for _ in range(steps):
        cur = diagrams[-1]
        allowed = set(kinds)
        if cur.n_crossings + 2 > max_crossings:
            allowed -= {"r2_insert"}
        if cur.n_crossings + 1 > max_crossings:
            allowed -= {"r1_insert"}
        cands = list(enumerate_moves(cur, kinds=allowed))
        if not cands:
            break
        m = rng.choice(cands)
        nxt, inv = apply_move_with_inverse(cur, m)
        diagrams.append(nxt)
        moves.append(m)
        inverses.append(inv)
    return diagrams, moves, inverses


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260823)
