"""Conventional zero forcing games and the minor monotone floor game.

Four color change rules are supported:

* ``Z``      - a blue vertex with exactly one white neighbor forces it.
* ``Zl``     - additionally, a non-isolated white vertex with no white
               neighbors forces itself (recorded as ``i->i``).
* ``Zplus``  - the plain rule applied per component of the white subgraph,
               so white vertices in other components do not block a force.
* ``FloorZ`` - the plain rule plus hops: a blue vertex that has no white
               neighbors and has never forced may force any white vertex.

The first three closures are monotone fixed points.  The floor game is a
real game (the choice of forcer and hop target matters), so membership is
decided by depth-first search over game states with memoization; a vertex
that performs any force is spent for hopping but regular forces are never
blocked.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .graphs import CapExceededError, Graph, _check_cap, bits, mask_of

DEFAULT_ZF_CAP = 10


class Rule(Enum):
    Z = "Z"
    ZL = "Zl"
    ZPLUS = "Zplus"
    FLOOR = "FloorZ"

    @staticmethod
    def from_label(label: str) -> "Rule":
        for rule in Rule:
            if rule.value.lower() == label.lower():
                return rule
        raise ValueError(f"unknown rule {label!r}; expected one of "
                         f"{[r.value for r in Rule]}")


CONVENTIONAL_RULES = (Rule.Z, Rule.ZL, Rule.ZPLUS)


@dataclass(frozen=True)
class Force:
    """One applied force; ``source == target`` encodes a Zl self-force."""

    source: int
    target: int
    hop: bool = False

    def __str__(self) -> str:
        prefix = "hop: " if self.hop else ""
        return f"{prefix}{self.source}->{self.target}"


def format_trace(forces: list[Force]) -> str:
    return "\n".join(str(f) for f in forces)


def single_forces(g: Graph, blue: int, rule: Rule) -> list[Force]:
    """All forces the rule allows at this exact state, ascending by source."""
    adj = g.adj
    full = g.full_mask
    white = full & ~blue
    out: list[Force] = []
    if rule in (Rule.Z, Rule.ZL):
        for i in bits(blue):
            w = adj[i] & white
            if w and not w & (w - 1):
                out.append(Force(i, w.bit_length() - 1))
        if rule is Rule.ZL:
            for i in bits(white):
                if adj[i] and not adj[i] & white:
                    out.append(Force(i, i))
    elif rule is Rule.ZPLUS:
        for comp in g.component_masks(white):
            for i in bits(blue):
                w = adj[i] & comp
                if w and not w & (w - 1):
                    out.append(Force(i, w.bit_length() - 1))
    else:
        raise ValueError("single_forces handles conventional rules only")
    return out


def _closure_mask(g: Graph, blue: int, rule: Rule) -> int:
    adj = g.adj
    full = g.full_mask
    if rule in (Rule.Z, Rule.ZL):
        allow_self = rule is Rule.ZL
        while blue != full:
            before = blue
            white = full & ~blue
            for i in bits(blue):
                w = adj[i] & white
                if w and not w & (w - 1):
                    blue |= w
                    white &= ~w
            if allow_self:
                for i in bits(white):
                    if adj[i] and not adj[i] & white:
                        blue |= 1 << i
                        white &= ~(1 << i)
            if blue == before:
                break
        return blue
    if rule is Rule.ZPLUS:
        while blue != full:
            before = blue
            white = full & ~blue
            for comp in g.component_masks(white):
                for i in bits(blue):
                    w = adj[i] & comp
                    if w and not w & (w - 1):
                        blue |= w
                        comp &= ~w
            if blue == before:
                break
        return blue
    raise ValueError("closure is defined for conventional rules only")


def closure(g: Graph, blue: set[int] | frozenset[int], rule: Rule) -> tuple[frozenset[int], list[Force]]:
    """Least fixed point and a replayable trace (first applicable force each step)."""
    if rule not in CONVENTIONAL_RULES:
        raise ValueError("closure is defined for conventional rules only")
    mask = mask_of(blue)
    trace: list[Force] = []
    while True:
        forces = single_forces(g, mask, rule)
        forces = [f for f in forces if not mask >> f.target & 1]
        if not forces:
            break
        f = forces[0]
        trace.append(f)
        mask |= 1 << f.target
    return frozenset(bits(mask)), trace


def _floor_free_forces(adj: tuple[int, ...], full: int, blue: int, used: int,
                       trace: list[Force] | None = None) -> int:
    """Apply regular forces by already-used vertices; they cost nothing."""
    changed = True
    while changed and blue != full:
        changed = False
        for i in bits(blue & used):
            w = adj[i] & ~blue & full
            if w and not w & (w - 1):
                blue |= w
                changed = True
                if trace is not None:
                    trace.append(Force(i, w.bit_length() - 1))
    return blue


def _floor_game_sequence(g: Graph, start: int) -> list[Force] | None:
    """A winning force sequence for the floor game, or None."""
    adj = g.adj
    full = g.full_mask
    dead: set[tuple[int, int]] = set()

    def search(blue: int, used: int) -> list[Force] | None:
        prefix: list[Force] = []
        blue = _floor_free_forces(adj, full, blue, used, prefix)
        if blue == full:
            return prefix
        key = (blue, used)
        if key in dead:
            return None
        white = full & ~blue
        for i in bits(blue & ~used):
            w = adj[i] & white
            if not w:
                for j in bits(white):
                    rest = search(blue | (1 << j), used | (1 << i))
                    if rest is not None:
                        return prefix + [Force(i, j, hop=True)] + rest
            elif not w & (w - 1):
                j = w.bit_length() - 1
                rest = search(blue | w, used | (1 << i))
                if rest is not None:
                    return prefix + [Force(i, j)] + rest
        dead.add(key)
        return None

    return search(start, 0)


def floor_force_sequence(g: Graph, blue: set[int] | frozenset[int]) -> list[Force] | None:
    """A winning play of the floor game from this start set, or None.

    The sequence interleaves regular forces and hops; replaying it forces
    every vertex.  Useful for traces; membership tests should prefer
    ``is_zfs`` which short-circuits through the plain closure.
    """
    return _floor_game_sequence(g, mask_of(blue))


def is_zfs(g: Graph, blue: set[int] | frozenset[int], rule: Rule) -> bool:
    """Can the given start set force the whole vertex set under the rule?"""
    mask = mask_of(blue)
    if rule in CONVENTIONAL_RULES:
        return _closure_mask(g, mask, rule) == g.full_mask
    # floor game: a plain-Z completion needs no hops and is always a win
    if _closure_mask(g, mask, Rule.Z) == g.full_mask:
        return True
    return _floor_game_sequence(g, mask) is not None


def _min_zfs_connected(g: Graph, rule: Rule) -> tuple[int, frozenset[int]]:
    verts = list(g.vertices())
    if g.n == 0:
        return 0, frozenset()
    for size in range(1, g.n + 1):
        for combo in combinations(verts, size):
            if is_zfs(g, combo, rule):
                return size, frozenset(combo)
    raise AssertionError("the full vertex set always forces itself")


def min_zfs(g: Graph, rule: Rule, cap: int = DEFAULT_ZF_CAP) -> tuple[int, frozenset[int]]:
    """Minimum zero forcing set size and one witness.

    Disconnected graphs decompose: conventional rules add up component
    minima; the floor rule takes the maximum because hops cross components.
    """
    _check_cap(g.n, cap, "vertex count")
    comps = g.components()
    if len(comps) <= 1:
        return _min_zfs_connected(g, rule)
    pieces = []
    for comp in comps:
        sub = g.induced(comp)
        back = sorted(comp)
        size, wit = _min_zfs_connected(sub, rule)
        pieces.append((size, frozenset(back[v - 1] for v in wit)))
    if rule in CONVENTIONAL_RULES:
        total = sum(size for size, _ in pieces)
        witness = frozenset().union(*(wit for _, wit in pieces))
        return total, witness
    value = max(size for size, _ in pieces)
    # the witness of a largest component works for the whole graph: hops
    # carry the process across components once that component is finished
    best = max(pieces, key=lambda p: p[0])[1]
    if is_zfs(g, best, rule):
        return value, best
    for combo in combinations(list(g.vertices()), value):
        if is_zfs(g, combo, rule):
            return value, frozenset(combo)
    raise AssertionError("component maximum must be attainable for the floor game")


def zero_forcing_number(g: Graph, rule: Rule = Rule.Z, cap: int = DEFAULT_ZF_CAP) -> int:
    return min_zfs(g, rule, cap)[0]
