"""Exact acceptability semantics for closed argumentation frames.

Complete extensions are enumerated through a three-valued labelling search
(every argument ends up accepted, rejected, or undecided) with constraint
propagation; preferred extensions are the maximal complete ones and the
grounded extension is the least fixpoint of the defense operator.  All
results are exact sets of extensions, never approximations.

The brute-force subset filter in :mod:`mmarg.oracle` re-derives the same
semantics straight from the definitions and deliberately shares none of
this code.
"""

from __future__ import annotations

import enum
from typing import Iterable

from .frames import DUNG, ArgumentationFrame

# A semantics value: a set of extensions, each a set of argument ids.
ExtensionSet = frozenset[frozenset[str]]


class SemanticsKind(str, enum.Enum):
    COMPLETE = "complete"
    PREFERRED = "preferred"
    GROUNDED = "grounded"


CREDULOUS = "credulous"
SKEPTICAL = "skeptical"


def _require_dung(f: ArgumentationFrame) -> None:
    if f.kind != DUNG:
        raise ValueError("semantics are defined on closed (dung) frames only")


def _require_members(s: Iterable[str], f: ArgumentationFrame) -> frozenset[str]:
    s = frozenset(s)
    unknown = s - f.args
    if unknown:
        raise ValueError(f"arguments not in frame: {sorted(unknown)}")
    return s


def is_conflict_free(s: Iterable[str], f: ArgumentationFrame) -> bool:
    """No member of ``s`` attacks a member of ``s`` (self-attacks count)."""
    _require_dung(f)
    s = _require_members(s, f)
    return not any(a in s and b in s for a, b in f.attacks)


def defends(s: Iterable[str], a: str, f: ArgumentationFrame) -> bool:
    """Every attacker of ``a`` is counter-attacked by some member of ``s``."""
    _require_dung(f)
    s = _require_members(s, f)
    (a,) = _require_members([a], f)
    for x, y in f.attacks:
        if y == a and not any((z, x) in f.attacks for z in s):
            return False
    return True


def _index(f: ArgumentationFrame) -> tuple[list[str], list[int], list[int]]:
    order = sorted(f.args)
    pos = {a: i for i, a in enumerate(order)}
    attackers = [0] * len(order)
    targets = [0] * len(order)
    for s, t in f.attacks:
        attackers[pos[t]] |= 1 << pos[s]
        targets[pos[s]] |= 1 << pos[t]
    return order, attackers, targets


def _masks_to_extensions(masks: Iterable[int], order: list[str]) -> ExtensionSet:
    out = set()
    for m in masks:
        ext = frozenset(order[i] for i in range(len(order)) if m >> i & 1)
        out.add(ext)
    return frozenset(out)


def _complete_masks(n: int, attackers: list[int], targets: list[int]) -> list[int]:
    """All accepted-sets of legal complete labellings, as bitmasks.

    Arguments are labelled in index order.  Accepting an argument demands no
    accepted or undecided attacker/target so far and no self-attack;
    rejecting demands an accepted attacker now or a still-unassigned one
    that may yet be accepted; leaving undecided demands no accepted
    neighbour and some attacker that is not rejected.  Rejection and
    undecidedness carry obligations that only the finished labelling can
    discharge, so leaves are re-checked.
    """
    full = (1 << n) - 1
    results: list[int] = []

    def leaf_ok(in_m: int, out_m: int, un_m: int) -> bool:
        m = out_m
        while m:
            b = m & -m
            if not attackers[b.bit_length() - 1] & in_m:
                return False
            m ^= b
        m = un_m
        while m:
            b = m & -m
            if not attackers[b.bit_length() - 1] & un_m:
                return False
            m ^= b
        return True

    def search(i: int, in_m: int, out_m: int, un_m: int) -> None:
        if i == n:
            if leaf_ok(in_m, out_m, un_m):
                results.append(in_m)
            return
        b = 1 << i
        att = attackers[i]
        tgt = targets[i]
        unassigned = full & ~((b << 1) - 1)
        if not att & b and not (att | tgt) & (in_m | un_m):
            search(i + 1, in_m | b, out_m, un_m)
        if att & in_m or att & unassigned:
            search(i + 1, in_m, out_m | b, un_m)
        if not (att | tgt) & in_m and att & ~out_m:
            search(i + 1, in_m, out_m, un_m | b)

    search(0, 0, 0, 0)
    return results


def _grounded_mask(n: int, attackers: list[int], targets: list[int]) -> int:
    """Least fixpoint of the defense operator, iterated up from nothing."""
    in_m = 0
    while True:
        attacked = 0
        m = in_m
        while m:
            b = m & -m
            attacked |= targets[b.bit_length() - 1]
            m ^= b
        new_m = 0
        for i in range(n):
            if not attackers[i] & ~attacked:
                new_m |= 1 << i
        if new_m == in_m:
            return in_m
        in_m = new_m


def complete_sets(f: ArgumentationFrame) -> ExtensionSet:
    """All complete extensions of ``f``."""
    _require_dung(f)
    order, attackers, targets = _index(f)
    return _masks_to_extensions(_complete_masks(len(order), attackers, targets), order)


def preferred_sets(f: ArgumentationFrame) -> ExtensionSet:
    """All maximal complete extensions of ``f``."""
    _require_dung(f)
    order, attackers, targets = _index(f)
    masks = _complete_masks(len(order), attackers, targets)
    maximal = [m for m in masks if not any(m != m2 and m | m2 == m2 for m2 in masks)]
    return _masks_to_extensions(maximal, order)


def grounded_set(f: ArgumentationFrame) -> ExtensionSet:
    """The unique grounded extension of ``f``, wrapped as a one-member set."""
    _require_dung(f)
    order, attackers, targets = _index(f)
    m = _grounded_mask(len(order), attackers, targets)
    return _masks_to_extensions([m], order)


def semantics(kind: SemanticsKind, f: ArgumentationFrame) -> ExtensionSet:
    kind = SemanticsKind(kind)
    if kind is SemanticsKind.COMPLETE:
        return complete_sets(f)
    if kind is SemanticsKind.PREFERRED:
        return preferred_sets(f)
    return grounded_set(f)


def acceptance(a: str, kind: SemanticsKind, f: ArgumentationFrame, mode: str = CREDULOUS) -> bool:
    """Credulous (some extension) or skeptical (every extension) acceptance."""
    _require_members([a], f)
    exts = semantics(kind, f)
    if mode == CREDULOUS:
        return any(a in ext for ext in exts)
    if mode == SKEPTICAL:
        return all(a in ext for ext in exts)
    raise ValueError(f"unknown acceptance mode: {mode!r}")


def sorted_extensions(exts: ExtensionSet) -> list[list[str]]:
    """Deterministic presentation order: lexicographic by sorted member ids."""
    return sorted([sorted(ext) for ext in exts])
