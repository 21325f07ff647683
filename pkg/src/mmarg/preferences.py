"""Preference orders over arguments and attack reversal.

Two kinds of order matter here.  An agent's own fact/guess split (one tier
of arguments it knows to be factual, everything else below) drives spurious
attack elimination before any reasoning; a trust-derived order between
other agents' publicly conflicting arguments breaks ties the facts cannot.
Both reduce to the same operation: an attack coming out of a strictly less
preferred argument is reversed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable

from .frames import Attack, ArgumentationFrame

if TYPE_CHECKING:  # pragma: no cover
    from .state import MmaState


@dataclass(frozen=True)
class PreferenceOrder:
    """A partial order kept as its strict part only.

    Reflexive pairs and equivalences never influence attack reversal, so
    they are not stored.
    """

    strict: frozenset[Attack]

    @classmethod
    def of(cls, pairs: Iterable[Attack] = ()) -> PreferenceOrder:
        return cls(frozenset((a, b) for a, b in pairs))

    @classmethod
    def from_leq(cls, leq: Iterable[Attack]) -> PreferenceOrder:
        leq = frozenset(leq)
        return cls(frozenset((a, b) for a, b in leq if (b, a) not in leq))

    def strictly_less(self, a: str, b: str) -> bool:
        return (a, b) in self.strict


@dataclass(frozen=True)
class IntraPreference:
    """Binary fact/non-fact split over the arguments an agent is aware of.

    ``factual`` sits at the top tier, everything else in ``universe`` at the
    bottom; the two tiers are the only strict comparison.
    """

    factual: frozenset[str]
    universe: frozenset[str]

    def __post_init__(self) -> None:
        if not self.factual <= self.universe:
            raise ValueError(f"factual arguments outside the universe: {sorted(self.factual - self.universe)}")

    @classmethod
    def of(cls, factual: Iterable[str], universe: Iterable[str]) -> IntraPreference:
        return cls(frozenset(factual), frozenset(universe))

    def to_order(self) -> PreferenceOrder:
        strict = frozenset((a, b) for a in self.universe - self.factual for b in self.factual)
        return PreferenceOrder(strict)


@dataclass(frozen=True)
class InterPreference:
    """Trust-derived order for one observer, stored as its raw leq pairs."""

    owner: str
    leq: frozenset[Attack]

    def to_order(self) -> PreferenceOrder:
        return PreferenceOrder.from_leq(self.leq)


def adjust(f: ArgumentationFrame, order: PreferenceOrder) -> ArgumentationFrame:
    """Reverse every attack whose source is strictly less preferred than its target.

    The argument set never changes; a reversed attack may coincide with an
    existing opposite attack, in which case the pair collapses to one edge.
    """
    attacks = frozenset(
        (t, s) if order.strictly_less(s, t) else (s, t) for s, t in f.attacks
    )
    return ArgumentationFrame(f.args, attacks, f.kind)


def derive_inter(m: "MmaState", e: str) -> InterPreference:
    """The trust order of agent ``e`` over mutually conflicting public arguments.

    A pair of arguments qualifies when they attack each other publicly, each
    lies in some agent's scope and inside ``e``'s awareness, and ``e`` holds
    neither to be factual; the argument of the less trusted owner then sits
    below the other's.  Recomputed on demand: both the public record and the
    trust matrix move under updates.
    """
    if e not in m.agents:
        raise ValueError(f"unknown agent: {e!r}")
    owner: dict[str, str] = {}
    for agent in m.agents:
        for a in m.scope[agent].args:
            owner[a] = agent
    aware_args = m.aware[e].args
    factual = m.intra[(e, e)].factual
    pub = m.public_af.attacks
    leq = set()
    for a1, a2 in pub:
        if (a2, a1) not in pub:
            continue
        if a1 not in owner or a2 not in owner:
            continue
        if a1 not in aware_args or a2 not in aware_args:
            continue
        if a1 in factual or a2 in factual:
            continue
        if m.trust[(e, owner[a1])] <= m.trust[(e, owner[a2])]:
            leq.add((a1, a2))
    return InterPreference(e, frozenset(leq))
