"""Finite abstract argumentation frameworks and grounded semantics.

The grounded extension is computed by iterating the defence operator from
the unattacked arguments upward; the intermediate sets are kept as a trace.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Hashable, Mapping


class Label(Enum):
    IN = "in"
    OUT = "out"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class Framework:
    arguments: frozenset
    attacks: frozenset

    def __post_init__(self):
        for attacker, attacked in self.attacks:
            if attacker not in self.arguments or attacked not in self.arguments:
                raise ValueError(f"attack ({attacker!r}, {attacked!r}) has a dangling endpoint")

    def attackers_of(self) -> dict:
        table: dict = {arg: set() for arg in self.arguments}
        for attacker, attacked in self.attacks:
            table[attacked].add(attacker)
        return table


@dataclass(frozen=True)
class GroundedResult:
    members: frozenset
    labels: Mapping
    trace: tuple


def grounded(framework: Framework) -> GroundedResult:
    """The unique grounded extension, with IN/OUT/UNDECIDED labels.

    The trace lists the monotone sets computed on the way: the unattacked
    arguments first, then at each step everything the previous set defends,
    until nothing more is added.
    """
    attackers = framework.attackers_of()
    current = frozenset(arg for arg in framework.arguments if not attackers[arg])
    trace = [current]
    while True:
        attacked_by_current = {
            target for member in current for (src, target) in framework.attacks if src == member
        }
        nxt = frozenset(
            arg
            for arg in framework.arguments
            if attackers[arg] <= attacked_by_current
        )
        if nxt == current:
            break
        current = nxt
        trace.append(current)
    attacked_by_members = {
        target for member in current for (src, target) in framework.attacks if src == member
    }
    labels = {}
    for arg in framework.arguments:
        if arg in current:
            labels[arg] = Label.IN
        elif arg in attacked_by_members:
            labels[arg] = Label.OUT
        else:
            labels[arg] = Label.UNDECIDED
    return GroundedResult(members=current, labels=labels, trace=tuple(trace))


def defends(framework: Framework, defender: Hashable, target: Hashable) -> bool:
    """True iff every attacker of target is attacked by defender."""
    if defender not in framework.arguments or target not in framework.arguments:
        raise ValueError("defender and target must belong to the framework")
    defender_hits = {attacked for (attacker, attacked) in framework.attacks if attacker == defender}
    return all(
        attacker in defender_hits
        for (attacker, attacked) in framework.attacks
        if attacked == target
    )


def reaches(framework: Framework, source: Hashable, destination: Hashable) -> bool:
    """Directed attack-path reachability; every argument reaches itself."""
    if source not in framework.arguments or destination not in framework.arguments:
        raise ValueError("both arguments must belong to the framework")
    if source == destination:
        return True
    successors: dict = {}
    for attacker, attacked in framework.attacks:
        successors.setdefault(attacker, []).append(attacked)
    seen = {source}
    queue = deque([source])
    while queue:
        node = queue.popleft()
        for nxt in successors.get(node, ()):
            if nxt == destination:
                return True
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return False


def is_acyclic(framework: Framework) -> bool:
    successors: dict = {arg: [] for arg in framework.arguments}
    for attacker, attacked in framework.attacks:
        successors[attacker].append(attacked)
    WHITE, GREY, BLACK = 0, 1, 2
    colour = {arg: WHITE for arg in framework.arguments}
    for start in framework.arguments:
        if colour[start] != WHITE:
            continue
        stack = [(start, iter(successors[start]))]
        colour[start] = GREY
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if colour[nxt] == GREY:
                    return False
                if colour[nxt] == WHITE:
                    colour[nxt] = GREY
                    stack.append((nxt, iter(successors[nxt])))
                    advanced = True
                    break
            if not advanced:
                colour[node] = BLACK
                stack.pop()
    return True


def render_dot(
    framework: Framework,
    label_of: Callable[[Hashable], str],
    shape_of: Callable[[Hashable], str] = lambda _: "ellipse",
    filled: frozenset = frozenset(),
) -> str:
    """Render the attack graph in DOT, with caller-chosen labels and shapes."""
    ids = {arg: f"n{i}" for i, arg in enumerate(sorted(framework.arguments, key=label_of))}
    lines = ["digraph framework {"]
    for arg, node in ids.items():
        attrs = [f'label="{_escape(label_of(arg))}"', f"shape={shape_of(arg)}"]
        if arg in filled:
            attrs.append("style=filled, fillcolor=grey")
        lines.append(f"  {node} [{', '.join(attrs)}];")
    for attacker, attacked in sorted(
        framework.attacks, key=lambda e: (label_of(e[0]), label_of(e[1]))
    ):
        lines.append(f"  {ids[attacker]} -> {ids[attacked]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')
