"""
Planar diagrams and four-ended tangles.

A crossing is a 4-tuple of edge labels in counterclockwise slot order
SW, SE, NE, NW. One strand runs through slots 0 and 2, the other through 1
and 3. Every edge label appears exactly twice in a closed diagram; in a
tangle the free ends NW, NE, SW, SE account for the missing occurrences.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum

from .exceptions import ClosureDisconnected, AlternationConflict, EmptyDiagram, InvalidRibbon
from .gauss import GaussCode, Visit, OVER, UNDER

logger = logging.getLogger(__name__)

SW, SE, NE, NW = range(4)
END_NAMES = ('nw', 'ne', 'sw', 'se')


class Direction(Enum):
    HORIZONTAL = 'H'
    VERTICAL = 'V'


def _max_label(crossings, ends=()):
    labels = [label for crossing in crossings for label in crossing]
    labels.extend(ends)
    return max(labels, default=-1)


class _Fragment:
    """Mutable workspace for fusing free ends of one or more pieces."""

    def __init__(self):
        self.crossings = []
        self.ends = {}
        self._next = 0

    def absorb(self, crossings, ends, prefix):
        """Copy a piece in with fresh labels; its ends become ``prefix.name``."""
        offset = self._next
        for crossing in crossings:
            self.crossings.append([label + offset for label in crossing])
        for name, label in ends.items():
            self.ends[f'{prefix}.{name}'] = label + offset
        self._next = offset + _max_label(crossings, ends.values()) + 1

    def fresh(self):
        label = self._next
        self._next += 1
        return label

    def fuse(self, a, b):
        """Join free end ``a`` to free end ``b``; the edge keeps ``a``'s label."""
        keep = self.ends.pop(a)
        drop = self.ends.pop(b)
        if keep == drop:
            raise ClosureDisconnected(f"joining {a} to {b} closes a circle with no crossings")
        for crossing in self.crossings:
            for slot, label in enumerate(crossing):
                if label == drop:
                    crossing[slot] = keep
        for name, label in self.ends.items():
            if label == drop:
                self.ends[name] = keep

    def cut(self, prefix):
        """Cut the edge at slot SW of the first crossing of the piece just absorbed."""
        crossing = self.crossings[self._piece_start]
        label = crossing[SW]
        crossing[SW] = self.fresh()
        self.ends[f'{prefix}.a'] = crossing[SW]
        self.ends[f'{prefix}.b'] = label

    def mark(self):
        self._piece_start = len(self.crossings)

    def frozen_crossings(self):
        return tuple(tuple(crossing) for crossing in self.crossings)


@dataclass(frozen=True)
class Tangle:
    crossings: tuple
    nw: int
    ne: int
    sw: int
    se: int

    @property
    def crossing_count(self):
        return len(self.crossings)

    def ends(self):
        return {name: getattr(self, name) for name in END_NAMES}

    @classmethod
    def _from_fragment(cls, fragment, names):
        return cls(fragment.frozen_crossings(), **{
            name: fragment.ends[source] for name, source in zip(END_NAMES, names)
        })


@dataclass(frozen=True)
class Diagram:
    """
    A closed diagram: crossings plus a count of free circles with none.

    The unknot is ``Diagram((), loops=1)``.
    """

    crossings: tuple = ()
    loops: int = 0

    @property
    def crossing_count(self):
        return len(self.crossings)

    def normalized(self):
        """Renumber edge labels 1..2V in order of first appearance."""
        mapping = {}
        for crossing in self.crossings:
            for label in crossing:
                mapping.setdefault(label, len(mapping) + 1)
        return Diagram(
            tuple(tuple(mapping[label] for label in crossing) for crossing in self.crossings),
            self.loops,
        )


UNKNOT = Diagram((), loops=1)


# Elementary tangles

def ribbon_tangle(k, direction):
    """
    A ribbon of ``k`` crossings joined by two-edge faces.

    Horizontal ribbons chain NE/SE of one crossing to NW/SW of the next; their
    numerator closure is the cyclic torus chain. Vertical ribbons chain NW/NE
    to SW/SE; their numerator closure is the twisted circle.
    """
    if not isinstance(k, int) or k < 1:
        raise InvalidRibbon(f"ribbon crossing count must be a positive integer, got {k!r}")
    direction = Direction(direction)

    links = [(2 * i, 2 * i + 1) for i in range(k - 1)]
    first = 2 * (k - 1)
    ends = {name: first + i for i, name in enumerate(('sw', 'se', 'nw', 'ne'))}
    crossings = []
    for i in range(k):
        prev = links[i - 1] if i > 0 else None
        nxt = links[i] if i < k - 1 else None
        if direction is Direction.HORIZONTAL:
            # links[i] = (top edge NE->NW, bottom edge SE->SW)
            sw = prev[1] if prev else ends['sw']
            nw = prev[0] if prev else ends['nw']
            ne = nxt[0] if nxt else ends['ne']
            se = nxt[1] if nxt else ends['se']
        else:
            # links[i] = (left edge NW->SW, right edge NE->SE)
            sw = prev[0] if prev else ends['sw']
            se = prev[1] if prev else ends['se']
            nw = nxt[0] if nxt else ends['nw']
            ne = nxt[1] if nxt else ends['ne']
        crossings.append((sw, se, ne, nw))
    return Tangle(tuple(crossings), **ends)


def infinity_tangle():
    """Two arcs, NW-SW and NE-SE."""
    return Tangle((), nw=0, sw=0, ne=1, se=1)


# Tangle algebra

def join_ew(left, right):
    """Place ``right`` east of ``left``: fuse left NE/SE to right NW/SW."""
    fragment = _Fragment()
    fragment.absorb(left.crossings, left.ends(), 'l')
    fragment.absorb(right.crossings, right.ends(), 'r')
    fragment.fuse('l.ne', 'r.nw')
    fragment.fuse('l.se', 'r.sw')
    return Tangle._from_fragment(fragment, ('l.nw', 'r.ne', 'l.sw', 'r.se'))


def join_ns(lower, upper):
    """Place ``upper`` north of ``lower``: fuse lower NW/NE to upper SW/SE."""
    fragment = _Fragment()
    fragment.absorb(lower.crossings, lower.ends(), 'l')
    fragment.absorb(upper.crossings, upper.ends(), 'u')
    fragment.fuse('l.nw', 'u.sw')
    fragment.fuse('l.ne', 'u.se')
    return Tangle._from_fragment(fragment, ('u.nw', 'u.ne', 'l.sw', 'l.se'))


def _close(tangle, pairs):
    fragment = _Fragment()
    fragment.absorb(tangle.crossings, tangle.ends(), 't')
    for a, b in pairs:
        fragment.fuse(f't.{a}', f't.{b}')
    return Diagram(fragment.frozen_crossings()).normalized()


def numerator_closure(tangle):
    """Fuse NW to NE and SW to SE."""
    return _close(tangle, (('nw', 'ne'), ('sw', 'se')))


# Diagram operations

def disjoint_union(first, second):
    """Side-by-side placement; the matrix is block diagonal."""
    fragment = _Fragment()
    fragment.absorb(first.crossings, {}, 'a')
    fragment.absorb(second.crossings, {}, 'b')
    return Diagram(fragment.frozen_crossings(), first.loops + second.loops).normalized()


def splice(first, second, connector):
    """
    Cut one edge of each diagram and reconnect the four ends through a tangle.

    The cut ends of ``first`` go to the connector's SW/SE, those of
    ``second`` to NW/NE.
    """
    if not first.crossings or not second.crossings:
        raise EmptyDiagram("both diagrams need a crossing to cut an edge next to")
    fragment = _Fragment()
    fragment.mark()
    fragment.absorb(first.crossings, {}, 'd1')
    fragment.cut('d1')
    fragment.mark()
    fragment.absorb(second.crossings, {}, 'd2')
    fragment.cut('d2')
    fragment.absorb(connector.crossings, connector.ends(), 'x')
    fragment.fuse('d1.a', 'x.sw')
    fragment.fuse('d1.b', 'x.se')
    fragment.fuse('d2.a', 'x.nw')
    fragment.fuse('d2.b', 'x.ne')
    return Diagram(fragment.frozen_crossings(), first.loops + second.loops).normalized()


# Traversal and alternation

def strands(diagram):
    """
    Walk every component.

    Each walk starts at the lowest crossing with an unvisited strand, enters
    through that strand's lower slot and leaves through the opposite slot.

    Returns:
        list of components, each a list of (crossing index, strand) with
        strand 0 for slots SW/NE and 1 for slots SE/NW
    """
    occurrences = defaultdict(list)
    for index, crossing in enumerate(diagram.crossings):
        for slot, label in enumerate(crossing):
            occurrences[label].append((index, slot))
    for label, places in occurrences.items():
        if len(places) != 2:
            raise ClosureDisconnected(f"edge {label} has {len(places)} endpoints")

    visited = set()
    walks = []
    for index in range(len(diagram.crossings)):
        for strand in (0, 1):
            if (index, strand) in visited:
                continue
            walk = []
            at, slot = index, strand
            while (at, slot % 2) not in visited:
                visited.add((at, slot % 2))
                walk.append((at, slot % 2))
                label = diagram.crossings[at][(slot + 2) % 4]
                first, second = occurrences[label]
                at, slot = second if first == (at, (slot + 2) % 4) else first
            walks.append(walk)
    return walks


def assign_alternation(diagram):
    """
    Choose over/under passes so every component alternates.

    The first visit of the lowest crossing on the first component is Over;
    components that share no crossing with earlier ones also start Over.

    Returns:
        GaussCode with crossing ids 1..V in construction order

    Raises:
        AlternationConflict: some crossing would be Over twice or Under twice
    """
    walks = strands(diagram)
    if not walks:
        raise EmptyDiagram("a diagram without crossings has no Gauss code")

    where = defaultdict(list)
    for number, walk in enumerate(walks):
        if len(walk) % 2:
            raise AlternationConflict(f"component {number + 1} has odd length {len(walk)}")
        for position, (crossing, _) in enumerate(walk):
            where[crossing].append((number, position))

    # phase[c] flips every pass of component c
    phase = [None] * len(walks)
    for root in range(len(walks)):
        if phase[root] is not None:
            continue
        phase[root] = 0
        queue = [root]
        while queue:
            current = queue.pop()
            for crossing, _ in walks[current]:
                (c1, p1), (c2, p2) = where[crossing]
                if c1 == c2:
                    if (p1 - p2) % 2 == 0:
                        raise AlternationConflict(
                            f"crossing {crossing + 1} is met twice with the same pass"
                        )
                    continue
                other, mine = (c2, c1) if c1 == current else (c1, c2)
                p_mine, p_other = (p1, p2) if c1 == current else (p2, p1)
                wanted = (1 + p_mine + p_other + phase[mine]) % 2
                if phase[other] is None:
                    phase[other] = wanted
                    queue.append(other)
                elif phase[other] != wanted:
                    raise AlternationConflict(
                        f"crossing {crossing + 1} is met twice with the same pass"
                    )

    code = tuple(
        tuple(
            Visit(crossing + 1, OVER if (position + phase[number]) % 2 == 0 else UNDER)
            for position, (crossing, _) in enumerate(walk)
        )
        for number, walk in enumerate(walks)
    )
    logger.debug(f"Assigned alternation over {len(walks)} components")
    return GaussCode(code)


def to_pd(diagram):
    """Planar-diagram text, each crossing listed counterclockwise from SW."""
    normalized = diagram.normalized()
    body = ", ".join(
        "X[" + ",".join(str(label) for label in crossing) + "]"
        for crossing in normalized.crossings
    )
    return f"PD[{body}]"
