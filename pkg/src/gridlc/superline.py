"""Super line graphs, completeness testing, and the line completion oracle.

The super line graph of index ``r`` of a graph G has one vertex per
r-element subset of G's edges; two subsets are adjacent when some edge of
one shares an endpoint with a different edge of the other.  The line
completion number lc(G) is the least ``r`` for which that graph is
complete, with lc = 0 for an edgeless graph.  Completeness is monotone in
``r``, so the brute-force oracle scans upward and stops at the first
complete level.

Subset pairs are enumerated lexicographically by sorted edge indices, and
overlapping pairs are included: two distinct subsets may share edges and
still be non-adjacent.  Every search here is a pure function of immutable
inputs.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable

from .errors import BudgetExceededError, CapacityError
from .graph import Graph

#: Default cap on subset pairs an enumeration may decide.
DEFAULT_PAIR_BUDGET = 10**9

#: Default cap on the number of subset vertices a super line graph may have.
DEFAULT_VERTEX_CAP = 10**5


@dataclass(frozen=True)
class EdgeSet:
    """A set of edge indices of one particular graph, stored as a bitmask."""

    graph: Graph
    bits: int

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.graph.edge_count:
            raise ValueError("bitmask contains edge indices outside the graph")

    @staticmethod
    def from_indices(graph: Graph, indices: Iterable[int]) -> EdgeSet:
        bits = 0
        for index in indices:
            if not 0 <= index < graph.edge_count:
                raise ValueError(
                    f"edge index {index} out of range for a graph with {graph.edge_count} edges"
                )
            bits |= 1 << index
        return EdgeSet(graph, bits)

    @property
    def cardinality(self) -> int:
        return self.bits.bit_count()

    def indices(self) -> tuple[int, ...]:
        """Member edge indices in ascending order."""
        out = []
        bits = self.bits
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return tuple(out)

    def __len__(self) -> int:
        return self.cardinality

    def __contains__(self, index: int) -> bool:
        return 0 <= index < self.graph.edge_count and bool(self.bits >> index & 1)

    def __iter__(self):
        return iter(self.indices())


def _adjacency_cover(graph: Graph, bits: int) -> int:
    # Union of the adjacency masks of the member edges.  An edge never
    # appears in its own mask, so a shared edge alone never makes two
    # subsets adjacent.
    cover = 0
    adjacency = graph.edge_adjacency
    while bits:
        low = bits & -bits
        cover |= adjacency[low.bit_length() - 1]
        bits ^= low
    return cover


def sets_adjacent(g: Graph, s: EdgeSet, t: EdgeSet) -> bool:
    """True when some edge of ``s`` touches a different edge of ``t``."""
    if s.graph != g or t.graph != g:
        raise ValueError("edge sets must belong to the queried graph")
    return bool(_adjacency_cover(g, s.bits) & t.bits)


@dataclass(frozen=True)
class WitnessPair:
    """Two equal-size, distinct, mutually non-adjacent edge subsets.

    Its existence at size ``r`` shows the super line graph of index ``r``
    is not complete.  The defining facts are re-checked on construction so
    an invalid pair cannot be represented.
    """

    S: EdgeSet
    T: EdgeSet
    r: int

    def __post_init__(self) -> None:
        if self.S.graph != self.T.graph:
            raise ValueError("witness sets belong to different graphs")
        if self.S.cardinality != self.r or self.T.cardinality != self.r:
            raise ValueError("witness sets must both contain exactly r edges")
        if self.S.bits == self.T.bits:
            raise ValueError("witness sets must be distinct")
        if sets_adjacent(self.S.graph, self.S, self.T):
            raise ValueError("witness sets are adjacent")


@dataclass(frozen=True)
class LcResult:
    """A line completion number plus how it was obtained."""

    r: int
    method: str  # "formula" or "brute-force"
    witness_at_r_minus_1: WitnessPair | None = None

    def __post_init__(self) -> None:
        if self.witness_at_r_minus_1 is not None and self.witness_at_r_minus_1.r != self.r - 1:
            raise ValueError("witness must certify incompleteness at r - 1")


class _PairBudget:
    """Tracks subset pairs decided, charged one outer-subset row at a time."""

    def __init__(self, limit: int):
        if limit < 1:
            raise ValueError("pair budget must be positive")
        self.limit = limit
        self.used = 0

    def charge(self, amount: int) -> None:
        self.used += amount
        if self.used > self.limit:
            raise BudgetExceededError(f"subset-pair budget of {self.limit} exhausted")


def _scan_level(graph: Graph, r: int, budget: _PairBudget) -> tuple[int, int] | None:
    """First non-adjacent pair of r-subsets as (s_bits, t_bits), or None.

    Subsets are enumerated in lexicographic order.  Each outer subset S is
    decided in one step: a partner exists iff some r-subset other than S
    fits inside the complement of S's adjacency cover, which is a binomial
    count over the complement's size.  Only the row holding the first hit
    is then scanned pair by pair, so the returned pair is the overall
    lexicographically first.  The budget is charged with the full pair
    count of every row entered, whether or not the shortcut decided it.
    """
    edge_count = graph.edge_count
    adjacency = graph.edge_adjacency
    full = (1 << edge_count) - 1
    combos = list(itertools.combinations(range(edge_count), r))
    bits_list: list[int] = []
    cover_list: list[int] = []
    for combo in combos:
        bits = 0
        cover = 0
        for e in combo:
            bits |= 1 << e
            cover |= adjacency[e]
        bits_list.append(bits)
        cover_list.append(cover)
    subsets_of_size = [math.comb(k, r) for k in range(edge_count + 1)]
    total = len(combos)
    for i in range(total):
        budget.charge(total - i - 1)
        cover = cover_list[i]
        bits = bits_list[i]
        avail = full & ~cover
        partners = subsets_of_size[avail.bit_count()]
        if bits & cover == 0:
            partners -= 1  # S itself sits inside its own complement
        if partners <= 0:
            continue
        # The first subset with any partner has all partners after it: a
        # partner before it would itself have had a partner earlier.
        for j in range(i + 1, total):
            if not (cover & bits_list[j]):
                return bits, bits_list[j]
        raise AssertionError("positive partner count but no later partner found")
    return None


def find_nonadjacent_pair(
    g: Graph, r: int, *, pair_budget: int = DEFAULT_PAIR_BUDGET
) -> WitnessPair | None:
    """Lexicographically first non-adjacent pair of r-subsets, if any.

    Returns ``None`` only after the enumeration fully decided every pair;
    running out of budget raises :class:`BudgetExceededError` instead, so
    completeness is never reported unsoundly.
    """
    if not 1 <= r <= g.edge_count:
        raise ValueError(f"subset size {r} out of range 1..{g.edge_count}")
    hit = _scan_level(g, r, _PairBudget(pair_budget))
    if hit is None:
        return None
    return WitnessPair(EdgeSet(g, hit[0]), EdgeSet(g, hit[1]), r)


def is_complete_index(g: Graph, r: int, *, pair_budget: int = DEFAULT_PAIR_BUDGET) -> bool:
    """True when every pair of distinct r-subsets of edges is adjacent."""
    return find_nonadjacent_pair(g, r, pair_budget=pair_budget) is None


def lc_bruteforce(g: Graph, *, pair_budget: int = DEFAULT_PAIR_BUDGET) -> LcResult:
    """Least ``r`` whose super line graph is complete, by upward scan.

    Monotonicity of completeness makes the first complete level the
    answer.  For ``r >= 2`` the result carries the witness pair found at
    ``r - 1``.  The budget spans the whole scan; exhausting it raises
    :class:`BudgetExceededError` with ``last_decided_r`` set to the last
    level that was fully decided.
    """
    if g.edge_count == 0:
        return LcResult(0, "brute-force", None)
    budget = _PairBudget(pair_budget)
    previous_hit: tuple[int, int] | None = None
    for r in range(1, g.edge_count + 1):
        try:
            hit = _scan_level(g, r, budget)
        except BudgetExceededError as exc:
            raise BudgetExceededError(
                f"subset-pair budget of {pair_budget} exhausted while deciding r = {r}",
                last_decided_r=r - 1,
            ) from exc
        if hit is None:
            witness = None
            if previous_hit is not None:
                witness = WitnessPair(
                    EdgeSet(g, previous_hit[0]), EdgeSet(g, previous_hit[1]), r - 1
                )
            return LcResult(r, "brute-force", witness)
        previous_hit = hit
    raise AssertionError("the level with a single subset is always complete")


def max_nonadjacent_r(
    g: Graph, *, pair_budget: int = DEFAULT_PAIR_BUDGET
) -> tuple[int, WitnessPair] | None:
    """Largest subset size that still admits a witness pair, with one pair.

    Returns ``None`` when no size does (then lc <= 1).  Otherwise the size
    is exactly ``lc_bruteforce(g).r - 1``.
    """
    result = lc_bruteforce(g, pair_budget=pair_budget)
    if result.witness_at_r_minus_1 is None:
        return None
    return result.r - 1, result.witness_at_r_minus_1


def super_line_graph(
    g: Graph, r: int, *, vertex_cap: int = DEFAULT_VERTEX_CAP
) -> tuple[Graph, tuple[tuple[int, ...], ...]]:
    """Materialise the super line graph of index ``r`` with vertex labels.

    Returns ``(graph, labels)``: vertex ``k`` of ``graph`` is the ``k``-th
    r-subset of edge indices in lexicographic order and ``labels[k]`` is
    that subset.  Construction tests every subset pair, so cost grows
    quadratically with the subset count; ``vertex_cap`` bounds it up front.
    """
    if r < 1:
        raise ValueError("subset size r must be at least 1")
    if r > g.edge_count:
        raise ValueError(f"r = {r} exceeds the {g.edge_count} available edges")
    subset_count = math.comb(g.edge_count, r)
    if subset_count > vertex_cap:
        raise CapacityError(
            f"C({g.edge_count}, {r}) = {subset_count} subset vertices "
            f"exceed the cap of {vertex_cap}"
        )
    combos = list(itertools.combinations(range(g.edge_count), r))
    adjacency = g.edge_adjacency
    bits_list: list[int] = []
    cover_list: list[int] = []
    for combo in combos:
        bits = 0
        cover = 0
        for e in combo:
            bits |= 1 << e
            cover |= adjacency[e]
        bits_list.append(bits)
        cover_list.append(cover)
    pairs: list[tuple[int, int]] = []
    for i in range(subset_count):
        cover = cover_list[i]
        for j in range(i + 1, subset_count):
            if cover & bits_list[j]:
                pairs.append((i, j))
    return Graph.from_edges(subset_count, pairs, edge_cap=None), tuple(combos)
