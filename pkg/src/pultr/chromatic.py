"""Chromatic and circular chromatic computation, orientation certificates
in the Gallai-Roy style, and the circular bound through power functors.

k-colourability is decided by a dedicated deterministic DSATUR-style
search (greedy-clique seeding, colours capped at first-use order to break
colour symmetry).  Its contract is exactly "least n such that a
homomorphism to K_n exists", and the test suite cross-checks it against
raw hom searches on all small graphs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from . import engine, limits
from .adjoints import interleaved_adjoint, power_functor
from .bitset import iter_bits
from .engine import HomWitness
from .errors import BudgetExceededError, ParameterError
from .graphs import (
    as_graph,
    circular_complete,
    complete_graph,
    directed_path,
    oriented_path,
    orientations,
    orient_edges,
    sorted_edges,
    symmetrization,
    transitive_tournament,
)

ORIENTATION_SCAN_CAP = 18  # max edge count for exhaustive orientation scans


@dataclass(frozen=True)
class ColouringCertificate:
    """Either a verified homomorphism into a colouring target, or an
    orientation certified against a family of oriented paths (or both).

    `family` records the exhaustive check outcome per family member as
    (orientation spec of the path, maps into the orientation?).
    """

    target_name: str = ""
    witness: HomWitness | None = None
    orientation: str | None = None
    family: tuple = ()


def greedy_clique(g):
    """Deterministic greedy clique: grow from the max-degree vertex,
    always adding the highest-degree compatible vertex (ties by index)."""
    if g.n == 0:
        return []
    degs = [g.out_masks[u].bit_count() for u in range(g.n)]
    order = sorted(range(g.n), key=lambda u: (-degs[u], u))
    clique = []
    cmask = (1 << g.n) - 1
    for u in order:
        if cmask >> u & 1:
            clique.append(u)
            cmask &= g.out_masks[u]
    return clique


def k_colourable(g, k, budget=None):
    """A proper k-colouring of the loop-free graph g (list of colours), or
    None.  Deterministic; counts decisions against the budget."""
    g = as_graph(g)
    if g.has_loop():
        raise ParameterError("colouring is undefined for graphs with loops")
    if k < 0:
        raise ParameterError("colour count must be non-negative")
    n = g.n
    if n == 0:
        return []
    if k == 0:
        return None
    if budget is None:
        budget = limits.default_budget()
    adj = g.out_masks
    clique = greedy_clique(g)
    if len(clique) > k:
        return None
    colours = [-1] * n
    nbr_used = [0] * n  # mask over colours present in the neighbourhood
    for c, v in enumerate(clique):
        colours[v] = c
        for w in iter_bits(adj[v]):
            nbr_used[w] |= 1 << c
    full = (1 << k) - 1
    decisions = 0
    degs = [adj[u].bit_count() for u in range(n)]

    def pick():
        best, key = -1, None
        for v in range(n):
            if colours[v] >= 0:
                continue
            kv = (nbr_used[v].bit_count(), degs[v], -v)
            if key is None or kv > key:
                best, key = v, kv
        return best

    def dfs(assigned, max_used):
        nonlocal decisions
        if assigned == n:
            return True
        v = pick()
        avail = ~nbr_used[v] & ((1 << min(k, max_used + 2)) - 1)
        for c in iter_bits(avail):
            decisions += 1
            if decisions > budget:
                raise BudgetExceededError(decisions)
            colours[v] = c
            bit = 1 << c
            touched = []
            dead = False
            for w in iter_bits(adj[v]):
                if colours[w] < 0 and not nbr_used[w] & bit:
                    nbr_used[w] |= bit
                    touched.append(w)
                    if nbr_used[w] == full:
                        dead = True
            if not dead and dfs(assigned + 1, max(max_used, c)):
                return True
            for w in touched:
                nbr_used[w] &= ~bit
            colours[v] = -1
        return False

    if dfs(len(clique), len(clique) - 1):
        return list(colours)
    return None


def chromatic_number(g, budget=None):
    """Least n with a homomorphism to K_n.  Errors on loops."""
    g = as_graph(g)
    if g.has_loop():
        raise ParameterError("chromatic number is undefined for graphs with loops")
    if g.n == 0:
        return 0
    if g.arc_count == 0:
        return 1
    lb = len(greedy_clique(g))
    for k in range(max(lb, 2), g.n + 1):
        if k_colourable(g, k, budget=budget) is not None:
            return k
    return g.n


def digraph_chromatic_number(d, budget=None):
    """Chromatic number of a digraph = that of its symmetrization."""
    return chromatic_number(symmetrization(d), budget=budget)


def _fraction_scan(g):
    """All reduced n/m with 2m <= n <= |V(G)|, ascending by value."""
    fracs = []
    for n in range(2, g.n + 1):
        for m in range(1, n // 2 + 1):
            if math.gcd(n, m) == 1:
                fracs.append((Fraction(n, m), n, m))
    fracs.sort(key=lambda t: t[0])
    return fracs


def circular_colouring(g, budget=None):
    """(chi_c as a Fraction, witness into the minimising circular clique).

    Ordered Farey scan over reduced n/m with 2m <= n <= |V(G)|; since
    K_{a/b} -> K_{c/d} holds exactly when a/b <= c/d, the first success is
    the minimum.  An edgeless graph has circular chromatic number 1.
    """
    g = as_graph(g)
    if g.has_loop():
        raise ParameterError("circular chromatic number is undefined with loops")
    if g.n == 0:
        raise ParameterError("circular chromatic number needs a nonempty graph")
    if g.arc_count == 0:
        return Fraction(1), HomWitness(g.n, 1, (0,) * g.n)
    for frac, n, m in _fraction_scan(g):
        w = engine.hom_exists(g, circular_complete(n, m), budget=budget)
        if w is not None:
            return frac, w
    raise RuntimeError("scan exhausted without finding a colouring")  # unreachable


def circular_chromatic_number(g, budget=None):
    return circular_colouring(g, budget=budget)[0]


# ---------------------------------------------------------------------------
# Gallai-Roy orientations
# ---------------------------------------------------------------------------


def gallai_roy_orientation(g, k, budget=None, scan_cap=ORIENTATION_SCAN_CAP):
    """If g is k-colourable: the orientation along increasing colours,
    certified to admit no homomorphism from the directed path with k arcs.
    Otherwise None, after exhaustively confirming that every orientation
    admits one."""
    g = as_graph(g)
    if g.has_loop():
        raise ParameterError("needs a loop-free graph")
    if k < 1:
        raise ParameterError("needs k >= 1")
    path = directed_path(k)
    colours = k_colourable(g, k, budget=budget)
    if colours is not None:
        spec = "".join(
            "1" if colours[u] < colours[v] else "0" for u, v in sorted_edges(g)
        )
        oriented = orient_edges(g, spec)
        hit = engine.hom_exists(path, oriented, budget=budget) is not None
        if hit:
            raise RuntimeError("colour-increasing orientation admits the path")
        witness = engine.hom_exists(g, complete_graph(k), budget=budget)
        return ColouringCertificate(
            target_name=f"K{k}",
            witness=witness,
            orientation=spec,
            family=((f"dP{k}", False),),
        )
    edge_count = sum(1 for _ in sorted_edges(g))
    if edge_count > scan_cap:
        raise ParameterError(
            f"orientation scan over {edge_count} edges exceeds cap {scan_cap}"
        )
    for oriented in orientations(g):
        if engine.hom_exists(path, oriented, budget=budget) is None:
            raise RuntimeError(
                "found an orientation avoiding the path although the graph "
                "is not k-colourable"
            )
    return None


def reversal_path_specs(n, r):
    """Orientation strings of the n-arc path with at most r reversed arcs,
    ascending by reversal count then by reversed positions."""
    if r >= n:
        raise ParameterError("reversal count must be below the arc count")
    for i in range(r + 1):
        for positions in combinations(range(n), i):
            bits = ["1"] * n
            for p in positions:
                bits[p] = "0"
            yield "".join(bits)


def reversal_paths(n, r, dedupe=False):
    """The oriented paths of reversal_path_specs, optionally deduplicated
    up to end-to-end reversal symmetry."""
    out = []
    seen = set()
    for spec in reversal_path_specs(n, r):
        if dedupe:
            mirrored = "".join("0" if c == "1" else "1" for c in reversed(spec))
            if min(spec, mirrored) in seen:
                continue
            seen.add(min(spec, mirrored))
        out.append(oriented_path(spec))
    return out


@lru_cache(maxsize=None)
def _interleaved_tournament(m, n):
    return interleaved_adjoint(m, transitive_tournament(n))


@lru_cache(maxsize=None)
def _clique_to_interleaved(n, m):
    """A fixed homomorphism K_{n/m} -> sym(iota_m(T_n)) (exists both ways)."""
    target = symmetrization(_interleaved_tournament(m, n))
    w = engine.hom_exists(circular_complete(n, m), target)
    if w is None:
        raise RuntimeError(f"no homomorphism K{n}/{m} -> B({n},{m})")
    return w


def circular_gallai_roy_check(
    g, n, m, budget=None, scan_cap=ORIENTATION_SCAN_CAP
):
    """Certificate that chi_c(g) <= n/m via an orientation admitting no
    homomorphism from any n-arc path with < m reversals, or None (after
    exhaustively confirming every orientation admits one)."""
    g = as_graph(g)
    if g.has_loop():
        raise ParameterError("needs a loop-free graph")
    if math.gcd(n, m) != 1 or 2 * m > n:
        raise ParameterError(f"{n}/{m} is not a reduced circular fraction >= 2")
    target = circular_complete(n, m)
    w = engine.hom_exists(g, target, budget=budget)
    specs = list(reversal_path_specs(n, m - 1))
    if w is not None:
        iota = _interleaved_tournament(m, n)
        lift = engine.compose(w, _clique_to_interleaved(n, m))
        bits = []
        for u, v in sorted_edges(g):
            if iota.has_arc(lift.mapping[u], lift.mapping[v]):
                bits.append("1")
            elif iota.has_arc(lift.mapping[v], lift.mapping[u]):
                bits.append("0")
            else:
                raise RuntimeError("lifted map is not a homomorphism")
        spec = "".join(bits)
        oriented = orient_edges(g, spec)
        family = tuple(
            (s, engine.hom_exists(oriented_path(s), oriented, budget=budget) is not None)
            for s in specs
        )
        if any(hit for _, hit in family):
            raise RuntimeError("certificate orientation admits a family path")
        return ColouringCertificate(
            target_name=f"K{n}/{m}",
            witness=w,
            orientation=spec,
            family=family,
        )
    edge_count = sum(1 for _ in sorted_edges(g))
    if edge_count > scan_cap:
        raise ParameterError(
            f"orientation scan over {edge_count} edges exceeds cap {scan_cap}"
        )
    paths = [oriented_path(s) for s in specs]
    for oriented in orientations(g):
        if all(
            engine.hom_exists(p, oriented, budget=budget) is None for p in paths
        ):
            raise RuntimeError(
                "found an orientation avoiding the whole family although "
                "the circular colouring does not exist"
            )
    return None


# ---------------------------------------------------------------------------
# circular chromatic number through power functors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PowerBoundReport:
    value: Fraction | None
    attained_at: tuple | None
    successes: tuple = ()
    skipped: tuple = ()


def circular_bound_via_powers(g, i_max, j_max, budget=None):
    """Scan the (i, j) grid and return the least value (6i+3)/(3i+1-j)
    whose power graph P^{2i+1}_{2j+1}(g) is 3-colourable.

    Such 3-colourability certifies chi_c(g) <= (6i+3)/(3i+1-j), so the
    returned value is the best grid certificate for chi_c from above; it
    equals chi_c(g) whenever the grid contains the matching point.  Grid
    points with 3i+1-j <= 0 are skipped and reported.
    """
    g = as_graph(g)
    best = None
    best_at = None
    successes = []
    skipped = []
    for i in range(i_max + 1):
        for j in range(j_max + 1):
            denom = 3 * i + 1 - j
            if denom <= 0:
                skipped.append((i, j))
                continue
            value = Fraction(6 * i + 3, denom)
            power = power_functor(2 * i + 1, 2 * j + 1, g)
            if power.has_loop():
                continue
            if k_colourable(power, 3, budget=budget) is not None:
                successes.append(((i, j), value))
                if best is None or value < best:
                    best, best_at = value, (i, j)
    return PowerBoundReport(
        value=best,
        attained_at=best_at,
        successes=tuple(successes),
        skipped=tuple(skipped),
    )


def circular_lower_bound_via_powers(g, i_max, j_max, budget=None):
    report = circular_bound_via_powers(g, i_max, j_max, budget=budget)
    if report.value is None:
        raise ParameterError(
            "no grid point certified a bound; enlarge the grid"
        )
    return report.value
