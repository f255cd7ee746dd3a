"""The thin adjunction and product commutation hold for *every* template,
so randomly generated templates exercise the gluing/enumeration stack far
beyond the shipped ones.  Seeds are fixed; failures are real bugs."""

import random

from pultr import engine
from pultr.functors import (
    PultrTemplate,
    product_commutation_check,
    validate_template,
    verify_adjunction,
)
from pultr.graphs import Digraph, Graph, enumerate_graphs


def _random_digraph(rng, n, p):
    return Digraph(
        n, [(u, v) for u in range(n) for v in range(n) if rng.random() < p]
    )


def _random_directed_template(rng):
    p = _random_digraph(rng, rng.randint(1, 2), 0.5)
    q = _random_digraph(rng, rng.randint(1, 3), 0.5)
    ws = engine.hom_enumerate(p, q, limit=50)
    if not ws:
        return None
    t = PultrTemplate(
        "fuzz",
        p,
        q,
        rng.choice(ws).mapping,
        rng.choice(ws).mapping,
    )
    return None if validate_template(t) else t


def _random_undirected_template(rng):
    swaps = rng.randint(1, 2)
    fixed = rng.randint(0, 1)
    nq = 2 * swaps + fixed
    sigma = list(range(nq))
    for i in range(swaps):
        sigma[2 * i], sigma[2 * i + 1] = 2 * i + 1, 2 * i
    edges = []
    for u in range(nq):
        for v in range(u, nq):
            if rng.random() < 0.5:
                edges.append((u, v))
                edges.append((sigma[u], sigma[v]))
    q = Graph(nq, edges)
    np_ = rng.randint(1, 2)
    p = Graph(
        np_,
        [
            (u, v)
            for u in range(np_)
            for v in range(u + 1, np_)
            if rng.random() < 0.5
        ],
    )
    ws = engine.hom_enumerate(p, q, limit=200)
    if not ws:
        return None
    e1 = rng.choice(ws).mapping
    e2 = tuple(sigma[x] for x in e1)
    t = PultrTemplate("fuzz-u", p, q, e1, e2, symmetry=tuple(sigma))
    return None if validate_template(t, undirected_mode=True) else t


def test_adjunction_random_directed_templates():
    rng = random.Random(20260811)
    universe = list(
        enumerate_graphs(2, directed=True, loops=True, all_orders=True)
    )
    done = 0
    while done < 25:
        t = _random_directed_template(rng)
        if t is None:
            continue
        done += 1
        for g in universe:
            for k in universe:
                assert verify_adjunction(t, g, k, undirected=False), (t, g, k)


def test_adjunction_random_undirected_templates():
    rng = random.Random(1789)
    universe = list(
        enumerate_graphs(2, directed=False, loops=True, all_orders=True)
    )
    done = 0
    while done < 25:
        t = _random_undirected_template(rng)
        if t is None:
            continue
        done += 1
        for g in universe:
            for k in universe:
                assert verify_adjunction(t, g, k, undirected=True), (t, g, k)


def test_product_commutation_random_templates():
    rng = random.Random(42981)
    probes = [
        _random_digraph(rng, 2, 0.6),
        _random_digraph(rng, 3, 0.4),
    ]
    done = 0
    while done < 10:
        t = _random_directed_template(rng)
        if t is None:
            continue
        done += 1
        for g in probes:
            for h in probes:
                assert product_commutation_check(t, g, h), (t, g, h)
