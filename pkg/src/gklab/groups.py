"""Enumerated finite groups: closure from generators, products, element orders.

A :class:`GroupHandle` owns a fully enumerated element set together with
multiplication and inversion callables.  Handles are immutable after
construction and safe for concurrent reads; enumeration itself runs
single-threaded.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import elements as el
from .elements import Element, IncompatibleKinds

DEFAULT_CAP = 1 << 20


class CapExceeded(RuntimeError):
    """Closure grew past the element cap."""


class NotMember(ValueError):
    """Element does not belong to the group."""


class NotAnAutomorphism(ValueError):
    """A supplied generator map does not extend to an automorphism."""


class ActionNotWellDefined(ValueError):
    """Generator automorphisms are inconsistent with the acting group's relations."""


def default_cap() -> int:
    return int(os.environ.get("GKLAB_MAX_ORDER", DEFAULT_CAP))


@dataclass(frozen=True, eq=False)
class GroupHandle:
    label: str
    generators: tuple[Element, ...]
    elements: frozenset[Element]
    identity: Element
    mult: Callable[[Element, Element], Element]
    inv: Callable[[Element], Element]
    # word over generator indices reaching each element (BFS order)
    words: dict[Element, tuple[int, ...]] = field(default_factory=dict, repr=False)
    # for semidirect products: acting element -> {kernel element -> image}
    action_table: Optional[dict] = field(default=None, repr=False)
    # single-writer caches (conjugacy data etc.) keyed by computation name
    _memo: dict = field(default_factory=dict, repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: Element) -> bool:
        return g in self.elements

    def sorted_elements(self) -> list[Element]:
        key = "sorted"
        if key not in self._memo:
            self._memo[key] = sorted(self.elements)
        return self._memo[key]

    def conjugate(self, g: Element, x: Element) -> Element:
        """g^x = x^-1 g x."""
        return self.mult(self.inv(x), self.mult(g, x))

    def power(self, g: Element, n: int) -> Element:
        if n < 0:
            return self.power(self.inv(g), -n)
        acc = self.identity
        base = g
        while n:
            if n & 1:
                acc = self.mult(acc, base)
            base = self.mult(base, base)
            n >>= 1
        return acc

    def relabel(self, label: str) -> "GroupHandle":
        return GroupHandle(label, self.generators, self.elements, self.identity,
                           self.mult, self.inv, self.words, self.action_table)


def _closure(gens, identity, mult, cap):
    """Breadth-first closure; returns (elements, words)."""
    words = {identity: ()}
    frontier = [identity]
    while frontier:
        new = []
        for g in frontier:
            w = words[g]
            for i, s in enumerate(gens):
                h = mult(g, s)
                if h not in words:
                    words[h] = w + (i,)
                    new.append(h)
                    if len(words) > cap:
                        raise CapExceeded(
                            f"closure exceeded cap of {cap} elements")
        frontier = new
    return frozenset(words), words


def enumerate_group(generators, label: str = "G",
                    cap: Optional[int] = None) -> GroupHandle:
    """Subgroup generated by compatible permutation or matrix elements."""
    generators = tuple(generators)
    if not generators:
        raise ValueError("need at least one generator")
    if any(not el.same_kind(g, generators[0]) for g in generators):
        raise IncompatibleKinds("generators mix element kinds")
    if generators[0][0] == el.PAIR:
        raise IncompatibleKinds(
            "pair elements can only be enumerated inside their product group")
    cap = default_cap() if cap is None else cap
    if cap < 1:
        raise ValueError("cap must be >= 1")
    first = generators[0]
    identity = (el.perm_identity(len(first[1])) if first[0] == el.PERM
                else el.mat_identity(first[1], first[2]))
    elems, words = _closure(generators, identity, el.mul, cap)
    return GroupHandle(label, generators, elems, identity, el.mul, el.inv, words)


def element_order(G: GroupHandle, g: Element) -> int:
    """Least k >= 1 with g^k = identity."""
    if g not in G.elements:
        raise NotMember(f"element not in {G.label}")
    k = 1
    h = g
    while h != G.identity:
        h = G.mult(h, g)
        k += 1
    return k


def element_orders_multiset(G: GroupHandle) -> dict[int, int]:
    """order -> number of elements of that order (via conjugacy class reps)."""
    from .structure import conjugacy_classes  # cycle-free at call time
    data = conjugacy_classes(G)
    out: dict[int, int] = {}
    for rep, cls in zip(data.representatives, data.classes):
        n = element_order(G, rep)
        out[n] = out.get(n, 0) + len(cls)
    return out


def direct_product(G: GroupHandle, H: GroupHandle,
                   cap: Optional[int] = None) -> GroupHandle:
    """Cartesian product with componentwise multiplication."""
    cap = default_cap() if cap is None else cap
    if G.order * H.order > cap:
        raise CapExceeded(
            f"product order {G.order * H.order} exceeds cap {cap}")
    gm, hm, gi, hi = G.mult, H.mult, G.inv, H.inv

    def mult(a, b):
        return (el.PAIR, gm(a[1], b[1]), hm(a[2], b[2]))

    def inv(a):
        return (el.PAIR, gi(a[1]), hi(a[2]))

    elems = frozenset((el.PAIR, a, b) for a in G.elements for b in H.elements)
    identity = (el.PAIR, G.identity, H.identity)
    gens = tuple((el.PAIR, g, H.identity) for g in G.generators) + \
        tuple((el.PAIR, G.identity, h) for h in H.generators)
    words = _rebuild_words(gens, identity, mult, len(elems))
    return GroupHandle(f"{G.label} x {H.label}", gens, elems, identity,
                       mult, inv, words)


def _rebuild_words(gens, identity, mult, expected):
    elems, words = _closure(gens, identity, mult, expected + 1)
    assert len(elems) == expected, "generators do not generate the product"
    return words


def extend_to_automorphism(N: GroupHandle, images) -> dict[Element, Element]:
    """Extend generator images to an automorphism of N, or raise.

    The extension follows N's BFS words; multiplicativity is then verified on
    every (element, generator) pair, which covers all products by induction.
    """
    if len(images) != len(N.generators):
        raise NotAnAutomorphism("one image per generator required")
    for im in images:
        if im not in N.elements:
            raise NotAnAutomorphism("image lies outside the kernel group")
    amap = {}
    for n in N.elements:
        acc = N.identity
        for i in N.words[n]:
            acc = N.mult(acc, images[i])
        amap[n] = acc
    if len(set(amap.values())) != len(amap):
        raise NotAnAutomorphism("generator images do not induce a bijection")
    for n in N.elements:
        fn = amap[n]
        for i, g in enumerate(N.generators):
            if amap[N.mult(n, g)] != N.mult(fn, images[i]):
                raise NotAnAutomorphism("generator images are not multiplicative")
    return amap


def semidirect_product(N: GroupHandle, H: GroupHandle, action,
                       label: Optional[str] = None,
                       cap: Optional[int] = None) -> GroupHandle:
    """N x| H with multiplication (n1,h1)(n2,h2) = (n1 * (h1 |> n2), h1 h2).

    ``action`` gives, per H generator, the images of N's generators under the
    automorphism that H generator induces.  The per-generator maps are checked
    to be automorphisms and the induced action of all of H is checked to be
    well defined over H's enumerated multiplication.
    """
    cap = default_cap() if cap is None else cap
    if N.order * H.order > cap:
        raise CapExceeded(
            f"product order {N.order * H.order} exceeds cap {cap}")
    if len(action) != len(H.generators):
        raise ActionNotWellDefined("one automorphism per acting generator required")
    gen_maps = [extend_to_automorphism(N, images) for images in action]

    # Propagate along H's BFS words, then verify every Cayley edge agrees.
    act: dict[Element, dict[Element, Element]] = {H.identity: {n: n for n in N.elements}}
    order_h = sorted(H.words, key=lambda h: len(H.words[h]))
    for h in order_h:
        if h == H.identity:
            continue
        w = H.words[h]
        prev = act[_word_element(H, w[:-1])]
        gmap = gen_maps[w[-1]]
        act[h] = {n: prev[gmap[n]] for n in N.elements}
    for h in H.elements:
        for i, g in enumerate(H.generators):
            hg = H.mult(h, g)
            gmap = gen_maps[i]
            ah = act[h]
            if any(act[hg][n] != ah[gmap[n]] for n in N.generators):
                raise ActionNotWellDefined(
                    "generator automorphisms violate the acting group's relations")

    trivial = all(gmap[n] == n for gmap in gen_maps for n in N.elements)

    nm, hm, ni, hi = N.mult, H.mult, N.inv, H.inv

    def mult(a, b):
        return (el.PAIR, nm(a[1], act[a[2]][b[1]]), hm(a[2], b[2]))

    def inv(a):
        h_inv = hi(a[2])
        return (el.PAIR, act[h_inv][ni(a[1])], h_inv)

    elems = frozenset((el.PAIR, n, h) for n in N.elements for h in H.elements)
    identity = (el.PAIR, N.identity, H.identity)
    gens = tuple((el.PAIR, n, H.identity) for n in N.generators) + \
        tuple((el.PAIR, N.identity, h) for h in H.generators)
    if label is None:
        sep = " x " if trivial else " x| "
        label = f"{N.label}{sep}{H.label}"
    words = _rebuild_words(gens, identity, mult, len(elems))
    return GroupHandle(label, gens, elems, identity, mult, inv, words,
                       action_table=act)


def _word_element(H: GroupHandle, word) -> Element:
    acc = H.identity
    for i in word:
        acc = H.mult(acc, H.generators[i])
    return acc


def small_generating_set(G: GroupHandle, subset) -> list[Element]:
    """Greedy generating set for a subgroup given as an element set."""
    subset = set(subset)
    gens: list[Element] = []
    have = {G.identity}
    for g in sorted(subset):
        if g in have:
            continue
        gens.append(g)
        have = closure_in(G, gens)
        if len(have) == len(subset):
            break
    return gens


def closure_in(G: GroupHandle, gens) -> set[Element]:
    """Closure of gens under G's multiplication (subset of G)."""
    elems = {G.identity}
    frontier = [G.identity]
    while frontier:
        new = []
        for g in frontier:
            for s in gens:
                h = G.mult(g, s)
                if h not in elems:
                    elems.add(h)
                    new.append(h)
        frontier = new
    return elems


def subgroup_as_group(G: GroupHandle, subset, label: str = "") -> GroupHandle:
    """View a subgroup element set as a standalone GroupHandle."""
    gens = small_generating_set(G, subset) or [G.identity]
    elems = frozenset(subset)
    _, words = _closure(gens, G.identity, G.mult, len(elems) + 1)
    assert frozenset(words) == elems
    return GroupHandle(label or f"{G.label}-sub{len(elems)}", tuple(gens),
                       elems, G.identity, G.mult, G.inv, words,
                       action_table=G.action_table)
