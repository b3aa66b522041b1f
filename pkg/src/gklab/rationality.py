"""Element-level rationality: B_G(g), iota images, rational and cut verdicts.

Two genuinely independent computation paths exist for the group-level cut
verdict:

* :func:`is_cut_group` works entirely from the conjugacy class partition
  (g^m conjugate to g or g^-1 for every m coprime to |g|);
* :func:`cut_oracle_via_bg` scans N_G(<g>) element by element and inspects
  the realized exponent subgroup of the unit group mod |g|.

Both must agree on every group; the test corpus enforces this.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from sympy import isprime, totient

from .elements import Element
from .groups import GroupHandle, NotMember, element_order
from .structure import (ConjugacyData, centralizer, conjugacy_classes,
                        cyclic_subgroup_set, normalizer_of_cyclic)

RATIONAL = "rational"
INVERSE_SEMIRATIONAL = "inverse-semi-rational-only"
NEITHER = "neither"


class PreconditionNotCut(ValueError):
    pass


class NotApplicable(ValueError):
    pass


@dataclass(frozen=True)
class ElementVerdict:
    representative: Element
    order: int
    bg_order: int
    iota_exponents: frozenset[int]
    verdict: str


@dataclass(frozen=True)
class RationalityReport:
    group_label: str
    per_class: tuple[ElementVerdict, ...]
    is_rational: bool
    is_cut: bool
    non_rational_orders: frozenset[int]


def _units(n: int) -> list[int]:
    return [m for m in range(1, n + 1) if gcd(m, n) == 1]


def _powers(G: GroupHandle, g: Element, n: int) -> list[Element]:
    """[g^0, g^1, ..., g^(n-1)]."""
    out = [G.identity]
    for _ in range(n - 1):
        out.append(G.mult(out[-1], g))
    return out


def class_iota_exponents(G: GroupHandle, g: Element,
                         data: ConjugacyData | None = None) -> frozenset[int]:
    """{m coprime to |g| : g^m conjugate to g}; the image of iota_g.

    g^x = g^m forces x to normalize <g>, so conjugacy of g and g^m already
    certifies membership of m in the image of iota_g.
    """
    data = data or conjugacy_classes(G)
    n = element_order(G, g)
    powers = _powers(G, g, n)
    cid = data.class_index[g]
    return frozenset(m for m in _units(n) if data.class_index[powers[m % n]] == cid)


def element_verdict(G: GroupHandle, g: Element,
                    data: ConjugacyData | None = None) -> ElementVerdict:
    data = data or conjugacy_classes(G)
    n = element_order(G, g)
    exps = class_iota_exponents(G, g, data)
    phi = int(totient(n))
    if len(exps) == phi:
        verdict = RATIONAL
    elif _all_pm(G, g, n, data):
        verdict = INVERSE_SEMIRATIONAL
    else:
        verdict = NEITHER
    return ElementVerdict(g, n, len(exps), exps, verdict)


def _all_pm(G: GroupHandle, g: Element, n: int, data: ConjugacyData) -> bool:
    """Every generator of <g> conjugate to g or g^-1."""
    powers = _powers(G, g, n)
    cid = data.class_index[g]
    cid_inv = data.class_index[powers[(n - 1) % n]]
    return all(data.class_index[powers[m % n]] in (cid, cid_inv)
               for m in _units(n))


def is_rational_element(G: GroupHandle, g: Element) -> bool:
    if g not in G.elements:
        raise NotMember(f"element not in {G.label}")
    return element_verdict(G, g).verdict == RATIONAL


def is_inverse_semirational_element(G: GroupHandle, g: Element) -> bool:
    if g not in G.elements:
        raise NotMember(f"element not in {G.label}")
    return element_verdict(G, g).verdict != NEITHER


def rationality_report(G: GroupHandle) -> RationalityReport:
    if "rationality" in G._memo:
        return G._memo["rationality"]
    data = conjugacy_classes(G)
    verdicts = tuple(element_verdict(G, rep, data)
                     for rep in data.representatives)
    report = RationalityReport(
        group_label=G.label,
        per_class=verdicts,
        is_rational=all(v.verdict == RATIONAL for v in verdicts),
        is_cut=all(v.verdict != NEITHER for v in verdicts),
        non_rational_orders=frozenset(v.order for v in verdicts
                                      if v.verdict != RATIONAL),
    )
    G._memo["rationality"] = report
    return report


def is_rational_group(G: GroupHandle) -> bool:
    return rationality_report(G).is_rational


def is_cut_group(G: GroupHandle) -> bool:
    return rationality_report(G).is_cut


def bg_order(G: GroupHandle, g: Element) -> int:
    """|N_G(<g>)| / |C_G(g)| by exhaustive scans."""
    if g not in G.elements:
        raise NotMember(f"element not in {G.label}")
    return normalizer_of_cyclic(G, g).order // centralizer(G, g).order


def scanned_iota_exponents(G: GroupHandle, g: Element) -> frozenset[int]:
    """Image of iota_g computed from N_G(<g>) alone (no class partition)."""
    n = element_order(G, g)
    powers = _powers(G, g, n)
    power_index = {h: m for m, h in enumerate(powers)}
    cyc = cyclic_subgroup_set(G, g)
    exps = set()
    for x in G.elements:
        h = G.conjugate(g, x)
        if h in cyc:
            exps.add(power_index[h] % n or n)
    return frozenset(exps)


def cut_oracle_via_bg(G: GroupHandle) -> bool:
    """Independent cut verdict via normalizer scans and exponent subgroups."""
    data = conjugacy_classes(G)
    for rep in data.representatives:
        n = element_order(G, rep)
        if n <= 2:
            continue
        exps = scanned_iota_exponents(G, rep)
        full = set(_units(n))
        if exps == set(full):
            continue
        if 2 * len(exps) == len(full) and (n - 1) not in exps:
            continue
        return False
    return True


def product_cut_predicate(G: GroupHandle, H: GroupHandle) -> bool:
    """Is G x H cut, predicted purely from the factors' non-rational orders."""
    rg, rh = rationality_report(G), rationality_report(H)
    if not (rg.is_cut and rh.is_cut):
        raise PreconditionNotCut("both factors must already be cut")
    return all(gcd(m, n) in (3, 4, 6)
               for n in rg.non_rational_orders
               for m in rh.non_rational_orders)


def prime_power_criterion_check(G: GroupHandle, g: Element) -> bool:
    """Consistency of the p^n / 2p^n criteria with the direct verdicts.

    Applicable when |g| is p^n or 2p^n for an odd prime p; Aut(<g>) is then
    cyclic of order p^(n-1)(p-1).
    """
    n = element_order(G, g)
    p = _odd_prime_shape(n)
    if p is None:
        raise NotApplicable(f"|g| = {n} is not p^n or 2p^n for an odd prime p")
    v = element_verdict(G, g)
    rational = v.verdict == RATIONAL
    isr = v.verdict != NEITHER
    pn1 = n // p if n % 2 else n // (2 * p)  # p^(n-1)
    aut_order = pn1 * (p - 1)
    orders = {_mult_order(m, n) for m in v.iota_exponents}
    if p % 4 == 1:
        ok = (rational == isr == (aut_order in orders))
    else:
        half = aut_order // 2
        ok_isr = isr == (half <= v.bg_order) == (half in orders or aut_order in orders)
        ok_rat = rational == (v.bg_order == aut_order) == (aut_order in orders)
        ok = ok_isr and ok_rat
    return ok


def _odd_prime_shape(n: int):
    """Odd prime p with n = p^k or 2 p^k, else None."""
    m = n if n % 2 else n // 2
    if m <= 1 or m % 2 == 0:
        return None
    p = min(f for f in range(3, m + 1) if m % f == 0 and isprime(f))
    while m % p == 0:
        m //= p
    return p if m == 1 else None


def _mult_order(m: int, n: int) -> int:
    k, x = 1, m % n
    while x != 1:
        x = x * m % n
        k += 1
    return k
