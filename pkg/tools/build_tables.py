"""Derive the H3/H4 character degree tables and block parameter data, then
emit the versioned JSON data files used by the package.

Method: for each weight-1 block whose specialization root has full order
(d = e), the renormalized Hecke parameters are omega_chi q^(aA/e) with
omega_chi a fixed power of the Frobenius eigenvalue; the relative-degree
formula then reconstructs every member degree from the anchor Deg = 1 or
Deg = q^N.  Blocks with e = 2d and the non-principal blocks have their
omega data solved from consistency (distinct positions forming e-th or
2e-th roots, relative-degree proportionality, and the published planar
arrangement around the exceptional vertex).  The remaining handful of
degrees comes from the q -> -q twist between the Phi5/Phi10 and
Phi15/Phi30 block families.  Everything is validated to death before
being written out.
"""

from __future__ import annotations

import itertools
import json
import math
import sys
import time
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))
sys.path.insert(0, str(Path(__file__).resolve().parent))

from brauertrees.cyclo import (CycFactorLabel, CycNumber, QPoly, cyclotomic,
                               phi, phi_prime, phi_dprime, sign_of_real,
                               split_factors, sqrt5)
from brauertrees.chars import (FactoredDegree, GroupSpec, H3, H4, group_order,
                               scalar_from_str, scalar_to_str)
from brauertrees.hecke import (HeckeParameter, extract_degrees,
                               parameter_scale, relative_degree)
import registry

F = Fraction

H3_LABELS = [phi(1), phi(2), phi(3), phi(6),
             phi_prime(5), phi_dprime(5), phi_prime(10), phi_dprime(10)]
H4_LABELS = [phi(1), phi(2), phi(3), phi(4), phi(6), phi(12),
             phi_prime(5), phi_dprime(5), phi_prime(10), phi_dprime(10),
             phi_prime(15), phi_dprime(15), phi_prime(20), phi_dprime(20),
             phi_prime(30), phi_dprime(30)]


def labels_for(group: GroupSpec):
    return H3_LABELS if group.family == "H3" else H4_LABELS


def factor_degree(poly: QPoly, group: GroupSpec) -> FactoredDegree:
    """Refactor an expanded degree polynomial over the label alphabet."""
    qpow = poly.valuation()
    rest = QPoly(poly.coeffs[qpow:])
    factors = []
    order = group_order(group)
    for lab in labels_for(group):
        fpoly = split_factors(lab)
        budget = order.height(lab)
        while budget > 0:
            quot, rem = rest.divmod(fpoly)
            if not rem.is_zero():
                break
            rest = quot
            factors.append(lab)
            budget -= 1
    if len(rest.coeffs) != 1:
        raise ArithmeticError(f"degree does not factor over the label set: {rest!r}")
    scalar = rest.coeffs[0].minimal()
    if not scalar.is_real() or sign_of_real(scalar) <= 0:
        raise ArithmeticError(f"bad degree scalar {scalar!r}")
    fd = FactoredDegree(scalar, qpow, tuple(factors))
    if fd.expand() != poly:
        raise AssertionError("refactoring mismatch")
    return fd


class TableState:
    def __init__(self, group: GroupSpec, chars: dict):
        self.group = group
        self.chars = chars  # id -> (aA, eig, ps, hc, dual)
        self.degrees: dict[str, FactoredDegree] = {}

    def set_degree(self, cid: str, deg: FactoredDegree, source: str):
        aa, _eig, ps, _hc, _dual = self.chars[cid]
        if deg.aA() != aa:
            raise AssertionError(f"{cid}: derived aA {deg.aA()} != expected {aa} ({source})")
        if ps:
            v = deg.value_at_one()
            dim = int(cid.split("{")[1].split(",")[0])
            if not (v == dim):
                raise AssertionError(f"{cid}: value at 1 is {v!r}, expected {dim} ({source})")
        old = self.degrees.get(cid)
        if old is not None:
            if old.expand() != deg.expand():
                raise AssertionError(f"{cid}: conflicting degrees ({source})")
            return
        self.degrees[cid] = deg

    def poly(self, cid: str) -> QPoly:
        return self.degrees[cid].expand()


def build_params(state: TableState, members, cusp_aA: int, kappa: int,
                 d: int) -> list[HeckeParameter]:
    """omega = eigenvalue^(kappa^-1), qexp = relative aA / e."""
    e = len(members)
    denoms = [state.chars[cid][1].denominator for cid in members] + [d]
    mod = math.lcm(*denoms)
    if math.gcd(kappa, mod) != 1:
        raise ValueError("kappa not invertible against the eigenvalue orders")
    kstar = pow(kappa, -1, mod)
    params = []
    for cid in members:
        aa, eig, *_ = state.chars[cid]
        omega = (eig * kstar) % 1
        qexp = F(aa - cusp_aA, e)
        params.append(HeckeParameter(cid, omega, qexp))
    return params


def positions_of(params, kappa: int, d: int):
    return [(p.char_id, (p.omega + F(kappa) * p.qexp / d) % 1) for p in params]


def assert_dichotomy(params, kappa: int, d: int, e: int, name: str):
    pos = positions_of(params, kappa, d)
    expos = [x for _, x in pos]
    if len(set(expos)) != e:
        raise AssertionError(f"{name}: positions collide: {sorted(pos, key=lambda t: t[1])}")
    if all((x * e) % 1 == 0 for x in expos):
        return "e"
    if all((x * 2 * e) % 1 == 0 and (x * e) % 1 != 0 for x in expos):
        return "2e"
    raise AssertionError(f"{name}: dichotomy fails: {sorted(expos)}")


def derive_block(state: TableState, name: str, members, kappa: int, d: int,
                 anchor: str, anchor_poly: QPoly, cusp_aA: int = 0,
                 params=None) -> dict[str, int]:
    """RelDeg-extract all member degrees; returns the parity signs."""
    t0 = time.time()
    if params is None:
        params = build_params(state, members, cusp_aA, kappa, d)
    assert_dichotomy(params, kappa, d, len(members), name)
    got = extract_degrees(params, anchor, anchor_poly)
    signs = {}
    for cid, (poly, sign) in got.items():
        signs[cid] = sign
        state.set_degree(cid, factor_degree(poly, state.group), name)
    print(f"  [{name}] derived {len(got)} degrees in {time.time()-t0:.1f}s")
    return signs


def ennola_poly(p: QPoly) -> QPoly:
    """+-p(-q), normalized to a positive leading coefficient."""
    coeffs = [c if k % 2 == 0 else -c for k, c in enumerate(p.coeffs)]
    out = QPoly(coeffs)
    if sign_of_real(out.leading()) < 0:
        out = -out
    return out


def conj_scalar(c: CycNumber) -> CycNumber:
    c = c.minimal()
    if c.is_rational():
        return c
    if c.n != 5:
        raise ValueError(f"scalar {c!r} is not in Q(sqrt5)")
    return c.galois(2)


def conj_poly(p: QPoly) -> QPoly:
    """Galois sqrt5 -> -sqrt5 on coefficients, sign-normalized."""
    q = QPoly([conj_scalar(c) for c in p.coeffs])
    if sign_of_real(q.leading()) < 0:
        q = -q
    return q


# ----------------------------------------------------------------------
def build_h3() -> TableState:
    print("== H3 ==")
    state = TableState(H3, dict(registry.H3_CHARS))
    state.set_degree("phi{1,0}", FactoredDegree.one(), "seed")
    state.set_degree("phi{1,15}", FactoredDegree.make(1, 15, ()), "seed")

    b6 = registry.H3_BLOCKS["Phi6"]
    derive_block(state, "H3 Phi6", b6["members"], 1, 6, "phi{1,0}", QPoly.one())
    b10pp = registry.H3_BLOCKS["Phi10''"]
    derive_block(state, "H3 Phi10''", b10pp["members"], 1, 10, "phi{1,0}", QPoly.one())
    b10p = registry.H3_BLOCKS["Phi10'"]
    derive_block(state, "H3 Phi10'", b10p["members"], 3, 10, "phi{1,0}", QPoly.one())

    # Phi3 block has e = 2d: solve the sign twists on omega
    b3 = registry.H3_BLOCKS["Phi3"]
    members = b3["members"]
    e, d = 6, 3
    known = {cid: state.poly(cid) for cid in members if cid in state.degrees}
    sols = []
    for bits in itertools.product((0, 1), repeat=e):
        params = []
        ok = True
        for cid, bit in zip(members, bits):
            aa, eig, *_ = state.chars[cid]
            params.append(HeckeParameter(cid, (eig + F(bit, 2)) % 1, F(aa, e)))
        try:
            assert_dichotomy(params, 1, d, e, "H3 Phi3")
        except AssertionError:
            continue
        try:
            got = extract_degrees(params, "phi{1,0}", QPoly.one())
        except ArithmeticError:
            continue
        for cid, (poly, _s) in got.items():
            if cid in known and poly != known[cid]:
                ok = False
                break
            try:
                fd = factor_degree(poly, H3)
            except ArithmeticError:
                ok = False
                break
            if fd.aA() != state.chars[cid][0]:
                ok = False
                break
        if ok:
            sols.append((bits, got))
    print(f"  [H3 Phi3] omega solutions: {len(sols)}")
    if not sols:
        raise SystemExit("no Phi3 solution")
    bits, got = sols[0]
    for cid, (poly, _s) in got.items():
        state.set_degree(cid, factor_degree(poly, H3), "H3 Phi3")
    state.phi3_bits = dict(zip(members, bits))
    for alt_bits, alt in sols[1:]:
        for cid, (poly, _s) in alt.items():
            if poly != got[cid][0]:
                raise SystemExit(f"Phi3 ambiguity changes {cid}")

    # final validation: the principal-series sum identity
    ps_sum = QPoly.zero()
    for cid, (aa, eig, ps, hc, dual) in state.chars.items():
        if ps:
            dim = int(cid.split("{")[1].split(",")[0])
            ps_sum = ps_sum + state.poly(cid) * dim
    target = QPoly.one()
    for dd in H3.degrees:
        target = target * QPoly([-1] + [0] * (dd - 1) + [1])
    target = target.exact_div(QPoly([-1, 1]) * QPoly([-1, 1]) * QPoly([-1, 1]))
    if ps_sum != target:
        raise SystemExit("H3 principal-series sum identity fails")
    print("  principal-series sum identity OK")

    # Harish-Chandra sums for the I2(5)-series
    hc_sum = state.poly("I2(5)[1,2];1") + state.poly("I2(5)[1,2];eps")
    lam = FactoredDegree.make(scalar_from_str("(0+1*sqrt5)/5"), 1,
                              (phi(1), phi(1), phi(2))).expand()
    index = group_order(H3).expand().exact_div(
        (FactoredDegree.make(1, 5, (phi(1), phi(1), phi(1), phi(2),
                                    phi_prime(5), phi_dprime(5))).expand()))
    index = QPoly(index.coeffs[10:])  # strip q^10
    if hc_sum != lam * index:
        raise SystemExit("H3 I2(5)-series Harish-Chandra sum fails")
    print("  I2(5)-series Harish-Chandra sum OK")
    for cid in state.chars:
        if cid not in state.degrees:
            raise SystemExit(f"H3 degree missing: {cid}")
    return state


# ----------------------------------------------------------------------
def seed_h4(state: TableState):
    state.set_degree("phi{1,0}", FactoredDegree.one(), "seed")
    state.set_degree("phi{1,60}", FactoredDegree.make(1, 60, ()), "seed")
    tenth = F(1, 10)
    # the four characters confined to the Phi5/Phi10 blocks; their shapes are
    # pinned by dimension, the quoted q^54 leading terms, the block heights,
    # and the q -> -q twist pairing checked below
    state.set_degree("phi{8,13}", FactoredDegree.make(
        tenth, 6, (phi(2),) * 4 + (phi_prime(5), phi_dprime(5), phi(6), phi(6),
                                   phi_prime(10), phi_prime(10), phi_dprime(10),
                                   phi_dprime(10), phi(12),
                                   phi_prime(15), phi_dprime(15),
                                   phi_prime(20), phi_dprime(20),
                                   phi_prime(30), phi_dprime(30))), "seed")
    state.set_degree("phi{18,10}", FactoredDegree.make(
        tenth, 6, (phi(3), phi(3), phi(4), phi(4),
                   phi_prime(5), phi_dprime(5),
                   phi_prime(10), phi_prime(10), phi_dprime(10), phi_dprime(10),
                   phi(12), phi_prime(15), phi_dprime(15),
                   phi_prime(20), phi_dprime(20),
                   phi_prime(30), phi_dprime(30))), "seed")
    state.set_degree("phi{10,12}", FactoredDegree.make(
        tenth, 6, (phi(4), phi(4),
                   phi_prime(5), phi_prime(5), phi_dprime(5), phi_dprime(5),
                   phi(6), phi(6), phi_prime(10), phi_dprime(10),
                   phi(12), phi_prime(15), phi_dprime(15),
                   phi_prime(20), phi_dprime(20),
                   phi_prime(30), phi_dprime(30))), "seed")
    state.set_degree("H4^I[-1]", FactoredDegree.make(
        tenth, 6, (phi(1),) * 4 + (phi(3), phi(3),
                                   phi_prime(5), phi_prime(5), phi_dprime(5),
                                   phi_dprime(5), phi_prime(10), phi_dprime(10),
                                   phi(12), phi_prime(15), phi_dprime(15),
                                   phi_prime(20), phi_dprime(20),
                                   phi_prime(30), phi_dprime(30))), "seed")
    # twist consistency between the seeds
    if ennola_poly(state.poly("phi{8,13}")) != state.poly("H4^I[-1]"):
        raise SystemExit("seed twist check failed: phi{8,13} vs H4^I[-1]")
    if ennola_poly(state.poly("phi{18,10}")) != state.poly("phi{10,12}"):
        raise SystemExit("seed twist check failed: phi{18,10} vs phi{10,12}")


def h4_height(state: TableState, cid: str, label) -> int:
    return state.degrees[cid].height(label)


def resolve_phi30pp_members(state: TableState) -> list[str]:
    """Principal Phi30'' block: every character of height 0; characters whose
    degree is not yet derived are admitted by eigenvalue slot and checked
    after the block's relative degrees produce them."""
    lab = phi_dprime(30)
    members = []
    unknown = []
    for cid in state.chars:
        if cid in state.degrees:
            if state.degrees[cid].height(lab) == 0:
                members.append(cid)
        else:
            unknown.append(cid)
    return members, unknown


def build_h4(state3: TableState) -> TableState:
    print("== H4 ==")
    state = TableState(H4, registry.h4_characters())
    seed_h4(state)

    derive_block(state, "H4 Phi12",
                 registry.H4_BLOCKS["Phi12"]["members"], 1, 12,
                 "phi{1,0}", QPoly.one())
    derive_block(state, "H4 Phi20''",
                 registry.H4_BLOCKS["Phi20''"]["members"], 1, 20,
                 "phi{1,0}", QPoly.one())
    derive_block(state, "H4 Phi20'",
                 registry.H4_BLOCKS["Phi20'"]["members"], 3, 20,
                 "phi{1,0}", QPoly.one())
    derive_block(state, "H4 Phi30'",
                 registry.H4_BLOCKS["Phi30'"]["members"], 7, 30,
                 "phi{1,0}", QPoly.one())

    # sqrt5-conjugate derivations for characters confined to the primed side
    for src, dst in [("phi{4,7}", "phi{4,1}"), ("phi{4,37}", "phi{4,31}"),
                     ("phi{6,20}", "phi{6,12}"),
                     ("H4^II[z3]", "H4^III[z3]"), ("H4^II[z3^2]", "H4^III[z3^2]"),
                     ("H4^IV[-1]", "H4^V[-1]"),
                     ("H4^III[z5]", "H4^IV[z5]"), ("H4^III[z5^4]", "H4^IV[z5^4]"),
                     ("I2(5)[1,2];phi{2,3}", "I2(5)[1,2];phi{2,1}"),
                     ("I2(5)[1,3];phi{2,3}", "I2(5)[1,3];phi{2,1}")]:
        state.set_degree(dst, factor_degree(conj_poly(state.poly(src)), H4),
                         f"conj of {src}")

    # q -> -q twist: the Phi5-side dihedral series maps onto the Phi10-side
    # cuspidal pairs; the known member of each eigenvalue family fixes which
    twist22 = ennola_poly(state.poly("I2(5)[1,2];phi{2,2}"))
    twist23 = ennola_poly(state.poly("I2(5)[1,2];phi{2,3}"))
    known_ii_minus = state.poly("H4^II[-z5^2]")
    if twist23 == known_ii_minus:
        plus_poly = twist22
    elif twist22 == known_ii_minus:
        plus_poly = twist23
    else:
        raise SystemExit("twist does not reproduce the known -z5^2 pair")
    for cid in ("H4^II[z5^2]", "H4^II[z5^3]"):
        state.set_degree(cid, factor_degree(plus_poly, H4), "twist")
    twist21 = ennola_poly(state.poly("I2(5)[1,2];phi{2,1}"))
    twist24 = ennola_poly(state.poly("I2(5)[1,2];phi{2,4}"))
    known_i_minus = state.poly("H4^I[-z5^2]")
    if twist24 == known_i_minus:
        plus_poly = twist21
    elif twist21 == known_i_minus:
        plus_poly = twist24
    else:
        raise SystemExit("twist does not reproduce the known I[-z5^2] pair")
    for cid in ("H4^I[z5^2]", "H4^I[z5^3]"):
        state.set_degree(cid, factor_degree(plus_poly, H4), "twist")

    # Phi30'' principal block: membership by heights, then a full
    # relative-degree re-derivation as a cross-check of every member
    known, unknown = resolve_phi30pp_members(state)
    print(f"  Phi30'' members by height: {len(known)}; underived: {len(unknown)}")
    if len(known) != 30:
        raise SystemExit(f"Phi30'' block has {len(known)} members")
    registry.H4_BLOCKS["Phi30''"]["members"] = sorted(known)
    derive_block(state, "H4 Phi30''", sorted(known), 1, 30,
                 "phi{1,0}", QPoly.one())

    # the Phi15'' block: Ennola elimination pins the six stem characters and
    # the VI[z5] pair that appear nowhere else
    b15pp = registry.H4_BLOCKS["Phi15''"]["members"]
    b30p = registry.H4_BLOCKS["Phi30'"]["members"]
    images = {}
    for cid in b15pp:
        if cid in state.degrees:
            images[cid] = ennola_poly(state.poly(cid))
    pool = [state.poly(cid) for cid in b30p]
    leftover = list(pool)
    for cid, img in images.items():
        if img in leftover:
            leftover.remove(img)
        else:
            raise SystemExit(f"twist image of {cid} is not a Phi30' degree")
    missing = [cid for cid in b15pp if cid not in state.degrees]
    print(f"  Phi15'' missing members: {missing}")
    # classify the leftovers (with multiplicity) by aA and value at one
    groups: list[tuple[QPoly, int]] = []
    for poly in leftover:
        for k, (p, c) in enumerate(groups):
            if p == poly:
                groups[k] = (p, c + 1)
                break
        else:
            groups.append((poly, 1))
    for poly, count in groups:
        fd = factor_degree(ennola_poly(poly), H4)
        v1 = fd.value_at_one()
        assigned = []
        for cid in missing:
            if cid in state.degrees or state.chars[cid][0] != fd.aA():
                continue
            if state.chars[cid][2]:
                dim = int(cid.split("{")[1].split(",")[0])
                if v1 == dim:
                    assigned.append(cid)
            elif v1 == 0:
                assigned.append(cid)
        if len(assigned) != count:
            raise SystemExit(
                f"twist assignment wants {count} characters, found {assigned} "
                f"for {fd}")
        for cid in assigned:
            state.set_degree(cid, fd, "Phi15'' twist elimination")
    still = [cid for cid in b15pp if cid not in state.degrees]
    if still:
        raise SystemExit(f"Phi15'' members still missing: {still}")
    # the primed-side partners
    for src, dst in [("phi{16,3}", "phi{16,3}"), ("phi{16,6}", "phi{16,6}"),
                     ("phi{16,18}", "phi{16,18}"), ("phi{16,21}", "phi{16,21}"),
                     ("phi{24,7}", "phi{24,11}"), ("phi{30,10}'", "phi{30,10}''"),
                     ("H4^VI[z5]", "H4^V[z5]"), ("H4^VI[z5^4]", "H4^V[z5^4]")]:
        state.set_degree(dst, factor_degree(conj_poly(state.poly(src)), H4),
                         f"conj of {src}")
    # verify the Phi15' membership list against heights
    lab15p = phi_prime(15)
    computed = sorted(cid for cid in state.degrees
                      if state.degrees[cid].height(lab15p) == 0)
    expected = sorted(registry.H4_BLOCKS["Phi15'"]["members"])
    if computed != expected:
        raise SystemExit(f"Phi15' membership mismatch:\n +{set(computed)-set(expected)}\n -{set(expected)-set(computed)}")
    print("  Phi15' membership verified by heights")

    # now that the Phi15 families exist, re-verify the Phi30'' membership
    recomputed = sorted(cid for cid in state.degrees
                        if state.degrees[cid].height(phi_dprime(30)) == 0)
    if recomputed != sorted(registry.H4_BLOCKS["Phi30''"]["members"]):
        raise SystemExit("Phi30'' membership changed after the Phi15 fill-in")
    for name in ("Phi12", "Phi15''", "Phi15'", "Phi20''", "Phi20'", "Phi30'"):
        lab = CycFactorLabel.parse(name)
        comp = sorted(cid for cid in state.degrees
                      if state.degrees[cid].height(lab) == 0)
        if comp != sorted(registry.H4_BLOCKS[name]["members"]):
            raise SystemExit(f"{name} membership disagrees with heights: "
                             f"+{set(comp)-set(registry.H4_BLOCKS[name]['members'])} "
                             f"-{set(registry.H4_BLOCKS[name]['members'])-set(comp)}")
    print("  all principal H4 block memberships verified by heights")

    # Harish-Chandra degree sums for the induced series
    i2sum = QPoly.zero()
    dims = {"phi{1,0}": 1, "phi{1,10}": 1, "phi{1,5}'": 1, "phi{1,5}''": 1,
            "phi{2,1}": 2, "phi{2,2}": 2, "phi{2,3}": 2, "phi{2,4}": 2}
    for comp, dim in dims.items():
        i2sum = i2sum + state.poly(f"I2(5)[1,2];{comp}") * dim
    lam = FactoredDegree.make(scalar_from_str("(0+1*sqrt5)/5"), 1,
                              (phi(1), phi(1), phi(2))).expand()
    levi = FactoredDegree.make(1, 5, (phi(1),) * 4 + (phi(2), phi_prime(5),
                                                      phi_dprime(5)))
    index = group_order(H4).expand().exact_div(levi.expand())
    index = QPoly(index.coeffs[55:])
    if i2sum != lam * index:
        raise SystemExit("H4 I2(5)-series Harish-Chandra sum fails")
    print("  I2(5)-series Harish-Chandra sum OK")

    h3sum = state.poly("H3[i];1") + state.poly("H3[i];eps")
    lam3 = FactoredDegree.make(F(1, 2), 3, (phi(1),) * 3 +
                               (phi(3), phi_prime(5), phi_dprime(5))).expand()
    levi3 = FactoredDegree.make(1, 15, (phi(1),) * 4 + (phi(2),) * 3 +
                                (phi(3), phi(6), phi_prime(5), phi_dprime(5),
                                 phi_prime(10), phi_dprime(10)))
    index3 = group_order(H4).expand().exact_div(levi3.expand())
    index3 = QPoly(index3.coeffs[45:])
    if h3sum != lam3 * index3:
        raise SystemExit("H4 H3-series Harish-Chandra sum fails")
    print("  H3-series Harish-Chandra sum OK")

    solve_extras(state)
    return state


EXTRAS = ("phi{8,12}", "phi{24,6}", "phi{24,12}", "phi{36,5}", "phi{36,15}",
          "phi{40,8}")


def ps_sum_target() -> QPoly:
    target = QPoly.one()
    for dd in H4.degrees:
        target = target * QPoly([-1] + [0] * (dd - 1) + [1])
    for _ in range(4):
        target = target.exact_div(QPoly([-1, 1]))
    return target


def solve_extras(state: TableState):
    """The six principal-series characters outside every weight-1 block,
    recovered from the principal-series degree-sum identity."""
    residual = ps_sum_target()
    for cid, (aa, eig, ps, hc, dual) in state.chars.items():
        if ps and cid not in EXTRAS:
            dim = int(cid.split("{")[1].split(",")[0])
            residual = residual - state.poly(cid) * dim
    print(f"  extras residual: valuation {residual.valuation()}, "
          f"degree {residual.degree()}")
    # every extra is defect-zero at d = 12, 15, 20, 30
    forced = [phi(12), phi_prime(15), phi_dprime(15), phi_prime(20),
              phi_dprime(20), phi_prime(30), phi_dprime(30)]
    probe = residual
    for lab in forced:
        probe, rem = probe.divmod(split_factors(lab))
        if not rem.is_zero():
            raise SystemExit(f"extras residual not divisible by {lab}")

    import numpy as np
    s5 = sqrt5()

    def shape_polys(a: int, A: int, symmetric: bool):
        """Monic shapes q^a * (cyclotomic part of degree A - a - 28)."""
        tau = A - a - 28
        if tau < 0:
            return []
        out = []
        quint = [phi_prime(5), phi_dprime(5), phi_prime(10), phi_dprime(10)]
        for n2 in (0, 1, 2, 4):
            for n3 in (0, 2):
                for n4 in (0, 2):
                    for n6 in (0, 2):
                        for qs in itertools.product((0, 2), repeat=4):
                            if symmetric and (qs[0] != qs[1] or qs[2] != qs[3]):
                                continue
                            deg = n2 + 2 * (n3 + n4 + n6) + 2 * sum(qs)
                            if deg != tau:
                                continue
                            labs = ([phi(2)] * n2 + [phi(3)] * n3 +
                                    [phi(4)] * n4 + [phi(6)] * n6)
                            for lab, m in zip(quint, qs):
                                labs += [lab] * m
                            out.append(FactoredDegree.make(1, a, labs))
        return out

    def poly_vec(p: QPoly, deg: int):
        flat = []
        for k in range(deg + 1):
            c = p.coeffs[k] if k < len(p.coeffs) else CycNumber.from_rational(0)
            c = c.minimal()
            if c.is_rational():
                flat += [c.as_rational(), F(0)]
            else:
                flat += [((c + c.galois(2)) / 2).as_rational(),
                         ((c - c.galois(2)) / (2 * s5)).as_rational()]
        return flat

    deg_t = residual.degree()

    def vec(p: QPoly):
        return np.array([float(x) for x in poly_vec(p, deg_t)])

    target = vec(residual)
    forced_poly = QPoly.one()
    for lab in forced:
        forced_poly = forced_poly * split_factors(lab)

    def sigma_poly(p: QPoly) -> QPoly:
        return QPoly([conj_scalar(c) for c in p.coeffs])

    def rev60(p: QPoly) -> QPoly:
        return p.reverse(60)

    # column sets per unit; each option carries exact polys and float columns
    def unit_options(dim: int, bmax_low: int, bmax_high: int):
        """AC-paired unit (X_low, X_high): either a sigma-conjugate pair with
        aA = 60 each, or a reversal pair of sigma-invariant shapes."""
        opts = []
        for a in range(5, bmax_low + 1):
            # case A: sigma pair, both (a, 60 - a)
            for s in shape_polys(a, 60 - a, False):
                p = s.expand() * forced_poly
                sp = sigma_poly(p)
                opts.append(("sigma", p, sp,
                             [dim * vec(p + sp), dim * vec((p - sp) * s5)]))
            # case B: reversal pair of sigma-invariant shapes
            for A in range(a + 28, 56):
                if 60 - A < 5 or 60 - A > bmax_high:
                    continue
                for s in shape_polys(a, A, True):
                    p = s.expand() * forced_poly
                    rp = rev60(p)
                    opts.append(("rev", p, rp,
                                 [dim * vec(p), dim * vec(rp)]))
        return opts

    def self_options(dim: int, bmax: int):
        opts = []
        for a in range(5, bmax + 1):
            for s in shape_polys(a, 60 - a, True):
                p = s.expand() * forced_poly
                opts.append((p, dim * vec(p)))
        return opts

    t0 = time.time()
    u36 = unit_options(36, 5, 15)
    u24 = unit_options(24, 6, 12)
    u8 = self_options(8, 12)
    u40 = self_options(40, 8)
    print(f"  extras options: 36: {len(u36)}, 24: {len(u24)}, "
          f"8: {len(u8)}, 40: {len(u40)} ({time.time()-t0:.1f}s)")

    A8 = np.stack([c for _, c in u8])
    A40 = np.stack([c for _, c in u40])
    tnorm = float(target @ target)
    hits = []
    t0 = time.time()
    for k36, (case36, p36, q36, cols36) in enumerate(u36):
        for k24, (case24, p24, q24, cols24) in enumerate(u24):
            base = np.stack(cols36 + cols24, axis=1)
            bq, _ = np.linalg.qr(base)
            tperp = target - bq @ (bq.T @ target)
            P8 = A8 - (A8 @ bq) @ bq.T
            P40 = A40 - (A40 @ bq) @ bq.T
            aii = np.einsum("ij,ij->i", P8, P8)
            djj = np.einsum("ij,ij->i", P40, P40)
            Bij = P8 @ P40.T
            pi_ = P8 @ tperp
            qj = P40 @ tperp
            det = aii[:, None] * djj[None, :] - Bij ** 2
            with np.errstate(divide="ignore", invalid="ignore"):
                c8 = (pi_[:, None] * djj[None, :] - Bij * qj[None, :]) / det
                c40 = (aii[:, None] * qj[None, :] - Bij * pi_[:, None]) / det
            resid = (tperp @ tperp) - c8 * pi_[:, None] - c40 * qj[None, :]
            good = np.argwhere(np.abs(resid) < 1e-5 * max(tnorm, 1.0))
            for i, j in good:
                if det[i, j] == 0 or not np.isfinite(resid[i, j]):
                    continue
                hits.append((k36, k24, int(i), int(j)))
    print(f"  extras scan: {len(hits)} raw hits in {time.time()-t0:.0f}s")

    solutions = []
    for k36, k24, i, j in hits:
        case36, p36a, p36b, _ = u36[k36]
        case24, p24a, p24b, _ = u24[k24]
        p8, _ = u8[i]
        p40, _ = u40[j]
        sol = _exact_extras_fit(residual, [(36, case36, p36a, p36b),
                                           (24, case24, p24a, p24b)],
                                [(8, p8), (40, p40)], s5)
        if sol is not None:
            solutions.append(((k36, k24, i, j), sol))
    print(f"  extras exact solutions: {len(solutions)}")
    if len(solutions) != 1:
        for key, sol in solutions[:5]:
            print("   candidate:", key, [str(x) for x in sol[1]])
        raise SystemExit("extras not uniquely determined")
    (k36, k24, i, j), (polys, scalars) = solutions[0]
    names_low = ["phi{36,5}", "phi{24,6}"]
    names_high = ["phi{36,15}", "phi{24,12}"]
    for poly, low, high in zip(polys[:2], names_low, names_high):
        plo, phi_c = poly
        state.set_degree(low, factor_degree(plo, H4), "extras solve")
        state.set_degree(high, factor_degree(phi_c, H4), "extras solve")
    state.set_degree("phi{8,12}", factor_degree(polys[2], H4), "extras solve")
    state.set_degree("phi{40,8}", factor_degree(polys[3], H4), "extras solve")

    # final identity check over all 34 principal-series characters
    total = QPoly.zero()
    for cid, (aa, eig, ps, hc, dual) in state.chars.items():
        if ps:
            dim = int(cid.split("{")[1].split(",")[0])
            total = total + state.poly(cid) * dim
    if total != ps_sum_target():
        raise SystemExit("H4 principal-series sum identity fails")
    print("  H4 principal-series sum identity OK (all 34 characters)")


def _exact_extras_fit(residual, units, selfs, s5):
    """Solve the exact rational system for the chosen shapes; returns
    ([(p_low, p_high), ...; p_self...], scalars) or None."""
    from fractions import Fraction as FR

    def to_pair(c):
        c = c.minimal()
        if c.is_rational():
            return (c.as_rational(), FR(0))
        return (((c + c.galois(2)) / 2).as_rational(),
                ((c - c.galois(2)) / (2 * s5)).as_rational())

    deg = residual.degree()

    def colvec(p: QPoly):
        out = []
        for k in range(deg + 1):
            c = p.coeffs[k] if k < len(p.coeffs) else CycNumber.from_rational(0)
            out.extend(to_pair(c))
        return out

    cols = []
    meta = []
    for dim, case, pa, pb in units:
        if case == "sigma":
            cols.append([dim * x for x in colvec(pa + pb)])
            cols.append([dim * x for x in colvec((pa - pb) * s5)])
        else:
            cols.append([dim * x for x in colvec(pa)])
            cols.append([dim * x for x in colvec(pb)])
        meta.append((dim, case, pa, pb))
    for dim, p in selfs:
        cols.append([dim * x for x in colvec(p)])
    from brauertrees.cyclo import _solve_exact
    sol = _solve_exact(cols, colvec(residual))
    if sol is None:
        return None
    scal = list(sol)
    polys = []
    idx = 0
    for dim, case, pa, pb in meta:
        x, y = scal[idx], scal[idx + 1]
        idx += 2
        if case == "sigma":
            c_low = CycNumber.from_rational(x) + s5 * y
            c_high = CycNumber.from_rational(x) - s5 * y
            if sign_of_real(c_low) <= 0 or sign_of_real(c_high) <= 0:
                return None
            polys.append((pa * c_low, pb * c_high))
        else:
            if x <= 0 or y <= 0:
                return None
            polys.append((pa * x, pb * y))
    for dim, p in selfs:
        c = scal[idx]
        idx += 1
        if c <= 0:
            return None
        polys.append(p * c)
    return polys, scal


def main():
    state3 = build_h3()
    state4 = build_h4(state3)
    for cid in sorted(state4.degrees):
        print(f"  {cid:26s} {state4.degrees[cid]}")


if __name__ == "__main__":
    main()
