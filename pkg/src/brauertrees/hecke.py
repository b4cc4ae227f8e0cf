"""Cyclotomic Hecke algebra parameters, relative degrees, specialization at
roots of unity, and the induced cyclic branch ordering.

Parameters are monomials omega * q^m with omega a root of unity (stored as a
rational exponent of a full turn) and m a rational exponent; computations in
fractional powers of q go through the substitution t = q^(1/L).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .chars import Block, CharacterTable, HeckeDatum
from .cyclo import CycNumber, QPoly
from .perversity import relative_aA


@dataclass(frozen=True)
class HeckeParameter:
    char_id: str
    omega: Fraction    # exponent of a full turn
    qexp: Fraction     # renormalized exponent: aA(char)/e


@dataclass(frozen=True)
class SpecializedPosition:
    char_id: str
    exponent: Fraction  # position on the unit circle, as a fraction of a turn


def hecke_parameters(table: CharacterTable, block: Block) -> list[HeckeParameter]:
    """The block's renormalized parameters, cross-checked against aA/e."""
    if block.weight != 1:
        raise ValueError(f"{block.name()} does not have weight 1")
    if set(block.hecke) != set(block.members):
        raise ValueError(f"{block.name()}: parameter data does not cover the block")
    out = []
    for cid in block.members:
        datum: HeckeDatum = block.hecke[cid]
        expected = Fraction(relative_aA(table, cid, block), block.e)
        if datum.qexp != expected:
            raise ValueError(
                f"{block.name()}: {cid} has q-exponent {datum.qexp}, "
                f"but aA/e = {expected}")
        out.append(HeckeParameter(cid, datum.omega % 1, datum.qexp))
    if len({(p.omega, p.qexp) for p in out}) != len(out):
        raise ValueError(f"{block.name()}: coincident Hecke parameters")
    return out


# --- relative degrees ---------------------------------------------------


@dataclass(frozen=True)
class RatFunc:
    """num/den, polynomials in t = q^(1/scale)."""

    num: QPoly
    den: QPoly
    scale: int

    def ratio_to(self, other: "RatFunc") -> tuple[QPoly, QPoly]:
        if self.scale != other.scale:
            raise ValueError("mismatched scales")
        return self.num * other.den, self.den * other.num


def _monomial(omega: Fraction, qexp: Fraction, scale: int) -> QPoly:
    k = qexp * scale
    if k.denominator != 1:
        raise ValueError("scale does not clear the exponent")
    return QPoly.monomial(int(k), CycNumber.root_of_unity(omega))


def parameter_scale(params: list[HeckeParameter]) -> int:
    return math.lcm(*[p.qexp.denominator for p in params]) if params else 1


def relative_degree(params: list[HeckeParameter], index: int) -> RatFunc:
    """prod_{j != i} u_j / (u_i - u_j), exactly, in t = q^(1/scale).

    The parameters used are the low-normalization ones u = omega * q^(-qexp),
    cleared of negative powers; the clearing changes num and den by the same
    monomial so every ratio of relative degrees is unaffected.
    """
    scale = parameter_scale(params)
    num = QPoly.one()
    den = QPoly.one()
    pi_ = params[index]
    # u_j = omega_j t^(-m_j); multiply each factor u_j/(u_i - u_j) by
    # t^(m_j + m_i) / t^(m_j + m_i) to stay polynomial:
    #   u_j/(u_i - u_j) = omega_j t^(m_i) / (omega_i t^(m_j) - omega_j t^(m_i))
    for j, pj in enumerate(params):
        if j == index:
            continue
        num = num * _monomial(pj.omega, pi_.qexp, scale)
        term = _monomial(pi_.omega, pj.qexp, scale) - _monomial(pj.omega, pi_.qexp, scale)
        if term.is_zero():
            raise ZeroDivisionError("coincident parameters")
        den = den * term
    return RatFunc(num, den, scale)


def reldeg_ratio_equals(params: list[HeckeParameter], i: int, j: int,
                        deg_i: QPoly, deg_j: QPoly, scale: int) -> bool:
    """Check RelDeg(u_i)/RelDeg(u_j) == deg_i/deg_j up to sign, exactly.

    Degrees are polynomials in q and are rescaled to t; the sign ambiguity is
    the parity-type sign of the block bipartition.
    """
    ri = relative_degree(params, i)
    rj = relative_degree(params, j)
    lhs_n, lhs_d = ri.ratio_to(rj)
    di = _rescale(deg_i, scale)
    dj = _rescale(deg_j, scale)
    lhs = lhs_n * dj
    rhs = lhs_d * di
    return lhs == rhs or lhs == -rhs


def _rescale(p: QPoly, scale: int) -> QPoly:
    out = [CycNumber.from_rational(0)] * (len(p.coeffs) * scale)
    for k, c in enumerate(p.coeffs):
        out[k * scale] = c
    return QPoly(out)


def extract_degrees(params: list[HeckeParameter], anchor: str,
                    anchor_degree: QPoly) -> dict[str, tuple[QPoly, int]]:
    """Solve RelDeg proportionality for every member degree, given one anchor.

    Returns char_id -> (degree polynomial normalized to positive leading
    rational-leading form, sign), where sign records the parity-type sign of
    the relative degree against the anchor.
    """
    scale = parameter_scale(params)
    ids = [p.char_id for p in params]
    ai = ids.index(anchor)
    ra = relative_degree(params, ai)
    base = _rescale(anchor_degree, scale)
    out: dict[str, tuple[QPoly, int]] = {}
    for k, p in enumerate(params):
        if k == ai:
            out[p.char_id] = (anchor_degree, 1)
            continue
        rk = relative_degree(params, k)
        # deg_k = anchor_degree * (rk/ra), if that quotient is a polynomial in q
        num = rk.num * ra.den * base
        den = rk.den * ra.num
        quot, rem = num.divmod(den)
        if not rem.is_zero():
            raise ArithmeticError(f"relative degree for {p.char_id} is not polynomial")
        poly, sign = _descale(quot, scale, p.char_id)
        out[p.char_id] = (poly, sign)
    return out


def _descale(p: QPoly, scale: int, cid: str) -> tuple[QPoly, int]:
    coeffs = []
    for k, c in enumerate(p.coeffs):
        if k % scale and not c.is_zero():
            raise ArithmeticError(f"{cid}: degree has fractional q-powers")
        if k % scale == 0:
            coeffs.append(c)
    poly = QPoly(coeffs)
    from .cyclo import sign_of_real
    lead = poly.leading()
    if not lead.is_real():
        raise ArithmeticError(f"{cid}: degree leading coefficient is not real")
    sign = sign_of_real(lead)
    if sign < 0:
        poly = -poly
    return poly, sign


# --- specialization and branch order ------------------------------------


def specialize(params: list[HeckeParameter], kappa: int, d: int,
               e: int) -> tuple[list[SpecializedPosition], str]:
    """Positions omega * e^(2*pi*i*kappa*qexp/d) and the root-of-unity
    dichotomy verdict ("e" for all e-th roots, "2e" for all 2e-th roots that
    are not e-th roots)."""
    positions = []
    for p in params:
        expo = (p.omega + Fraction(kappa) * p.qexp / d) % 1
        positions.append(SpecializedPosition(p.char_id, expo))
    if len({p.exponent for p in positions}) != len(positions):
        raise ValueError("specialized positions collide")
    if all((p.exponent * e) % 1 == 0 for p in positions):
        verdict = "e"
    elif all((p.exponent * 2 * e) % 1 == 0 and (p.exponent * e) % 1 != 0
             for p in positions):
        verdict = "2e"
    else:
        raise ValueError("positions violate the e-th/2e-th root dichotomy")
    return positions, verdict


def branch_order(table: CharacterTable, block: Block, kappa: int) -> list[str]:
    """Members sorted by increasing argument of their specialized position;
    the predicted counterclockwise arrangement around the exceptional node."""
    params = hecke_parameters(table, block)
    positions, _ = specialize(params, kappa, block.d, block.e)
    return [p.char_id for p in sorted(positions, key=lambda p: p.exponent)]
