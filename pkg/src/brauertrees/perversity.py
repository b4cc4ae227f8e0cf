"""The perversity function pi_{kappa/d} on factored generic degrees.

All root data is exact: roots of a factored degree are stored as rational
exponents of a full turn, so argument counting is pure rational comparison.
Values are half-integers (Fractions with denominator 1 or 2).
"""

from __future__ import annotations

import math
from fractions import Fraction

from .chars import Block, CharacterTable, FactoredDegree


def check_kappa(kappa: int, d: int) -> None:
    if d < 1:
        raise ValueError("d must be a positive integer")
    if kappa == 0:
        if d != 1:
            raise ValueError("kappa = 0 requires d = 1")
        return
    if kappa < 0 or math.gcd(kappa, d) != 1:
        raise ValueError("kappa must be nonnegative and coprime to d")


def a_A(f: FactoredDegree) -> tuple[int, int]:
    """Multiplicity of the root 0 and the total degree."""
    return f.a_value(), f.A_value()


def phi_kd(f: FactoredDegree, kappa: int, d: int) -> Fraction:
    """Count of root arguments in the open interval (0, 2*pi*kappa/d), plus
    half the multiplicity of the root 1.

    A root e^(2*pi*i*t) with t in [0,1) contributes one count for every
    integer m >= 0 with 0 < t + m < kappa/d.
    """
    check_kappa(kappa, d)
    top = Fraction(kappa, d)
    total = Fraction(0)
    for t, mult in f.root_multiset().items():
        t = Fraction(t) % 1
        if t == 0:
            total += Fraction(mult, 2)
            # arguments 2*pi, 4*pi, ... of the root 1 itself
            m = 1
            while m < top:
                total += mult
                m += 1
        else:
            m = 0
            while t + m < top:
                total += mult
                m += 1
    return total


def pi_poly(f: FactoredDegree, kappa: int, d: int) -> Fraction:
    """pi_{kappa/d}(f) = (kappa/d)(a+A) + phi_{kappa/d}(f)."""
    a, A = a_A(f)
    return Fraction(kappa, d) * (a + A) + phi_kd(f, kappa, d)


def pi_char(table: CharacterTable, chi: str, block: Block, kappa: int) -> Fraction:
    """Perversity of a block member relative to the cuspidal character."""
    if chi not in block.members:
        raise ValueError(f"{chi} is not a member of {block.name()}")
    check_kappa(kappa, block.d)
    base = pi_poly(block.cuspidal_degree, kappa, block.d)
    return pi_poly(table.degree(chi), kappa, block.d) - base


def relative_aA(table: CharacterTable, chi: str, block: Block) -> int:
    """aA(chi) = (a+A)(Deg chi) - (a+A)(Deg lambda)."""
    return table.degree(chi).aA() - block.cuspidal_degree.aA()


def i2_pi_closed_form(n: int, i: int, kappa_choice: str, cid: str) -> Fraction:
    """The closed forms of the dihedral pi table (used as test oracles).

    kappa_choice is "i" for kappa = i/d' or "n-i" for kappa = (n-i)/d'.
    """
    import re
    if kappa_choice == "i":
        base = 2 * i
    else:
        base = 2 * (n - i)
    if cid == "phi{1,0}":
        return Fraction(0)
    if cid == f"phi{{1,{n}}}":
        return Fraction(base)
    if cid == f"phi{{2,{i}}}":
        return Fraction(base - 1)
    m = re.match(r"I2\(\d+\)\[(\d+),(\d+)\]", cid)
    if m:
        a, b = int(m.group(1)), int(m.group(2))
        # rewrite as [i, x]: the pair {a, b} with the block index i first
        if a == i:
            x = b
        elif b == i:
            x = a
        elif n - a == i:
            x = n - b
        elif n - b == i:
            x = n - a
        else:
            raise ValueError(f"{cid} is not in the i={i} block")
        j = min(x % n, (n - x) % n)
        if kappa_choice == "i":
            return Fraction(base - (1 if j < i else 0))
        return Fraction(base - (1 if j < i else 2))
    if cid in (f"phi{{1,{n//2}}}'", f"phi{{1,{n//2}}}''"):
        raise ValueError("phi_{1,n/2} characters never lie in a phin block")
    raise ValueError(f"unknown dihedral character {cid}")
