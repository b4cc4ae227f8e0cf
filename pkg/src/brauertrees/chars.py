"""Unipotent character tables, generic degrees in factored form, group order
polynomials, and the partition into weight-1 blocks.

Dihedral tables are generated from closed forms; the H3 and H4 tables are
shipped as versioned JSON data files and re-validated on load.
"""

from __future__ import annotations

import json
import math
import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from .cyclo import (CycFactorLabel, CycNumber, QPoly, phi, phi_n, phi_prime,
                    phi_dprime, sign_of_real, split_factors, sqrt5)

DATA_DIR = Path(__file__).resolve().parent / "data"


# --- factored generic degrees ------------------------------------------


@dataclass(frozen=True)
class FactoredDegree:
    """scalar * q^qpower * product of cyclotomic-type factors (* extra)."""

    scalar: CycNumber
    qpower: int
    factors: tuple[CycFactorLabel, ...]
    extra: QPoly | None = None

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(sorted(self.factors)))

    @staticmethod
    def make(scalar, qpower: int, factors) -> "FactoredDegree":
        s = scalar if isinstance(scalar, CycNumber) else CycNumber.from_rational(scalar)
        return FactoredDegree(s, qpower, tuple(factors))

    @staticmethod
    def one() -> "FactoredDegree":
        return FactoredDegree.make(1, 0, ())

    def a_value(self) -> int:
        a = self.qpower
        if self.extra is not None:
            a += self.extra.valuation()
        return a

    def A_value(self) -> int:
        A = self.qpower + sum(f.poly_degree() for f in self.factors)
        if self.extra is not None:
            A += self.extra.degree()
        return A

    def aA(self) -> int:
        return self.a_value() + self.A_value()

    def root_multiset(self) -> Counter:
        """Nonzero roots as exact exponents (fractions of a turn)."""
        roots: Counter = Counter()
        for f in self.factors:
            for r in f.roots():
                roots[r] += 1
        if self.extra is not None:
            raise NotImplementedError("root multiset with a raw extra factor")
        return roots

    def expand(self) -> QPoly:
        out = QPoly([self.scalar]) if self.qpower == 0 else \
            QPoly([0] * self.qpower + [self.scalar])
        for f in self.factors:
            out = out * split_factors(f)
        if self.extra is not None:
            out = out * self.extra
        return out

    def evaluate(self, x) -> CycNumber:
        acc = self.scalar * (CycNumber.from_rational(x) if not isinstance(x, CycNumber) else x) ** self.qpower
        xv = x if isinstance(x, CycNumber) else CycNumber.from_rational(x)
        for f in self.factors:
            acc = acc * split_factors(f)(xv)
        if self.extra is not None:
            acc = acc * self.extra(xv)
        return acc

    def value_at_one(self) -> CycNumber:
        return self.evaluate(Fraction(1))

    def height(self, label: CycFactorLabel) -> int:
        """Multiplicity of the factor `label` (counted via its defining root)."""
        if self.extra is not None:
            raise NotImplementedError
        return self.root_multiset()[label.defining_root()]

    def times(self, other: "FactoredDegree") -> "FactoredDegree":
        if self.extra is not None or other.extra is not None:
            raise NotImplementedError
        return FactoredDegree(self.scalar * other.scalar,
                              self.qpower + other.qpower,
                              self.factors + other.factors)

    def __str__(self):
        parts = []
        if not (self.scalar == 1):
            parts.append(scalar_to_str(self.scalar))
        if self.qpower == 1:
            parts.append("q")
        elif self.qpower:
            parts.append(f"q^{self.qpower}")
        for lab, mult in sorted(Counter(self.factors).items()):
            parts.append(str(lab) if mult == 1 else f"{lab}^{mult}")
        return " ".join(parts) if parts else "1"


def scalar_to_str(x: CycNumber) -> str:
    """Canonical lossless string for a scalar in Q or Q(sqrt5)."""
    x = x.minimal()
    if x.is_rational():
        return str(x.as_rational())
    s5 = sqrt5()
    # x = a + b*sqrt5 with a, b rational: b = (x - conj_gal(x)) / (2 sqrt5)
    sigma = x.galois(_nonresidue_exponent(x.n)) if x.n % 5 == 0 else None
    if sigma is None:
        raise ValueError(f"scalar {x!r} is not in Q(sqrt5)")
    b = (x - sigma) / (2 * s5)
    a = (x + sigma) / 2
    if not (a.is_rational() and b.is_rational()):
        raise ValueError(f"scalar {x!r} is not in Q(sqrt5)")
    ar, br = a.as_rational(), b.as_rational()
    den = math.lcm(ar.denominator, br.denominator)
    an, bn = ar.numerator * den // ar.denominator, br.numerator * den // br.denominator
    sign = "+" if bn >= 0 else "-"
    core = f"{an}{sign}{abs(bn)}*sqrt5"
    return f"({core})/{den}" if den != 1 else f"({core})"


def _nonresidue_exponent(n: int) -> int:
    # a Galois exponent acting as sqrt5 -> -sqrt5
    for k in range(2, n):
        if math.gcd(k, n) == 1 and k % 5 in (2, 3):
            return k
    raise ValueError(f"no conjugation moves sqrt5 inside Q(zeta_{n})")


_SCALAR_RE = re.compile(r"^\((-?\d+)([+-])(\d+)\*sqrt5\)(?:/(\d+))?$")


def scalar_from_str(s: str) -> CycNumber:
    s = s.strip()
    m = _SCALAR_RE.match(s)
    if m:
        a = int(m.group(1))
        b = int(m.group(3)) * (1 if m.group(2) == "+" else -1)
        den = int(m.group(4) or 1)
        return (CycNumber.from_rational(a) + sqrt5() * b) / den
    return CycNumber.from_rational(Fraction(s))


# --- groups and their orders -------------------------------------------


@dataclass(frozen=True)
class GroupSpec:
    family: str              # "I2", "H3", "H4"
    n: int = 0               # dihedral parameter, 0 otherwise
    reflections: int = 0
    degrees: tuple[int, ...] = ()

    def __post_init__(self):
        if self.family == "I2":
            if self.n < 5:
                raise ValueError("dihedral parameter must be >= 5")
            object.__setattr__(self, "reflections", self.n)
            object.__setattr__(self, "degrees", (2, self.n))
        elif self.family == "H3":
            object.__setattr__(self, "reflections", 15)
            object.__setattr__(self, "degrees", (2, 6, 10))
        elif self.family == "H4":
            object.__setattr__(self, "reflections", 60)
            object.__setattr__(self, "degrees", (2, 12, 20, 30))
        else:
            raise ValueError(f"unknown family {self.family!r}")

    def name(self) -> str:
        return f"I2({self.n})" if self.family == "I2" else self.family


def i2(n: int) -> GroupSpec:
    return GroupSpec("I2", n)


H3 = GroupSpec("H3")
H4 = GroupSpec("H4")


def group_order(g: GroupSpec) -> FactoredDegree:
    """q^N * prod(q^(d_i) - 1), fully factored over the field of definition."""
    if g.family == "I2":
        n = g.n
        labels: list[CycFactorLabel] = [phi(1), phi(1), phi(2)]
        if n % 2 == 0:
            labels.append(phi(2))
        labels += [phi_n(n, i) for i in range(1, (n + 1) // 2) if Fraction(i, 1) < Fraction(n, 2)]
        return FactoredDegree.make(1, n, labels)
    if g.family == "H3":
        labels = [phi(1)] * 3 + [phi(2)] * 3 + [phi(3), phi(6)] + \
            [phi_prime(5), phi_dprime(5), phi_prime(10), phi_dprime(10)]
        return FactoredDegree.make(1, 15, labels)
    labels = [phi(1)] * 4 + [phi(2)] * 4 + [phi(3)] * 2 + [phi(4)] * 2 + \
        [phi(6)] * 2 + [phi(12)] + \
        [phi_prime(5), phi_dprime(5)] * 2 + [phi_prime(10), phi_dprime(10)] * 2 + \
        [phi_prime(15), phi_dprime(15), phi_prime(20), phi_dprime(20),
         phi_prime(30), phi_dprime(30)]
    return FactoredDegree.make(1, 60, labels)


def order_display(g: GroupSpec) -> QPoly:
    """q^N * prod(q^(a_i) - 1), expanded; used to cross-check group_order."""
    out = QPoly.monomial(g.reflections)
    for d in g.degrees:
        out = out * QPoly([-1] + [0] * (d - 1) + [1])
    return out


# --- unipotent characters ----------------------------------------------


@dataclass(frozen=True)
class UnipotentCharacter:
    id: str
    degree: FactoredDegree
    frobenius: Fraction          # eigenvalue of Frobenius as exponent of a turn
    principal_series: bool
    hc_series: str
    dual: str                    # complex-conjugate partner id
    real: bool

    def __post_init__(self):
        if self.real != (self.dual == self.id):
            raise ValueError(f"{self.id}: real flag inconsistent with dual")


def _i2_class(n: int, j: int) -> int:
    j %= n
    return min(j, n - j)


def i2_char_id(n: int, i: int, j: int) -> str:
    """Canonical id for I2(n)[i,j] under the index identifications
    [i,j] = [j,i] = [n-i,n-j]; the representative satisfies i < j < n-i."""
    i %= n
    j %= n
    for a, b in ((i, j), (j, i), ((n - i) % n, (n - j) % n),
                 ((n - j) % n, (n - i) % n)):
        if 1 <= a < b < n - a:
            return f"I2({n})[{a},{b}]"
    raise ValueError(f"I2({n})[{i},{j}] does not name a character")


def i2_characters(n: int) -> list[UnipotentCharacter]:
    """The unipotent characters of I2(n, q), from the closed-form table."""
    if n < 5:
        raise ValueError("need n >= 5")
    eta = CycNumber.zeta_power(n, 1)
    chars: list[UnipotentCharacter] = []

    one = FactoredDegree.one()
    chars.append(UnipotentCharacter("phi{1,0}", one, Fraction(0), True, "1", "phi{1,0}", True))
    st = FactoredDegree.make(1, n, ())
    chars.append(UnipotentCharacter(f"phi{{1,{n}}}", st, Fraction(0), True, "1", f"phi{{1,{n}}}", True))

    classes = [i for i in range(1, (n - 1) // 2 + 1)]
    for i in classes:
        # (1 - eta^i)(1 - eta^-i)/n * q Phi2 (q^n - 1) / (Phi1 Phi_n^(i))
        scal = (1 - eta ** i) * (1 - eta ** (n - i)) / n
        labs = [phi(2)]
        if n % 2 == 0:
            labs.append(phi(2))
        labs += [phi_n(n, k) for k in classes if k != i]
        deg = FactoredDegree.make(scal.minimal(), 1, labs)
        cid = f"phi{{2,{i}}}"
        chars.append(UnipotentCharacter(cid, deg, Fraction(0), True, "1", cid, True))

    if n % 2 == 0:
        labs = [phi_n(n, k) for k in classes]
        deg = FactoredDegree.make(Fraction(2, n), 1, labs)
        for tag in ("'", "''"):
            cid = f"phi{{1,{n // 2}}}{tag}"
            chars.append(UnipotentCharacter(cid, deg, Fraction(0), True, "1", cid, True))

    # cuspidal-family characters I2(n)[i,j] with i < j < n - i; the degree is
    # scal * q (q^2-1)(q^n-1) / ((q-eta^i)(q-eta^-i)(q-eta^j)(q-eta^-j)),
    # where the denominator for j = n/2 degenerates to Phi2^2
    for i in classes:
        for j in range(i + 1, n - i):
            scal = (eta ** i + eta ** (n - i) - eta ** j - eta ** (n - j)) / n
            cj = _i2_class(n, j)
            labs: list[CycFactorLabel] = [phi(1), phi(1)]
            if cj == Fraction(n, 2):
                pass  # both Phi2 from the numerator are cancelled
            else:
                labs.append(phi(2))
                if n % 2 == 0:
                    labs.append(phi(2))
            labs += [phi_n(n, k) for k in classes if k not in (i, cj)]
            deg = FactoredDegree.make(scal.minimal(), 1, labs)
            cid = f"I2({n})[{i},{j}]"
            dual = i2_char_id(n, i, n - j)
            frob = Fraction(-i * j, n) % 1
            chars.append(UnipotentCharacter(cid, deg, frob, False, cid,
                                            dual, dual == cid))
    return chars


def i2_character_count(n: int) -> int:
    pairs = sum(1 for i in range(1, (n - 1) // 2 + 1) for j in range(i + 1, n - i))
    return 2 + (n - 1) // 2 + pairs + (2 if n % 2 == 0 else 0)


# --- table container and validation ------------------------------------


@dataclass
class CharacterTable:
    group: GroupSpec
    chars: dict[str, UnipotentCharacter]

    def __getitem__(self, cid: str) -> UnipotentCharacter:
        return self.chars[cid]

    def __iter__(self):
        return iter(self.chars.values())

    def __len__(self):
        return len(self.chars)

    def degree(self, cid: str) -> FactoredDegree:
        return self.chars[cid].degree


@lru_cache(maxsize=None)
def i2_table(n: int) -> CharacterTable:
    chars = i2_characters(n)
    table = CharacterTable(i2(n), {c.id: c for c in chars})
    if len(table) != i2_character_count(n):
        raise AssertionError("dihedral character count mismatch")
    validate_table(table)
    return table


def validate_table(table: CharacterTable) -> None:
    """Divisibility, dual pairing and root-of-unity checks for a table."""
    order = group_order(table.group)
    order_roots = order.root_multiset()
    for ch in table:
        roots = ch.degree.root_multiset()
        for r, mult in roots.items():
            if mult > order_roots[r]:
                raise ValueError(f"{ch.id}: degree does not divide the group order")
        if ch.degree.qpower > order.qpower:
            raise ValueError(f"{ch.id}: q-power exceeds the group order")
        if ch.dual not in table.chars:
            raise ValueError(f"{ch.id}: dangling dual {ch.dual!r}")
        partner = table[ch.dual]
        if partner.dual != ch.id:
            raise ValueError(f"{ch.id}: dual pairing is not an involution")
        if partner.degree.expand() != ch.degree.expand():
            raise ValueError(f"{ch.id}: dual degree differs")
        if (partner.frobenius + ch.frobenius) % 1 != 0:
            raise ValueError(f"{ch.id}: dual Frobenius eigenvalues do not pair")
        if ch.principal_series and ch.frobenius % 1 != 0:
            raise ValueError(f"{ch.id}: principal series must have eigenvalue 1")
        if sign_of_real(ch.degree.scalar) <= 0:
            raise ValueError(f"{ch.id}: degree scalar must be positive")


def load_character_table(path: str | Path) -> CharacterTable:
    """Load and validate an H3/H4 character table data file."""
    blob = json.loads(Path(path).read_text())
    group = {"H3": H3, "H4": H4}.get(blob.get("group"))
    if group is None:
        raise ValueError("character file must declare group H3 or H4")
    chars = {}
    for entry in blob["characters"]:
        deg = FactoredDegree.make(
            scalar_from_str(entry["scalar"]),
            int(entry["qpower"]),
            tuple(CycFactorLabel.parse(s) for s in entry["factors"]),
        )
        frob = Fraction(entry["frobenius"]) % 1
        ch = UnipotentCharacter(
            id=entry["id"], degree=deg, frobenius=frob,
            principal_series=bool(entry["principal_series"]),
            hc_series=entry["hc_series"], dual=entry["dual"],
            real=bool(entry["real"]),
        )
        if ch.id in chars:
            raise ValueError(f"duplicate character id {ch.id}")
        chars[ch.id] = ch
    table = CharacterTable(group, chars)
    validate_table(table)
    return table


# --- blocks --------------------------------------------------------------


@dataclass(frozen=True)
class HeckeDatum:
    omega: Fraction   # root of unity, exponent of a full turn
    qexp: Fraction    # exponent of q in the renormalized parameter


@dataclass
class Block:
    group: GroupSpec
    phi_label: CycFactorLabel
    d: int                       # numeric order of the specialization root
    kappas: tuple[int, ...]      # valid kappa values (coprime residues)
    members: tuple[str, ...]
    cuspidal_character: str      # "1" for a trivial (torus) cuspidal pair
    cuspidal_degree: FactoredDegree
    cuspidal_levi: str
    weight: int
    principal: bool
    hecke: dict[str, HeckeDatum] = field(default_factory=dict)
    muller_line: tuple[str, ...] = ()
    hc_adjacency: tuple[tuple[str, str, str], ...] = ()

    @property
    def e(self) -> int:
        return len(self.members)

    def default_kappa(self) -> int:
        return self.kappas[0]

    def name(self) -> str:
        return f"{self.group.name()} {self.phi_label}"


def label_kappas(label: CycFactorLabel) -> tuple[int, tuple[int, ...]]:
    """Numeric d and the kappa residues with e^(2 pi i kappa/d) a root of label."""
    d = label.d
    roots = label.roots()
    kappas = tuple(sorted(r.numerator * (d // r.denominator) for r in roots))
    return d, kappas


def block_heights(table: CharacterTable, label: CycFactorLabel) -> dict[str, int]:
    return {ch.id: ch.degree.height(label) for ch in table}


def partition_blocks(table: CharacterTable, label: CycFactorLabel) -> list[Block]:
    """Weight-1 blocks for the given cyclotomic factor.

    Dihedral blocks are built from the closed forms.  For H3/H4 the block
    structure is part of the ingested data; use `load_blocks` and this
    function only re-derives the principal-block membership for checking.
    """
    g = table.group
    order_h = group_order(g).height(label)
    if order_h == 0:
        raise ValueError(f"{label} does not divide the order of {g.name()}")
    heights = block_heights(table, label)
    if g.family == "I2":
        return _i2_blocks(table, label, order_h, heights)
    # principal block of an H-type group: all height-0 characters when the
    # order has the factor exactly once
    if order_h != 1:
        raise ValueError("H3/H4 non-principal blocks come from data files")
    members = tuple(sorted(cid for cid, h in heights.items() if h == 0))
    d, kappas = label_kappas(label)
    return [Block(group=g, phi_label=label, d=d, kappas=kappas, members=members,
                  cuspidal_character="1", cuspidal_degree=FactoredDegree.one(),
                  cuspidal_levi=f"torus {label}", weight=1, principal=True)]


def _i2_blocks(table: CharacterTable, label: CycFactorLabel,
               order_h: int, heights: dict[str, int]) -> list[Block]:
    g = table.group
    n = g.n
    if label.kind == "phin":
        members = tuple(sorted(cid for cid, h in heights.items() if h == 0))
        i = label.i
        dprime = math.gcd(n, i)
        d = n // dprime
        kappas = (i // dprime, (n - i) // dprime)
        blk = Block(group=g, phi_label=label, d=d, kappas=kappas, members=members,
                    cuspidal_character="1", cuspidal_degree=FactoredDegree.one(),
                    cuspidal_levi=f"torus {label}.Phi1", weight=1, principal=True,
                    muller_line=("phi{1,0}", f"phi{{2,{i}}}",
                                 f"phi{{1,{n}}}", "*"))
        _attach_i2_hecke(blk, n, i)
        return [blk]
    if label.kind == "phi" and label.d == 2 and n % 2 == 1:
        members = tuple(sorted(cid for cid, h in heights.items() if h == 0))
        if members != ("phi{1,0}", f"phi{{1,{n}}}"):
            raise AssertionError("unexpected d=2 dihedral block membership")
        blk = Block(group=g, phi_label=label, d=2, kappas=(1,), members=members,
                    cuspidal_character="1", cuspidal_degree=FactoredDegree.one(),
                    cuspidal_levi="torus Phi2.Phi1", weight=1, principal=True,
                    muller_line=("phi{1,0}", f"phi{{1,{n}}}", "*"))
        blk.hecke = {
            "phi{1,0}": HeckeDatum(Fraction(0), Fraction(0)),
            f"phi{{1,{n}}}": HeckeDatum(Fraction(0), Fraction(n)),
        }
        return [blk]
    raise ValueError(f"no weight-1 unipotent {label} block for {g.name()}")


def _attach_i2_hecke(blk: Block, n: int, i: int) -> None:
    """Parameters 1, q, q^2 and eta^(-x) q for the principal dihedral block."""
    hecke = {
        "phi{1,0}": HeckeDatum(Fraction(0), Fraction(0)),
        f"phi{{2,{i}}}": HeckeDatum(Fraction(0), Fraction(1)),
        f"phi{{1,{n}}}": HeckeDatum(Fraction(0), Fraction(2)),
    }
    for x in range(1, n):
        if x == i or x == n - i:
            continue
        cid = i2_char_id(n, i, x)
        if cid in hecke:
            raise AssertionError(f"duplicate parameter for {cid}")
        hecke[cid] = HeckeDatum(Fraction(-x, n) % 1, Fraction(1))
    blk.hecke = hecke


def load_blocks(path: str | Path, table: CharacterTable) -> list[Block]:
    blob = json.loads(Path(path).read_text())
    if blob.get("group") != table.group.family:
        raise ValueError("block file group does not match the character table")
    out = []
    for entry in blob["blocks"]:
        label = CycFactorLabel.parse(entry["phi_label"])
        d, kappas_all = label_kappas(label)
        kappas = tuple(entry.get("kappas", kappas_all))
        if entry["cuspidal_character"] == "1":
            cusp_deg = FactoredDegree.one()
        else:
            cd = entry["cuspidal_degree"]
            cusp_deg = FactoredDegree.make(
                scalar_from_str(cd["scalar"]), int(cd["qpower"]),
                tuple(CycFactorLabel.parse(s) for s in cd["factors"]))
        blk = Block(
            group=table.group, phi_label=label, d=d, kappas=kappas,
            members=tuple(entry["members"]),
            cuspidal_character=entry["cuspidal_character"],
            cuspidal_degree=cusp_deg,
            cuspidal_levi=entry["cuspidal_levi"],
            weight=int(entry["weight"]),
            principal=bool(entry["principal"]),
            hecke={cid: HeckeDatum(Fraction(h["omega"]) % 1, Fraction(h["qexp"]))
                   for cid, h in entry["hecke"].items()},
            muller_line=tuple(entry["muller_line_order"]),
            hc_adjacency=tuple((a, b, why) for a, b, why in
                               entry.get("hc_adjacency_constraints", ())),
        )
        _validate_block(blk, table)
        out.append(blk)
    return out


def _validate_block(blk: Block, table: CharacterTable) -> None:
    order_h = group_order(table.group).height(blk.phi_label)
    for cid in blk.members:
        if cid not in table.chars:
            raise ValueError(f"{blk.name()}: unknown member {cid}")
        h = table[cid].degree.height(blk.phi_label)
        if h != order_h - blk.weight:
            raise ValueError(
                f"{blk.name()}: member {cid} has {blk.phi_label}-height {h}, "
                f"expected {order_h - blk.weight}")
    if blk.principal:
        computed = tuple(sorted(cid for cid, h in
                                block_heights(table, blk.phi_label).items()
                                if h == order_h - blk.weight))
        if computed != tuple(sorted(blk.members)):
            raise ValueError(f"{blk.name()}: members disagree with height arithmetic")
    if set(blk.muller_line) - set(blk.members) - {"*"}:
        raise ValueError(f"{blk.name()}: muller line leaves the block")
    for a, b, _ in blk.hc_adjacency:
        if a not in blk.members or b not in blk.members:
            raise ValueError(f"{blk.name()}: HC pair leaves the block")
