"""Planar-embedded Brauer trees: the edge-dimension solver, the constraint
engine (parity, degree positivity, the principal-series line, the real stem,
stored induction adjacencies, perversity monotonicity, branch order, and the
eigenvalue-line rule for Coxeter blocks), exhaustive search for small blocks,
and rendering."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .chars import Block, CharacterTable, i2_char_id
from .cyclo import CycNumber, QPoly, sign_of_real, split_factors, positive_on_ray
from .hecke import hecke_parameters, specialize
from .perversity import pi_char

EXC = "exceptional"


@dataclass
class PlanarTree:
    """A tree on the block's characters plus one exceptional vertex, with an
    explicit counterclockwise neighbor order at every vertex."""

    adjacency: dict[str, tuple[str, ...]]

    def __post_init__(self):
        self.validate()

    def validate(self):
        adj = self.adjacency
        if EXC not in adj:
            raise ValueError("missing exceptional vertex")
        for v, nbrs in adj.items():
            if len(set(nbrs)) != len(nbrs):
                raise ValueError(f"repeated neighbor at {v}")
            for u in nbrs:
                if v not in adj.get(u, ()):
                    raise ValueError(f"edge {v}-{u} is not symmetric")
        # connected and acyclic
        n = len(adj)
        edges = sum(len(x) for x in adj.values()) // 2
        if edges != n - 1:
            raise ValueError("edge count does not match a tree")
        seen = {EXC}
        stack = [EXC]
        while stack:
            v = stack.pop()
            for u in self.adjacency[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        if len(seen) != n:
            raise ValueError("tree is not connected")

    # --- structure ----------------------------------------------------
    def vertices(self) -> list[str]:
        return list(self.adjacency)

    def characters(self) -> list[str]:
        return [v for v in self.adjacency if v != EXC]

    def edges(self) -> list[tuple[str, str]]:
        out = []
        for v, nbrs in self.adjacency.items():
            for u in nbrs:
                if v < u:
                    out.append((v, u))
        return out

    def degree(self, v: str) -> int:
        return len(self.adjacency[v])

    def parent_map(self) -> dict[str, str]:
        """Each vertex's neighbor on the path toward the exceptional vertex."""
        parent = {}
        order = [EXC]
        seen = {EXC}
        while order:
            v = order.pop()
            for u in self.adjacency[v]:
                if u not in seen:
                    seen.add(u)
                    parent[u] = v
                    order.append(u)
        return parent

    def canonical(self) -> tuple:
        """Hashable form: cyclic neighbor lists rotated to a fixed start."""
        out = []
        for v in sorted(self.adjacency):
            nbrs = self.adjacency[v]
            if len(nbrs) <= 1:
                out.append((v, tuple(nbrs)))
                continue
            best = min(range(len(nbrs)),
                       key=lambda k: tuple(nbrs[(k + j) % len(nbrs)]
                                           for j in range(len(nbrs))))
            out.append((v, tuple(nbrs[(best + j) % len(nbrs)]
                                 for j in range(len(nbrs)))))
        return tuple(out)

    def reflected(self) -> "PlanarTree":
        return PlanarTree({v: tuple(reversed(n)) for v, n in self.adjacency.items()})

    def __eq__(self, other):
        return isinstance(other, PlanarTree) and self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    # --- (de)serialization ---------------------------------------------
    @staticmethod
    def from_json(blob: dict) -> "PlanarTree":
        return PlanarTree({v: tuple(n) for v, n in blob["adjacency"].items()})

    def to_json(self) -> dict:
        return {"adjacency": {v: list(n) for v, n in self.adjacency.items()}}


def tree_from_edges(edges, orders=None) -> PlanarTree:
    """Build a tree from an edge list; `orders` overrides the neighbor order
    at specific vertices (counterclockwise)."""
    adj: dict[str, list[str]] = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    if orders:
        for v, nbrs in orders.items():
            if sorted(nbrs) != sorted(adj[v]):
                raise ValueError(f"order at {v} does not list its neighbors")
            adj[v] = list(nbrs)
    return PlanarTree({v: tuple(n) for v, n in adj.items()})


# --- edge dimensions -----------------------------------------------------


def solve_edge_dimensions(tree: PlanarTree, table: CharacterTable) \
        -> dict[frozenset, QPoly]:
    """The unique generic edge dimensions: at every non-exceptional vertex the
    incident edges sum to the character degree (no equation at the
    exceptional vertex); solved by peeling from the leaves inward."""
    parent = tree.parent_map()
    dims: dict[frozenset, QPoly] = {}
    # process characters by decreasing depth
    depth = {EXC: 0}
    stack = [EXC]
    while stack:
        v = stack.pop()
        for u in tree.adjacency[v]:
            if u not in depth:
                depth[u] = depth[v] + 1
                stack.append(u)
    for v in sorted(tree.characters(), key=lambda x: -depth[x]):
        total = table.degree(v).expand()
        acc = QPoly.zero()
        for u in tree.adjacency[v]:
            if u != parent[v]:
                acc = acc + dims[frozenset((v, u))]
        dims[frozenset((v, parent[v]))] = total - acc
    return dims


# --- constraints ----------------------------------------------------------


@dataclass
class ConstraintSet:
    parity: bool = True
    degree: bool = True
    muller: bool = True
    real_stem: bool = True
    hc_adjacency: bool = True
    pi_monotone: bool = True
    branch_order: bool = True
    hlm: bool = True
    degree_bound: Fraction = Fraction(2)

    @staticmethod
    def full() -> "ConstraintSet":
        return ConstraintSet()

    @staticmethod
    def standard() -> "ConstraintSet":
        """Arguments (1)-(5) only: no perversity or planar data."""
        return ConstraintSet(pi_monotone=False, branch_order=False, hlm=False)

    @staticmethod
    def none() -> "ConstraintSet":
        return ConstraintSet(parity=False, degree=False, muller=False,
                             real_stem=False, hc_adjacency=False,
                             pi_monotone=False, branch_order=False, hlm=False)


@dataclass
class CheckReport:
    verdicts: dict[str, str] = field(default_factory=dict)   # pass/fail/n.a.
    witnesses: dict[str, str] = field(default_factory=dict)

    def ok(self) -> bool:
        return all(v != "fail" for v in self.verdicts.values())

    def record(self, name: str, passed: bool | None, witness: str = ""):
        if passed is None:
            self.verdicts[name] = "n.a."
        else:
            self.verdicts[name] = "pass" if passed else "fail"
            if not passed:
                self.witnesses[name] = witness


def parity_classes(table: CharacterTable, block: Block) -> dict[str, int]:
    """Sign classes of Deg(chi)/Deg(lambda) at the defining root of Phi.

    The quotient at the root is a real algebraic number for every member;
    its sign splits the block in two.  The class containing the character
    with minimal aA (the cuspidal side) is labelled +1.
    """
    root = CycNumber.root_of_unity(block.phi_label.defining_root())
    lam = block.cuspidal_degree.evaluate(root)
    signs = {}
    for cid in block.members:
        val = table.degree(cid).evaluate(root)
        quot = val / lam
        if not quot.is_real():
            raise ValueError(f"{cid}: degree quotient at the root is not real")
        s = sign_of_real(quot)
        if s == 0:
            raise ValueError(f"{cid}: degree quotient vanishes at the root")
        signs[cid] = s
    base = min(block.members,
               key=lambda c: (table.degree(c).aA(), c))
    if signs[base] == -1:
        signs = {cid: -s for cid, s in signs.items()}
    return signs


def _is_path(vertices: set[str], adjacency: dict[str, tuple[str, ...]]):
    """Return the path order if `vertices` induces a path, else None."""
    if not vertices:
        return []
    deg = {}
    for v in vertices:
        deg[v] = sum(1 for u in adjacency[v] if u in vertices)
    ends = [v for v in vertices if deg[v] <= 1]
    if len(vertices) == 1:
        return list(vertices)
    if any(d > 2 for d in deg.values()) or len(ends) != 2:
        return None
    order = [min(ends)]
    prev = None
    while True:
        nxt = [u for u in adjacency[order[-1]] if u in vertices and u != prev]
        if not nxt:
            break
        prev = order[-1]
        order.append(nxt[0])
    if len(order) != len(vertices):
        return None
    return order


def check_tree(tree: PlanarTree, table: CharacterTable, block: Block,
               constraints: ConstraintSet, kappa: int | None = None) -> CheckReport:
    if kappa is None:
        kappa = block.default_kappa()
    if sorted(tree.characters()) != sorted(block.members):
        raise ValueError("tree characters do not match the block")
    report = CheckReport()
    parent = tree.parent_map()

    # (1) parity: the tree's distance 2-coloring must equal the sign classes
    if constraints.parity:
        signs = parity_classes(table, block)
        ok, witness = True, ""
        for a, b in tree.edges():
            if a == EXC or b == EXC:
                continue
            if signs[a] == signs[b]:
                ok, witness = False, f"{a} ~ {b} share a parity class"
                break
        if ok:
            exc_classes = {signs[u] for u in tree.adjacency[EXC]}
            if len(exc_classes) > 1:
                ok = False
                witness = "exceptional neighbors span both parity classes"
        report.record("parity", ok, witness)

    # (2) degree: every edge dimension strictly positive beyond the bound
    if constraints.degree:
        dims = solve_edge_dimensions(tree, table)
        ok, witness = True, ""
        for edge, poly in dims.items():
            if poly.is_zero() or not positive_on_ray(poly, constraints.degree_bound):
                a, b = sorted(edge)
                ok, witness = False, f"edge {a}-{b} not positive beyond " \
                    f"{constraints.degree_bound}"
                break
        report.record("degree", ok, witness)

    # (3) the principal-series line in its stored order, with the stored
    # position of the exceptional vertex
    if constraints.muller:
        if not block.muller_line:
            report.record("muller", None)
        else:
            want = [EXC if x == "*" else x for x in block.muller_line]
            got = _is_path(set(want), tree.adjacency)
            ok = got is not None and (got == want or got == want[::-1])
            report.record("muller", ok, "stored principal-series line is not "
                          "a path of the tree in order")

    # (4) real characters plus the exceptional vertex form a path
    if constraints.real_stem:
        reals = {cid for cid in block.members if table[cid].real}
        reals.add(EXC)
        ok = _is_path(reals, tree.adjacency) is not None
        report.record("real_stem", ok, "real characters do not form a line "
                      "through the exceptional vertex")

    # (5) stored induction adjacencies
    if constraints.hc_adjacency:
        if not block.hc_adjacency:
            report.record("hc_adjacency", None)
        else:
            ok, witness = True, ""
            for a, b, why in block.hc_adjacency:
                if b not in tree.adjacency[a]:
                    ok, witness = False, f"{a} and {b} are not adjacent ({why})"
                    break
            report.record("hc_adjacency", ok, witness)

    # (6) perversity non-decreasing along every path toward the exceptional
    if constraints.pi_monotone:
        pis = {cid: pi_char(table, cid, block, kappa) for cid in block.members}
        ok, witness = True, ""
        for v in tree.characters():
            p = parent[v]
            if p == EXC:
                continue
            if pis[v] > pis[p]:
                ok, witness = False, f"pi({v}) = {pis[v]} > pi({p}) = {pis[p]}"
                break
        report.record("pi_monotone", ok, witness)

    # (7) cyclic order of branches at the exceptional vertex
    if constraints.branch_order:
        if not block.hecke:
            report.record("branch_order", None)
        else:
            params = hecke_parameters(table, block)
            positions, _ = specialize(params, kappa, block.d, block.e)
            expo = {p.char_id: p.exponent for p in positions}
            nbrs = tree.adjacency[EXC]
            if len(nbrs) <= 2:
                report.record("branch_order", True)
            else:
                ok = _cyclic_equal([expo[u] for u in nbrs])
                report.record("branch_order", ok,
                              "exceptional branches out of cyclic position order")

    # (8) Coxeter-case eigenvalue lines
    if constraints.hlm:
        if not _is_coxeter_block(block):
            report.record("hlm", None)
        else:
            ok, witness = _check_hlm(tree, table, block)
            report.record("hlm", ok, witness)

    return report


def _cyclic_equal(values) -> bool:
    """True iff the sequence of position exponents is a rotation of its
    sorted order (counterclockwise around the vertex)."""
    n = len(values)
    start = values.index(min(values))
    rotated = [values[(start + i) % n] for i in range(n)]
    return rotated == sorted(values)


def _is_coxeter_block(block: Block) -> bool:
    g = block.group
    lab = block.phi_label
    if g.family == "I2":
        return lab.kind == "phin" and lab.i == 1
    if g.family == "H3":
        return lab.kind == "phi2" and lab.d == 10 and block.principal
    return lab.kind == "phi2" and lab.d == 30 and block.principal


def _check_hlm(tree: PlanarTree, table: CharacterTable, block: Block):
    """The tree must be a union of lines through the exceptional vertex, each
    of constant Frobenius eigenvalue, ordered around it by argument."""
    parent = tree.parent_map()
    for v in tree.characters():
        if tree.degree(v) > 2:
            return False, f"{v} has degree > 2"
        if tree.degree(v) == 2 and parent[v] == EXC and False:
            pass
        eig_v = table[v].frobenius
        for u in tree.adjacency[v]:
            if u == EXC:
                continue
            if table[u].frobenius != eig_v:
                return False, f"eigenvalue changes along {v}-{u}"
    # lines sorted by argument of the eigenvalue around the exceptional vertex
    args = [table[u].frobenius for u in tree.adjacency[EXC]]
    if len(set(args)) != len(args):
        return False, "two exceptional branches share an eigenvalue"
    if len(args) > 2 and not _cyclic_equal(args):
        return False, "eigenvalue lines out of cyclic order"
    return True, ""


def hlm_star(table: CharacterTable, block: Block) -> PlanarTree:
    """The eigenvalue-line tree for a Coxeter-polynomial block: lines of
    constant Frobenius eigenvalue, ordered inward by degree and around the
    exceptional vertex by eigenvalue argument."""
    if not _is_coxeter_block(block):
        raise ValueError(f"{block.name()} is not the Coxeter-polynomial block")
    lines: dict[Fraction, list[str]] = {}
    for cid in block.members:
        lines.setdefault(table[cid].frobenius, []).append(cid)
    edges = []
    order_at_exc = []
    for eig in sorted(lines):
        members = lines[eig]
        degs = {cid: table.degree(cid).A_value() for cid in members}
        if len(set(degs.values())) != len(members):
            raise ValueError("equal degrees along an eigenvalue line")
        chain = sorted(members, key=lambda c: degs[c])
        prev = EXC
        for cid in reversed(chain):
            edges.append((prev, cid))
            prev = cid
        order_at_exc.append(chain[-1])
    return tree_from_edges(edges, {EXC: order_at_exc})


# --- enumeration ----------------------------------------------------------


def _embeddings(shape: dict[str, list[str]]):
    """All planar embeddings of an abstract tree: cyclic orders per vertex
    (first neighbor fixed to normalize rotation)."""
    choices = []
    keys = sorted(shape)
    for v in keys:
        nbrs = sorted(shape[v])
        if len(nbrs) <= 2:
            choices.append([tuple(nbrs)])
        else:
            head, rest = nbrs[0], nbrs[1:]
            choices.append([(head,) + perm for perm in itertools.permutations(rest)])
    for combo in itertools.product(*choices):
        yield PlanarTree({v: order for v, order in zip(keys, combo)})


def enumerate_planar_trees(labels: list[str]):
    """Every planar tree on the given labels plus the exceptional vertex.

    Grows the tree one vertex at a time, inserting each new leaf into one of
    the angular slots of an existing vertex; each embedded tree arises from
    exactly one insertion history, so the enumeration is duplicate-free.
    """
    verts = [EXC] + sorted(labels)

    def grow(adj: dict[str, list[str]], k: int):
        if k == len(verts):
            yield PlanarTree({v: tuple(n) for v, n in adj.items()})
            return
        v = verts[k]
        for host in verts[:k]:
            slots = max(1, len(adj[host]))
            for s in range(slots):
                new = {u: list(n) for u, n in adj.items()}
                new[host].insert(s, v)
                new[v] = [host]
                yield from grow(new, k + 1)

    yield from grow({EXC: []}, 1)


def count_planar_trees(n_chars: int) -> int:
    """Independent count of planar trees on n_chars + 1 labeled vertices:
    sum over labeled trees (by Prufer sequences) of prod (deg(v) - 1)!."""
    import math as m
    n = n_chars + 1
    if n == 1:
        return 1
    if n == 2:
        return 1
    total = 0
    for seq in itertools.product(range(n), repeat=n - 2):
        deg = [1] * n
        for x in seq:
            deg[x] += 1
        prod = 1
        for d in deg:
            prod *= m.factorial(d - 1)
        total += prod
    return total


def enumerate_trees(table: CharacterTable, block: Block,
                    constraints: ConstraintSet, kappa: int | None = None,
                    max_e: int = 12) -> list[PlanarTree]:
    """All planar trees on the block's characters passing the constraints.

    With the line/stem constraints active the search fixes the stored
    principal-series line and the real stem first and attaches the remaining
    characters by branch and bound over parity-admissible hosts; with an
    empty constraint set it falls back to generic growth enumeration.
    """
    if block.e > max_e:
        raise ValueError(f"block size {block.e} exceeds max_e = {max_e}")
    if kappa is None:
        kappa = block.default_kappa()

    shapes: list[dict[str, list[str]]] = []
    if constraints.muller and constraints.real_stem and block.muller_line:
        stem = [EXC if x == "*" else x for x in block.muller_line]
        reals = [cid for cid in block.members
                 if table[cid].real and cid not in stem]
        nonreal = sorted(cid for cid in block.members
                         if cid not in stem and cid not in reals)
        signs = parity_classes(table, block) if constraints.parity else None
        for perm in itertools.permutations(reals):
            # the full real stem: stored line plus the other real characters
            # attached beyond whichever stem end keeps a path
            for flip in (False, True):
                base = list(stem)
                extra = list(perm)
                if flip:
                    base = base[::-1]
                path = base + extra
                base_adj: dict[str, list[str]] = {v: [] for v in path}
                for a, b in zip(path, path[1:]):
                    base_adj[a].append(b)
                    base_adj[b].append(a)
                shapes.extend(_attach(base_adj, nonreal, table, block, signs))
        seen_shape = set()
        unique_shapes = []
        for sh in shapes:
            key = tuple(sorted((v, tuple(sorted(n))) for v, n in sh.items()))
            if key not in seen_shape:
                seen_shape.add(key)
                unique_shapes.append(sh)
        shapes = unique_shapes
        candidates: list[PlanarTree] = []
        for sh in shapes:
            candidates.extend(_embeddings(sh))
    else:
        candidates = enumerate_planar_trees(sorted(block.members))

    out = []
    seen = set()
    for tree in candidates:
        if sorted(tree.characters()) != sorted(block.members):
            continue
        report = check_tree(tree, table, block, constraints, kappa)
        if report.ok():
            key = tree.canonical()
            if key not in seen:
                seen.add(key)
                out.append(tree)
    return out


def _attach(base_adj: dict[str, list[str]], rest: list[str],
            table: CharacterTable, block: Block, signs):
    """Attach the remaining characters to hosts, parity-pruned."""
    if not rest:
        yield {v: list(n) for v, n in base_adj.items()}
        return
    cid = rest[0]
    for host in list(base_adj):
        if signs is not None:
            if host == EXC:
                neighbor_signs = {signs[u] for u in base_adj[EXC] if u != cid}
                if neighbor_signs and signs[cid] not in neighbor_signs:
                    continue
            elif signs[host] == signs[cid]:
                continue
        new = {v: list(n) for v, n in base_adj.items()}
        new[host].append(cid)
        new[cid] = [host]
        yield from _attach(new, rest[1:], table, block, signs)


# --- rendering ------------------------------------------------------------


def render(tree: PlanarTree, fmt: str) -> str:
    if fmt == "dot":
        return _render_dot(tree)
    if fmt == "tikz":
        return _render_tikz(tree)
    raise ValueError(f"unknown render format {fmt!r}")


def _render_dot(tree: PlanarTree) -> str:
    lines = ["graph brauertree {"]
    lines.append('  "exceptional" [shape=point, width=0.15, '
                 'xlabel="exceptional"];')
    for v in sorted(tree.characters()):
        lines.append(f'  "{v}" [shape=circle];')
    for v in sorted(tree.adjacency):
        order = ", ".join(tree.adjacency[v])
        lines.append(f'  // ccw at "{v}": {order}')
    for a, b in sorted(tree.edges()):
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def layout(tree: PlanarTree) -> dict[str, tuple[float, float]]:
    """Planar coordinates honoring the cyclic orders: angular subdivision."""
    import math as m
    pos = {EXC: (0.0, 0.0)}

    def place(v: str, parent: str | None, angle0: float, angle1: float,
              radius: float):
        children = [u for u in tree.adjacency[v] if u != parent]
        if parent is not None:
            nbrs = list(tree.adjacency[v])
            k = nbrs.index(parent)
            children = [nbrs[(k + 1 + j) % len(nbrs)] for j in range(len(nbrs) - 1)]
        if not children:
            return
        span = (angle1 - angle0) / len(children)
        for j, u in enumerate(children):
            a = angle0 + span * (j + 0.5)
            px, py = pos[v]
            pos[u] = (px + radius * m.cos(a), py + radius * m.sin(a))
            place(u, v, a - span * 0.45, a + span * 0.45, radius)

    place(EXC, None, 0.0, 2 * 3.141592653589793, 1.0)
    return pos


def _render_tikz(tree: PlanarTree) -> str:
    pos = layout(tree)
    lines = ["\\begin{tikzpicture}[every node/.style={circle, draw, "
             "inner sep=1.5pt}]"]
    idx = {v: k for k, v in enumerate(sorted(tree.adjacency))}
    for v in sorted(tree.adjacency):
        x, y = pos[v]
        style = "fill=black" if v == EXC else ""
        label = "" if v == EXC else v
        lines.append(f"  \\node[{style}] (n{idx[v]}) at ({x:.3f}, {y:.3f}) "
                     f"{{}} ;  % {label or 'exceptional'}")
    for a, b in sorted(tree.edges()):
        lines.append(f"  \\draw (n{idx[a]}) -- (n{idx[b]});")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def render_png(tree: PlanarTree, path: str | Path, title: str = "") -> None:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    pos = layout(tree)
    fig, ax = plt.subplots(figsize=(9, 7))
    for a, b in tree.edges():
        xa, ya = pos[a]
        xb, yb = pos[b]
        ax.plot([xa, xb], [ya, yb], color="0.3", lw=1.2, zorder=1)
    for v, (x, y) in pos.items():
        if v == EXC:
            ax.scatter([x], [y], s=90, color="black", zorder=2)
        else:
            ax.scatter([x], [y], s=60, facecolor="white", edgecolor="black",
                       zorder=2)
            ax.annotate(v, (x, y), textcoords="offset points", xytext=(4, 5),
                        fontsize=7)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def parse_render(text: str) -> PlanarTree:
    """Recover a tree from its DOT rendering (the cyclic-order comments)."""
    adj = {}
    for line in text.splitlines():
        line = line.strip()
        if line.startswith("// ccw at"):
            head, order = line[len("// ccw at"):].split(":", 1)
            v = head.strip().strip('"')
            nbrs = [x.strip() for x in order.split(",") if x.strip()]
            adj[v] = tuple(nbrs)
    return PlanarTree(adj)
