"""The corpus of published planar trees: dihedral instances generated from
the generic picture, H3/H4 trees from data files, and the verification
pipeline that re-derives every cross-check on load."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .chars import (Block, CharacterTable, DATA_DIR, H3, H4, group_order,
                    i2_char_id, i2_table, load_blocks, load_character_table,
                    partition_blocks)
from .cyclo import CycFactorLabel, phi, phi_n
from .tree import EXC, PlanarTree, tree_from_edges

ENV_DATA_DIR = "BRAUERTREES_DATA"


def data_dir() -> Path:
    override = os.environ.get(ENV_DATA_DIR)
    return Path(override) if override else DATA_DIR


def i2_paper_tree(n: int, i: int) -> PlanarTree:
    """The generic dihedral tree instantiated at (n, i).

    Real stem phi(1,0) - phi(2,i) - phi(1,n) - exceptional (- [n/2, i] when n
    is even); the pairs with class j < i hang on phi(1,n), those with class
    j > i on the exceptional vertex, ordered as in the published picture.
    """
    st = f"phi{{1,{n}}}"
    rho = f"phi{{2,{i}}}"
    edges = [("phi{1,0}", rho), (rho, st), (st, EXC)]
    lower = [j for j in range(1, i)]                      # classes j < i
    upper = [j for j in range(i + 1, (n - 1) // 2 + 1)]   # classes j > i
    half = n % 2 == 0 and i != n // 2

    st_order = [rho]
    for j in lower:
        edges.append((st, i2_char_id(n, j, n - i)))
    for j in upper:
        edges.append((EXC, i2_char_id(n, j, n - i)))
    for j in lower:
        edges.append((st, i2_char_id(n, j, i)))
    for j in upper:
        edges.append((EXC, i2_char_id(n, j, i)))
    if n % 2 == 0:
        edges.append((EXC, i2_char_id(n, n // 2, i)))

    # counterclockwise orders from the published generic figure
    st_order = [rho] + [i2_char_id(n, j, n - i) for j in lower] + [EXC] + \
        [i2_char_id(n, j, i) for j in reversed(lower)]
    exc_order = [st] + [i2_char_id(n, j, n - i) for j in upper]
    if n % 2 == 0:
        exc_order.append(i2_char_id(n, n // 2, i))
    exc_order += [i2_char_id(n, j, i) for j in reversed(upper)]
    orders = {st: st_order, EXC: exc_order}
    return tree_from_edges(edges, orders)


@dataclass
class CorpusTree:
    name: str
    group: str
    phi_label: str
    block_key: str           # distinguishes the paired d = 1, 2 blocks
    source: str
    tree: PlanarTree


def load_corpus_tree(path: Path) -> CorpusTree:
    blob = json.loads(Path(path).read_text())
    return CorpusTree(
        name=blob["name"], group=blob["block_ref"]["group"],
        phi_label=blob["block_ref"]["phi_label"],
        block_key=blob["block_ref"].get("block_key", blob["block_ref"]["phi_label"]),
        source=blob.get("source", ""),
        tree=PlanarTree.from_json(blob),
    )


def corpus_tree_paths(base: Path | None = None) -> list[Path]:
    base = base or data_dir()
    return sorted((base / "corpus").glob("*.json"))


class Corpus:
    """All tables, blocks and published trees, loaded and cross-checked."""

    def __init__(self, base: Path | None = None):
        base = base or data_dir()
        self.base = base
        self.tables: dict[str, CharacterTable] = {
            "H3": load_character_table(base / "h3_characters.json"),
            "H4": load_character_table(base / "h4_characters.json"),
        }
        self.blocks: dict[tuple[str, str], Block] = {}
        for fam in ("H3", "H4"):
            for blk in load_blocks(base / f"{fam.lower()}_blocks.json",
                                   self.tables[fam]):
                key = blk.cuspidal_character if not blk.principal else \
                    str(blk.phi_label)
                self.blocks[(fam, f"{blk.phi_label}:{key}")] = blk
        self.trees = [load_corpus_tree(p) for p in corpus_tree_paths(base)]

    def table(self, family: str, n: int = 0) -> CharacterTable:
        if family == "I2":
            return i2_table(n)
        return self.tables[family]

    def block_for(self, entry: CorpusTree) -> Block:
        if entry.group.startswith("I2"):
            n = int(entry.group[3:-1])
            label = CycFactorLabel.parse(entry.phi_label)
            return partition_blocks(i2_table(n), label)[0]
        return self.blocks[(entry.group, entry.block_key)]

    def blocks_for_family(self, family: str) -> list[Block]:
        return [b for (fam, _), b in self.blocks.items() if fam == family]
