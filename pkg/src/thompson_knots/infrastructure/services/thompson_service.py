"""
Thompson 群運算服務

樹的解析與序列化、約化、合成、反元素，以及轉換成二進分割形式。
所有運算都是純函式，輸入輸出皆為不可變值。
"""

import random
from fractions import Fraction
from typing import Iterator, List, Tuple

from ...core.exceptions import LeafCountMismatchError
from ...domains.thompson.entities import (BinaryTree, DyadicPartition, Node,
                                          ThompsonElement, collapse_caret,
                                          exposed_carets, graft_leaves,
                                          leaf_intervals, node_to_code,
                                          parse_tree_code, subtrees_at_leaves,
                                          tree_union)


def tree_from_code(code: str) -> BinaryTree:
    """解析前序位元字串；格式錯誤時拋出 TreeCodeError（含出錯索引）"""
    parse_tree_code(code)
    return BinaryTree(code=code)


def tree_to_code(tree: BinaryTree) -> str:
    return tree.code


def make_element(top: BinaryTree, bottom: BinaryTree, reduced: bool = True) -> ThompsonElement:
    """建立樹對元素，預設立即約化，使相等即為位元字串相等"""
    if top.leaf_count != bottom.leaf_count:
        raise LeafCountMismatchError(top.leaf_count, bottom.leaf_count)
    element = ThompsonElement(top=top, bottom=bottom)
    return reduce(element) if reduced else element


def element_from_codes(top: str, bottom: str, reduced: bool = True) -> ThompsonElement:
    return make_element(tree_from_code(top), tree_from_code(bottom), reduced=reduced)


def identity(leaves: int = 1) -> ThompsonElement:
    """leaves 片葉的恆等樹對（未約化）"""
    tree = BinaryTree(code="1" * (leaves - 1) + "0" * leaves)
    return ThompsonElement(top=tree, bottom=tree)


def is_reduced(element: ThompsonElement) -> bool:
    return not set(exposed_carets(element.top.root)) & set(exposed_carets(element.bottom.root))


def reduce(element: ThompsonElement) -> ThompsonElement:
    """反覆消去共同 caret，直到沒有共同 caret 為止"""
    top, bottom = element.top.root, element.bottom.root
    while True:
        common = set(exposed_carets(top)) & set(exposed_carets(bottom))
        if not common:
            break
        # 由右往左消去，左側索引不受影響
        for leaf_index in sorted(common, reverse=True):
            top = collapse_caret(top, leaf_index)
            bottom = collapse_caret(bottom, leaf_index)
    return ThompsonElement(top=BinaryTree.from_node(top), bottom=BinaryTree.from_node(bottom))


def _refine(element: ThompsonElement, refinement: Node, side: str) -> Tuple[Node, Node]:
    """在不改變元素的前提下加 caret，使 side 指定的那棵樹等於 refinement"""
    top, bottom = element.top.root, element.bottom.root
    if side == "top":
        return refinement, graft_leaves(bottom, subtrees_at_leaves(top, refinement))
    return graft_leaves(top, subtrees_at_leaves(bottom, refinement)), refinement


def compose(a: ThompsonElement, b: ThompsonElement) -> ThompsonElement:
    """a∘b：先作用 b 再作用 a（bottom 為定義域、top 為值域）"""
    common = tree_union(b.top.root, a.bottom.root)
    _, b_bottom = _refine(b, common, "top")
    a_top, _ = _refine(a, common, "bottom")
    return reduce(ThompsonElement(top=BinaryTree.from_node(a_top), bottom=BinaryTree.from_node(b_bottom)))


def inverse(element: ThompsonElement) -> ThompsonElement:
    return element.swapped()


def _partition(node: Node) -> DyadicPartition:
    intervals = leaf_intervals(node)
    return DyadicPartition(breakpoints=tuple([left for left, _ in intervals] + [intervals[-1][1]]))


def element_to_partitions(element: ThompsonElement) -> Tuple[DyadicPartition, DyadicPartition]:
    """回傳 (定義域分割, 值域分割)；第 i 片 bottom 葉對應到第 i 片 top 葉"""
    return _partition(element.bottom.root), _partition(element.top.root)


def evaluate(element: ThompsonElement, x: Fraction) -> Fraction:
    """計算元素對應的分段線性映射在 x 的值"""
    if not 0 <= x <= 1:
        raise ValueError(f"{x} is outside [0, 1]")
    domain, target = element_to_partitions(element)
    for (d0, d1), (r0, r1) in zip(domain.intervals, target.intervals):
        if d0 <= x <= d1:
            return r0 + (x - d0) * (r1 - r0) / (d1 - d0)
    raise ValueError(f"{x} not covered by the domain partition")


def slopes(element: ThompsonElement) -> List[Fraction]:
    domain, target = element_to_partitions(element)
    return [
        (r1 - r0) / (d1 - d0)
        for (d0, d1), (r0, r1) in zip(domain.intervals, target.intervals)
    ]


# ---- 取樣與枚舉 ----

def random_tree_node(rng: random.Random, leaves: int) -> Node:
    if leaves == 1:
        return None
    split = rng.randint(1, leaves - 1)
    return (random_tree_node(rng, split), random_tree_node(rng, leaves - split))


def random_tree(rng: random.Random, leaves: int) -> BinaryTree:
    return BinaryTree.from_node(random_tree_node(rng, leaves))


def random_element(
    rng: random.Random, max_leaves: int = 8, reduced: bool = True, min_leaves: int = 1
) -> ThompsonElement:
    leaves = rng.randint(min_leaves, max_leaves)
    element = ThompsonElement(top=random_tree(rng, leaves), bottom=random_tree(rng, leaves))
    return reduce(element) if reduced else element


def enumerate_tree_nodes(leaves: int) -> Iterator[Node]:
    if leaves == 1:
        yield None
        return
    for split in range(1, leaves):
        for left in enumerate_tree_nodes(split):
            for right in enumerate_tree_nodes(leaves - split):
                yield (left, right)


def enumerate_reduced_elements(max_leaves: int) -> Iterator[ThompsonElement]:
    """列舉所有葉數不超過 max_leaves 的約化元素（每個元素恰好一次）"""
    for leaves in range(1, max_leaves + 1):
        codes = [node_to_code(node) for node in enumerate_tree_nodes(leaves)]
        for top in codes:
            for bottom in codes:
                element = ThompsonElement(top=BinaryTree(code=top), bottom=BinaryTree(code=bottom))
                if is_reduced(element):
                    yield element

