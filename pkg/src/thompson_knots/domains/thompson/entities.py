"""
Thompson 群 F 領域實體

樹以前序位元字串保存（"1" 為內部節點、"0" 為葉），解析後的巢狀結構以
tuple 表示：葉為 None，內部節點為 (left, right)。
"""

from fractions import Fraction
from functools import lru_cache
from typing import Iterator, List, Tuple, Union

from pydantic import BaseModel, Field, field_validator, model_validator

from ...core.exceptions import TreeCodeError

Node = Union[None, Tuple["Node", "Node"]]

_MISSING = object()


@lru_cache(maxsize=8192)
def parse_tree_code(code: str) -> Node:
    """將前序位元字串解析成巢狀結構，錯誤時回報出錯位置"""
    if not code:
        raise TreeCodeError("empty tree code", 0)

    result: object = _MISSING
    stack: List[List[Node]] = []
    for index, symbol in enumerate(code):
        if result is not _MISSING:
            raise TreeCodeError("trailing symbols after a complete tree", index)
        if symbol == "1":
            stack.append([])
            continue
        if symbol != "0":
            raise TreeCodeError(f"invalid symbol {symbol!r}", index)
        node: Node = None
        while True:
            if not stack:
                result = node
                break
            stack[-1].append(node)
            if len(stack[-1]) < 2:
                break
            left, right = stack.pop()
            node = (left, right)
    if result is _MISSING:
        raise TreeCodeError("truncated tree code", len(code))
    return result  # type: ignore[return-value]


def node_to_code(node: Node) -> str:
    parts: List[str] = []
    stack: List[Node] = [node]
    while stack:
        current = stack.pop()
        if current is None:
            parts.append("0")
        else:
            parts.append("1")
            stack.append(current[1])
            stack.append(current[0])
    return "".join(parts)


def node_leaf_count(node: Node) -> int:
    if node is None:
        return 1
    return node_leaf_count(node[0]) + node_leaf_count(node[1])


def iter_carets(node: Node, offset: int = 0, anchor: int = 0) -> Iterator[Tuple[int, int]]:
    """依前序列出每個 caret 的 (box, anchor)。

    box k 是第 k-1 與第 k 片葉之間的間隙；anchor 是最低的、把此 caret 放在
    右子樹中的祖先之 box，沒有這樣的祖先時為 0。
    """
    stack: List[Tuple[Node, int, int]] = [(node, offset, anchor)]
    while stack:
        current, start, parent_box = stack.pop()
        if current is None:
            continue
        left, right = current
        box = start + node_leaf_count(left)
        yield box, parent_box
        stack.append((right, box, box))
        stack.append((left, start, parent_box))


class BinaryTree(BaseModel):
    """有根平面二元樹"""

    class Config:
        frozen = True

    code: str = Field(..., description="前序位元字串，1 為內部節點、0 為葉")

    @field_validator("code")
    @classmethod
    def _check_code(cls, value: str) -> str:
        parse_tree_code(value)
        return value

    @classmethod
    def from_node(cls, node: Node) -> "BinaryTree":
        return cls(code=node_to_code(node))

    @classmethod
    def leaf(cls) -> "BinaryTree":
        return cls(code="0")

    @property
    def root(self) -> Node:
        return parse_tree_code(self.code)

    @property
    def leaf_count(self) -> int:
        return self.code.count("0")

    @property
    def caret_count(self) -> int:
        return self.code.count("1")

    def __str__(self) -> str:
        return self.code


class ThompsonElement(BaseModel):
    """樹對；top 為值域（range）、bottom 為定義域（domain）"""

    class Config:
        frozen = True

    top: BinaryTree
    bottom: BinaryTree

    @model_validator(mode="after")
    def _check_leaves(self) -> "ThompsonElement":
        if self.top.leaf_count != self.bottom.leaf_count:
            raise ValueError(
                f"leaf count mismatch: top has {self.top.leaf_count}, "
                f"bottom has {self.bottom.leaf_count}"
            )
        return self

    @property
    def leaf_count(self) -> int:
        return self.top.leaf_count

    @property
    def caret_count(self) -> int:
        return self.top.caret_count + self.bottom.caret_count

    def swapped(self) -> "ThompsonElement":
        return ThompsonElement(top=self.bottom, bottom=self.top)

    def __str__(self) -> str:
        return f"({self.top.code}, {self.bottom.code})"


class Dyadic(BaseModel):
    """精確二進分數 numerator / 2^exponent，保持最簡形式"""

    class Config:
        frozen = True

    numerator: int
    exponent: int = Field(..., ge=0)

    @model_validator(mode="after")
    def _check_lowest_terms(self) -> "Dyadic":
        if self.exponent > 0 and self.numerator % 2 == 0:
            raise ValueError("dyadic rational is not in lowest terms")
        return self

    @classmethod
    def of(cls, numerator: int, exponent: int) -> "Dyadic":
        while exponent > 0 and numerator % 2 == 0:
            numerator //= 2
            exponent -= 1
        return cls(numerator=numerator, exponent=exponent)

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, 2**self.exponent)

    def __str__(self) -> str:
        if self.exponent == 0:
            return str(self.numerator)
        return f"{self.numerator}/{2**self.exponent}"


class DyadicPartition(BaseModel):
    """[0,1] 的標準二進分割"""

    class Config:
        frozen = True

    breakpoints: Tuple[Dyadic, ...]

    @model_validator(mode="after")
    def _check_breakpoints(self) -> "DyadicPartition":
        values = [point.as_fraction() for point in self.breakpoints]
        if len(values) < 2 or values[0] != 0 or values[-1] != 1:
            raise ValueError("partition must start at 0 and end at 1")
        for left, right in zip(values, values[1:]):
            if not left < right:
                raise ValueError("breakpoints must be strictly increasing")
            length = right - left
            if length.numerator != 1 or length.denominator & (length.denominator - 1):
                raise ValueError(f"interval [{left}, {right}] is not standard dyadic")
            if (left / length).denominator != 1:
                raise ValueError(f"interval [{left}, {right}] is not standard dyadic")
        return self

    @property
    def intervals(self) -> List[Tuple[Fraction, Fraction]]:
        values = [point.as_fraction() for point in self.breakpoints]
        return list(zip(values, values[1:]))

    def as_fractions(self) -> List[Fraction]:
        return [point.as_fraction() for point in self.breakpoints]

    def __str__(self) -> str:
        return "{" + ", ".join(str(point) for point in self.breakpoints) + "}"


def leaf_intervals(node: Node) -> List[Tuple[Dyadic, Dyadic]]:
    """每片葉對應的標準二進區間（由左到右）"""
    intervals: List[Tuple[Dyadic, Dyadic]] = []
    stack: List[Tuple[Node, int, int]] = [(node, 0, 0)]  # 區間 [k/2^m, (k+1)/2^m]
    while stack:
        current, k, m = stack.pop()
        if current is None:
            intervals.append((Dyadic.of(k, m), Dyadic.of(k + 1, m)))
            continue
        stack.append((current[1], 2 * k + 1, m + 1))
        stack.append((current[0], 2 * k, m + 1))
    return intervals


def exposed_carets(node: Node) -> List[int]:
    """兩個子節點皆為葉的 caret，以其左葉索引表示"""
    found: List[int] = []
    stack: List[Tuple[Node, int]] = [(node, 0)]
    while stack:
        current, offset = stack.pop()
        if current is None:
            continue
        left, right = current
        if left is None and right is None:
            found.append(offset)
            continue
        stack.append((right, offset + node_leaf_count(left)))
        stack.append((left, offset))
    return sorted(found)


def collapse_caret(node: Node, leaf_index: int) -> Node:
    """把覆蓋第 leaf_index、leaf_index+1 片葉的 caret 換成一片葉"""

    def walk(current: Node, offset: int) -> Node:
        if current is None:
            raise ValueError(f"no exposed caret at leaf {leaf_index}")
        left, right = current
        if left is None and right is None and offset == leaf_index:
            return None
        width = node_leaf_count(left)
        if leaf_index < offset + width:
            return (walk(left, offset), right)
        return (left, walk(right, offset + width))

    return walk(node, 0)


def graft_leaves(node: Node, replacements: List[Node]) -> Node:
    """依序把每片葉換成 replacements 中的子樹"""
    iterator = iter(replacements)

    def walk(current: Node) -> Node:
        if current is None:
            return next(iterator)
        return (walk(current[0]), walk(current[1]))

    return walk(node)


def subtrees_at_leaves(node: Node, refinement: Node) -> List[Node]:
    """refinement 包含 node 時，回傳 refinement 在 node 每片葉位置上的子樹"""
    found: List[Node] = []

    def walk(current: Node, finer: Node) -> None:
        if current is None:
            found.append(finer)
            return
        if finer is None:
            raise ValueError("refinement does not contain the tree")
        walk(current[0], finer[0])
        walk(current[1], finer[1])

    walk(node, refinement)
    return found


def tree_union(first: Node, second: Node) -> Node:
    if first is None:
        return second
    if second is None:
        return first
    return (tree_union(first[0], second[0]), tree_union(first[1], second[1]))


def rightmost_leaf_replaced(node: Node, replacement: Node) -> Node:
    if node is None:
        return replacement
    return (node[0], rightmost_leaf_replaced(node[1], replacement))


def leftmost_leaf_replaced(node: Node, replacement: Node) -> Node:
    if node is None:
        return replacement
    return (leftmost_leaf_replaced(node[0], replacement), node[1])
