"""
Thompson 群 F 領域
"""

from .entities import BinaryTree, Dyadic, DyadicPartition, ThompsonElement

__all__ = ["BinaryTree", "ThompsonElement", "Dyadic", "DyadicPartition"]
