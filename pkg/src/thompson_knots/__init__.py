"""
thompson-knots：Thompson 群 F 與 Conway 纏結之間的構造與驗證
"""

__version__ = "0.1.0"
