"""
基礎設施層：可插拔介面、適配器與各模組服務
"""
