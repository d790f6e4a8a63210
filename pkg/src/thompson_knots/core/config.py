"""
應用程式配置管理
"""

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    APP_NAME: str = "thompson-knots"

    # 日誌
    LOG_LEVEL: str = "INFO"
    LOG_JSON: bool = False

    # 不變量計算的資源上限
    MAX_CROSSINGS: int = 128
    STATE_SUM_MAX_CROSSINGS: int = 18
    BRACKET_ENGINE: str = "frontier"  # frontier, state_sum

    # 反向流程（中線排列搜尋）
    LINEARIZE_MAX_VERTICES: int = 24
    LINEARIZE_SEARCH_BUDGET: int = 200000

    # 自我測試取樣
    RANDOM_SEED: int = 0

    # SVG 繪圖
    SVG_CELL: float = 24.0

    class Config:
        env_file = ".env"
        env_prefix = "TK_"
        extra = "ignore"


settings = Settings()
