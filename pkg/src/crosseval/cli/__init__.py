from .config import RunConfig, load_config
from .main import main

__all__ = ["main", "RunConfig", "load_config"]
