"""quizhost: self-hosted multiple-choice assessment service."""

from .api import create_app
from .config import ServerConfig, load_config
from .store import StoreConfig, open_store

__version__ = "0.1.0"

__all__ = [
    "create_app",
    "load_config",
    "open_store",
    "ServerConfig",
    "StoreConfig",
    "__version__",
]
