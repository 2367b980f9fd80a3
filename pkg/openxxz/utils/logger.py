import logging
import os

logging.basicConfig(level=os.environ.get("OPENXXZ_LOG_LEVEL", "INFO").upper())
logger = logging.getLogger("openxxz")
