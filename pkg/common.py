import logging
from config.config import Config

config: Config = Config()

logging.basicConfig(level=config.log_level, format="%(levelname)s %(name)s: %(message)s")
