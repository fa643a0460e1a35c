from .logging import logger, log_pair, set_log_level, should_log_le
from .tplush_args import TplusHArguments, print_args
