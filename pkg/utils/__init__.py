# Utils package
# parsing.py builds cfrac values; import it as utils.parsing

from .config import Config
from .op_counter import OpCounter
from .report import RunReport

__all__ = ['Config', 'OpCounter', 'RunReport']
