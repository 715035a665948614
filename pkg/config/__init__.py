# Config module initialization
from config.settings import *

__all__ = [
    'DEFAULT_PRECISION',
    'FAMILY_EULERIAN',
    'FAMILY_OKOUNKOV',
    'FAMILY_MONOMIAL',
    'BASIS_BRACKETS',
    'BASIS_OKOUNKOV',
    'DATA_DIR',
    'IDENTITY_DIR'
]
