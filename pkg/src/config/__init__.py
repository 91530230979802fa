"""Configuration package for yhkernel."""
from .config import *
