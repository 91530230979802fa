"""
Utility modules for yhkernel.
Includes logging, seeded sampling for the suites, and result export.
"""

__all__ = [
    'logger',
    'sampling',
    'exporter',
]
