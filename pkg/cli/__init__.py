# Command-line interface initialization
from cli.app import main, build_parser, JobConfig

__all__ = [
    'main',
    'build_parser',
    'JobConfig'
]
