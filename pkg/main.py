"""
Main entry point for the exact q-MZV toolkit.
Parses the command line and exits with the documented status code.
"""

import sys
import os

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from cli.app import main


if __name__ == "__main__":
    sys.exit(main())
