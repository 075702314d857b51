"""Run the CLI via ``python -m heatcg``."""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
