"""Package entry point: python -m rmbetti."""

import sys

from .cli import main

sys.exit(main())
