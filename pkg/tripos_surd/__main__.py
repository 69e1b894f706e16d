"""Allow `python -m tripos_surd`."""
import sys

from .cli import main

sys.exit(main())
