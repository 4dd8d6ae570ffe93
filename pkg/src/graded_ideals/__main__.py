import sys

from graded_ideals.cli import main

sys.exit(main())
