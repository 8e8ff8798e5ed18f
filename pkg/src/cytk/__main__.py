import sys

from cytk.cli import main

sys.exit(main())
