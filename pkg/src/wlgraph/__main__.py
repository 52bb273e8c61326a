import sys

from wlgraph.cli import main

sys.exit(main())
