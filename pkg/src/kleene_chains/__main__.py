import sys

from kleene_chains.cli import main

sys.exit(main())
