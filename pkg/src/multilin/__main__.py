import sys

from multilin.cli import main

sys.exit(main())
