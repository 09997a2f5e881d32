import sys

from quadcf.cli import main

sys.exit(main())
