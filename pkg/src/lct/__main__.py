import sys

from lct.cli import main

sys.exit(main())
