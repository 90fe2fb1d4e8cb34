import sys

from boolinfo.cli import main

sys.exit(main())
