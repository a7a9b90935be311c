import sys

from middledom.cli import main

sys.exit(main())
