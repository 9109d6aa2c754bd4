import sys

from sbprecon.cli import main


sys.exit(main())
