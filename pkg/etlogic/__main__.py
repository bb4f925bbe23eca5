import sys

from etlogic.main import main

sys.exit(main())
