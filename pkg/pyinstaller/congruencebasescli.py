# -*- coding: utf-8 -*-
import sys

import congruencebases

sys.exit(congruencebases.main())
