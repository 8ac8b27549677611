from tests.fixtures.constants import *
from tests.fixtures.grids import *
from tests.fixtures.presets import *
from tests.fixtures.qudit import *
from tests.fixtures.tempfiles import *
